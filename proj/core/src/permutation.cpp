#include "orbitfold/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "orbitfold/error.hpp"

namespace orbitfold {

namespace {

void check_degree(std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw Error(ErrorCode::BadDegree,
                "degree " + std::to_string(degree) + " outside [1, 65536]");
  }
}

}  // namespace

Permutation::Permutation(std::size_t degree) {
  check_degree(degree);
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  check_degree(images_.size());
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size()) {
      throw Error(ErrorCode::OutOfRange, "image " + std::to_string(v) + " >= degree");
    }
    if (seen[v]) throw Error(ErrorCode::RepeatedPoint, "image " + std::to_string(v));
    seen[v] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_odd() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 1;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << '(';
    bool first = true;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ',';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "id" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorCode::DegreeMismatch, std::to_string(p.degree()) + " vs " +
                                               std::to_string(q.degree()));
  }
  std::vector<Point> r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = q.images_[p.images_[i]];
  return Permutation(std::move(r), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i) r[p.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(r), Permutation::Unchecked{});
}

std::size_t fixed_point_count(const Permutation& p) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) c += (p[static_cast<Point>(i)] == i);
  return c;
}

Point first_moved_point(const Permutation& p) {
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (p[static_cast<Point>(i)] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(p.degree());
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  check_degree(degree);
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "id") return Permutation(degree);
  if (s.empty()) throw Error(ErrorCode::Malformed, "empty permutation");

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto malformed = [&](const std::string& why) {
    return Error(ErrorCode::Malformed, why + " at offset " + std::to_string(pos) +
                                           " in \"" + std::string(text) + "\"");
  };
  while (pos < s.size()) {
    if (s[pos] != '(') throw malformed("expected '('");
    ++pos;
    std::vector<Point> cycle;
    while (true) {
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
        throw malformed("expected integer");
      }
      std::uint64_t v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
        if (v > kMaxDegree + 1) v = kMaxDegree + 1;
        ++pos;
      }
      if (v < 1 || v > degree) {
        throw Error(ErrorCode::OutOfRange, "point " + std::to_string(v) +
                                               " outside 1.." + std::to_string(degree));
      }
      auto pt = static_cast<Point>(v - 1);
      if (used[pt]) {
        throw Error(ErrorCode::RepeatedPoint, "point " + std::to_string(v));
      }
      used[pt] = true;
      cycle.push_back(pt);
      if (pos >= s.size()) throw malformed("unbalanced parentheses");
      if (s[pos] == ',') {
        ++pos;
        continue;
      }
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      throw malformed("unexpected character");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace orbitfold
