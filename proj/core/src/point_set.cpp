#include "orbitfold/point_set.hpp"

#include <bit>
#include <sstream>

#include "orbitfold/error.hpp"

namespace orbitfold {

namespace {

std::size_t word_count(std::size_t degree) { return (degree + 63) / 64; }

void require_same_degree(const PointSet& a, const PointSet& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "point sets of degree " +
                                               std::to_string(a.degree()) + " and " +
                                               std::to_string(b.degree()));
  }
}

}  // namespace

PointSet::PointSet(std::size_t degree) : degree_(degree), words_(word_count(degree), 0) {
  if (degree == 0 || degree > kMaxDegree) {
    throw Error(ErrorCode::BadDegree, "point set degree " + std::to_string(degree));
  }
}

PointSet::PointSet(std::size_t degree, std::span<const Point> members) : PointSet(degree) {
  for (Point p : members) {
    if (p >= degree) {
      throw Error(ErrorCode::OutOfRange, "point " + std::to_string(p + 1) +
                                             " outside degree " + std::to_string(degree));
    }
    set(p);
  }
}

PointSet::PointSet(std::size_t degree, std::initializer_list<Point> members)
    : PointSet(degree, std::span<const Point>(members.begin(), members.size())) {}

PointSet PointSet::from_mask(std::size_t degree, std::uint64_t mask) {
  if (degree > 64) throw Error(ErrorCode::DomainTooLarge, "mask form needs degree <= 64");
  PointSet s(degree);
  if (degree < 64 && (mask >> degree) != 0) {
    throw Error(ErrorCode::OutOfRange, "mask has bits beyond the degree");
  }
  s.words_[0] = mask;
  return s;
}

PointSet PointSet::full(std::size_t degree) {
  PointSet s(degree);
  for (std::size_t p = 0; p < degree; ++p) s.set(static_cast<Point>(p));
  return s;
}

std::size_t PointSet::size() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::uint64_t PointSet::mask() const {
  if (degree_ > 64) throw Error(ErrorCode::DomainTooLarge, "mask form needs degree <= 64");
  return words_[0];
}

std::vector<Point> PointSet::members() const {
  std::vector<Point> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<Point>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string PointSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Point p : members()) {
    if (!first) out << ',';
    out << (p + 1);
    first = false;
  }
  out << '}';
  return out.str();
}

std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  require_same_degree(a, b);
  PointSet r = a;
  for (std::size_t w = 0; w < r.words_.size(); ++w) r.words_[w] |= b.words_[w];
  return r;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  require_same_degree(a, b);
  PointSet r = a;
  for (std::size_t w = 0; w < r.words_.size(); ++w) r.words_[w] &= b.words_[w];
  return r;
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  require_same_degree(a, b);
  PointSet r = a;
  for (std::size_t w = 0; w < r.words_.size(); ++w) r.words_[w] &= ~b.words_[w];
  return r;
}

PointSet set_complement(const PointSet& a) {
  return set_difference(PointSet::full(a.degree()), a);
}

PointSet set_xor(const PointSet& a, const PointSet& b) {
  return set_union(set_difference(a, b), set_difference(b, a));
}

PointSet apply_set(const Permutation& p, const PointSet& a) {
  if (p.degree() != a.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "permutation degree " +
                                               std::to_string(p.degree()) + " vs set degree " +
                                               std::to_string(a.degree()));
  }
  std::vector<Point> image;
  for (Point x : a.members()) image.push_back(p[x]);
  return PointSet(a.degree(), image);
}

std::uint64_t apply_mask(const Permutation& p, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask != 0) {
    int b = std::countr_zero(mask);
    out |= std::uint64_t{1} << p[static_cast<Point>(b)];
    mask &= mask - 1;
  }
  return out;
}

std::size_t PointSetHash::operator()(const PointSet& s) const noexcept {
  std::size_t h = s.degree();
  for (std::uint64_t w : s.words()) h = h * 0x9E3779B97F4A7C15ull ^ w;
  return h;
}

}  // namespace orbitfold
