#include "orbitfold/spectral.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <sstream>

#include "orbitfold/error.hpp"

namespace orbitfold {

std::size_t SpectrumSummary::total_multiplicity() const {
  std::size_t t = 0;
  for (const auto& [e, m] : pairs) t += m;
  return t;
}

std::size_t SpectrumSummary::multiplicity(std::int64_t eigenvalue) const {
  for (const auto& [e, m] : pairs) {
    if (e == eigenvalue) return m;
  }
  return 0;
}

std::string SpectrumSummary::to_string() const {
  std::ostringstream out;
  // Nonzero eigenvalues in descending order, the zero eigenvalue last.
  std::vector<std::pair<std::int64_t, std::size_t>> shown;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(shown),
               [](const auto& p) { return p.first != 0; });
  if (std::size_t z = multiplicity(0)) shown.emplace_back(0, z);
  out << '{';
  for (std::size_t i = 0; i < shown.size(); ++i) {
    const auto [e, m] = shown[i];
    if (i) out << ", ";
    if (e < 0) {
      out << '(' << e << ')';
    } else {
      out << e;
    }
    out << '^';
    if (m >= 10) {
      out << '{' << m << '}';
    } else {
      out << m;
    }
  }
  out << '}';
  return out.str();
}

SpectrumSummary make_spectrum(std::vector<std::pair<std::int64_t, std::size_t>> pairs) {
  std::map<std::int64_t, std::size_t, std::greater<>> merged;
  for (const auto& [e, m] : pairs) {
    if (m) merged[e] += m;
  }
  SpectrumSummary s;
  s.pairs.assign(merged.begin(), merged.end());
  return s;
}

namespace {

class SpectrumParser {
 public:
  explicit SpectrumParser(std::string_view text) : text_(text) {}

  SpectrumSummary parse() {
    std::vector<std::pair<std::int64_t, std::size_t>> pairs;
    expect('{');
    skip();
    if (peek() == '}') {
      ++pos_;
    } else {
      while (true) {
        std::int64_t e = eigenvalue();
        std::size_t m = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          if (peek() == '{') {
            ++pos_;
            m = static_cast<std::size_t>(integer());
            expect('}');
          } else {
            m = static_cast<std::size_t>(integer());
          }
        }
        pairs.emplace_back(e, m);
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect('}');
        break;
      }
    }
    skip();
    if (pos_ != text_.size()) fail();
    return make_spectrum(std::move(pairs));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  [[noreturn]] void fail() const {
    throw Error(ErrorCode::Malformed, "bad spectrum \"" + std::string(text_) + "\"");
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail();
    ++pos_;
  }
  std::int64_t integer() {
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (peek() < '0' || peek() > '9') fail();
    std::int64_t v = 0;
    while (peek() >= '0' && peek() <= '9') v = v * 10 + (text_[pos_++] - '0');
    return negative ? -v : v;
  }
  std::int64_t eigenvalue() {
    skip();
    if (peek() == '(') {
      ++pos_;
      std::int64_t v = integer();
      expect(')');
      return v;
    }
    return integer();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SpectrumSummary parse_spectrum(std::string_view text) {
  // Accept U+2212 MINUS SIGN as well as the ASCII hyphen.
  constexpr std::string_view kMinus = "\xE2\x88\x92";
  std::string ascii(text);
  for (auto at = ascii.find(kMinus); at != std::string::npos; at = ascii.find(kMinus, at + 1)) {
    ascii.replace(at, kMinus.size(), "-");
  }
  return SpectrumParser(ascii).parse();
}

SpectrumSummary spectrum_from_shape(const Shape& s) {
  std::vector<std::pair<std::int64_t, std::size_t>> pairs;
  std::size_t minus_one = 0;
  std::size_t zeros = 0;
  for (std::size_t part : s.parts()) {
    if (part >= 2) {
      pairs.emplace_back(static_cast<std::int64_t>(part) - 1, 1);
      minus_one += part - 1;
    } else {
      ++zeros;
    }
  }
  pairs.emplace_back(-1, minus_one);
  pairs.emplace_back(0, zeros);
  return make_spectrum(std::move(pairs));
}

std::optional<Shape> shape_from_spectrum(const SpectrumSummary& sp) {
  std::vector<std::size_t> parts;
  std::size_t forced_minus_one = 0;
  std::size_t minus_one = 0;
  for (const auto& [e, m] : sp.pairs) {
    if (m == 0) return std::nullopt;
    if (e > 0) {
      for (std::size_t i = 0; i < m; ++i) parts.push_back(static_cast<std::size_t>(e) + 1);
      forced_minus_one += m * static_cast<std::size_t>(e);
    } else if (e == 0) {
      parts.insert(parts.end(), m, 1);
    } else if (e == -1) {
      minus_one = m;
    } else {
      return std::nullopt;
    }
  }
  if (parts.empty() || minus_one != forced_minus_one) return std::nullopt;
  return Shape(std::move(parts));
}

namespace {

struct Overflow {};

struct CheckedInt {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static std::int64_t neg(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return -a;
  }
};

struct WideInt {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
  static BigInt neg(const BigInt& a) { return -a; }
};

// Coefficients highest degree first. Step r extends the characteristic
// polynomial of the leading (r-1)-block to the leading r-block through a
// lower-triangular Toeplitz matrix whose first column is
// 1, -a_rr, -R C, -R A C, ..., -R A^{r-2} C.
template <class T, class Ops>
std::vector<T> berkowitz(const std::vector<T>& a, std::size_t n) {
  std::vector<T> p{T(1)};
  std::vector<T> col, v, w, next;
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t m = r - 1;
    col.assign(r + 1, T(0));
    col[0] = T(1);
    col[1] = Ops::neg(a[m * n + m]);
    v.assign(m, T(0));
    for (std::size_t i = 0; i < m; ++i) v[i] = a[i * n + m];
    for (std::size_t j = 2; j <= r; ++j) {
      T dot(0);
      for (std::size_t i = 0; i < m; ++i) dot = Ops::add(dot, Ops::mul(a[m * n + i], v[i]));
      col[j] = Ops::neg(dot);
      if (j == r) break;
      w.assign(m, T(0));
      for (std::size_t i = 0; i < m; ++i) {
        T acc(0);
        for (std::size_t k = 0; k < m; ++k) acc = Ops::add(acc, Ops::mul(a[i * n + k], v[k]));
        w[i] = acc;
      }
      v.swap(w);
    }
    next.assign(r + 1, T(0));
    for (std::size_t i = 0; i <= r; ++i) {
      T acc(0);
      for (std::size_t j = 0; j < p.size() && j <= i; ++j) {
        acc = Ops::add(acc, Ops::mul(col[i - j], p[j]));
      }
      next[i] = acc;
    }
    p.swap(next);
  }
  return p;
}

}  // namespace

IntPolynomial char_poly_exact(const std::vector<std::int64_t>& matrix, std::size_t n) {
  if (matrix.size() != n * n) throw Error(ErrorCode::DomainMismatch, "matrix is not n x n");
  IntPolynomial out;
  try {
    auto p = berkowitz<std::int64_t, CheckedInt>(matrix, n);
    for (auto it = p.rbegin(); it != p.rend(); ++it) out.emplace_back(*it);
  } catch (const Overflow&) {
    std::vector<BigInt> wide(matrix.begin(), matrix.end());
    auto p = berkowitz<BigInt, WideInt>(wide, n);
    out.assign(p.rbegin(), p.rend());
  }
  return out;
}

IntPolynomial char_poly_exact(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 64) throw Error(ErrorCode::DomainTooLarge, "characteristic polynomial needs n <= 64");
  std::vector<std::int64_t> a(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) a[u * n + v] = g.adjacent(u, v) ? 1 : 0;
  }
  return char_poly_exact(a, n);
}

IntPolynomial clique_union_char_poly(const Shape& s) {
  IntPolynomial p{BigInt(1)};
  auto times_linear = [&](std::int64_t root) {
    IntPolynomial q(p.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= p[i] * root;
    }
    p.swap(q);
  };
  for (const auto& [e, m] : spectrum_from_shape(s).pairs) {
    for (std::size_t i = 0; i < m; ++i) times_linear(e);
  }
  return p;
}

std::string format_polynomial(const IntPolynomial& p) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = p.size(); d-- > 0;) {
    const BigInt& c = p[d];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || d == 0) out << mag;
    if (d >= 1) out << 'x';
    if (d >= 2) out << '^' << d;
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

AutDescription aut_order(const Shape& s) {
  AutDescription out;
  out.order = 1;
  const auto& parts = s.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const std::size_t size = parts[i];
    const std::size_t mult = j - i;
    out.factors.emplace_back(size, mult);
    out.order *= boost::multiprecision::pow(factorial(size), static_cast<unsigned>(mult)) *
                 factorial(mult);
    i = j;
  }
  return out;
}

InvariantTriple invariants(const Shape& s) {
  return InvariantTriple{s.largest(), s.largest(), s.part_count()};
}

}  // namespace orbitfold
