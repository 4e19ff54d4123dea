#include "orbitfold/subset_domain.hpp"

#include <array>
#include <bit>
#include <limits>

#include "orbitfold/error.hpp"

namespace orbitfold {

namespace {

using BinomialTable = std::array<std::array<std::uint64_t, 65>, 65>;

const BinomialTable& binomial_table() {
  static const BinomialTable table = [] {
    BinomialTable t{};
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t n = 0; n <= 64; ++n) {
      t[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) {
        std::uint64_t a = t[n - 1][k - 1];
        std::uint64_t b = t[n - 1][k];
        t[n][k] = (a > kMax - b) ? kMax : a + b;
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (n > 64) throw Error(ErrorCode::DomainTooLarge, "binomial table covers n <= 64");
  return binomial_table()[n][k];
}

SubsetDomain::SubsetDomain(std::size_t n, std::size_t k, std::uint64_t cap) : n_(n), k_(k) {
  if (k == 0 || k > n) {
    throw Error(ErrorCode::KTooLarge,
                "k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  if (n > 64) {
    throw Error(ErrorCode::DomainTooLarge, "subset domains need degree <= 64");
  }
  std::uint64_t count = binomial(n, k);
  if (count > cap) {
    throw Error(ErrorCode::DomainTooLarge, "C(" + std::to_string(n) + "," +
                                               std::to_string(k) + ") = " +
                                               std::to_string(count) + " exceeds cap " +
                                               std::to_string(cap));
  }
  size_ = static_cast<std::size_t>(count);
}

std::size_t SubsetDomain::rank(std::uint64_t mask) const {
  const auto& t = binomial_table();
  std::uint64_t r = 0;
  std::size_t i = 1;
  while (mask != 0) {
    auto c = static_cast<std::size_t>(std::countr_zero(mask));
    r += t[c][i];
    ++i;
    mask &= mask - 1;
  }
  return static_cast<std::size_t>(r);
}

std::uint64_t SubsetDomain::unrank(std::size_t index) const {
  const auto& t = binomial_table();
  std::uint64_t mask = 0;
  std::uint64_t r = index;
  std::size_t c = n_;
  for (std::size_t i = k_; i >= 1; --i) {
    // largest c with C(c, i) <= r
    do {
      --c;
    } while (t[c][i] > r);
    mask |= std::uint64_t{1} << c;
    r -= t[c][i];
  }
  return mask;
}

std::vector<Point> SubsetDomain::induced(const Permutation& p) const {
  if (p.degree() != n_) {
    throw Error(ErrorCode::DegreeMismatch, "permutation degree " +
                                               std::to_string(p.degree()) + " vs domain degree " +
                                               std::to_string(n_));
  }
  std::vector<Point> images(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    images[i] = static_cast<Point>(rank(apply_mask(p, unrank(i))));
  }
  return images;
}

}  // namespace orbitfold
