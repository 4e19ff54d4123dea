#include <numeric>

#include "orbitfold/error.hpp"
#include "orbitfold/group.hpp"

namespace orbitfold {

namespace {

// Cycle (from, from+1, ..., to-1) on n points; identity when to - from < 2.
std::vector<Point> cycle_images(std::size_t n, Point from, Point to) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  if (to - from >= 2) {
    for (Point i = from; i + 1 < to; ++i) images[i] = i + 1;
    images[to - 1] = from;
  }
  return images;
}

PermutationGroup checked(PermutationGroup g, const BigInt& expected, const char* what) {
  if (g.order() != expected) {
    throw Error(ErrorCode::ValidationFailed, std::string(what) + " has order " +
                                                 to_string(g.order()) + ", expected " +
                                                 to_string(expected));
  }
  return g;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) ok = ok && pow_mod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  return 1;
}

}  // namespace

PermutationGroup symmetric_group(std::size_t n) {
  if (n < 2 || n > kMaxDegree) {
    throw Error(ErrorCode::BadDegree, "symmetric group needs n >= 2, got " + std::to_string(n));
  }
  std::vector<Permutation> gens{Permutation(cycle_images(n, 0, 2)),
                                Permutation(cycle_images(n, 0, static_cast<Point>(n)))};
  return checked(PermutationGroup(n, std::move(gens)), factorial(n), "symmetric group");
}

PermutationGroup alternating_group(std::size_t n) {
  if (n < 3 || n > kMaxDegree) {
    throw Error(ErrorCode::BadDegree, "alternating group needs n >= 3, got " + std::to_string(n));
  }
  std::vector<Point> second = cycle_images(n, 2, static_cast<Point>(n));
  if (n % 2 == 0) std::swap(second[0], second[1]);
  std::vector<Permutation> gens{Permutation(cycle_images(n, 0, 3)), Permutation(second)};
  return checked(PermutationGroup(n, std::move(gens)), factorial(n) / 2, "alternating group");
}

PermutationGroup projective_linear_group(std::uint32_t p, bool extended) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p > 61) throw Error(ErrorCode::BadDegree, "field size " + std::to_string(p) + " above 61");
  const std::size_t n = p + 1;
  const Point inf = p;
  std::vector<Point> shift(n), invert(n), scale(n);
  for (Point z = 0; z < p; ++z) {
    shift[z] = (z + 1) % p;
    invert[z] = z == 0 ? inf : static_cast<Point>((p - pow_mod(z, p - 2, p)) % p);
  }
  shift[inf] = inf;
  invert[inf] = 0;
  std::vector<Permutation> gens{Permutation(shift), Permutation(invert)};
  if (extended) {
    const std::uint32_t lambda = primitive_root(p);
    for (Point z = 0; z < p; ++z) scale[z] = static_cast<Point>(std::uint64_t{z} * lambda % p);
    scale[inf] = inf;
    gens.emplace_back(scale);
  }
  BigInt order = BigInt(p) * (BigInt(p) * p - 1);
  if (!extended && p > 2) order /= 2;
  return checked(PermutationGroup(n, std::move(gens)), order,
                 extended ? "PGL(2,p)" : "PSL(2,p)");
}

PermutationGroup cyclic_group(const Permutation& generator) {
  return PermutationGroup(generator.degree(), {generator});
}

}  // namespace orbitfold
