#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <thread>

#include "orbitfold/error.hpp"
#include "orbitfold/spectral.hpp"

namespace orbitfold {

namespace {

constexpr std::size_t kKeptCounterexamples = 16;

using SmallPoly = std::array<std::int64_t, kDsScanMaxN + 1>;
using Rows = std::array<std::uint32_t, kDsScanMaxN>;

Rows rows_from_bits(std::size_t n, std::uint64_t bits) {
  Rows rows{};
  std::size_t bit = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++bit) {
      if ((bits >> bit) & 1u) {
        rows[u] |= 1u << v;
        rows[v] |= 1u << u;
      }
    }
  }
  return rows;
}

// Same recurrence as char_poly_exact, on fixed-size buffers. For n <= 7 all
// intermediate values stay far below 2^31.
SmallPoly small_char_poly(std::size_t n, const Rows& rows) {
  auto a = [&](std::size_t i, std::size_t j) -> std::int64_t { return (rows[i] >> j) & 1u; };
  std::array<std::int64_t, kDsScanMaxN + 1> p{}, next{}, col{};
  std::array<std::int64_t, kDsScanMaxN> v{}, w{};
  p[0] = 1;
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t m = r - 1;
    col.fill(0);
    col[0] = 1;
    col[1] = -a(m, m);
    for (std::size_t i = 0; i < m; ++i) v[i] = a(i, m);
    for (std::size_t j = 2; j <= r; ++j) {
      std::int64_t dot = 0;
      for (std::size_t i = 0; i < m; ++i) dot += a(m, i) * v[i];
      col[j] = -dot;
      if (j == r) break;
      for (std::size_t i = 0; i < m; ++i) {
        std::int64_t acc = 0;
        for (std::size_t k = 0; k < m; ++k) acc += a(i, k) * v[k];
        w[i] = acc;
      }
      v = w;
    }
    next.fill(0);
    for (std::size_t i = 0; i <= r; ++i) {
      for (std::size_t j = 0; j < r && j <= i; ++j) next[i] += col[i - j] * p[j];
    }
    p = next;
  }
  // Constant term first, padded with zeros.
  SmallPoly out{};
  for (std::size_t d = 0; d <= n; ++d) out[d] = p[n - d];
  return out;
}

bool is_clique_union(std::size_t n, const Rows& rows) {
  for (std::size_t u = 0; u < n; ++u) {
    const std::uint32_t closed = rows[u] | (1u << u);
    for (std::uint32_t nb = rows[u]; nb; nb &= nb - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(nb));
      if ((rows[v] | (1u << v)) != closed) return false;
    }
  }
  return true;
}

struct Chunk {
  DsLevel level;
  std::vector<DsCounterexample> counterexamples;
};

void scan_range(std::size_t n, std::uint64_t begin, std::uint64_t end,
                const std::map<SmallPoly, Shape>& targets, Chunk& out) {
  out.level.n = n;
  for (std::uint64_t bits = begin; bits < end; ++bits) {
    ++out.level.graphs;
    const Rows rows = rows_from_bits(n, bits);
    const bool clique_union = is_clique_union(n, rows);
    out.level.clique_unions += clique_union;
    auto it = targets.find(small_char_poly(n, rows));
    if (it == targets.end()) continue;
    ++out.level.cospectral_with_clique_union;
    bool same = false;
    if (clique_union) {
      auto shape = recognize_clique_union(SimpleGraph::from_edge_bits(n, bits));
      same = shape && *shape == it->second;
    }
    if (!same) {
      ++out.level.counterexamples;
      if (out.counterexamples.size() < kKeptCounterexamples) {
        out.counterexamples.push_back(DsCounterexample{n, bits, it->second});
      }
    }
  }
}

}  // namespace

std::uint64_t DsScanReport::total_graphs() const {
  std::uint64_t t = 0;
  for (const auto& l : levels) t += l.graphs;
  return t;
}

std::uint64_t DsScanReport::total_counterexamples() const {
  std::uint64_t t = 0;
  for (const auto& l : levels) t += l.counterexamples;
  return t;
}

DsScanReport ds_scan(std::size_t max_n, std::size_t workers) {
  if (max_n > kDsScanMaxN) {
    throw Error(ErrorCode::DomainTooLarge, "ds_scan supports max_n <= " +
                                               std::to_string(kDsScanMaxN));
  }
  workers = std::max<std::size_t>(workers, 1);
  DsScanReport report;
  report.max_n = max_n;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::map<SmallPoly, Shape> targets;
    for (const Shape& s : integer_partitions(n)) {
      IntPolynomial p = clique_union_char_poly(s);
      SmallPoly key{};
      for (std::size_t d = 0; d < p.size(); ++d) key[d] = static_cast<std::int64_t>(p[d]);
      targets.emplace(key, s);
    }
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    const std::size_t parts = static_cast<std::size_t>(std::min<std::uint64_t>(workers, total));
    std::vector<Chunk> chunks(parts);
    std::vector<std::thread> threads;
    for (std::size_t c = 0; c < parts; ++c) {
      const std::uint64_t begin = total * c / parts;
      const std::uint64_t end = total * (c + 1) / parts;
      if (c + 1 == parts) {
        scan_range(n, begin, end, targets, chunks[c]);
      } else {
        threads.emplace_back(scan_range, n, begin, end, std::cref(targets), std::ref(chunks[c]));
      }
    }
    for (auto& t : threads) t.join();

    DsLevel level;
    level.n = n;
    for (const auto& chunk : chunks) {
      level.graphs += chunk.level.graphs;
      level.cospectral_with_clique_union += chunk.level.cospectral_with_clique_union;
      level.clique_unions += chunk.level.clique_unions;
      level.counterexamples += chunk.level.counterexamples;
      for (const auto& ce : chunk.counterexamples) {
        if (report.counterexamples.size() < kKeptCounterexamples) {
          report.counterexamples.push_back(ce);
        }
      }
    }
    report.levels.push_back(level);
  }
  return report;
}

}  // namespace orbitfold
