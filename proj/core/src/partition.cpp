#include "orbitfold/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "orbitfold/error.hpp"

namespace orbitfold {

Partition::Partition(std::size_t domain_size, std::vector<std::vector<std::size_t>> blocks) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(domain_size, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorCode::DomainMismatch, "empty block");
    for (std::size_t x : blocks[b]) {
      if (x >= domain_size) {
        throw Error(ErrorCode::DomainMismatch,
                    "index " + std::to_string(x) + " outside domain " +
                        std::to_string(domain_size));
      }
      if (labels[x] != kUnset) {
        throw Error(ErrorCode::DomainMismatch, "index " + std::to_string(x) +
                                                   " appears in two blocks");
      }
      labels[x] = b;
    }
  }
  for (std::size_t x = 0; x < domain_size; ++x) {
    if (labels[x] == kUnset) {
      throw Error(ErrorCode::DomainMismatch, "index " + std::to_string(x) + " uncovered");
    }
  }
  canonicalize_from_labels(labels);
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  Partition p;
  p.canonicalize_from_labels(labels);
  return p;
}

Partition Partition::trivial(std::size_t domain_size) {
  std::vector<std::size_t> labels(domain_size, 0);
  return from_labels(labels);
}

Partition Partition::discrete(std::size_t domain_size) {
  std::vector<std::size_t> labels(domain_size);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(labels);
}

void Partition::canonicalize_from_labels(std::span<const std::size_t> labels) {
  // Scanning indices in order assigns ids by first occurrence, which is the
  // order of block minima.
  std::unordered_map<std::size_t, std::size_t> dense;
  block_of_.assign(labels.size(), 0);
  blocks_.clear();
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = dense.try_emplace(labels[x], blocks_.size());
    if (inserted) blocks_.emplace_back();
    block_of_[x] = it->second;
    blocks_[it->second].push_back(x);
  }
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.domain_size() != domain_size()) return false;
  for (const auto& block : blocks_) {
    std::size_t target = coarser.block_of_[block.front()];
    for (std::size_t x : block) {
      if (coarser.block_of_[x] != target) return false;
    }
  }
  return true;
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.domain_size() != b.domain_size()) {
    throw Error(ErrorCode::DomainMismatch, "meet of partitions on " +
                                               std::to_string(a.domain_size()) + " and " +
                                               std::to_string(b.domain_size()) + " points");
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> key_ids;
  std::vector<std::size_t> labels(a.domain_size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto key = std::make_pair(a.block_of(x), b.block_of(x));
    auto [it, inserted] = key_ids.try_emplace(key, key_ids.size());
    labels[x] = it->second;
  }
  return Partition::from_labels(labels);
}

Shape::Shape(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t p : parts_) {
    if (p == 0) throw Error(ErrorCode::Malformed, "shape parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::size_t Shape::total() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::string Shape::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << '+';
    out << parts_[i];
  }
  return out.str();
}

Shape parse_shape(const std::string& text) {
  std::vector<std::size_t> parts;
  std::size_t value = 0;
  bool have_digit = false;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      value = value * 10 + static_cast<std::size_t>(c - '0');
      have_digit = true;
    } else if (c == '+' || c == ',') {
      if (!have_digit) throw Error(ErrorCode::Malformed, "bad shape \"" + text + "\"");
      parts.push_back(value);
      value = 0;
      have_digit = false;
    } else if (c != ' ') {
      throw Error(ErrorCode::Malformed, "bad shape \"" + text + "\"");
    }
  }
  if (!have_digit) throw Error(ErrorCode::Malformed, "bad shape \"" + text + "\"");
  parts.push_back(value);
  return Shape(std::move(parts));
}

Shape shape_of(const Partition& p) {
  std::vector<std::size_t> parts;
  parts.reserve(p.block_count());
  for (const auto& block : p.blocks()) parts.push_back(block.size());
  return Shape(std::move(parts));
}

namespace {

void partitions_rec(std::size_t remaining, std::size_t max_part,
                    std::vector<std::size_t>& current, std::vector<Shape>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Shape> integer_partitions(std::size_t total) {
  std::vector<Shape> out;
  if (total == 0) return out;
  std::vector<std::size_t> current;
  partitions_rec(total, total, current, out);
  return out;
}

ShapeLookup shape_lookup(std::span<const std::pair<Shape, std::string>> catalog,
                         const Shape& shape) {
  ShapeLookup result;
  for (const auto& [s, label] : catalog) {
    if (s == shape) result.labels.push_back(label);
  }
  if (result.labels.size() == 1) {
    result.status = ShapeLookup::Status::Found;
  } else if (result.labels.size() > 1) {
    result.status = ShapeLookup::Status::Ambiguous;
  }
  return result;
}

}  // namespace orbitfold
