#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ringlab {

/// Element index inside a RingTable. Tables are capped well below 2^16.
using Index = std::uint16_t;

/// Fixed-universe bitset over element indices 0..n-1.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet full(std::size_t universe);
  static IndexSet of(std::size_t universe, const std::vector<Index>& members);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<Index> members() const;

  bool is_subset_of(const IndexSet& other) const noexcept;
  IndexSet intersect(const IndexSet& other) const;
  IndexSet unite(const IndexSet& other) const;

  std::size_t hash() const noexcept;

  bool operator==(const IndexSet& other) const = default;

  /// Canonical order: cardinality first, then the sorted member list lexicographically.
  friend std::strong_ordering canonical_compare(const IndexSet& a, const IndexSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept { return s.hash(); }
};

}  // namespace ringlab
