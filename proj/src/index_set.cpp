#include "ringlab/index_set.hpp"

#include <algorithm>
#include <bit>

namespace ringlab {

IndexSet IndexSet::full(std::size_t universe) {
  IndexSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

IndexSet IndexSet::of(std::size_t universe, const std::vector<Index>& members) {
  IndexSet s(universe);
  for (Index m : members) s.insert(m);
  return s;
}

std::size_t IndexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Index> IndexSet::members() const {
  std::vector<Index> out;
  out.reserve(size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      const int bit = std::countr_zero(bits);
      out.push_back(static_cast<Index>(w * 64 + static_cast<std::size_t>(bit)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool IndexSet::is_subset_of(const IndexSet& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  IndexSet out(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] & other.words_[w];
  return out;
}

IndexSet IndexSet::unite(const IndexSet& other) const {
  IndexSet out(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] | other.words_[w];
  return out;
}

std::size_t IndexSet::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering canonical_compare(const IndexSet& a, const IndexSet& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa <=> sb;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace ringlab
