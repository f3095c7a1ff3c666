#pragma once

#include <span>
#include <vector>

#include "ringlab/index_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// A subset of a ring's indices closed under addition and under multiplication
/// by arbitrary ring elements. The ring itself is passed alongside.
class IdealSet {
 public:
  IdealSet() = default;
  explicit IdealSet(IndexSet members) : members_(std::move(members)) {}

  const IndexSet& mask() const noexcept { return members_; }
  std::vector<Index> members() const { return members_.members(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Index x) const noexcept { return members_.contains(x); }
  bool is_zero() const noexcept { return size() == 1; }
  bool is_whole() const noexcept { return size() == members_.universe(); }
  bool is_subset_of(const IdealSet& other) const noexcept {
    return members_.is_subset_of(other.members_);
  }

  bool operator==(const IdealSet&) const = default;

 private:
  IndexSet members_;
};

/// Canonical report order: by cardinality, then by sorted member list.
bool canonical_less(const IdealSet& a, const IdealSet& b);
void sort_canonical(std::vector<IdealSet>& ideals);

/// True iff the set contains zero and is closed under + and under ring multiplication.
bool is_ideal(const Ring& ring, const IndexSet& set);

IdealSet zero_ideal(const Ring& ring);
IdealSet whole_ring(const Ring& ring);

/// The least ideal containing gens: additive closure of { r * g }.
IdealSet ideal_generated(const Ring& ring, std::span<const Index> gens);
IdealSet principal_ideal(const Ring& ring, Index g);
IdealSet ideal_sum(const Ring& ring, const IdealSet& a, const IdealSet& b);
IdealSet ideal_intersection(const IdealSet& a, const IdealSet& b);

/// A small generating set, chosen greedily in ascending index order.
std::vector<Index> ideal_generators(const Ring& ring, const IdealSet& ideal);

/// The complete ideal lattice in canonical order, by join closure over principal
/// ideals. Throws CapExceeded above limits.enumeration_cap.
std::vector<IdealSet> enumerate_ideals(const Ring& ring, const Limits& limits = {});

struct QuotientRing {
  Ring ring;
  RingHom projection;
};

/// R/I. Cosets are numbered by their least member, so the zero coset is index 0.
/// Throws std::invalid_argument when I = R (the zero ring is not representable)
/// or when I is not an ideal.
QuotientRing quotient_ring(const Ring& ring, const IdealSet& ideal);

/// Every nonzero element is a unit.
bool is_field(const Ring& ring);

/// All maximal ideals in canonical order. Each is grown greedily from a non-unit
/// not yet covered, then confirmed by the quotient-is-a-field test.
std::vector<IdealSet> maximal_ideals(const Ring& ring);

/// Proper ideal with ab in I implying a in I or b in I. Throws on a non-ideal.
bool is_prime_ideal(const Ring& ring, const IdealSet& ideal);

/// The nilpotent elements. Throws InvalidRing if they fail to form an ideal.
IdealSet nilradical(const Ring& ring);

/// Intersection of all maximal ideals.
IdealSet jacobson_radical(const Ring& ring);

}  // namespace ringlab
