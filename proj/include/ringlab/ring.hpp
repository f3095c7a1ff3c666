#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ringlab/index_set.hpp"

namespace ringlab {

/// Size caps shared by every constructor and brute-force scan.
struct Limits {
  /// Largest ring that may be materialized as tables.
  std::size_t order_cap = 4096;
  /// Largest ring whose full ideal lattice may be enumerated.
  std::size_t enumeration_cap = 1024;
  /// Largest ring order accepted by the isomorphism search.
  std::size_t isomorphism_cap = 256;
};

/// Hard ceiling imposed by the 16-bit index type.
inline constexpr std::size_t kMaxRingOrder = 65535;

/// Raw Cayley tables. Not necessarily a ring; see validate_ring_axioms.
struct RingTables {
  std::size_t order = 0;
  std::vector<Index> add;  // row-major order x order
  std::vector<Index> mul;
  Index zero = 0;
  Index one = 0;
  std::string label;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<Index> witness;  // the offending pair or triple
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustively checks the commutative unital ring axioms. O(n^3).
/// Each violated axiom is reported once, with the first witness found.
AxiomReport validate_ring_axioms(const RingTables& tables);

/// A finite commutative ring with identity, stored as full n x n tables.
/// Immutable after construction.
class Ring {
 public:
  /// Validates the tables and throws InvalidRing on the first violation.
  static Ring from_tables(RingTables tables);
  /// Skips the O(n^3) validation. For constructors that are correct by construction.
  static Ring from_trusted_tables(RingTables tables);

  std::size_t order() const noexcept { return n_; }
  Index zero() const noexcept { return zero_; }
  Index one() const noexcept { return one_; }
  const std::string& label() const noexcept { return label_; }

  Index add(Index a, Index b) const noexcept { return add_[a * n_ + b]; }
  Index mul(Index a, Index b) const noexcept { return mul_[a * n_ + b]; }
  Index neg(Index a) const noexcept { return neg_[a]; }
  Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

  /// k * x for any integer k.
  Index scale(long long k, Index x) const noexcept;
  /// The image of the integer k, i.e. k * 1.
  Index from_integer(long long k) const noexcept { return scale(k, one_); }
  Index pow(Index x, unsigned long long e) const noexcept;

  const std::vector<Index>& add_table() const noexcept { return add_; }
  const std::vector<Index>& mul_table() const noexcept { return mul_; }
  RingTables tables() const;

  Ring relabeled(std::string label) const&;
  Ring relabeled(std::string label) &&;

 private:
  explicit Ring(RingTables tables);

  std::size_t n_;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
  Index zero_;
  Index one_;
  std::string label_;
};

/// True iff the label is a product at the top level ("Z2 x Z3", not "GR(Z2, C2 x C2)").
bool label_is_product(const std::string& label);

/// Integers modulo n, label "Z<n>".
Ring make_zmod(std::size_t n, const Limits& limits = {});

/// Componentwise product. Element (r, s) has index r * |S| + s.
Ring direct_product(const Ring& r, const Ring& s, const Limits& limits = {});

struct ElementClasses {
  IndexSet nilpotents;
  IndexSet idempotents;
  IndexSet units;
};

ElementClasses element_classes(const Ring& ring);

/// True iff some power x^k with k <= |R| is zero.
bool is_nilpotent(const Ring& ring, Index x);

/// Least k >= 1 with k * 1 = 0.
std::size_t characteristic(const Ring& ring);

/// A total map between two rings, recorded as an index table.
struct RingHom {
  std::vector<Index> map;
  Index operator()(Index x) const { return map[x]; }
};

struct HomCheck {
  bool ok = true;
  std::string failure;          // which property failed
  std::vector<Index> witness;   // the domain elements that witness it
};

/// Checks additivity, multiplicativity and 1 -> 1 on all pairs.
HomCheck check_ring_hom(const Ring& domain, const Ring& codomain, const RingHom& hom);

bool is_surjective(const RingHom& hom, std::size_t codomain_order);

/// Elements mapping to zero.
IndexSet hom_kernel(const Ring& codomain, const RingHom& hom);

}  // namespace ringlab
