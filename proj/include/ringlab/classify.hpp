#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/group.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// ---------------------------------------------------------------------------
// Definitional (brute-force) classifiers
// ---------------------------------------------------------------------------

/// Outcome of a definitional scan. A negative outcome carries the least failing
/// element (elementwise properties) or the canonically first failing ideal
/// (properties quantified over proper images).
struct Verdict {
  bool holds = true;
  std::optional<Index> witness_element;
  std::optional<IdealSet> witness_ideal;
};

/// Every x is n + e with n nilpotent and e idempotent.
Verdict is_nil_clean_definitional(const Ring& ring);

/// Every x is n + e or n - e.
Verdict is_weakly_nil_clean_definitional(const Ring& ring);

/// Every proper image R/I (I != 0) is nil-clean; the zero ring passes vacuously.
Verdict is_nil_neat_definitional(const Ring& ring, const Limits& limits = {});

/// Every proper image R/I (I != 0) is weakly nil-clean.
Verdict is_weakly_nil_neat_definitional(const Ring& ring, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Structure recognition and structural criteria
// ---------------------------------------------------------------------------

enum class Structure { Boolean, Z3, BooleanTimesZ3, Field, Other };

std::string to_string(Structure s);

/// Raw sub-checks plus a display tag. Predicates consume the raw fields.
struct StructureTag {
  Structure tag = Structure::Other;
  bool boolean = false;      // x^2 = x for all x
  bool order_three = false;  // |R| = 3, hence R = Z_3
  bool field = false;
  /// First idempotent e (ascending index) with eR boolean and |(1-e)R| = 3.
  std::optional<Index> splitting_idempotent;

  /// Boolean, Z_3, or boolean x Z_3.
  bool boolean_or_z3_shape() const noexcept {
    return boolean || order_three || splitting_idempotent.has_value();
  }
};

StructureTag recognize_structure(const Ring& ring);

/// R itself when the ideal is zero, R/I otherwise.
Ring reduce_by(const Ring& ring, const IdealSet& ideal);

/// Whether 3 * 1 is nilpotent.
bool three_is_nilpotent(const Ring& ring);

/// The three equivalent characterizations of weakly nil-clean, evaluated separately.
struct WeaklyNilCleanCriterion {
  /// Residue fields are Z_2 except at most one Z_3. Zero-dimensionality is
  /// automatic for finite rings.
  bool residue_fields = false;
  /// R/N(R) is boolean, Z_3, or boolean x Z_3.
  bool reduced_quotient = false;
  /// J(R) is nil and R/J(R) has the same shape.
  bool jacobson_quotient = false;
  bool radicals_equal = false;
  bool holds = false;
};

/// Throws InternalDisagreement if the three sub-checks differ.
WeaklyNilCleanCriterion weakly_nil_clean_criterion(const Ring& ring);

/// R/N(R) is boolean.
bool nil_clean_criterion(const Ring& ring);

/// Finite rings: R is a field, or R/J(R) is boolean.
bool nil_neat_criterion(const Ring& ring);

enum class NeatBranch { None, Field, RadicalQuotient, ProductOfResidueFields };

struct WeaklyNilNeatCriterion {
  bool holds = false;
  NeatBranch branch = NeatBranch::None;
};

/// R is a field; or J(R) != 0 and R/J(R) is boolean, Z_3 or boolean x Z_3; or
/// J(R) = 0 and R, being the product of its residue fields, has only Z_2 and
/// Z_3 factors with at most one Z_3, or is exactly Z_3 x Z_3.
WeaklyNilNeatCriterion weakly_nil_neat_criterion(const Ring& ring);

// ---------------------------------------------------------------------------
// Group-ring predicates
// ---------------------------------------------------------------------------

/// Which numbered conditions of a classification hold. `condition` is the
/// unique match or 0.
struct ConditionMatch {
  bool holds = false;
  int condition = 0;
  std::vector<int> matched;
};

/// G is a 2-group and R is nil-clean.
bool nil_clean_group_ring_predicate(const Ring& ring, const AbelianGroup& group);

/// (1) R nil-clean, G a non-trivial 2-group; (2) R weakly nil-clean, 3 in N(R),
/// G a non-trivial 3-group; (3) R weakly nil-clean, G trivial.
/// Throws InternalDisagreement if more than one condition matches.
ConditionMatch weakly_nil_clean_group_ring_predicate(const Ring& ring, const AbelianGroup& group);

/// G trivial and R nil-neat, or G a non-trivial 2-group and R nil-clean.
bool nil_neat_group_ring_predicate(const Ring& ring, const AbelianGroup& group,
                                   const Limits& limits = {});

/// Every theorem condition that holds, without the uniqueness check.
std::vector<int> weakly_nil_neat_conditions(const Ring& ring, const AbelianGroup& group);

/// (1) G trivial, R weakly nil-neat; (2) G a non-trivial 2-group, R nil-clean;
/// (3) G a non-trivial 3-group, R weakly nil-clean with 3 in N(R);
/// (4) G = C_2 and R = Z_3.
/// Throws InternalDisagreement if more than one condition matches.
ConditionMatch weakly_nil_neat_group_ring_predicate(const Ring& ring, const AbelianGroup& group);

// ---------------------------------------------------------------------------
// Isomorphism
// ---------------------------------------------------------------------------

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<RingHom> witness;
  /// For a negative answer, the invariant that separated the rings (or "search").
  std::string reason;
};

/// Backtracking search for a bijective ring homomorphism, pruned by invariants.
/// Throws CapExceeded above limits.isomorphism_cap.
IsomorphismResult ring_isomorphic(const Ring& r, const Ring& s, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class MethodSelection { Definitional, Criterion, Both };

struct PropertyVerdict {
  std::optional<bool> definitional;
  std::optional<bool> criterion;
  std::optional<Index> witness_element;
  std::optional<IdealSet> witness_ideal;

  bool value() const { return definitional ? *definitional : criterion.value_or(false); }
  bool agree() const { return !definitional || !criterion || *definitional == *criterion; }
};

struct ClassificationReport {
  std::string label;
  std::size_t order = 0;
  PropertyVerdict nil_clean;
  PropertyVerdict weakly_nil_clean;
  PropertyVerdict nil_neat;
  PropertyVerdict weakly_nil_neat;
  StructureTag structure;
  /// Definitional scans were requested but the ring exceeds the enumeration cap.
  bool definitional_skipped = false;

  bool consistent() const {
    return nil_clean.agree() && weakly_nil_clean.agree() && nil_neat.agree() &&
           weakly_nil_neat.agree();
  }
};

/// Runs the selected methods. With Both, definitional scans are skipped (and
/// flagged) when the ring exceeds limits.enumeration_cap.
ClassificationReport classify(const Ring& ring, MethodSelection methods, const Limits& limits = {});

}  // namespace ringlab
