#include "ringlab/classify.hpp"

#include <algorithm>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

// Least element outside (N + E), or, when `with_differences`, outside (N + E) u (N - E).
std::optional<Index> first_undecomposable(const Ring& ring, bool with_differences) {
  const auto classes = element_classes(ring);
  const auto nil = classes.nilpotents.members();
  const auto idem = classes.idempotents.members();
  IndexSet reached(ring.order());
  for (Index n : nil) {
    for (Index e : idem) {
      reached.insert(ring.add(n, e));
      if (with_differences) reached.insert(ring.sub(n, e));
    }
  }
  for (std::size_t x = 0; x < ring.order(); ++x) {
    if (!reached.contains(x)) return static_cast<Index>(x);
  }
  return std::nullopt;
}

Verdict from_element(std::optional<Index> failing) {
  Verdict v;
  v.holds = !failing.has_value();
  v.witness_element = failing;
  return v;
}

template <typename ImageTest>
Verdict scan_proper_images(const Ring& ring, const Limits& limits, ImageTest&& image_ok) {
  for (const auto& ideal : enumerate_ideals(ring, limits)) {
    if (ideal.is_zero() || ideal.is_whole()) continue;
    if (!image_ok(quotient_ring(ring, ideal).ring)) {
      Verdict v;
      v.holds = false;
      v.witness_ideal = ideal;
      return v;
    }
  }
  return Verdict{};
}

bool is_boolean(const Ring& ring) {
  for (std::size_t x = 0; x < ring.order(); ++x) {
    const auto xi = static_cast<Index>(x);
    if (ring.mul(xi, xi) != xi) return false;
  }
  return true;
}

struct ResidueCounts {
  std::size_t twos = 0;
  std::size_t threes = 0;
  std::size_t others = 0;
  std::size_t product = 1;
};

ResidueCounts residue_counts(const Ring& ring, const std::vector<IdealSet>& maximals) {
  ResidueCounts c;
  for (const auto& m : maximals) {
    const std::size_t q = ring.order() / m.size();
    c.product *= q;
    if (q == 2) {
      ++c.twos;
    } else if (q == 3) {
      ++c.threes;
    } else {
      ++c.others;
    }
  }
  return c;
}

}  // namespace

Verdict is_nil_clean_definitional(const Ring& ring) {
  return from_element(first_undecomposable(ring, false));
}

Verdict is_weakly_nil_clean_definitional(const Ring& ring) {
  return from_element(first_undecomposable(ring, true));
}

Verdict is_nil_neat_definitional(const Ring& ring, const Limits& limits) {
  return scan_proper_images(ring, limits,
                            [](const Ring& q) { return is_nil_clean_definitional(q).holds; });
}

Verdict is_weakly_nil_neat_definitional(const Ring& ring, const Limits& limits) {
  return scan_proper_images(
      ring, limits, [](const Ring& q) { return is_weakly_nil_clean_definitional(q).holds; });
}

std::string to_string(Structure s) {
  switch (s) {
    case Structure::Boolean:
      return "Boolean";
    case Structure::Z3:
      return "Z3";
    case Structure::BooleanTimesZ3:
      return "BooleanTimesZ3";
    case Structure::Field:
      return "Field";
    case Structure::Other:
      return "Other";
  }
  return "Other";
}

StructureTag recognize_structure(const Ring& ring) {
  StructureTag t;
  t.boolean = is_boolean(ring);
  t.order_three = ring.order() == 3;
  t.field = is_field(ring);

  const auto idempotents = element_classes(ring).idempotents.members();
  for (Index e : idempotents) {
    if (e == ring.zero() || e == ring.one()) continue;
    const Index complement = ring.sub(ring.one(), e);
    IndexSet complement_part(ring.order());
    bool e_part_boolean = true;
    for (std::size_t x = 0; x < ring.order(); ++x) {
      const auto xi = static_cast<Index>(x);
      const Index ex = ring.mul(e, xi);
      if (ring.mul(ex, ex) != ex) e_part_boolean = false;
      complement_part.insert(ring.mul(complement, xi));
    }
    if (e_part_boolean && complement_part.size() == 3) {
      t.splitting_idempotent = e;
      break;
    }
  }

  if (t.boolean) {
    t.tag = Structure::Boolean;
  } else if (t.order_three) {
    t.tag = Structure::Z3;
  } else if (t.splitting_idempotent) {
    t.tag = Structure::BooleanTimesZ3;
  } else if (t.field) {
    t.tag = Structure::Field;
  }
  return t;
}

Ring reduce_by(const Ring& ring, const IdealSet& ideal) {
  if (ideal.is_zero()) return ring;
  return quotient_ring(ring, ideal).ring;
}

bool three_is_nilpotent(const Ring& ring) { return is_nilpotent(ring, ring.from_integer(3)); }

WeaklyNilCleanCriterion weakly_nil_clean_criterion(const Ring& ring) {
  WeaklyNilCleanCriterion c;
  const auto maximals = maximal_ideals(ring);
  const auto counts = residue_counts(ring, maximals);
  c.residue_fields = counts.others == 0 && counts.threes <= 1;

  const auto nil = nilradical(ring);
  const auto jac = jacobson_radical(ring);
  c.radicals_equal = nil == jac;
  c.reduced_quotient = recognize_structure(reduce_by(ring, nil)).boolean_or_z3_shape();
  c.jacobson_quotient =
      jac.is_subset_of(nil) && recognize_structure(reduce_by(ring, jac)).boolean_or_z3_shape();

  if (c.residue_fields != c.reduced_quotient || c.residue_fields != c.jacobson_quotient) {
    throw InternalDisagreement("weakly nil-clean sub-checks disagree on " + ring.label());
  }
  c.holds = c.residue_fields;
  return c;
}

bool nil_clean_criterion(const Ring& ring) {
  return recognize_structure(reduce_by(ring, nilradical(ring))).boolean;
}

bool nil_neat_criterion(const Ring& ring) {
  if (is_field(ring)) return true;
  return recognize_structure(reduce_by(ring, jacobson_radical(ring))).boolean;
}

WeaklyNilNeatCriterion weakly_nil_neat_criterion(const Ring& ring) {
  WeaklyNilNeatCriterion c;
  if (is_field(ring)) {
    c.holds = true;
    c.branch = NeatBranch::Field;
    return c;
  }
  const auto maximals = maximal_ideals(ring);
  IdealSet jac = whole_ring(ring);
  for (const auto& m : maximals) jac = ideal_intersection(jac, m);

  if (!jac.is_zero()) {
    if (recognize_structure(quotient_ring(ring, jac).ring).boolean_or_z3_shape()) {
      c.holds = true;
      c.branch = NeatBranch::RadicalQuotient;
    }
    return c;
  }

  const auto counts = residue_counts(ring, maximals);
  if (counts.product != ring.order()) {
    throw InternalDisagreement("semiprimitive ring is not the product of its residue fields: " +
                               ring.label());
  }
  const bool small_fields = counts.others == 0;
  const bool at_most_one_z3 = counts.threes <= 1;
  const bool exactly_z3_squared = counts.threes == 2 && counts.twos == 0;
  if (small_fields && (at_most_one_z3 || exactly_z3_squared)) {
    c.holds = true;
    c.branch = NeatBranch::ProductOfResidueFields;
  }
  return c;
}

bool nil_clean_group_ring_predicate(const Ring& ring, const AbelianGroup& group) {
  const bool criterion = nil_clean_criterion(ring);
  if (criterion != is_nil_clean_definitional(ring).holds) {
    throw InternalDisagreement("nil-clean criterion disagrees with the definition on " +
                               ring.label());
  }
  return is_p_group(group, 2) && criterion;
}

ConditionMatch weakly_nil_clean_group_ring_predicate(const Ring& ring, const AbelianGroup& group) {
  ConditionMatch m;
  const bool trivial = group.is_trivial();
  const bool weakly_nil_clean = weakly_nil_clean_criterion(ring).holds;
  if (!trivial && is_p_group(group, 2) && nil_clean_criterion(ring)) m.matched.push_back(1);
  if (!trivial && is_p_group(group, 3) && weakly_nil_clean && three_is_nilpotent(ring)) {
    m.matched.push_back(2);
  }
  if (trivial && weakly_nil_clean) m.matched.push_back(3);
  if (m.matched.size() > 1) {
    throw InternalDisagreement("several weakly nil-clean group ring conditions match");
  }
  m.holds = m.matched.size() == 1;
  m.condition = m.holds ? m.matched.front() : 0;
  return m;
}

bool nil_neat_group_ring_predicate(const Ring& ring, const AbelianGroup& group,
                                   const Limits& limits) {
  if (group.is_trivial()) return is_nil_neat_definitional(ring, limits).holds;
  return is_p_group(group, 2) && nil_clean_criterion(ring);
}

std::vector<int> weakly_nil_neat_conditions(const Ring& ring, const AbelianGroup& group) {
  std::vector<int> matched;
  const bool trivial = group.is_trivial();
  if (trivial && weakly_nil_neat_criterion(ring).holds) matched.push_back(1);
  if (!trivial && is_p_group(group, 2) && nil_clean_criterion(ring)) matched.push_back(2);
  if (!trivial && is_p_group(group, 3) && weakly_nil_clean_criterion(ring).holds &&
      three_is_nilpotent(ring)) {
    matched.push_back(3);
  }
  if (group.factors() == std::vector<std::size_t>{2} && ring.order() == 3) matched.push_back(4);
  return matched;
}

ConditionMatch weakly_nil_neat_group_ring_predicate(const Ring& ring, const AbelianGroup& group) {
  ConditionMatch m;
  m.matched = weakly_nil_neat_conditions(ring, group);
  if (m.matched.size() > 1) {
    throw InternalDisagreement("several weakly nil-neat group ring conditions match");
  }
  m.holds = m.matched.size() == 1;
  m.condition = m.holds ? m.matched.front() : 0;
  return m;
}

ClassificationReport classify(const Ring& ring, MethodSelection methods, const Limits& limits) {
  ClassificationReport r;
  r.label = ring.label();
  r.order = ring.order();
  r.structure = recognize_structure(ring);

  const bool want_definitional = methods != MethodSelection::Criterion;
  const bool want_criterion = methods != MethodSelection::Definitional;
  const bool can_enumerate = ring.order() <= limits.enumeration_cap;
  if (methods == MethodSelection::Definitional && !can_enumerate) {
    throw CapExceeded("definitional classification", ring.order(), limits.enumeration_cap);
  }

  auto take = [](PropertyVerdict& p, const Verdict& v) {
    p.definitional = v.holds;
    p.witness_element = v.witness_element;
    p.witness_ideal = v.witness_ideal;
  };

  if (want_definitional) {
    take(r.nil_clean, is_nil_clean_definitional(ring));
    take(r.weakly_nil_clean, is_weakly_nil_clean_definitional(ring));
    if (can_enumerate) {
      take(r.nil_neat, is_nil_neat_definitional(ring, limits));
      take(r.weakly_nil_neat, is_weakly_nil_neat_definitional(ring, limits));
    } else {
      r.definitional_skipped = true;
    }
  }
  if (want_criterion) {
    r.nil_clean.criterion = nil_clean_criterion(ring);
    r.weakly_nil_clean.criterion = weakly_nil_clean_criterion(ring).holds;
    r.nil_neat.criterion = nil_neat_criterion(ring);
    r.weakly_nil_neat.criterion = weakly_nil_neat_criterion(ring).holds;
  }
  return r;
}

}  // namespace ringlab
