#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/cache.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/expr.hpp"

namespace ringlab {

/// The group-ring predicates evaluated on the (R, G) that built a group ring.
struct GroupRingVerdicts {
  std::string base;
  std::string group;
  bool nil_clean = false;
  ConditionMatch weakly_nil_clean;
  bool nil_neat = false;
  ConditionMatch weakly_nil_neat;
};

struct ClassifyOutcome {
  ClassificationReport report;
  std::optional<GroupRingVerdicts> group_ring;
  /// "Z3 x Z3" when the ring was matched to a product of prime fields.
  std::optional<std::string> decomposition;
  std::size_t cache_hits = 0;

  /// Definitional and criterion verdicts agree, and so do the group-ring
  /// predicates with the definitional verdicts of RG.
  bool consistent() const;
};

/// Runs classify on an expression, consulting the cache for definitional verdicts.
ClassifyOutcome classify_expr(const RingExpr& expr, MethodSelection methods, const Limits& limits,
                              VerdictCache* cache = nullptr);

struct RadicalReport {
  std::string label;
  std::size_t order = 0;
  IdealSet nilradical;
  IdealSet jacobson;
  std::optional<IdealSet> karpilovsky;  // group rings only

  bool nil_inside_jacobson() const { return nilradical.is_subset_of(jacobson); }
  bool karpilovsky_agrees() const { return !karpilovsky || *karpilovsky == jacobson; }
};

RadicalReport radical_expr(const RingExpr& expr, const Limits& limits);

/// For a semiprimitive ring whose residue fields all have prime order, the
/// product of those prime fields, if the ring is isomorphic to it.
std::optional<std::string> prime_field_decomposition(const Ring& ring, const Limits& limits);

nlohmann::json to_json(const IdealSet& ideal);
nlohmann::json to_json(const ClassifyOutcome& outcome);
nlohmann::json to_json(const RadicalReport& report);
nlohmann::json ideals_json(const Ring& ring, const std::vector<IdealSet>& ideals);

std::string render_text(const ClassifyOutcome& outcome);
std::string render_text(const RadicalReport& report);
std::string render_ideals_text(const Ring& ring, const std::vector<IdealSet>& ideals);

}  // namespace ringlab
