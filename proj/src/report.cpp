#include "ringlab/report.hpp"

#include <algorithm>
#include <sstream>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

struct NamedProperty {
  const char* name;
  PropertyVerdict ClassificationReport::*field;
};

constexpr NamedProperty kProperties[] = {
    {"nil_clean", &ClassificationReport::nil_clean},
    {"weakly_nil_clean", &ClassificationReport::weakly_nil_clean},
    {"nil_neat", &ClassificationReport::nil_neat},
    {"weakly_nil_neat", &ClassificationReport::weakly_nil_neat},
};

nlohmann::json witness_of(const PropertyVerdict& p) {
  if (p.witness_ideal) return {{"ideal", p.witness_ideal->members()}};
  if (p.witness_element) return {{"element", *p.witness_element}};
  return nullptr;
}

void restore_witness(PropertyVerdict& p, const nlohmann::json& w, std::size_t order) {
  if (!w.is_object()) return;
  if (w.contains("element")) p.witness_element = w["element"].get<Index>();
  if (w.contains("ideal")) {
    p.witness_ideal = IdealSet(IndexSet::of(order, w["ideal"].get<std::vector<Index>>()));
  }
}

std::string yes_no(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "true" : "false";
}

std::string member_list(const IdealSet& ideal) {
  std::string out = "{";
  bool first = true;
  for (Index m : ideal.members()) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

nlohmann::json to_json(const ConditionMatch& m) {
  return {{"holds", m.holds}, {"condition", m.condition}, {"matched", m.matched}};
}

}  // namespace

bool ClassifyOutcome::consistent() const {
  if (!report.consistent()) return false;
  if (!group_ring) return true;
  const auto& g = *group_ring;
  auto agrees = [](const PropertyVerdict& p, bool predicate) {
    return !p.definitional || *p.definitional == predicate;
  };
  return agrees(report.nil_clean, g.nil_clean) &&
         agrees(report.weakly_nil_clean, g.weakly_nil_clean.holds) &&
         agrees(report.nil_neat, g.nil_neat) &&
         agrees(report.weakly_nil_neat, g.weakly_nil_neat.holds) &&
         g.weakly_nil_neat.matched.size() <= 1 && g.weakly_nil_clean.matched.size() <= 1;
}

std::optional<std::string> prime_field_decomposition(const Ring& ring, const Limits& limits) {
  if (ring.order() > limits.isomorphism_cap) return std::nullopt;
  const auto maximals = maximal_ideals(ring);
  IdealSet jac = whole_ring(ring);
  for (const auto& m : maximals) jac = ideal_intersection(jac, m);
  if (!jac.is_zero()) return std::nullopt;
  std::vector<std::size_t> fields;
  for (const auto& m : maximals) {
    const std::size_t q = ring.order() / m.size();
    if (!is_prime(q)) return std::nullopt;
    fields.push_back(q);
  }
  std::sort(fields.begin(), fields.end());
  Ring product = make_zmod(fields.front(), limits);
  for (std::size_t i = 1; i < fields.size(); ++i) {
    product = direct_product(product, make_zmod(fields[i], limits), limits);
  }
  if (!ring_isomorphic(ring, product, limits).isomorphic) return std::nullopt;
  return product.label();
}

ClassifyOutcome classify_expr(const RingExpr& expr, MethodSelection methods, const Limits& limits,
                              VerdictCache* cache) {
  ClassifyOutcome out;
  std::optional<GroupRingView> view = evaluate_group_ring(expr, limits);
  const Ring ring = view ? view->ring : evaluate(expr, limits);
  const std::string key = to_string(expr);

  bool from_cache = false;
  if (cache != nullptr && methods != MethodSelection::Criterion) {
    std::vector<CacheEntry> hits;
    for (const auto& p : kProperties) {
      if (auto e = cache->get(key, p.name)) hits.push_back(std::move(*e));
    }
    if (hits.size() == std::size(kProperties)) {
      from_cache = true;
      out.report = methods == MethodSelection::Both
                       ? classify(ring, MethodSelection::Criterion, limits)
                       : ClassificationReport{};
      out.report.label = ring.label();
      out.report.order = ring.order();
      out.report.structure = recognize_structure(ring);
      for (std::size_t i = 0; i < hits.size(); ++i) {
        auto& pv = out.report.*(kProperties[i].field);
        pv.definitional = hits[i].verdict;
        restore_witness(pv, hits[i].witness, ring.order());
      }
      out.cache_hits = hits.size();
    }
  }
  if (!from_cache) {
    out.report = classify(ring, methods, limits);
    if (cache != nullptr && methods != MethodSelection::Criterion &&
        !out.report.definitional_skipped) {
      for (const auto& p : kProperties) {
        const auto& pv = out.report.*(p.field);
        cache->put({key, p.name, *pv.definitional, witness_of(pv)});
      }
    }
  }

  if (view) {
    GroupRingVerdicts g;
    g.base = view->base.label();
    g.group = view->group.label();
    g.nil_clean = nil_clean_group_ring_predicate(view->base, view->group);
    g.nil_neat = nil_neat_group_ring_predicate(view->base, view->group, limits);
    g.weakly_nil_neat.matched = weakly_nil_neat_conditions(view->base, view->group);
    g.weakly_nil_neat.holds = !g.weakly_nil_neat.matched.empty();
    g.weakly_nil_neat.condition =
        g.weakly_nil_neat.matched.size() == 1 ? g.weakly_nil_neat.matched.front() : 0;
    g.weakly_nil_clean = weakly_nil_clean_group_ring_predicate(view->base, view->group);
    out.group_ring = std::move(g);
  }
  out.decomposition = prime_field_decomposition(ring, limits);
  return out;
}

RadicalReport radical_expr(const RingExpr& expr, const Limits& limits) {
  RadicalReport r;
  std::optional<GroupRingView> view = evaluate_group_ring(expr, limits);
  const Ring ring = view ? view->ring : evaluate(expr, limits);
  r.label = ring.label();
  r.order = ring.order();
  r.nilradical = nilradical(ring);
  r.jacobson = jacobson_radical(ring);
  if (view) r.karpilovsky = karpilovsky_radical(*view);
  return r;
}

nlohmann::json to_json(const IdealSet& ideal) {
  return {{"size", ideal.size()}, {"members", ideal.members()}};
}

nlohmann::json to_json(const ClassifyOutcome& o) {
  const auto& r = o.report;
  nlohmann::json props = nlohmann::json::object();
  for (const auto& p : kProperties) {
    const auto& pv = r.*(p.field);
    nlohmann::json entry = {{"value", pv.value()}, {"agree", pv.agree()}};
    entry["definitional"] = pv.definitional ? nlohmann::json(*pv.definitional) : nullptr;
    entry["criterion"] = pv.criterion ? nlohmann::json(*pv.criterion) : nullptr;
    entry["witness"] = witness_of(pv);
    props[p.name] = std::move(entry);
  }
  nlohmann::json j = {{"ring", r.label},
                      {"order", r.order},
                      {"structure", to_string(r.structure.tag)},
                      {"properties", props},
                      {"definitional_skipped", r.definitional_skipped},
                      {"consistent", o.consistent()}};
  if (r.structure.splitting_idempotent) {
    j["splitting_idempotent"] = *r.structure.splitting_idempotent;
  }
  if (o.group_ring) {
    const auto& g = *o.group_ring;
    j["group_ring"] = {{"base", g.base},
                       {"group", g.group},
                       {"nil_clean", g.nil_clean},
                       {"weakly_nil_clean", to_json(g.weakly_nil_clean)},
                       {"nil_neat", g.nil_neat},
                       {"weakly_nil_neat", to_json(g.weakly_nil_neat)}};
  }
  j["isomorphic_to"] = o.decomposition ? nlohmann::json(*o.decomposition) : nullptr;
  return j;
}

nlohmann::json to_json(const RadicalReport& r) {
  nlohmann::json j = {{"ring", r.label},
                      {"order", r.order},
                      {"nilradical", to_json(r.nilradical)},
                      {"jacobson", to_json(r.jacobson)},
                      {"nil_inside_jacobson", r.nil_inside_jacobson()}};
  if (r.karpilovsky) {
    j["karpilovsky"] = to_json(*r.karpilovsky);
    j["karpilovsky_agrees"] = r.karpilovsky_agrees();
  }
  return j;
}

nlohmann::json ideals_json(const Ring& ring, const std::vector<IdealSet>& ideals) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& i : ideals) {
    auto entry = to_json(i);
    entry["generators"] = ideal_generators(ring, i);
    entry["maximal"] = !i.is_whole() && is_field(quotient_ring(ring, i).ring);
    entry["prime"] = is_prime_ideal(ring, i);
    list.push_back(std::move(entry));
  }
  return {{"ring", ring.label()}, {"order", ring.order()}, {"ideals", list}};
}

std::string render_text(const ClassifyOutcome& o) {
  const auto& r = o.report;
  std::ostringstream s;
  s << "ring: " << r.label << " (order " << r.order << ")\n";
  s << "structure: " << to_string(r.structure.tag);
  if (r.structure.splitting_idempotent) {
    s << " (splitting idempotent " << *r.structure.splitting_idempotent << ")";
  }
  s << "\n";
  if (o.decomposition) s << "isomorphic to: " << *o.decomposition << "\n";
  s << "property          definitional  criterion  witness\n";
  for (const auto& p : kProperties) {
    const auto& pv = r.*(p.field);
    std::string name = p.name;
    name.resize(18, ' ');
    std::string def = yes_no(pv.definitional);
    def.resize(14, ' ');
    std::string crit = yes_no(pv.criterion);
    crit.resize(11, ' ');
    s << name << def << crit;
    if (pv.witness_ideal) {
      s << "ideal " << member_list(*pv.witness_ideal);
    } else if (pv.witness_element) {
      s << "element " << *pv.witness_element;
    }
    s << "\n";
  }
  if (r.definitional_skipped) {
    s << "note: ring exceeds the enumeration cap; neat properties are criterion-only\n";
  }
  if (o.group_ring) {
    const auto& g = *o.group_ring;
    s << "group ring of " << g.group << " over " << g.base << ":\n";
    s << "  nil-clean criterion:        " << (g.nil_clean ? "true" : "false") << "\n";
    s << "  weakly nil-clean criterion: " << (g.weakly_nil_clean.holds ? "true" : "false");
    if (g.weakly_nil_clean.holds) s << " (condition " << g.weakly_nil_clean.condition << ")";
    s << "\n  nil-neat criterion:         " << (g.nil_neat ? "true" : "false") << "\n";
    s << "  weakly nil-neat criterion:  " << (g.weakly_nil_neat.holds ? "true" : "false");
    if (g.weakly_nil_neat.holds) s << " (condition " << g.weakly_nil_neat.condition << ")";
    s << "\n";
  }
  if (!o.consistent()) s << "DISAGREEMENT between definitional and criterion verdicts\n";
  return s.str();
}

std::string render_text(const RadicalReport& r) {
  std::ostringstream s;
  s << "ring: " << r.label << " (order " << r.order << ")\n";
  s << "N(R): size " << r.nilradical.size() << " " << member_list(r.nilradical) << "\n";
  s << "J(R): size " << r.jacobson.size() << " " << member_list(r.jacobson) << "\n";
  if (r.karpilovsky) {
    s << "Karpilovsky ideal: size " << r.karpilovsky->size() << " "
      << member_list(*r.karpilovsky) << "\n";
    s << "agreement with J(R): " << (r.karpilovsky_agrees() ? "true" : "false") << "\n";
  }
  return s.str();
}

std::string render_ideals_text(const Ring& ring, const std::vector<IdealSet>& ideals) {
  std::ostringstream s;
  s << "ring: " << ring.label() << " (order " << ring.order() << "), " << ideals.size()
    << " ideals\n";
  for (const auto& i : ideals) {
    s << "  size " << i.size() << " generated by (";
    const auto gens = ideal_generators(ring, i);
    for (std::size_t k = 0; k < gens.size(); ++k) s << (k ? "," : "") << gens[k];
    s << ") " << member_list(i);
    if (!i.is_whole()) {
      if (is_field(quotient_ring(ring, i).ring)) {
        s << " maximal";
      } else if (is_prime_ideal(ring, i)) {
        s << " prime";
      }
    }
    s << "\n";
  }
  return s.str();
}

}  // namespace ringlab
