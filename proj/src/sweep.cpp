#include "ringlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

std::vector<Ring> base_ring_catalog(std::size_t max_ring_order, std::size_t max_product_order) {
  std::vector<Ring> out;
  for (std::size_t n = 2; n <= max_ring_order; ++n) out.push_back(make_zmod(n));
  for (std::size_t a = 2; a * a <= max_product_order; ++a) {
    for (std::size_t b = a; a * b <= max_product_order; ++b) {
      out.push_back(direct_product(make_zmod(a), make_zmod(b)));
    }
  }
  return out;
}

std::vector<AbelianGroup> group_catalog(std::size_t max_group_order) {
  std::vector<AbelianGroup> out;
  for (std::size_t m = 1; m <= max_group_order; ++m) {
    for (auto& g : abelian_groups_of_order(m)) out.push_back(std::move(g));
  }
  return out;
}

void validate(const SweepConfig& config) {
  if (config.max_group_order == 0) {
    throw std::invalid_argument("max group order must be at least 1 (empty group catalog)");
  }
  if (config.max_ring_order < 2 && config.max_product_order < 4) {
    throw std::invalid_argument("max ring order must be at least 2 (empty ring catalog)");
  }
  if (config.max_groupring_order < 2) {
    throw std::invalid_argument("max group ring order must be at least 2");
  }
  if (config.max_groupring_order > kMaxRingOrder) {
    throw std::invalid_argument("max group ring order exceeds " + std::to_string(kMaxRingOrder));
  }
  if (config.jobs == 0) throw std::invalid_argument("jobs must be at least 1");
}

namespace {

constexpr const char* kWeaklyNilNeat = "weakly_nil_neat";
constexpr const char* kWeaklyNilClean = "weakly_nil_clean";

std::optional<std::size_t> bounded_power(std::size_t base, std::size_t exp, std::size_t bound) {
  std::size_t acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > bound) return std::nullopt;
  }
  return acc;
}

nlohmann::json witness_json(const Verdict& v) {
  if (v.witness_ideal) return {{"ideal", v.witness_ideal->members()}};
  if (v.witness_element) return {{"element", *v.witness_element}};
  return nullptr;
}

}  // namespace

SweepRecord evaluate_pair(const Ring& ring, const AbelianGroup& group, const Limits& limits,
                          VerdictCache* cache, bool* cache_hit) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.ring = ring.label();
  rec.group = group.label();
  const auto order = bounded_power(ring.order(), group.order(), kMaxRingOrder);
  if (!order) throw CapExceeded("group ring", kMaxRingOrder + 1, kMaxRingOrder);
  rec.order = *order;
  const std::string key = "GR(" + ring.label() + ", " + group.label() + ")";

  std::optional<CacheEntry> neat_hit;
  std::optional<CacheEntry> clean_hit;
  if (cache != nullptr) {
    neat_hit = cache->get(key, kWeaklyNilNeat);
    clean_hit = cache->get(key, kWeaklyNilClean);
  }
  if (cache_hit != nullptr) *cache_hit = neat_hit && clean_hit;

  if (neat_hit && clean_hit) {
    rec.definitional = neat_hit->verdict;
    if (neat_hit->witness.contains("ideal")) {
      rec.witness_ideal = neat_hit->witness["ideal"].get<std::vector<Index>>();
    }
    rec.wnc_definitional = clean_hit->verdict;
  } else {
    const auto view = group_ring(ring, group, limits);
    const auto neat = is_weakly_nil_neat_definitional(view.ring, limits);
    const auto clean = is_weakly_nil_clean_definitional(view.ring);
    rec.definitional = neat.holds;
    if (neat.witness_ideal) rec.witness_ideal = neat.witness_ideal->members();
    rec.wnc_definitional = clean.holds;
    if (cache != nullptr) {
      cache->put({key, kWeaklyNilNeat, neat.holds, witness_json(neat)});
      cache->put({key, kWeaklyNilClean, clean.holds, witness_json(clean)});
    }
  }

  // Uniqueness is reported through `matched` rather than thrown, so that a
  // double match shows up as a disagreement in the report.
  rec.matched = weakly_nil_neat_conditions(ring, group);
  rec.predicate = !rec.matched.empty();
  rec.condition = rec.matched.size() == 1 ? rec.matched.front() : 0;
#ifdef RINGLAB_FAULT_INVERT_THEOREM
  rec.predicate = !rec.predicate;
#endif

  const auto wnc = weakly_nil_clean_group_ring_predicate(ring, group);
  rec.wnc_predicate = wnc.holds;
  rec.wnc_condition = wnc.condition;

  rec.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

SweepReport run_sweep(const SweepConfig& config, VerdictCache* cache) {
  validate(config);
  SweepReport report;
  report.version = RINGLAB_VERSION;
  report.config = config;

  Limits limits;
  limits.order_cap = std::max(limits.order_cap, config.max_groupring_order);
  limits.enumeration_cap = config.max_groupring_order;

  const auto rings = base_ring_catalog(config.max_ring_order, config.max_product_order);
  const auto groups = group_catalog(config.max_group_order);
  for (const auto& r : rings) report.ring_catalog.push_back(r.label());
  for (const auto& g : groups) report.group_catalog.push_back(g.label());

  struct Pair {
    const Ring* ring;
    const AbelianGroup* group;
  };
  std::vector<Pair> pairs;
  for (const auto& r : rings) {
    for (const auto& g : groups) {
      if (bounded_power(r.order(), g.order(), config.max_groupring_order)) {
        pairs.push_back({&r, &g});
      }
    }
  }

  std::vector<SweepRecord> records(pairs.size());
  std::vector<char> hits(pairs.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        bool hit = false;
        records[i] = evaluate_pair(*pairs[i].ring, *pairs[i].group, limits, cache, &hit);
        hits[i] = hit ? 1 : 0;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(config.jobs, std::max<std::size_t>(pairs.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.ring != b.ring) return a.ring < b.ring;
    return a.group < b.group;
  });

  auto& s = report.summary;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto& rec = records[i];
    if (!config.record_timing) rec.wall_ms = 0.0;
    ++s.pairs;
    rec.agree() ? ++s.agreements : ++s.disagreements;
    rec.wnc_agree() ? ++s.wnc_agreements : ++s.wnc_disagreements;
    if (rec.definitional) ++s.weakly_nil_neat;
    if (rec.condition >= 1 && rec.condition <= 4) ++s.by_condition[rec.condition];
    s.cache_hits += static_cast<std::size_t>(hits[i]);
  }
  report.records = std::move(records);
  return report;
}

nlohmann::json to_json(const SweepRecord& r) {
  nlohmann::json j = {{"type", "record"},
                      {"ring", r.ring},
                      {"group", r.group},
                      {"order", r.order},
                      {"definitional", r.definitional},
                      {"predicate", r.predicate},
                      {"condition", r.condition},
                      {"matched", r.matched},
                      {"agree", r.agree()},
                      {"wnc_definitional", r.wnc_definitional},
                      {"wnc_predicate", r.wnc_predicate},
                      {"wnc_condition", r.wnc_condition},
                      {"wnc_agree", r.wnc_agree()},
                      {"wall_ms", r.wall_ms}};
  j["witness_ideal"] = r.witness_ideal ? nlohmann::json(*r.witness_ideal) : nlohmann::json();
  return j;
}

nlohmann::json to_json(const SweepConfig& c) {
  return {{"max_ring_order", c.max_ring_order},
          {"max_product_order", c.max_product_order},
          {"max_group_order", c.max_group_order},
          {"max_groupring_order", c.max_groupring_order}};
}

void write_jsonl(const SweepReport& report, std::ostream& out) {
  nlohmann::json header = {{"type", "header"},
                           {"tool", "ringlab"},
                           {"version", report.version},
                           {"config", to_json(report.config)},
                           {"rings", report.ring_catalog},
                           {"groups", report.group_catalog}};
  out << header.dump() << "\n";
  for (const auto& r : report.records) out << to_json(r).dump() << "\n";
  const auto& s = report.summary;
  nlohmann::json summary = {
      {"type", "summary"},
      {"pairs", s.pairs},
      {"agreements", s.agreements},
      {"disagreements", s.disagreements},
      {"wnc_agreements", s.wnc_agreements},
      {"wnc_disagreements", s.wnc_disagreements},
      {"weakly_nil_neat", s.weakly_nil_neat},
      {"by_condition",
       {{"1", s.by_condition[1]}, {"2", s.by_condition[2]}, {"3", s.by_condition[3]},
        {"4", s.by_condition[4]}}},
      {"passed", report.passed()}};
  out << summary.dump() << "\n";
}

}  // namespace ringlab
