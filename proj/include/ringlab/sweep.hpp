#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/cache.hpp"
#include "ringlab/group.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Exhaustive check of both group-ring classifications against brute force.
struct SweepConfig {
  std::size_t max_ring_order = 9;
  /// Two-factor products Z_a x Z_b (2 <= a <= b) with a*b up to this bound.
  std::size_t max_product_order = 12;
  std::size_t max_group_order = 4;
  std::size_t max_groupring_order = 1024;
  std::size_t jobs = 1;
  /// Records carry wall_ms = 0 when false, making reports byte-stable.
  bool record_timing = true;
};

struct SweepRecord {
  std::string ring;
  std::string group;
  std::size_t order = 0;

  bool definitional = false;  // RG weakly nil-neat by exhaustive quotient scan
  bool predicate = false;     // the four-condition classification
  int condition = 0;          // which condition matched, 0 if none
  std::vector<int> matched;   // every condition that held
  std::optional<std::vector<Index>> witness_ideal;

  bool wnc_definitional = false;  // RG weakly nil-clean by elementwise scan
  bool wnc_predicate = false;     // the three-condition classification
  int wnc_condition = 0;

  double wall_ms = 0.0;

  bool agree() const { return definitional == predicate && matched.size() <= 1; }
  bool wnc_agree() const { return wnc_definitional == wnc_predicate; }
};

struct SweepSummary {
  std::size_t pairs = 0;
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t wnc_agreements = 0;
  std::size_t wnc_disagreements = 0;
  std::size_t weakly_nil_neat = 0;
  std::size_t by_condition[5] = {0, 0, 0, 0, 0};
  std::size_t cache_hits = 0;
};

struct SweepReport {
  std::string version;
  SweepConfig config;
  std::vector<std::string> ring_catalog;
  std::vector<std::string> group_catalog;
  std::vector<SweepRecord> records;
  SweepSummary summary;

  bool passed() const { return summary.disagreements == 0 && summary.wnc_disagreements == 0; }
};

/// Z_n for 2 <= n <= max_ring_order, then the products Z_a x Z_b.
std::vector<Ring> base_ring_catalog(std::size_t max_ring_order, std::size_t max_product_order);

/// Every abelian group of order 1..max_group_order.
std::vector<AbelianGroup> group_catalog(std::size_t max_group_order);

/// Throws std::invalid_argument on an unusable configuration.
void validate(const SweepConfig& config);

/// Builds RG and evaluates both sides of both classifications.
SweepRecord evaluate_pair(const Ring& ring, const AbelianGroup& group, const Limits& limits,
                          VerdictCache* cache = nullptr, bool* cache_hit = nullptr);

SweepReport run_sweep(const SweepConfig& config, VerdictCache* cache = nullptr);

nlohmann::json to_json(const SweepRecord& record);
nlohmann::json to_json(const SweepConfig& config);

/// Header line, one line per record, summary footer.
void write_jsonl(const SweepReport& report, std::ostream& out);

}  // namespace ringlab
