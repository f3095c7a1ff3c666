// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/group.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/sweep.hpp"

using namespace ringlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Ring z(std::size_t n) { return make_zmod(n); }
Ring prod(const Ring& a, const Ring& b) { return direct_product(a, b); }

const SweepReport& theorem_sweep() {
  static const SweepReport report = [] {
    SweepConfig config;
    config.record_timing = false;
    return run_sweep(config);
  }();
  return report;
}

Outcome main_theorem() {
  const auto& s = theorem_sweep().summary;
  std::ostringstream d;
  d << s.agreements << "/" << s.pairs << " pairs agree";
  return {s.pairs > 0 && s.disagreements == 0, d.str()};
}

Outcome weakly_nil_clean_sweep() {
  const auto& s = theorem_sweep().summary;
  std::ostringstream d;
  d << s.wnc_agreements << "/" << s.pairs << " pairs agree";
  return {s.pairs > 0 && s.wnc_disagreements == 0, d.str()};
}

Outcome karpilovsky() {
  constexpr std::size_t kBound = 6561;
  Limits limits;
  limits.order_cap = kBound;
  std::size_t checked = 0;
  bool z9c3 = false;
  bool z3v4 = false;
  Outcome out;
  for (const auto& r : base_ring_catalog(9, 12)) {
    for (const auto& g : group_catalog(4)) {
      double size = 1;
      for (std::size_t i = 0; i < g.order(); ++i) size *= double(r.order());
      if (size > kBound) continue;
      const auto v = group_ring(r, g, limits);
      const auto k = karpilovsky_radical(v);
      const auto j = jacobson_radical(v.ring);
      ++checked;
      if (!(k == j)) {
        out.pass = false;
        out.detail = "mismatch on " + v.ring.label();
      }
      z9c3 = z9c3 || (r.label() == "Z9" && g.label() == "C3");
      z3v4 = z3v4 || (r.label() == "Z3" && g.label() == "C2 x C2");
    }
  }
  out.pass = out.pass && z9c3 && z3v4;
  if (out.detail.empty()) out.detail = std::to_string(checked) + " group rings, |RG| <= 6561";
  return out;
}

std::vector<Ring> plain_catalog() {
  std::vector<Ring> rings;
  for (std::size_t n = 2; n <= 32; ++n) rings.push_back(z(n));
  for (std::size_t a = 2; a * a <= 64; ++a) {
    for (std::size_t b = a; a * b <= 64; ++b) rings.push_back(prod(z(a), z(b)));
  }
  rings.push_back(prod(prod(z(2), z(2)), z(2)));
  rings.push_back(prod(prod(z(3), z(3)), z(3)));
  rings.push_back(prod(prod(z(2), z(3)), z(3)));
  rings.push_back(prod(prod(z(2), z(2)), z(3)));
  // quotients of group rings and products
  const std::vector<std::pair<std::size_t, std::vector<std::size_t>>> grs = {
      {2, {3}}, {2, {2, 2}}, {3, {2}}, {3, {3}}, {4, {2}}, {2, {5}}, {2, {6}}, {3, {4}}};
  for (const auto& [n, orders] : grs) {
    const auto v = group_ring(z(n), make_group(orders));
    if (v.ring.order() <= 64) rings.push_back(v.ring);
    for (const auto& m : maximal_ideals(v.ring)) {
      rings.push_back(quotient_ring(v.ring, m).ring.relabeled(v.ring.label() + " mod maximal"));
    }
    const auto lattice = v.ring.order() <= 1024 ? enumerate_ideals(v.ring) : std::vector<IdealSet>{};
    for (const auto& i : lattice) {
      if (i.is_zero() || i.is_whole()) continue;
      const std::size_t q = v.ring.order() / i.size();
      if (q <= 64 && q >= 4) rings.push_back(quotient_ring(v.ring, i).ring);
    }
  }
  const auto z4z4 = prod(z(4), z(4));
  for (const auto& i : enumerate_ideals(z4z4)) {
    if (!i.is_zero() && !i.is_whole()) rings.push_back(quotient_ring(z4z4, i).ring);
  }
  std::vector<Ring> out;
  for (auto& r : rings) {
    if (r.order() <= 64) out.push_back(std::move(r));
  }
  return out;
}

Outcome criteria_vs_oracle() {
  const auto rings = plain_catalog();
  Outcome out;
  std::size_t positives = 0;
  for (const auto& r : rings) {
    try {
      const auto wnc = weakly_nil_clean_criterion(r);
      const bool subchecks = wnc.residue_fields == wnc.reduced_quotient &&
                             wnc.reduced_quotient == wnc.jacobson_quotient;
      const bool wnc_ok = wnc.holds == is_weakly_nil_clean_definitional(r).holds;
      const bool wnn_ok = weakly_nil_neat_criterion(r).holds == is_weakly_nil_neat_definitional(r).holds;
      bool radicals = true;
      if (wnc.holds) {
        ++positives;
        radicals = wnc.radicals_equal && jacobson_radical(r) == nilradical(r);
      }
      if (!(subchecks && wnc_ok && wnn_ok && radicals)) {
        out.pass = false;
        out.detail = "mismatch on " + r.label();
        return out;
      }
    } catch (const InternalDisagreement& e) {
      return {false, r.label() + ": " + e.what()};
    }
  }
  out.pass = rings.size() >= 50;
  out.detail = std::to_string(rings.size()) + " rings, " + std::to_string(positives) +
               " weakly nil-clean";
  return out;
}

Outcome golden_facts() {
  std::vector<std::pair<std::string, bool>> facts;
  facts.emplace_back("Z3 weakly nil-clean", is_weakly_nil_clean_definitional(z(3)).holds);
  facts.emplace_back("Z3 not nil-clean", !is_nil_clean_definitional(z(3)).holds);
  const auto z33 = prod(z(3), z(3));
  facts.emplace_back("Z3xZ3 not weakly nil-clean", !is_weakly_nil_clean_definitional(z33).holds);
  facts.emplace_back("Z3xZ3 weakly nil-neat", is_weakly_nil_neat_definitional(z33).holds);
  facts.emplace_back("Z3[C2] = Z3xZ3",
                     ring_isomorphic(group_ring(z(3), make_group({2})).ring, z33).isomorphic);
  const auto c4 = weakly_nil_neat_group_ring_predicate(z(3), make_group({2}));
  facts.emplace_back("(Z3, C2) condition 4 only", c4.matched == std::vector<int>{4});
  const auto c2 = weakly_nil_neat_group_ring_predicate(z(2), make_group({2}));
  facts.emplace_back("(Z2, C2) condition 2", c2.condition == 2);
  for (std::size_t n : {2, 6}) {
    const auto g = make_group({n == 2 ? std::size_t{3} : std::size_t{2}});
    const auto v = group_ring(z(n), g);
    const bool rejected = !is_weakly_nil_neat_definitional(v.ring).holds &&
                          !weakly_nil_neat_group_ring_predicate(z(n), g).holds;
    facts.emplace_back(v.ring.label() + " rejected", rejected);
  }
  Outcome out;
  std::size_t ok = 0;
  for (const auto& [name, holds] : facts) {
    if (holds) {
      ++ok;
    } else {
      out.pass = false;
      out.detail += (out.detail.empty() ? "failed: " : ", ") + name;
    }
  }
  if (out.pass) out.detail = std::to_string(ok) + " facts";
  return out;
}

Outcome hierarchy() {
  std::size_t rings = 0;
  for (const auto& r : plain_catalog()) {
    const bool nc = is_nil_clean_definitional(r).holds;
    const bool wnc = is_weakly_nil_clean_definitional(r).holds;
    const bool nn = is_nil_neat_definitional(r).holds;
    const bool wnn = is_weakly_nil_neat_definitional(r).holds;
    ++rings;
    if ((nc && !(wnc && nn)) || ((wnc || nn) && !wnn)) return {false, "chain broken on " + r.label()};
  }
  for (const auto& rec : theorem_sweep().records) {
    if (rec.matched.size() > 1) return {false, "several conditions on " + rec.ring + ", " + rec.group};
  }
  return {true, std::to_string(rings) + " rings, " +
                    std::to_string(theorem_sweep().records.size()) + " pairs disjoint"};
}

Outcome negative_paths() {
  auto t = z(4).tables();
  t.mul[2 * 4 + 2] = 1;
  const auto report = validate_ring_axioms(t);
  bool triple = false;
  for (const auto& v : report.violations) triple = triple || v.witness.size() == 3;
  if (!triple) return {false, "corrupted Z4 table accepted"};

  const std::string cmd = std::string("\"") + RINGLAB_FAULTY_CLI +
                          "\" verify-theorem --no-cache --no-timing --max-ring-order 4 "
                          "--max-product-order 4 --max-group-order 2 > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return {false, "fault build did not run"};
  const int code = WEXITSTATUS(status);
  if (code != 3) return {false, "fault build exited " + std::to_string(code)};
  return {true, "witness triple reported; inverted predicate exits 3"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 weakly nil-neat group rings: theorem vs brute force", main_theorem},
      {"2 weakly nil-clean group rings: predicate vs brute force", weakly_nil_clean_sweep},
      {"3 Karpilovsky ideal equals J(RG)", karpilovsky},
      {"4 structural criteria vs definitions on plain rings", criteria_vs_oracle},
      {"5 golden facts", golden_facts},
      {"6 class hierarchy and condition disjointness", hierarchy},
      {"7 negative paths", negative_paths},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s [%s] %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
                secs);
  }
  return failures == 0 ? 0 : 1;
}
