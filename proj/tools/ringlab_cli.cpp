// Command-line front end: classify, radical, ideals, verify-theorem.
//
// Exit codes: 0 success, 1 usage error, 2 cap exceeded, 3 disagreement.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "ringlab/cache.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/report.hpp"
#include "ringlab/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitDisagreement = 3;

struct CacheOptions {
  std::string path;
  bool disabled = false;

  std::unique_ptr<ringlab::VerdictCache> open() const {
    if (disabled) return nullptr;
    if (!path.empty()) return std::make_unique<ringlab::VerdictCache>(path);
    if (auto env = ringlab::cache_path_from_env()) {
      return std::make_unique<ringlab::VerdictCache>(*env);
    }
    return nullptr;
  }
};

ringlab::MethodSelection parse_method(const std::string& m) {
  if (m == "brute") return ringlab::MethodSelection::Definitional;
  if (m == "criterion") return ringlab::MethodSelection::Criterion;
  return ringlab::MethodSelection::Both;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative ring laboratory: nil-clean and nil-neat classification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string("ringlab ") + RINGLAB_VERSION);

  ringlab::Limits limits;
  app.add_option("--order-cap", limits.order_cap, "Largest ring materialized as tables")
      ->capture_default_str();
  app.add_option("--enumeration-cap", limits.enumeration_cap,
                 "Largest ring whose ideal lattice is enumerated")
      ->capture_default_str();
  CacheOptions cache_opts;

  std::string expr_text;
  std::string method = "both";
  bool json = false;

  auto* classify = app.add_subcommand("classify", "Decide the four properties for a ring");
  classify->add_option("expr", expr_text, "Ring expression, e.g. \"GR(Z3, C2)\"")->required();
  classify->add_option("--method", method, "brute | criterion | both")
      ->check(CLI::IsMember({"brute", "criterion", "both"}))
      ->capture_default_str();
  classify->add_flag("--json", json, "Emit JSON");
  classify->add_option("--cache", cache_opts.path,
                       std::string("Verdict cache file (default: $") + ringlab::kCacheEnvVar + ")");
  classify->add_flag("--no-cache", cache_opts.disabled, "Do not read or write the cache");

  auto* radical = app.add_subcommand("radical", "Nilradical, Jacobson radical, Karpilovsky ideal");
  radical->add_option("expr", expr_text, "Ring expression")->required();
  radical->add_flag("--json", json, "Emit JSON");

  auto* ideals = app.add_subcommand("ideals", "List the ideal lattice");
  ideals->add_option("expr", expr_text, "Ring expression")->required();
  ideals->add_flag("--json", json, "Emit JSON");

  ringlab::SweepConfig sweep;
  std::string out_path;
  bool no_timing = false;
  auto* verify = app.add_subcommand(
      "verify-theorem", "Check both group-ring classifications against brute force");
  verify->add_option("--max-ring-order", sweep.max_ring_order, "Z_n for n up to this")
      ->capture_default_str();
  verify->add_option("--max-product-order", sweep.max_product_order,
                     "Z_a x Z_b for a*b up to this")
      ->capture_default_str();
  verify->add_option("--max-group-order", sweep.max_group_order, "Abelian groups up to this order")
      ->capture_default_str();
  verify->add_option("--max-groupring-order", sweep.max_groupring_order,
                     "Skip pairs with |R|^|G| above this")
      ->capture_default_str();
  verify->add_option("--out", out_path, "Write the JSON-lines report here (default: stdout)");
  verify->add_option("--jobs", sweep.jobs, "Worker threads")->capture_default_str();
  verify->add_flag("--no-timing", no_timing, "Write wall_ms as 0 for byte-stable reports");
  verify->add_option("--cache", cache_opts.path,
                     std::string("Verdict cache file (default: $") + ringlab::kCacheEnvVar + ")");
  verify->add_flag("--no-cache", cache_opts.disabled, "Do not read or write the cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) {
      auto cache = cache_opts.open();
      const auto outcome = ringlab::classify_expr(ringlab::parse_ring_expr(expr_text),
                                                  parse_method(method), limits, cache.get());
      if (json) {
        std::cout << ringlab::to_json(outcome).dump(2) << "\n";
      } else {
        std::cout << ringlab::render_text(outcome);
      }
      return outcome.consistent() ? kExitOk : kExitDisagreement;
    }

    if (*radical) {
      const auto report = ringlab::radical_expr(ringlab::parse_ring_expr(expr_text), limits);
      if (json) {
        std::cout << ringlab::to_json(report).dump(2) << "\n";
      } else {
        std::cout << ringlab::render_text(report);
      }
      const bool ok = report.karpilovsky_agrees() && report.nil_inside_jacobson();
      return ok ? kExitOk : kExitDisagreement;
    }

    if (*ideals) {
      const auto ring = ringlab::evaluate(ringlab::parse_ring_expr(expr_text), limits);
      const auto lattice = ringlab::enumerate_ideals(ring, limits);
      if (json) {
        std::cout << ringlab::ideals_json(ring, lattice).dump(2) << "\n";
      } else {
        std::cout << ringlab::render_ideals_text(ring, lattice);
      }
      return kExitOk;
    }

    if (*verify) {
      sweep.record_timing = !no_timing;
      auto cache = cache_opts.open();
      const auto report = ringlab::run_sweep(sweep, cache.get());
      if (out_path.empty()) {
        ringlab::write_jsonl(report, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "error: cannot open " << out_path << " for writing\n";
          return kExitUsage;
        }
        ringlab::write_jsonl(report, out);
        if (!out) {
          std::cerr << "error: failed writing " << out_path << "\n";
          return kExitUsage;
        }
      }
      const auto& s = report.summary;
      std::cerr << "pairs: " << s.pairs << ", theorem agreements: " << s.agreements
                << ", weakly nil-clean agreements: " << s.wnc_agreements << ", cache hits: " << s.cache_hits
                << "\n";
      return report.passed() ? kExitOk : kExitDisagreement;
    }
  } catch (const ringlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ringlab::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ringlab::InternalDisagreement& e) {
    std::cerr << "disagreement: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
