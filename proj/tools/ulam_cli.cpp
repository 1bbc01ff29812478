// Command-line front end: enumerate levels, persist them, verify the
// engine against the reference oracle and the closed-form predicates,
// export CSV reports, and render level images.
//
// Exit codes: 0 = success / all checks pass, 1 = a verification check or
// conjecture scan found a violation, 2 = usage or I/O error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ulam/engine.hpp"
#include "ulam/errors.hpp"
#include "ulam/heatmap.hpp"
#include "ulam/level_io.hpp"
#include "ulam/oracle.hpp"
#include "ulam/patterns.hpp"
#include "ulam/reports.hpp"
#include "ulam/stats.hpp"
#include "ulam/word.hpp"

namespace {

constexpr std::uint64_t kMiB = std::uint64_t{1} << 20;

/// Builds a table up to `max_n`, preferring stored levels when a store
/// directory is given and present.
ulam::UlamTable obtain_table(const std::string& store, int max_n,
                             std::uint64_t budget) {
  if (!store.empty() &&
      std::filesystem::exists(ulam::level_store_path(store, 1))) {
    ulam::UlamTable table = ulam::load_store(store, budget);
    if (table.computed_length() >= max_n) return table;
  }
  ulam::UlamTable table(max_n, budget);
  table.build_to(max_n);
  return table;
}

int run_compute(int max_n, const std::string& store, std::uint64_t budget) {
  ulam::UlamTable table(max_n, budget);
  table.build_to(max_n);
  std::cout << "n,count,density\n";
  for (int n = 1; n <= max_n; ++n) {
    const ulam::LevelSet& level = table.level(n);
    std::cout << n << "," << level.count() << ","
              << ulam::format_float(ulam::density(level)) << "\n";
  }
  if (!store.empty()) {
    ulam::save_store(table, store);
    std::cout << "stored levels 1.." << max_n << " under " << store << "\n";
  }
  return 0;
}

int run_verify(const std::string& store, int max_n, int oracle_max,
               bool patterns, std::uint64_t budget) {
  const ulam::UlamTable table =
      obtain_table(store, std::max(max_n, oracle_max), budget);
  std::uint64_t failures = 0;

  // Engine vs. the quadratic dictionary oracle, word for word.
  ulam::NaiveOracle oracle;
  for (int n = 1; n <= oracle_max; ++n) {
    const std::vector<std::string>& expected = oracle.level(n);
    const std::vector<std::uint64_t> actual = table.level(n).member_codes();
    bool same = expected.size() == actual.size();
    for (std::size_t i = 0; same && i < actual.size(); ++i) {
      same = ulam::Word(n, actual[i]).str() == expected[i];
    }
    if (!same) {
      ++failures;
      std::cout << "oracle mismatch at length " << n << ": engine has "
                << actual.size() << " words, oracle has " << expected.size()
                << "\n";
    }
  }
  std::cout << "oracle agreement for lengths 1.." << oracle_max
            << (failures == 0 ? ": ok" : ": MISMATCH") << "\n";

  if (patterns) {
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    auto check = [&](int n, std::uint64_t code, bool predicted,
                     const char* family) {
      ++checked;
      const bool actual = table.level(n).test(code);
      if (actual != predicted) {
        ++mismatches;
        std::cout << "closed form disagrees (" << family << "): length " << n
                  << ", code " << code << ", predicted " << predicted
                  << ", enumerated " << actual << "\n";
      }
    };
    for (int n = 1; n <= max_n; ++n) {
      // 0^a 1 0^b — single one.
      for (int a = 0; a + 1 <= n; ++a) {
        const int b = n - 1 - a;
        check(n, std::uint64_t{1} << b, ulam::predict_single_one(a, b),
              "single one");
      }
      // 0^a 11 0^b — double one.
      for (int a = 0; a + 2 <= n; ++a) {
        const int b = n - 2 - a;
        check(n, std::uint64_t{0b11} << b, ulam::predict_double_one(a, b),
              "double one");
      }
      // 0^a 101 0^b.
      for (int a = 0; a + 3 <= n; ++a) {
        const int b = n - 3 - a;
        if (a + b < 2) continue;
        check(n, std::uint64_t{0b101} << b, ulam::predict_101(a, b), "101");
      }
      // 0^a 1111 0^b — quadruple one.
      for (int a = 0; a + 4 <= n; ++a) {
        const int b = n - 4 - a;
        if (a + b < 1) continue;
        check(n, std::uint64_t{0b1111} << b, ulam::predict_quad_one(a, b),
              "quadruple one");
      }
      // 0^(n-3) 111 — triple-one suffix.
      if (n >= 3) {
        check(n, 0b111, ulam::predict_triple_one_suffix(n),
              "triple-one suffix");
      }
      // 0^a 10101 0^b.
      for (int a = 0; a + 5 <= n; ++a) {
        const int b = n - 5 - a;
        if (a + b < 1) continue;
        check(n, std::uint64_t{0b10101} << b, ulam::predict_10101(a, b),
              "10101");
      }
      // 1^y 0^(n-y) — ones then zeros.
      for (int y = 1; y <= n; ++y) {
        const std::uint64_t code = ((std::uint64_t{1} << y) - 1) << (n - y);
        check(n, code, ulam::predict_ones_then_zeros(n, y),
              "ones then zeros");
      }
      // Count of 0^a 1^b members vs. the closed form.
      if (n >= 2) {
        std::uint64_t observed = 0;
        for (int b = 1; b <= n - 1; ++b) {
          if (table.level(n).test((std::uint64_t{1} << b) - 1)) ++observed;
        }
        ++checked;
        const std::uint64_t predicted = ulam::count_zeros_then_ones(n);
        if (observed != predicted) {
          ++mismatches;
          std::cout << "zeros-then-ones count at length " << n << ": "
                    << observed << " enumerated vs " << predicted
                    << " predicted\n";
        }
      }
    }
    failures += mismatches;
    std::cout << "closed-form exhaustion over lengths 1.." << max_n << ": "
              << checked << " checks, " << mismatches << " mismatches\n";
  }

  return failures == 0 ? 0 : 1;
}

int run_stats(const std::string& store, const std::string& out,
              std::uint64_t budget) {
  const ulam::UlamTable table = ulam::load_store(store, budget);
  ulam::export_reports(table, out);
  std::cout << "reports for lengths 1.." << table.computed_length()
            << " written to " << out << "\n";
  return 0;
}

int run_heatmap(int n, const std::string& out, const std::string& store,
                std::uint64_t budget) {
  const ulam::UlamTable table = obtain_table(store, n, budget);
  const ulam::PgmImage image = ulam::render_heatmap(table.level(n));
  ulam::save_pgm(image, out);
  std::cout << "wrote " << image.width << "x" << image.height << " image to "
            << out << "\n";
  return 0;
}

int run_conjectures(const std::string& store, int max_n,
                    std::uint64_t budget) {
  const ulam::UlamTable table = obtain_table(store, max_n, budget);
  const int top = table.computed_length();
  std::uint64_t violations = 0;

  std::cout << "model fit at the top level (n = " << top << "):\n";
  const ulam::LevelSet& level = table.level(top);
  std::cout << "  density fit error vs 0.526*n^-0.3:  "
            << ulam::format_float(100.0 *
                                  ulam::density_fit_error(level, 0.526, -0.3))
            << "%\n";
  std::cout << "  mean-gap fit error vs 1.9*n^0.3:    "
            << ulam::format_float(
                   100.0 * ulam::gap_mean_fit_error(ulam::gap_stats(level),
                                                    1.9, 0.3))
            << "%\n";
  std::cout << "  growth constant estimate alpha_0:   "
            << ulam::format_float(ulam::alpha_zero(top, level.count()))
            << "\n";

  for (int k = 1; k <= 4; ++k) {
    if ((1 << k) + 2 > top) break;
    const auto counterexamples = ulam::check_power_conjecture(table, k);
    std::cout << "power-block scan (2^" << k << " ones), lengths up to "
              << top << ": " << counterexamples.size() << " counterexamples\n";
    for (const auto& cx : counterexamples) {
      ++violations;
      std::cout << "  n=" << cx.n << " a=" << cx.a << " b=" << cx.b
                << ": enumerated " << cx.engine_says_ulam << ", conjectured "
                << cx.conjecture_says_ulam << "\n";
    }
  }

  const ulam::GrowthReport growth = [&] {
    std::map<int, std::uint64_t> counts;
    for (int n = 1; n <= top; ++n) counts[n] = table.level(n).count();
    return ulam::check_growth_bounds(counts);
  }();
  std::cout << "growth bounds: " << growth.linear_checks << " linear, "
            << growth.weak_sum_checks << " weak-sum, "
            << growth.weak_max_checks << " weak-max checks, "
            << growth.violations.size() << " violations\n";
  for (const std::string& v : growth.violations) {
    ++violations;
    std::cout << "  " << v << "\n";
  }

  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ulam word enumeration, verification, and reporting"};
  app.require_subcommand(1);
  // Let global options (such as --budget-mib) appear after the subcommand
  // name as well as before it.
  app.fallthrough();

  int budget_mib = 1024;
  app.add_option("--budget-mib", budget_mib,
                 "Memory budget for level computation, in MiB")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* compute = app.add_subcommand("compute", "Enumerate levels 1..N");
  int compute_max = 24;
  std::string compute_store;
  compute->add_option("--max-n", compute_max, "Highest word length")
      ->capture_default_str()
      ->check(CLI::Range(1, ulam::kMaxLevelLength));
  compute->add_option("--store", compute_store,
                      "Directory to write level files into")
      ->envname("ULAM_STORE");

  auto* verify = app.add_subcommand(
      "verify", "Check the engine against the reference oracle");
  int verify_max = 24;
  int oracle_max = 12;
  bool patterns = false;
  std::string verify_store;
  verify->add_option("--max-n", verify_max, "Highest word length")
      ->capture_default_str()
      ->check(CLI::Range(1, ulam::kMaxLevelLength));
  verify->add_option("--oracle-max", oracle_max,
                     "Cross-check word lists up to this length")
      ->capture_default_str()
      ->check(CLI::Range(1, 16));
  verify->add_flag("--patterns", patterns,
                   "Also exhaust the closed-form membership predicates");
  verify->add_option("--store", verify_store,
                     "Reuse level files from this directory if present")
      ->envname("ULAM_STORE");

  auto* stats = app.add_subcommand("stats", "Export CSV reports");
  std::string stats_store;
  std::string stats_out = "reports";
  stats->add_option("--store", stats_store, "Directory with level files")
      ->envname("ULAM_STORE")
      ->required();
  stats->add_option("--out", stats_out, "Output directory for CSV files")
      ->capture_default_str();

  auto* heatmap = app.add_subcommand("heatmap", "Render one level as PGM");
  int heatmap_n = 20;
  std::string heatmap_out;
  std::string heatmap_store;
  heatmap->add_option("--n", heatmap_n, "Word length to render")
      ->capture_default_str()
      ->check(CLI::Range(1, ulam::kMaxLevelLength));
  heatmap->add_option("--out", heatmap_out, "Output PGM file")->required();
  heatmap->add_option("--store", heatmap_store,
                      "Reuse level files from this directory if present")
      ->envname("ULAM_STORE");

  auto* conjectures = app.add_subcommand(
      "conjectures", "Print fit errors and conjecture scans");
  std::string conjectures_store;
  int conjectures_max = 24;
  conjectures
      ->add_option("--store", conjectures_store,
                   "Reuse level files from this directory if present")
      ->envname("ULAM_STORE");
  conjectures
      ->add_option("--max-n", conjectures_max, "Highest word length")
      ->capture_default_str()
      ->check(CLI::Range(2, ulam::kMaxLevelLength));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::uint64_t budget = static_cast<std::uint64_t>(budget_mib) * kMiB;
  try {
    if (compute->parsed()) return run_compute(compute_max, compute_store, budget);
    if (verify->parsed())
      return run_verify(verify_store, verify_max, oracle_max, patterns,
                        budget);
    if (stats->parsed()) return run_stats(stats_store, stats_out, budget);
    if (heatmap->parsed())
      return run_heatmap(heatmap_n, heatmap_out, heatmap_store, budget);
    if (conjectures->parsed())
      return run_conjectures(conjectures_store, conjectures_max, budget);
  } catch (const ulam::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
