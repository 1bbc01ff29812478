#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ulam/engine.hpp"

namespace ulam {

/// Tunables for the CSV report bundle. The defaults are frozen so that the
/// emitted files (including the fits.csv header, which embeds the model
/// constants) stay byte-stable across runs.
struct ReportOptions {
  /// Moduli N for which a mod_density_<N>.csv table is written.
  std::vector<std::uint64_t> density_moduli = {3, 5, 6, 7, 9, 11};
  /// Moduli for discrepancy.csv; defaults to all prime powers below 30.
  std::vector<std::uint64_t> discrepancy_moduli;
  /// Density model rho(n) ~ c * n^e.
  double density_fit_c = 0.526;
  double density_fit_e = -0.3;
  /// Mean-gap model mu(n) ~ c * n^e.
  double gap_fit_c = 1.9;
  double gap_fit_e = 0.3;
};

/// Formats a double with nine significant digits (shortest form), the
/// float convention used by every CSV in the bundle.
[[nodiscard]] std::string format_float(double value);

/// Writes the full CSV report bundle for all computed levels of `table`
/// into `dir` (created if missing):
///   counts.csv          n,count,density
///   gaps.csv            n,mean,stddev,max_gap          (levels with >= 2 members)
///   gap_hist_<n>.csv    gap,count,probability          (one file per level)
///   mod_density_<N>.csv n,a,rho                        (per options.density_moduli)
///   discrepancy.csv     n,pk,d
///   surjectivity.csv    n,ell
///   fits.csv            n,density_fit_error@c/e,gap_fit_error@c/e
/// All files are UTF-8 with LF line endings. fits.csv holds raw relative
/// errors (not percentages). Throws IoError on any write failure.
void export_reports(const UlamTable& table, const std::filesystem::path& dir,
                    const ReportOptions& options = {});

}  // namespace ulam
