#include "ulam/reports.hpp"

#include <cstdio>
#include <fstream>

#include "ulam/errors.hpp"
#include "ulam/stats.hpp"

namespace ulam {

namespace {

std::string format_model_constant(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%g", value);
  return buffer;
}

class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path, const std::string& header)
      : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) {
      throw IoError("export_reports: cannot open " + path_.string() +
                    " for writing");
    }
    out_ << header << '\n';
  }

  void row(const std::string& line) { out_ << line << '\n'; }

  /// Flushes and reports any accumulated stream failure. Must be the last
  /// call; the destructor deliberately stays silent so that an unwinding
  /// stack never faces a second exception.
  void close() {
    out_.flush();
    if (!out_) {
      throw IoError("export_reports: write failed for " + path_.string());
    }
    out_.close();
  }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

}  // namespace

std::string format_float(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

void export_reports(const UlamTable& table, const std::filesystem::path& dir,
                    const ReportOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("export_reports: cannot create " + dir.string() + ": " +
                  ec.message());
  }
  const int top = table.computed_length();
  const std::vector<std::uint64_t> discrepancy_moduli =
      options.discrepancy_moduli.empty() ? prime_powers_below(30)
                                         : options.discrepancy_moduli;

  {
    CsvFile csv(dir / "counts.csv", "n,count,density");
    for (int n = 1; n <= top; ++n) {
      const LevelSet& level = table.level(n);
      csv.row(std::to_string(n) + "," + std::to_string(level.count()) + "," +
              format_float(density(level)));
    }
    csv.close();
  }
  {
    CsvFile csv(dir / "gaps.csv", "n,mean,stddev,max_gap");
    for (int n = 1; n <= top; ++n) {
      const LevelSet& level = table.level(n);
      if (level.count() < 2) continue;
      const GapStats stats = gap_stats(level);
      csv.row(std::to_string(n) + "," + format_float(stats.mean()) + "," +
              format_float(stats.stddev()) + "," +
              std::to_string(stats.max_gap));
    }
    csv.close();
  }
  for (int n = 1; n <= top; ++n) {
    const LevelSet& level = table.level(n);
    if (level.count() < 2) continue;
    const GapStats stats = gap_stats(level);
    CsvFile csv(dir / ("gap_hist_" + std::to_string(n) + ".csv"),
                "gap,count,probability");
    for (const auto& [gap, count] : stats.histogram) {
      csv.row(std::to_string(gap) + "," + std::to_string(count) + "," +
              format_float(static_cast<double>(count) /
                           static_cast<double>(stats.gap_count)));
    }
    csv.close();
  }
  for (std::uint64_t N : options.density_moduli) {
    CsvFile csv(dir / ("mod_density_" + std::to_string(N) + ".csv"),
                "n,a,rho");
    for (int n = 1; n <= top; ++n) {
      const ModularProfile profile = modular_profile(table.level(n), N);
      for (std::uint64_t a = 0; a < N; ++a) {
        csv.row(std::to_string(n) + "," + std::to_string(a) + "," +
                format_float(profile.rho(a)));
      }
    }
    csv.close();
  }
  {
    CsvFile csv(dir / "discrepancy.csv", "n,pk,d");
    for (int n = 1; n <= top; ++n) {
      for (std::uint64_t pk : discrepancy_moduli) {
        const double d = discrepancy(modular_profile(table.level(n), pk));
        csv.row(std::to_string(n) + "," + std::to_string(pk) + "," +
                format_float(d));
      }
    }
    csv.close();
  }
  {
    CsvFile csv(dir / "surjectivity.csv", "n,ell");
    for (int n = 1; n <= top; ++n) {
      csv.row(std::to_string(n) + "," +
              std::to_string(surjectivity_index(table.level(n))));
    }
    csv.close();
  }
  {
    const std::string header =
        "n,density_fit_error@" + format_model_constant(options.density_fit_c) +
        "/" + format_model_constant(options.density_fit_e) +
        ",gap_fit_error@" + format_model_constant(options.gap_fit_c) + "/" +
        format_model_constant(options.gap_fit_e);
    CsvFile csv(dir / "fits.csv", header);
    for (int n = 1; n <= top; ++n) {
      const LevelSet& level = table.level(n);
      if (level.count() < 2) continue;
      const double density_error =
          density_fit_error(level, options.density_fit_c,
                            options.density_fit_e);
      const double gap_error = gap_mean_fit_error(
          gap_stats(level), options.gap_fit_c, options.gap_fit_e);
      csv.row(std::to_string(n) + "," + format_float(density_error) + "," +
              format_float(gap_error));
    }
    csv.close();
  }
}

}  // namespace ulam
