#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "kreweras/closedform/certificate.hpp"
#include "kreweras/core/lpoly.hpp"
#include "kreweras/core/series.hpp"

namespace kreweras {

/// Settings for the end-to-end run. Readable from key=value text (one per line,
/// '#' comments); keys are the member names.
struct PipelineConfig {
  int enumerate_n = 12;       ///< walk table length, also used against the brute-force oracle
  int kernel_n = 15;          ///< kernel equation residual checked mod t^kernel_n
  int theta_n = 90;           ///< Theta extracted mod t^theta_n
  int oracle_n = 20;          ///< residue oracle comparison mod t^oracle_n
  int guess_n = 90;           ///< coefficients handed to the guesser (<= theta_n)
  int guess_reserve = 20;
  int guess_max_order = 4;
  int guess_max_degree = 16;
  int margin = 20;            ///< required EMPIRICAL margin
  int compare_order = 40;
  int h_order = 80;
  std::uint32_t prime = 45007;
  std::string out_dir = "kreweras-out";

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const;
  void set(const std::string& key, const std::string& value);
  std::map<std::string, std::string> to_map() const;
};

PipelineConfig parse_config(const std::string& text, PipelineConfig base = {});

/// Runs enumerate, kernel-check, theta (+oracle), guess-ode, verify-closedform and
/// the transcendence chain. Stages hand data to each other through files in
/// cfg.out_dir; the certificate is written there as cert.json and returned.
Certificate run_pipeline(const PipelineConfig& cfg, std::ostream& log);

/// Coefficientwise x = x0 for a series with Laurent coefficients in x.
TruncSeries<Rat> specialize_x(const TruncSeries<LPoly>& f, const Rat& x0);

}  // namespace kreweras
