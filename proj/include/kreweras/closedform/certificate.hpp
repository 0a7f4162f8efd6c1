#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kreweras/core/lpoly.hpp"
#include "kreweras/core/series.hpp"
#include "kreweras/ore/oreop.hpp"

namespace kreweras {

enum class CheckStatus { Proven, Empirical, Unproven };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  std::string statement;
  CheckStatus status = CheckStatus::Proven;
  bool passed = false;
  std::map<std::string, std::string> inputs;  ///< label -> content hash
  std::map<std::string, int> orders;          ///< truncation orders and margins
  std::string replay;
  std::map<std::string, std::string> details;
};

/// A list of checks plus a verdict. The verdict only looks at PROVEN and
/// EMPIRICAL checks; UNPROVEN entries are informational.
struct Certificate {
  std::vector<Check> checks;
  std::string conclusion;  ///< statement that holds when every counted check passed

  const Check* find(std::string_view name) const;
  /// Every PROVEN and EMPIRICAL check passed.
  bool holds() const;
  std::vector<std::string> empirical() const;
  std::vector<std::string> failed() const;
  void append(const Certificate& other);
  /// JSON with `schema: 1`, the checks in order, and a verdict block. Deterministic.
  std::string to_json() const;
};

/// FNV-1a, 64 bit, printed as "fnv1a64:" followed by 16 hex digits.
std::uint64_t fnv1a64(std::string_view data);
std::string content_hash(std::string_view data);
std::string hash_of(const TruncSeries<LPoly>& f);
std::string hash_of(const OreOp& l);

struct TheoremOptions {
  int margin = 20;       ///< EMPIRICAL checks need this many verified coefficients past r
  int compare_order = 40;  ///< Theta and C compared exactly this far as a cross-check
  std::string replay_prefix = "kreweras";
  std::string theta_file = "theta.txt";
};

/// Theta = C: pole cancellation, transcription pins, L_C on C (PROVEN) and on
/// Theta (EMPIRICAL), solution space of L_C, comparison mod t^r. When a guessed
/// operator is supplied its checks are appended as UNPROVEN.
Certificate certify_theta_equals_c(const TruncSeries<LPoly>& theta, const TheoremOptions& opt,
                                   const std::optional<OreOp>& guessed = std::nullopt);

struct TranscendenceOptions {
  int h_order = 80;     ///< coefficients of H for the order-1 search
  int h_reserve = 20;
  std::string replay_prefix = "kreweras";
};

/// The transcendence chain for T, Theta and Q(x,y).
Certificate certify_transcendence(const TranscendenceOptions& opt);

}  // namespace kreweras
