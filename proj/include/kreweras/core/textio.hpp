#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kreweras/core/lpoly.hpp"
#include "kreweras/core/mpoly.hpp"
#include "kreweras/core/rat.hpp"
#include "kreweras/core/series.hpp"

namespace kreweras {

/// Plain-text document for series and polynomials.
///
///     series                 (or: poly)
///     # command: ...         (any number of comment lines, kept verbatim)
///     vars t x
///     start 0                (series only)
///     order 64               (series only)
///     0 2 : -1/1
///     1 3 : 1/1
///     end
///
/// Each term line is the exponent vector (one integer per variable, in
/// `vars` order) followed by ` : ` and the coefficient as numerator/denominator.
/// Terms are sorted by exponent vector, lexicographically; zero terms are omitted.
struct TextTerm {
  std::vector<int> exps;
  Rat coeff;
};

struct TextDoc {
  std::string kind = "series";
  std::vector<std::string> comments;  ///< without the leading "# "
  std::vector<std::string> vars;
  int start = 0;
  int order = 0;
  std::vector<TextTerm> terms;
};

std::string write_doc(const TextDoc& doc);
TextDoc parse_doc(std::string_view text);

TextDoc to_doc(const TruncSeries<Rat>& f);
TextDoc to_doc(const TruncSeries<LPoly>& f);
/// Series with MPoly coefficients; `coeff_vars` fixes the column order.
TextDoc to_doc(const TruncSeries<MPoly>& f, const std::vector<Var>& coeff_vars);
TextDoc to_doc(const MPoly& p, const std::vector<Var>& vars);

TruncSeries<Rat> rat_series_from_doc(const TextDoc& doc);
TruncSeries<LPoly> lpoly_series_from_doc(const TextDoc& doc);
TruncSeries<MPoly> mpoly_series_from_doc(const TextDoc& doc);
MPoly mpoly_from_doc(const TextDoc& doc);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace kreweras
