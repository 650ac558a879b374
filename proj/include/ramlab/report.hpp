#pragma once

// Report records produced by the checkers, with JSON-lines and CSV forms.
// Exact values serialize as JSON integers when they fit in int64 and as
// "p/q" strings otherwise; the parsers accept both.

#include <string>
#include <string_view>

#include "ramlab/checked.hpp"
#include "ramlab/rational.hpp"

namespace ramlab {

struct PartialSumReport {
  i64 x = 0;
  Rational exact_sum;
  Rational main_term;
  Rational residual;
  Rational certified_bound;
  bool pass = false;

  /// Fills residual = exact_sum - main_term and pass = |residual| <= bound.
  static PartialSumReport make(i64 x, Rational exact_sum, Rational main_term, Rational bound);

  bool operator==(const PartialSumReport&) const = default;
};

enum class Verdict { Orthogonal, Diagonal, Violating };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct OrthogonalityReport {
  std::string system;
  i64 r = 1;
  i64 s = 1;
  i64 exact_mean = 0;
  Rational empirical_mean;
  Verdict verdict = Verdict::Orthogonal;

  bool operator==(const OrthogonalityReport&) const = default;
};

std::string to_json(const PartialSumReport& report);
std::string to_json(const OrthogonalityReport& report);
PartialSumReport partial_sum_report_from_json(std::string_view line);
OrthogonalityReport orthogonality_report_from_json(std::string_view line);

inline constexpr std::string_view kPartialSumCsvHeader = "x,exact_sum,main_term,residual,bound,pass";
inline constexpr std::string_view kOrthogonalityCsvHeader = "system,r,s,exact_mean,empirical_mean,verdict";

std::string to_csv_row(const PartialSumReport& report);
std::string to_csv_row(const OrthogonalityReport& report);

}  // namespace ramlab
