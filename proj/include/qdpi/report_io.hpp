#pragma once

// Text output: locale-independent numbers, CSV rows and JSON lines for
// inequality reports, and fuzz summaries.

#include <string>

#include "qdpi/extended_real.hpp"
#include "qdpi/fuzz.hpp"
#include "qdpi/inequalities.hpp"

namespace qdpi {

/// 12 significant digits, '.' separator, always with a '.' or exponent
/// (so 1 prints as "1.0").
std::string format_number(double v);
/// "inf" for +∞.
std::string format_number(const ExtendedReal& v);

/// name,trial,lhs,rhs,slack,satisfied,c,cpVerdict,seed
std::string report_csv_header();
std::string report_to_csv(const InequalityReport& r);
/// One JSON object, no trailing newline. +∞ is written as the string "inf".
std::string report_to_json(const InequalityReport& r);

std::string summary_to_json(const FuzzSummary& s);
/// Short human-readable block.
std::string summary_to_text(const FuzzSummary& s);

}  // namespace qdpi
