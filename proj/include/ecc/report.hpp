#pragma once

#include <string>

namespace ecc {

// Fixed 12-significant-digit formatting so reports and golden files are
// stable across platforms. Negative zero collapses to "0".
std::string format_real(double x);

// Round-trips a double through the 12-digit representation; JSON reports
// carry these so re-serialization cannot drift.
double round_real(double x);

}  // namespace ecc
