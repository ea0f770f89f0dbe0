#pragma once

// Locale-independent number formatting for CSV, JSON and terminal output.

#include <string>

namespace cubesec {

/// `sig` significant digits, trailing zeros kept: 2.13730, 10.4705, 16.2310.
/// Falls back to scientific notation for very large or small magnitudes.
std::string format_sig(double x, int sig = 6);

/// Fixed notation with `decimals` digits after the point.
std::string format_fixed(double x, int decimals = 6);

/// Shortest representation that reads back to the same double.
std::string format_shortest(double x);

/// Relative comparison at the precision of `sig` printed digits: true when
/// |x - ref| <= 5e-6 |ref| for sig = 6 (half a unit in the last printed place, relative).
bool matches_sig(double x, double ref, int sig = 6);

}  // namespace cubesec
