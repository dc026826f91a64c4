#pragma once

#include <string>

namespace graphent::cli {

/// Shortest decimal string that parses back to the same double.
std::string format_shortest(double value);

/// Fixed 17 significant digits ("%.17g"), the CSV cell format.
std::string format_sig17(double value);

/// Parses a rational multiple of π such as "1/4", "-3/2" or "0.5" and
/// returns the angle in radians. Throws std::invalid_argument.
double parse_pi_fraction(const std::string& text);

}  // namespace graphent::cli
