#include "graphent/cli/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace graphent::cli {

namespace {

double parse_number(const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return value;
}

}  // namespace

std::string format_shortest(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

std::string format_sig17(double value) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof(buf), "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

double parse_pi_fraction(const std::string& text) {
  const auto slash = text.find('/');
  double fraction;
  if (slash == std::string::npos) {
    fraction = parse_number(text);
  } else {
    const double num = parse_number(text.substr(0, slash));
    const double den = parse_number(text.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + text + "'");
    fraction = num / den;
  }
  if (!std::isfinite(fraction)) {
    throw std::invalid_argument("non-finite angle '" + text + "'");
  }
  return fraction * std::numbers::pi;
}

}  // namespace graphent::cli
