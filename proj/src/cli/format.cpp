#include "cubesec/format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace cubesec {

namespace {

std::string chars(double x, std::chars_format fmt, int precision) {
  char buf[128];
  auto res = std::to_chars(buf, buf + sizeof buf, x, fmt, precision);
  if (res.ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_sig(double x, int sig) {
  if (sig < 1) throw std::invalid_argument("format_sig: need at least one digit");
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  if (x == 0.0) return sig > 1 ? "0." + std::string(static_cast<std::size_t>(sig - 1), '0') : "0";

  // Rounded mantissa digits and decimal exponent from the scientific form.
  const std::string sci = chars(x, std::chars_format::scientific, sig - 1);
  const auto epos = sci.find('e');
  const int exponent = std::stoi(sci.substr(epos + 1));
  std::string mantissa = sci.substr(0, epos);
  const bool negative = mantissa.front() == '-';
  if (negative) mantissa.erase(0, 1);
  std::string digits;
  for (char c : mantissa) {
    if (c != '.') digits.push_back(c);
  }

  if (exponent < -5 || exponent >= sig + 3) return sci;
  std::string out;
  if (exponent < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
  } else if (exponent + 1 >= static_cast<int>(digits.size())) {
    out = digits + std::string(static_cast<std::size_t>(exponent + 1 - static_cast<int>(digits.size())), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(exponent + 1)) + "." +
          digits.substr(static_cast<std::size_t>(exponent + 1));
  }
  return negative ? "-" + out : out;
}

std::string format_fixed(double x, int decimals) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  return chars(x, std::chars_format::fixed, decimals);
}

std::string format_shortest(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  if (res.ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, res.ptr);
}

bool matches_sig(double x, double ref, int sig) {
  return std::fabs(x - ref) <= 0.5 * std::pow(10.0, 1 - sig) * std::fabs(ref);
}

}  // namespace cubesec
