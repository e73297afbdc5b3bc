#ifndef CODEWIG_FORMAT_HPP
#define CODEWIG_FORMAT_HPP

#include <complex>
#include <cmath>
#include <cstdio>
#include <string>

namespace codewig {

/// Shortest "%.{digits}g" rendering; 17 significant digits round-trips a double.
inline std::string format_double(double value, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

/// "re+imj" / "re-imj".
inline std::string format_complex(std::complex<double> value, int digits = 17) {
  const double im = value.imag();
  return format_double(value.real(), digits) + (std::signbit(im) ? "-" : "+") + format_double(std::abs(im), digits) +
         "j";
}

}  // namespace codewig

#endif  // CODEWIG_FORMAT_HPP
