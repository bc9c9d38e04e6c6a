#ifndef QBRACKET_COMPLEX_IO_HPP
#define QBRACKET_COMPLEX_IO_HPP

#include <complex>
#include <string>
#include <string_view>

namespace qbracket {

using Complex = std::complex<double>;

// Parses "a+bi" with decimal parts: "0.25+1.5i", "2i", "-i", "1", "1e-3-2.5i".
// Locale independent. Throws std::invalid_argument on malformed input.
Complex parse_complex(std::string_view text);

// "a+bi" with `digits` significant digits in each part; round-trips through
// parse_complex.
std::string format_complex(Complex z, int digits = 12);

std::string format_real(double x, int digits = 12);

}  // namespace qbracket

#endif
