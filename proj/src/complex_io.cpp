#include "qbracket/complex_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace qbracket {
namespace {

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("malformed complex number '" + std::string(text) + "' (expected a+bi)");
}

double parse_real(std::string_view part, std::string_view whole) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    double v = 0;
    const char* first = part.data();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) bad(whole);
    return v;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s.push_back(c);
    }
    if (s.empty()) bad(text);
    if (s.back() != 'i') return {parse_real(s, text), 0.0};
    s.pop_back();
    // split at the last sign that is not the leading one or an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        if (s.empty()) return {0.0, 1.0};
        return {0.0, parse_real(s, text)};
    }
    std::string_view sv(s);
    const double re = parse_real(sv.substr(0, split), text);
    return {re, parse_real(sv.substr(split), text)};
}

std::string format_real(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x == 0.0 ? 0.0 : x);
    return buf;
}

std::string format_complex(Complex z, int digits) {
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    std::string out = format_real(z.real(), digits);
    out += std::signbit(im) ? '-' : '+';
    out += format_real(std::abs(im), digits);
    out += 'i';
    return out;
}

}  // namespace qbracket
