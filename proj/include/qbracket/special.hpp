#ifndef QBRACKET_SPECIAL_HPP
#define QBRACKET_SPECIAL_HPP

#include <complex>
#include <optional>

#include "qbracket/rational.hpp"

namespace qbracket {

inline constexpr int kBernoulliCap = 200;

// Exact Bernoulli number with B_1 = -1/2. Memoized; safe to call concurrently.
Rational bernoulli(int n);

// zeta(s) at an integer s != 1. For s <= 0 and even s >= 2 the value is
// exactly rational * pi^pi_power; odd s >= 3 only has the floating value.
struct ZetaValue {
    std::optional<Rational> rational;
    int pi_power = 0;
    double value = 0;

    bool exact() const { return rational.has_value(); }
};

ZetaValue zeta_int(long s);

// Convenience: zeta_int(s).value.
double zeta(long s);

// Riemann zeta for complex s != 1 (Euler-Maclaurin for Re s >= 1/2, the
// functional equation below that).
std::complex<double> zeta(std::complex<double> s);

// Hurwitz zeta sum_{n>=0} (w+n)^{-s} for integer s >= 2 and Re(w) > 0.
std::complex<double> hurwitz_zeta(int s, std::complex<double> w);

// Gamma on 0 < x <= 100.
double gamma_real(double x);

// Gamma for complex s off the poles (Lanczos, reflection for Re s < 1/2).
std::complex<double> gamma_complex(std::complex<double> s);

// Normalized upper incomplete gamma Gamma(n,x)/Gamma(n) for integer n >= 1,
// x >= 0, from the finite sum e^{-x} sum_{j<n} x^j/j!.
double incomplete_gamma_star(int n, double x);

struct NamedConstants {
    double euler_gamma;
    double zeta_prime_2;
    double log2;
    double pi;
};

const NamedConstants& named_constants();

}  // namespace qbracket

#endif
