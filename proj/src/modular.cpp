#include "qbracket/modular.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qbracket/complex_io.hpp"
#include "qbracket/errors.hpp"
#include "qbracket/special.hpp"

namespace qbracket {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

void require_floor(Complex z, double y_floor) {
    if (!(z.imag() > 0)) throw DomainError("point " + format_complex(z) + " is not in the upper half-plane");
    if (z.imag() < y_floor) {
        throw DomainError("Im z = " + format_real(z.imag()) + " is below the evaluation floor " +
                          format_real(y_floor));
    }
}

void require_k(int k) {
    if (k < 1) throw DomainError("k must be a positive integer");
}

void require_t(int t) {
    if (t < 1) throw DomainError("t must be a positive integer");
}

// c_m = B_{2m} B_{2k+2-2m} / ((2m)! (2k+2-2m)!), m = 0..k+1
std::vector<Rational> period_coeffs(int k) {
    std::vector<Rational> c(static_cast<std::size_t>(k) + 2);
    for (int m = 0; m <= k + 1; ++m) {
        const int other = 2 * k + 2 - 2 * m;
        c[m] = bernoulli(2 * m) * bernoulli(other) /
               Rational(factorial(static_cast<unsigned long>(2 * m)) * factorial(static_cast<unsigned long>(other)));
    }
    return c;
}

// (2 pi i)^{2k+1}
Complex two_pi_i_power(int k) { return std::pow(2 * kPi, 2 * k + 1) * (k % 2 == 0 ? kI : -kI); }

double sigma_double(long l, long n) {
    double s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += std::pow(double(d), double(l));
        if (d * d != n) s += std::pow(double(n / d), double(l));
    }
    return s;
}

// Exact Laurent coefficients of (P(t(z+1)) - P(tz))/2 divided by
// -(1/4)(2 pi i)^{2k+1}: polynomial part by degree.
std::vector<Rational> shift_polynomial(int k, int t) {
    const auto c = period_coeffs(k);
    std::vector<Rational> poly(static_cast<std::size_t>(2 * k + 1), Rational(0));
    for (int m = 1; m <= k + 1; ++m) {
        const Rational tm = rational_pow(Rational(t), 2 * m - 1);
        for (int r = 1; r <= 2 * m - 1; ++r) {
            poly[2 * m - 1 - r] += c[m] * tm * Rational(binomial(2 * m - 1, r));
        }
    }
    return poly;
}

Complex eval_poly(const std::vector<Rational>& poly, Complex z) {
    Complex acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * z + to_double(poly[i]);
    return acc;
}

}  // namespace

UpperHalfPoint::UpperHalfPoint(double x, double y) : x_(x), y_(y) {
    if (!(y > 0) || !std::isfinite(x) || !std::isfinite(y)) {
        throw DomainError("a point of the upper half-plane needs finite x and y > 0");
    }
}

Complex UpperHalfPoint::q() const { return std::exp(2 * kPi * kI * z()); }

Complex q_power(Complex z, double r) { return std::exp(2 * kPi * kI * r * z); }

Complex sqrt_minus_iz(Complex z) { return std::sqrt(-kI * z); }

Complex eval_truncated(const QSeries& s, Complex z, double eps, double y_floor) {
    if (!(eps > 0)) throw DomainError("eps must be positive");
    require_floor(z, y_floor);
    const double aq = std::exp(-2 * kPi * z.imag());
    // growth model |c_n| <= C (n+1)^3
    double C = 0;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        C = std::max(C, std::abs(to_double(s[n])) / std::pow(double(n + 1), 3));
    }
    std::size_t cut = s.order() + 1;
    for (std::size_t M = 0; M <= s.order(); ++M) {
        const double rho = std::pow((M + 3.0) / (M + 2.0), 3) * aq;
        if (rho >= 1) continue;
        if (C * std::pow(M + 2.0, 3) * std::pow(aq, double(M + 1)) / (1 - rho) < eps) {
            cut = M;
            break;
        }
    }
    if (cut > s.order()) {
        throw TruncationError("series order " + std::to_string(s.order()) + " too small for tolerance at z = " +
                              format_complex(z));
    }
    const Complex q = std::exp(2 * kPi * kI * z);
    Complex acc = 0;
    for (std::size_t n = cut + 1; n-- > 0;) acc = acc * q + to_double(s[n]);
    return acc * q_power(z, to_double(s.offset()));
}

Complex eichler_value(long a, Complex z, double y_floor) {
    require_floor(z, y_floor);
    const double aq = std::exp(-2 * kPi * z.imag());
    const double p = double(1 - a);
    Complex sum = 0;
    for (long n = 1;; ++n) {
        const Complex qn = std::exp(2 * kPi * kI * double(n) * z);
        sum += std::pow(double(n), p) * qn / (1.0 - qn);
        // tail after n: terms bounded by m^p |q|^m/(1-|q|) with ratio rho
        const double rho = std::pow((n + 2.0) / (n + 1.0), std::max(p, 0.0)) * aq;
        if (rho < 1) {
            const double next = std::pow(double(n + 1), p) * std::pow(aq, double(n + 1)) / (1 - aq);
            if (next / (1 - rho) < 1e-17 * std::max(1.0, std::abs(sum))) break;
        }
        if (n > 1000000) throw TruncationError("Eichler integral did not reach tolerance");
    }
    return sum;
}

Complex eta_value(Complex z, double y_floor) {
    require_floor(z, y_floor);
    const double aq = std::exp(-2 * kPi * z.imag());
    Complex prod = 1;
    for (long n = 1;; ++n) {
        prod *= 1.0 - std::exp(2 * kPi * kI * double(n) * z);
        if (std::pow(aq, double(n + 1)) / (1 - aq) < 1e-17) break;
    }
    return q_power(z, 1.0 / 24) * prod;
}

Complex P_poly(int k, Complex z) {
    require_k(k);
    if (z == Complex(0)) throw PoleError("P_{-2k} has a pole at z = 0");
    const auto c = period_coeffs(k);
    // sum c_m z^{2m-1} = z^{-1} sum c_m (z^2)^m
    const Complex z2 = z * z;
    Complex acc = 0;
    for (std::size_t m = c.size(); m-- > 0;) acc = acc * z2 + to_double(c[m]);
    return -0.5 * two_pi_i_power(k) * acc / z;
}

Complex M_value(int k, int t, Complex z, double y_floor) {
    require_k(k);
    require_t(t);
    const Complex tz = double(t) * z;
    return eichler_value(2 * k + 2, tz, y_floor) + 0.5 * P_poly(k, tz) + 0.5 * zeta(2L * k + 1);
}

Complex M_shift_rhs(int k, int t, Complex z) {
    require_k(k);
    require_t(t);
    if (z == Complex(0) || z == Complex(-1)) throw PoleError("shift is singular at z = 0, -1");
    const Complex pref = -0.25 * two_pi_i_power(k);
    const Complex poly = eval_poly(shift_polynomial(k, t), z);
    const double c0 = to_double(period_coeffs(k)[0]) / t;
    return pref * (poly + c0 * (1.0 / (z + 1.0) - 1.0 / z));
}

Complex M_shift_polynomial_only(int k, int t, Complex z) {
    require_k(k);
    require_t(t);
    return 0.25 * two_pi_i_power(k) * eval_poly(shift_polynomial(k, t), z);
}

Complex psi_value(int k, Complex z) {
    require_k(k);
    if (z == Complex(0)) throw PoleError("Psi has a pole at z = 0");
    return -P_poly(k, -1.0 / z) - 0.5 * (1.0 - std::pow(z, -2 * k)) * zeta(2L * k + 1);
}

Complex h_star_value(int k, Complex z, double y_floor) {
    require_k(k);
    return eichler_value(2 * k + 2, z, y_floor) / eta_value(z, y_floor);
}

Complex maass_E0_complex(int t, Complex z, double y_floor) {
    require_t(t);
    const Complex tz = double(t) * z;
    require_floor(tz, y_floor);
    const auto& c = named_constants();
    const double ty = tz.imag();
    const Complex holo = eichler_value(2, tz, y_floor);
    // sum sigma_{-1}(n) conj(q)^{tn} is the same Lambert series at -conj(tz)
    const Complex anti = eichler_value(2, -std::conj(tz), y_floor);
    const double constant =
        c.euler_gamma - c.log2 - 0.5 * std::log(ty) - 6 * c.zeta_prime_2 / (kPi * kPi);
    return ty + (6 / kPi) * (constant + holo + anti);
}

double maass_E0(int t, Complex z, double y_floor) { return maass_E0_complex(t, z, y_floor).real(); }

Complex maass_E_neg(int k, int t, Complex z, double y_floor) {
    if (k < 2) throw DomainError("maass_E_neg needs k >= 2");
    require_t(t);
    const Complex tz = double(t) * z;
    require_floor(tz, y_floor);
    const double ty = tz.imag();
    const double pref = 2 * to_double(Rational(factorial(static_cast<unsigned long>(2 * k)))) /
                        (to_double(bernoulli(2 * k)) * std::pow(4 * kPi, 2 * k - 1));
    Complex nonholo = 0;
    for (long n = 1;; ++n) {
        const double x = 4 * kPi * ty * n;
        const Complex term = sigma_double(1 - 2 * k, n) * incomplete_gamma_star(2 * k - 1, x) *
                             std::exp(-2 * kPi * kI * double(n) * tz);
        nonholo += term;
        if (x > 4.0 * k && std::abs(term) < 1e-18 * std::max(1.0, std::abs(nonholo))) break;
        if (n > 1000000) throw TruncationError("non-holomorphic part did not converge");
    }
    return std::pow(ty, 2 * k - 1) + pref * (zeta(2L * k - 1) + eichler_value(2 * k, tz, y_floor) + nonholo);
}

Complex laplacian_fd(int weight, const std::function<Complex(Complex)>& f, Complex z, double h) {
    if (!(h > 0)) throw DomainError("step must be positive");
    if (!(z.imag() - h > 0)) throw DomainError("finite-difference stencil leaves the upper half-plane");
    const Complex f0 = f(z);
    const Complex fxp = f(z + h), fxm = f(z - h);
    const Complex fyp = f(z + kI * h), fym = f(z - kI * h);
    const Complex fxx = (fxp - 2.0 * f0 + fxm) / (h * h);
    const Complex fyy = (fyp - 2.0 * f0 + fym) / (h * h);
    const Complex fx = (fxp - fxm) / (2 * h);
    const Complex fy = (fyp - fym) / (2 * h);
    const double y = z.imag();
    return -y * y * (fxx + fyy) + kI * double(weight) * y * (fx + kI * fy);
}

}  // namespace qbracket
