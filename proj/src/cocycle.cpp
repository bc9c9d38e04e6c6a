#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qbracket/complex_io.hpp"
#include "qbracket/errors.hpp"
#include "qbracket/modular.hpp"
#include "qbracket/special.hpp"

namespace qbracket {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);
constexpr int kOuterTerms = 2000;

int weight_of(long a) {
    if (a > -1 || a % 2 == 0) throw DomainError("the cocycle needs odd a <= -1");
    return static_cast<int>(2 - a);
}

void require_cut_plane(Complex z, double margin) {
    if (z == Complex(0)) throw DomainError("z = 0 is excluded");
    if (std::abs(std::arg(z)) > kPi - margin) {
        throw DomainError("z = " + format_complex(z) + " is on or too close to the negative real axis");
    }
}

// sum_{n>=1} (w+n)^{-k}
Complex shifted_hurwitz(int k, Complex w) {
    Complex direct = 0;
    double n = 1;
    while (!((w + n).real() > 0)) {
        direct += std::pow(w + n, -k);
        n += 1;
    }
    return direct + hurwitz_zeta(k, w + n);
}

}  // namespace

Complex cocycle_eichler(long a, Complex z, double y_floor) {
    const int k = weight_of(a);
    return eichler_value(a, z, y_floor) - std::pow(z, -k) * eichler_value(a, -1.0 / z, y_floor);
}

LatticeSum cocycle_lattice_sum(long a, Complex z) {
    const int k = weight_of(a);
    require_cut_plane(z, 1e-9);
    const double zk = zeta(long(k));
    // axes carry half weight: 2 * (1/2)(zeta(k) + z^{-k} zeta(k))
    Complex inner_total = 0;
    for (int m = kOuterTerms; m >= 1; --m) inner_total += shifted_hurwitz(k, double(m) * z);

    // m > M: zeta(k, w) - w^{-k} ~ w^{1-k}/(k-1) - w^{-k}/2 + sum_j B_{2j}/(2j)! (k)_{2j-1} w^{1-k-2j}
    // with w = m z, summed over m via sum_{m>M} (mz)^{-p} = z^{-p} zeta(p, M+1).
    const double M1 = kOuterTerms + 1;
    auto power_sum = [&](int p) { return std::pow(z, -p) * hurwitz_zeta(p, Complex(M1, 0)); };
    Complex tail = power_sum(k - 1) / double(k - 1) - 0.5 * power_sum(k);
    double rising = k;  // (k)_{2j-1}
    double bound = 0;
    constexpr int J = 6;
    for (int j = 1; j <= J + 1; ++j) {
        const double b = to_double(Rational(bernoulli(2 * j) / Rational(factorial(2 * j))));
        const Complex term = b * rising * power_sum(k - 1 + 2 * j);
        if (j <= J) {
            tail += term;
        } else {
            bound = std::abs(term);
        }
        rising *= (k + 2.0 * j - 1) * (k + 2.0 * j);
    }
    inner_total += tail;
    return {zk * (1.0 + std::pow(z, -k)) + 2.0 * inner_total, 2 * bound, kOuterTerms};
}

Complex cocycle_double_sum(long a, Complex z) {
    const int k = weight_of(a);
    const double fact = std::tgamma(double(k));
    return fact / std::pow(-2 * kPi * kI, k) * cocycle_lattice_sum(a, z).value;
}

Complex cocycle_contour_line(long a, Complex z) {
    const int k = weight_of(a);
    if (z == Complex(0)) throw DomainError("z = 0 is excluded");
    if (std::abs(std::arg(z)) > kPi - 0.1) {
        throw ConvergenceError("contour integral converges too slowly for |Arg z| > pi - 0.1");
    }
    const double c = k / 2.0;
    const Complex log_z = std::log(z);
    auto F = [&](double tau) {
        const Complex s(c, tau);
        // z^{-s}/sin(pi s/2) with the growing exponentials folded together
        // so that neither factor overflows for large |tau|
        const double side = tau >= 0 ? 1.0 : -1.0;
        const Complex ratio = -side * 2.0 * kI * std::exp(s * (side * kI * kPi / 2.0 - log_z)) /
                              (1.0 - std::exp(side * kI * kPi * s));
        return gamma_complex(s) * zeta(s) * zeta(s - double(k - 1)) * ratio / std::exp(s * std::log(2 * kPi));
    };
    // trapezoid rule on tau; the integrand is analytic in a strip of half
    // width 1/2 and decays exponentially, so the error falls like e^{-pi/h}
    auto trapezoid = [&](double h) {
        Complex sum = F(0.0);
        double peak = std::abs(sum);
        for (int dir : {1, -1}) {
            int small = 0;
            for (long j = 1; j * h <= 400; ++j) {
                const Complex v = F(dir * j * h);
                sum += v;
                peak = std::max(peak, std::abs(v));
                small = std::abs(v) < 1e-18 * peak ? small + 1 : 0;
                if (small >= 5) break;
            }
        }
        return sum * h;
    };
    double h = 0.1;
    Complex prev = trapezoid(h);
    for (int iter = 0; iter < 4; ++iter) {
        h /= 2;
        const Complex cur = trapezoid(h);
        if (std::abs(cur - prev) < 1e-11 * std::max(1.0, std::abs(cur))) return kI / (2 * kPi) * cur;
        prev = cur;
    }
    throw ConvergenceError("contour quadrature did not settle under step halving");
}

Complex cocycle_contour(long a, Complex z) {
    const int k = weight_of(a);
    const Complex residue = std::tgamma(double(k)) * zeta(long(k)) * std::pow(2 * kPi, -k) *
                            (std::pow(kI, k) * std::pow(z, -k) - std::pow(kI, -k));
    return cocycle_contour_line(a, z) + residue;
}

}  // namespace qbracket
