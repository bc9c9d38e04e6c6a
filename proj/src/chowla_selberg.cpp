#include "qbracket/chowla_selberg.hpp"

#include <cmath>
#include <numeric>
#include <numbers>
#include <string>

#include "qbracket/complex_io.hpp"
#include "qbracket/errors.hpp"
#include "qbracket/modular.hpp"

namespace qbracket {
namespace {

constexpr double kPi = std::numbers::pi;

bool squarefree(long n) {
    n = std::labs(n);
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        if (n % p == 0) n /= p;
    }
    return true;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

void require_fundamental(long D) {
    if (!is_fundamental(D)) throw DomainError(std::to_string(D) + " is not a negative fundamental discriminant");
}

// Jacobi symbol (a/n), n odd positive.
int jacobi(long a, long n) {
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// Is x within tol of a rational with denominator <= max_den?
bool near_rational(double x, long max_den, double tol) {
    // continued-fraction convergents are the best approximations
    double frac = x;
    long h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    for (int i = 0; i < 64; ++i) {
        const double a = std::floor(frac);
        const long ai = static_cast<long>(a);
        const long h2 = ai * h0 + h1, k2 = ai * k0 + k1;
        if (k2 > max_den) break;
        if (std::abs(x - double(h2) / double(k2)) < tol) return true;
        h1 = h0;
        h0 = h2;
        k1 = k0;
        k0 = k2;
        const double rest = frac - a;
        if (rest < 1e-15) break;
        frac = 1 / rest;
    }
    return false;
}

}  // namespace

bool is_fundamental(long D) {
    if (D >= 0) throw DomainError("discriminant must be negative");
    if (mod(D, 4) == 1) return squarefree(D);
    if (mod(D, 4) != 0) return false;
    const long m = D / 4;
    const long r = mod(m, 4);
    return (r == 2 || r == 3) && squarefree(m);
}

int kronecker_chi(long D, long j) {
    if (j == 0) return std::labs(D) == 1 ? 1 : 0;
    int result = 1;
    if (j < 0) {
        j = -j;
        if (D < 0) result = -result;
    }
    int twos = 0;
    while (j % 2 == 0) {
        j /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (D % 2 == 0) return 0;
        const long r = mod(D, 8);
        if ((twos & 1) && (r == 3 || r == 5)) result = -result;
    }
    return result * jacobi(D, j);
}

long class_number(long D) {
    require_fundamental(D);
    const long absD = -D;
    if (absD > 1000000) throw ResourceLimitError("class_number is limited to |D| <= 10^6");
    long h = 0;
    for (long a = 1; 3 * a * a <= absD; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if (mod(b - D, 2) != 0) continue;
            const long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            const long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
            ++h;
        }
    }
    return h;
}

Rational h_prime(long D) {
    require_fundamental(D);
    if (D == -3) return make_rational(1, 3);
    if (D == -4) return make_rational(1, 2);
    return Rational(class_number(D));
}

double omega_period(long D) {
    require_fundamental(D);
    const long absD = -D;
    if (absD > 400) throw ResourceLimitError("omega_period is limited to |D| <= 400");
    // sum in sorted j order so the result is reproducible
    double log_prod = 0;
    for (long j = 1; j <= absD; ++j) {
        const int c = kronecker_chi(D, j);
        if (c) log_prod += c * std::lgamma(double(j) / double(absD));
    }
    const double exponent = 1.0 / (2.0 * to_double(h_prime(D)));
    return std::exp(exponent * log_prod) / std::sqrt(2 * kPi * double(absD));
}

DiscriminantData discriminant_data(long D) {
    require_fundamental(D);
    DiscriminantData d;
    d.D = D;
    d.class_number = class_number(D);
    d.h_prime = h_prime(D);
    for (long j = 1; j <= -D; ++j) d.chi.push_back(kronecker_chi(D, j));
    if (-D <= 400) d.omega = omega_period(D);
    return d;
}

std::vector<double> default_candidates() {
    std::vector<double> c;
    for (int j = -8; j <= 8; ++j) c.push_back(std::pow(2.0, j / 8.0));
    return c;
}

Corollary5Result corollary5_check(int k, Complex tau, long D, const std::vector<double>& candidates,
                                  double match_tol) {
    require_fundamental(D);
    if (!(tau.imag() > 0)) throw DomainError("tau must lie in the upper half-plane");
    const double root = std::sqrt(double(-D));
    if (!near_rational(tau.real(), 10000, 1e-9) || !near_rational(tau.imag() / root, 10000, 1e-9)) {
        throw DomainError("tau = " + format_complex(tau) + " is not a point of Q(sqrt(" + std::to_string(D) + "))");
    }
    Corollary5Result r;
    r.D = D;
    r.k = k;
    r.tau = tau;
    r.lhs = h_star_value(k, -1.0 / tau) - h_star_value(k, tau) / (std::pow(tau, 2 * k) * sqrt_minus_iz(tau));
    r.ratio = r.lhs / (psi_value(k, tau) / std::sqrt(omega_period(D)));
    r.distance = INFINITY;
    for (double c : candidates) {
        const double d = std::abs(r.ratio - c);
        if (d < r.distance) {
            r.distance = d;
            if (d < match_tol) r.matched = c;
        }
    }
    return r;
}

nlohmann::json to_json(const DiscriminantData& d) {
    return {{"D", d.D}, {"h", d.class_number}, {"h_prime", to_string(d.h_prime)}, {"omega", d.omega}};
}

nlohmann::json to_json(const Corollary5Result& r) {
    nlohmann::json j{{"D", r.D},
                     {"k", r.k},
                     {"tau", format_complex(r.tau, 17)},
                     {"h", class_number(r.D)},
                     {"h_prime", to_string(h_prime(r.D))},
                     {"omega", omega_period(r.D)},
                     {"ratio", format_complex(r.ratio, 17)},
                     {"distance", r.distance}};
    j["matched"] = r.matched ? nlohmann::json(*r.matched) : nlohmann::json(nullptr);
    return j;
}

}  // namespace qbracket
