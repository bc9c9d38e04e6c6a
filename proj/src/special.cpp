#include "qbracket/special.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

#include "qbracket/errors.hpp"

namespace qbracket {
namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

// B_{2j}/(2j)! as doubles, j = 1..40, for the Euler-Maclaurin tails.
const std::vector<double>& em_coefficients() {
    static const std::vector<double> table = [] {
        std::vector<double> t(41, 0.0);
        for (int j = 1; j <= 40; ++j) {
            t[j] = to_double(Rational(bernoulli(2 * j) / Rational(factorial(2 * j))));
        }
        return t;
    }();
    return table;
}

// Euler-Maclaurin tail sum_{n>=0} (a+n)^{-s} for |a| large enough; stops
// when the correction terms drop below rel_tol relative to the running sum
// or start growing. Returns the tail and the last correction magnitude.
std::pair<Complex, double> em_tail(Complex s, Complex a, double rel_tol) {
    const auto& b = em_coefficients();
    const Complex log_a = std::log(a);
    const Complex a_pow = std::exp(-s * log_a);  // a^{-s}
    Complex sum = a * a_pow / (s - 1.0) + 0.5 * a_pow;
    Complex rising = s;                 // (s)_{2j-1}
    Complex power = a_pow / a;          // a^{-s-2j+1}
    const Complex inv_a2 = 1.0 / (a * a);
    double last = INFINITY;
    for (int j = 1; j <= 40; ++j) {
        const Complex term = b[j] * rising * power;
        const double mag = std::abs(term);
        if (mag > last) break;
        sum += term;
        last = mag;
        if (mag <= rel_tol * std::abs(sum)) break;
        rising *= (s + double(2 * j - 1)) * (s + double(2 * j));
        power *= inv_a2;
    }
    return {sum, last};
}

double odd_zeta(long s) {
    // plain summation to N then a 4-term Euler-Maclaurin tail
    constexpr int N = 10000;
    double sum = 0;
    for (int n = N - 1; n >= 1; --n) sum += std::pow(double(n), -double(s));
    const double Nd = N;
    double tail = std::pow(Nd, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(Nd, -double(s));
    double rising = s;
    const auto& b = em_coefficients();
    for (int j = 1; j <= 4; ++j) {
        tail += b[j] * rising * std::pow(Nd, -double(s) - 2 * j + 1);
        rising *= (s + 2.0 * j - 1) * (s + 2.0 * j);
    }
    return sum + tail;
}

// Lanczos approximation, g = 7, n = 9.
constexpr std::array<double, 9> kLanczos{0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                         771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                         -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

Rational bernoulli(int n) {
    if (n < 0) throw DomainError("Bernoulli index must be nonnegative");
    if (n > kBernoulliCap) throw ResourceLimitError("Bernoulli index above cap " + std::to_string(kBernoulliCap));
    std::lock_guard lock(bernoulli_mutex);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    for (int m = static_cast<int>(bernoulli_table.size()); m <= n; ++m) {
        Rational acc;
        for (int j = 0; j < m; ++j) {
            if (j >= 3 && (j & 1)) continue;
            acc += Rational(binomial(m + 1, j)) * bernoulli_table[j];
        }
        Rational b = -acc / (m + 1);
        bernoulli_table.push_back(b);
    }
    return bernoulli_table[n];
}

ZetaValue zeta_int(long s) {
    if (s == 1) throw PoleError("zeta has a pole at s = 1");
    ZetaValue z;
    if (s == 0) {
        z.rational = make_rational(-1, 2);
    } else if (s < 0) {
        const long n = -s;
        z.rational = Rational(-bernoulli(static_cast<int>(n + 1)) / (n + 1));
    } else if (s % 2 == 0) {
        // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
        const long m = s / 2;
        Rational r = bernoulli(static_cast<int>(s)) * Rational(integer_pow(Integer(2), static_cast<unsigned long>(s))) /
                     Rational(Integer(2) * factorial(static_cast<unsigned long>(s)));
        if (m % 2 == 0) r = -r;
        z.rational = r;
        z.pi_power = static_cast<int>(s);
    } else {
        z.value = odd_zeta(s);
        return z;
    }
    z.value = to_double(*z.rational) * std::pow(kPi, z.pi_power);
    return z;
}

double zeta(long s) { return zeta_int(s).value; }

std::complex<double> zeta(std::complex<double> s) {
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
    if (s.real() < 0.5) {
        // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
        return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) * gamma_complex(1.0 - s) *
               zeta(1.0 - s);
    }
    const int N = static_cast<int>(std::ceil(std::max(20.0, std::abs(s) + 10.0)));
    Complex sum = 0;
    for (int n = N - 1; n >= 1; --n) sum += std::exp(-s * std::log(double(n)));
    return sum + em_tail(s, Complex(N, 0.0), 1e-17).first;
}

std::complex<double> hurwitz_zeta(int s, std::complex<double> w) {
    if (s < 2) throw DomainError("hurwitz_zeta needs integer s >= 2");
    if (!(w.real() > 0)) throw DomainError("hurwitz_zeta needs Re(w) > 0");
    const Complex sc(s, 0.0);
    int M = static_cast<int>(std::max(0.0, std::ceil(12.0 - w.real())));
    for (;;) {
        Complex head = 0;
        for (int n = M - 1; n >= 0; --n) head += std::exp(-sc * std::log(w + double(n)));
        auto [tail, last] = em_tail(sc, w + double(M), 1e-17);
        const Complex total = head + tail;
        if (last < 1e-14 * std::max(1.0, std::abs(total)) || M > 10000) return total;
        M += 10;
    }
}

double gamma_real(double x) {
    if (!(x > 0) || x > 100) throw DomainError("gamma_real needs 0 < x <= 100");
    return std::tgamma(x);
}

std::complex<double> gamma_complex(std::complex<double> s) {
    if (s.imag() == 0 && s.real() <= 0 && s.real() == std::floor(s.real())) {
        throw PoleError("Gamma has a pole at a nonpositive integer");
    }
    if (s.real() < 0.5) {
        return kPi / (std::sin(kPi * s) * gamma_complex(1.0 - s));
    }
    const Complex z = s - 1.0;
    Complex a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + double(i));
    const Complex t = z + 7.5;
    return std::sqrt(2 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * a;
}

double incomplete_gamma_star(int n, double x) {
    if (n < 1) throw DomainError("incomplete_gamma_star needs n >= 1");
    if (x < 0) throw DomainError("incomplete_gamma_star needs x >= 0");
    double sum = std::exp(-x);
    if (x == 0) return 1.0;
    const double lx = std::log(x);
    for (int j = 1; j < n; ++j) sum += std::exp(-x + j * lx - std::lgamma(j + 1.0));
    return sum;
}

const NamedConstants& named_constants() {
    static const NamedConstants c = [] {
        const auto& b = em_coefficients();
        constexpr int N = 1000;
        const double Nd = N;

        // gamma = H_N - ln N - 1/(2N) + sum_j B_{2j}/(2j N^{2j})
        double h = 0;
        for (int n = N; n >= 1; --n) h += 1.0 / n;
        double g = h - std::log(Nd) - 0.5 / Nd;
        for (int j = 1; j <= 6; ++j) {
            g += to_double(bernoulli(2 * j)) / (2.0 * j * std::pow(Nd, 2.0 * j));
        }

        // zeta'(2) = -sum ln n / n^2; tail via Euler-Maclaurin with
        // f^{(m)}(x) = x^{-2-m} (A_m ln x + B_m)
        double s = 0;
        for (int n = N - 1; n >= 2; --n) s += std::log(double(n)) / (double(n) * n);
        const double lN = std::log(Nd);
        double tail = (lN + 1.0) / Nd + 0.5 * lN / (Nd * Nd);
        double A = 1, B = 0;
        for (int m = 0; m < 12; ++m) {
            const double A1 = -(m + 2) * A;
            const double B1 = -(m + 2) * B + A;
            A = A1;
            B = B1;
            if (m % 2 == 0) {
                // m + 1 = 2j - 1 is odd
                const int j = (m + 2) / 2;
                const double fd = std::pow(Nd, -3.0 - m) * (A * lN + B);
                // factorial normalization: b[j] = B_{2j}/(2j)!
                tail -= b[j] * fd;
            }
        }
        return NamedConstants{g, -(s + tail), std::numbers::ln2, kPi};
    }();
    return c;
}

}  // namespace qbracket
