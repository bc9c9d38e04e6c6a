#include "qbracket/asymptotics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "qbracket/errors.hpp"
#include "qbracket/special.hpp"

namespace qbracket {
namespace {

constexpr int kTermCap = 80;

void require_k(int k) {
    if (k < 3 || k % 2 == 0) throw DomainError("k must be an odd integer >= 3");
}

void require_t(double t) {
    if (!(t >= 0.01) || !std::isfinite(t)) throw DomainError("t must be at least 0.01");
}

// (-1)^n/n! zeta(-n) zeta(1-n-k), exact
Rational term_coeff(int k, int n) {
    Rational c = *zeta_int(-n).rational * *zeta_int(1 - n - k).rational / Rational(factorial(n));
    if (n % 2) c = -c;
    return c;
}

// sum_n 1/(e^{nt} - 1) * n^p with a geometric tail bound
double lambert_real(int p, double t) {
    double sum = 0;
    const double r = std::exp(-t);
    for (long n = 1;; ++n) {
        sum += std::pow(double(n), p) / std::expm1(n * t);
        const double rho = std::pow((n + 2.0) / (n + 1.0), p) * r;
        if (rho < 1) {
            const double next = std::pow(double(n + 1), p) * std::exp(-(n + 1) * t) / (1 - r);
            if (next / (1 - rho) < 1e-17 * std::max(1.0, sum)) break;
        }
        if (n > 10000000) throw TruncationError("Lambert sum did not converge");
    }
    return sum;
}

std::string fixed10(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", x);
    return buf;
}

}  // namespace

double g_hat(int k, double t) {
    require_k(k);
    require_t(t);
    return lambert_real(k - 1, t);
}

double g_tilde_term(int k, int n, double t) {
    require_k(k);
    return to_double(term_coeff(k, n)) * std::pow(t, n);
}

AsymptoticResult g_tilde(int k, double t, TruncationRule rule) {
    require_k(k);
    require_t(t);
    if (rule.n_max < 0 || rule.n_max > kTermCap) throw DomainError("truncation index out of range");

    std::vector<double> terms(kTermCap + 1);
    AsymptoticResult r;
    r.t = t;
    r.smallest_term = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= kTermCap; ++n) {
        terms[n] = g_tilde_term(k, n, t);
        if (terms[n] != 0 && std::abs(terms[n]) < r.smallest_term) {
            r.smallest_term = std::abs(terms[n]);
            r.optimal_index = n;
        }
    }
    r.truncation_index = rule.kind == TruncationRule::Kind::fixed ? rule.n_max : r.optimal_index - 1;

    double sum = std::tgamma(double(k)) * zeta(long(k)) / std::pow(t, k) + zeta(long(2 - k)) / t;
    // add the small terms first
    for (int n = r.truncation_index; n >= 0; --n) sum += terms[n];
    r.g_tilde = sum;
    r.g_hat = g_hat(k, t);
    r.ratio = r.g_hat / r.g_tilde;
    return r;
}

double g_tilde_bernoulli(int k, double t, int n_max) {
    require_k(k);
    require_t(t);
    double sum = std::tgamma(double(k)) * zeta(long(k)) / std::pow(t, k) + zeta(long(2 - k)) / t;
    for (int n = n_max; n >= 0; --n) {
        // B_{n+1}/(n+1) * B_{n+k}/(n+k) * (-t)^n/n!; B_1 meets B_k = 0 at n = 0
        const Rational c = bernoulli(n + 1) / (n + 1) * bernoulli(n + k) / (n + k) / Rational(factorial(n));
        sum += to_double(c) * std::pow(-t, n);
    }
    return sum;
}

std::vector<AsymptoticResult> asymptotic_table(int k, const std::vector<double>& ts, TruncationRule rule) {
    std::vector<AsymptoticResult> rows;
    rows.reserve(ts.size());
    for (double t : ts) rows.push_back(g_tilde(k, t, rule));
    return rows;
}

std::string to_csv(const std::vector<AsymptoticResult>& rows) {
    std::string out = "t,g_hat,g_tilde,ratio,trunc_index\n";
    for (const auto& r : rows) {
        out += fixed10(r.t) + "," + fixed10(r.g_hat) + "," + fixed10(r.g_tilde) + "," + fixed10(r.ratio) + "," +
               std::to_string(r.truncation_index) + "\n";
    }
    return out;
}

nlohmann::json to_json(const AsymptoticResult& r) {
    return {{"t", r.t},
            {"g_hat", r.g_hat},
            {"g_tilde", r.g_tilde},
            {"ratio", r.ratio},
            {"trunc_index", r.truncation_index},
            {"smallest_term", r.smallest_term},
            {"optimal_index", r.optimal_index}};
}

nlohmann::json to_json(const std::vector<AsymptoticResult>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return arr;
}

A1Comparison a1_expansion(double t) {
    if (!(t >= 0.05 && t <= 1)) throw DomainError("t must lie in [0.05, 1]");
    constexpr int n_max = 25;
    const double gamma = named_constants().euler_gamma;
    A1Comparison c;
    c.t = t;

    // Bernoulli form: 2 gamma/t + sum B_{n+1}^2/(n+1)^2 (-t)^n/n!, with B_1 = +1/2
    double bern = 0;
    for (int n = n_max; n >= 0; --n) {
        Rational b = n == 0 ? make_rational(1, 2) : bernoulli(n + 1);
        const Rational coeff = b * b / ((n + 1) * (n + 1)) / Rational(factorial(n));
        bern += to_double(coeff) * std::pow(-t, n);
    }
    c.bernoulli_value = 2 * gamma / t + bern;

    double classical = 0;
    for (int n = n_max; n >= 0; --n) {
        const Rational z = *zeta_int(-n).rational;
        classical += to_double(Rational(z * z / Rational(factorial(n)))) * std::pow(-t, n);
    }
    c.classical_value = (gamma - std::log(t)) / t + classical;

    c.oracle_value = lambert_real(0, t);
    c.bernoulli_discrepancy = c.bernoulli_value - c.oracle_value;
    c.classical_discrepancy = c.classical_value - c.oracle_value;
    return c;
}

nlohmann::json to_json(const A1Comparison& c) {
    return {{"t", c.t},
            {"bernoulli_value", c.bernoulli_value},
            {"oracle_value", c.oracle_value},
            {"classical_value", c.classical_value},
            {"bernoulli_discrepancy", c.bernoulli_discrepancy},
            {"classical_discrepancy", c.classical_discrepancy}};
}

}  // namespace qbracket
