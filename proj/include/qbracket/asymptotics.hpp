#ifndef QBRACKET_ASYMPTOTICS_HPP
#define QBRACKET_ASYMPTOTICS_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace qbracket {

// How the divergent tail of G~_k is cut. `fixed` sums n = 0..n_max (the
// default n_max = 25 reproduces the published table); `optimal` stops just
// before the smallest nonzero term with n <= 80.
struct TruncationRule {
    enum class Kind { fixed, optimal };
    Kind kind = Kind::fixed;
    int n_max = 25;

    static TruncationRule fixed_at(int n) { return {Kind::fixed, n}; }
    static TruncationRule optimal() { return {Kind::optimal, 80}; }
};

struct AsymptoticResult {
    double t = 0;
    double g_hat = 0;
    double g_tilde = 0;
    double ratio = 0;
    int truncation_index = 0;  // last n included in the sum
    double smallest_term = 0;  // smallest nonzero |term_n|, n <= 80
    int optimal_index = 0;     // where that smallest term sits
};

// G^_k(t) = sum sigma_{k-1}(n) e^{-nt}, k odd >= 3, t >= 0.01.
double g_hat(int k, double t);

// term_n = (-1)^n/n! zeta(-n) zeta(1-n-k) t^n
double g_tilde_term(int k, int n, double t);

// Gamma(k) zeta(k)/t^k + zeta(2-k)/t + sum of term_n under the rule.
AsymptoticResult g_tilde(int k, double t, TruncationRule rule = {});

// Same partial sum written with Bernoulli products (B_1 irrelevant for odd k >= 3).
double g_tilde_bernoulli(int k, double t, int n_max = 25);

std::vector<AsymptoticResult> asymptotic_table(int k, const std::vector<double>& ts, TruncationRule rule = {});

// Header "t,g_hat,g_tilde,ratio,trunc_index", 10 decimals.
std::string to_csv(const std::vector<AsymptoticResult>& rows);
nlohmann::json to_json(const AsymptoticResult& r);
nlohmann::json to_json(const std::vector<AsymptoticResult>& rows);

// Weight-1 comparison record. The Bernoulli-coefficient expansion (B_1 = +1/2)
// and the classical (gamma - log t)/t + sum zeta(-n)^2 (-t)^n/n! expansion are
// both measured against the direct divisor sum.
struct A1Comparison {
    double t = 0;
    double bernoulli_value = 0;
    double oracle_value = 0;
    double classical_value = 0;
    double bernoulli_discrepancy = 0;  // bernoulli - oracle
    double classical_discrepancy = 0;  // classical - oracle
};

A1Comparison a1_expansion(double t);
nlohmann::json to_json(const A1Comparison& c);

}  // namespace qbracket

#endif
