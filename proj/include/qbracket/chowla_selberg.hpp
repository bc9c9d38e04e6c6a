#ifndef QBRACKET_CHOWLA_SELBERG_HPP
#define QBRACKET_CHOWLA_SELBERG_HPP

#include <complex>
#include <optional>
#include <vector>

#include <json.hpp>

#include "qbracket/rational.hpp"

namespace qbracket {

using Complex = std::complex<double>;

// D < 0: D = 1 mod 4 squarefree, or D = 4m with m = 2, 3 mod 4 squarefree.
bool is_fundamental(long D);

// Kronecker symbol (D/j).
int kronecker_chi(long D, long j);

// Reduced primitive forms of discriminant D, |D| <= 10^6.
long class_number(long D);

// 1/3 for D = -3, 1/2 for D = -4, h(D) otherwise.
Rational h_prime(long D);

// (2 pi |D|)^{-1/2} (prod_j Gamma(j/|D|)^{chi(j)})^{1/(2h')}, |D| <= 400.
double omega_period(long D);

struct DiscriminantData {
    long D = 0;
    long class_number = 0;
    Rational h_prime;
    std::vector<int> chi;  // chi[j-1] for j = 1..|D|
    double omega = 0;
};

DiscriminantData discriminant_data(long D);

// Powers 2^{j/8}, j = -8..8.
std::vector<double> default_candidates();

struct Corollary5Result {
    long D = 0;
    int k = 0;
    Complex tau;
    Complex lhs;
    Complex ratio;  // lhs / (Psi(tau)/sqrt(Omega_D))
    std::optional<double> matched;  // candidate within tolerance, if any
    double distance = 0;            // |ratio - best candidate|
};

// tau must lie in Q(sqrt(D)): Re tau and Im tau/sqrt|D| rational with
// denominator <= 10^4 to within 1e-9.
Corollary5Result corollary5_check(int k, Complex tau, long D, const std::vector<double>& candidates = default_candidates(),
                                  double match_tol = 1e-8);

nlohmann::json to_json(const DiscriminantData& d);
nlohmann::json to_json(const Corollary5Result& r);

}  // namespace qbracket

#endif
