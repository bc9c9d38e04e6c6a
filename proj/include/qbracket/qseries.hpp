#ifndef QBRACKET_QSERIES_HPP
#define QBRACKET_QSERIES_HPP

#include <cstddef>
#include <functional>
#include <map>

#include <json.hpp>

#include "qbracket/kernels.hpp"
#include "qbracket/partition.hpp"
#include "qbracket/report.hpp"
#include "qbracket/series.hpp"

namespace qbracket {

inline constexpr std::size_t kDefaultOrder = 50;

// sum p(n) q^n = prod 1/(1-q^n)
QSeries euler_series(std::size_t order);

// q^{1/24} prod (1-q^n): offset 1/24, coefficients of the product.
QSeries eta_series(std::size_t order);

// sum_{d | n} d^l, exact for negative l.
Rational sigma(long l, long n);

// sum_n n^{1-a} q^n/(1-q^n), expanded term by term.
QSeries eichler_lambert(long a, std::size_t order);
// sum_n sigma_{1-a}(n) q^n.
QSeries eichler_divisor(long a, std::size_t order);
// Both of the above, checked against each other.
QSeries eichler_coeffs(long a, std::size_t order);

// <f>_q to the given order. The map overload needs every partition of
// 0..order as a key.
QSeries q_bracket(const std::function<Rational(const Partition&)>& f, std::size_t order);
QSeries q_bracket(const std::map<Partition, Rational>& values, std::size_t order);

// <f_{a,t}>_q from the hook histogram (computed when not supplied).
QSeries hook_bracket(long a, int t, std::size_t order, const HookHistogram* histogram = nullptr);

// sigma_{1-a}(n) at q^{tn}, zero elsewhere.
QSeries theorem1_rhs(long a, int t, std::size_t order);

VerificationReport verify_theorem1(long a, int t, std::size_t order, const HookHistogram* histogram = nullptr);

// Both sides of the bivariate hook identity, coefficients polynomials in x.
BivariateQSeries hanji_lhs(long k, int t, std::size_t order);
BivariateQSeries hanji_rhs(long k, int t, std::size_t order);
VerificationReport verify_hanji(long k, int t, std::size_t order);

// <D_alpha>_q and exp(alpha log prod(1-q^n)), coefficients polynomials in alpha.
AlphaSeries nekrasov_okounkov_lhs(std::size_t order);
AlphaSeries nekrasov_okounkov_rhs(std::size_t order);
VerificationReport verify_nekrasov_okounkov(std::size_t order);

// 1 - (4k/B_{2k}) sum sigma_{2k-1}(n) q^n
QSeries eisenstein_series(int k, std::size_t order);
VerificationReport verify_S2k_bracket(int k, std::size_t order);

// {offset: "p/q", order: N, coeffs: ["p/q", ...]}
nlohmann::json to_json(const QSeries& s);
nlohmann::json to_json(const AlphaSeries& s, char var);

}  // namespace qbracket

#endif
