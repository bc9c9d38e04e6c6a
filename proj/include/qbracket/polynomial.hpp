#ifndef QBRACKET_POLYNOMIAL_HPP
#define QBRACKET_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qbracket/rational.hpp"

namespace qbracket {

// Dense univariate polynomial with exact rational coefficients. Serves both
// as the formal alpha of D_alpha / eta^alpha and as the x of the bivariate
// Han-Ji series. Trailing zeros are always trimmed, so the zero polynomial
// has no coefficients and operator== is structural.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c);  // NOLINT: constants convert implicitly
    Polynomial(const Rational& c);  // NOLINT
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(std::size_t degree, const Rational& c = 1);

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // Coefficient of x^i; zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(char var = 'a') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

using AlphaPolynomial = Polynomial;

}  // namespace qbracket

#endif
