#include "qbracket/rational.hpp"

#include <stdexcept>

#include "qbracket/errors.hpp"

namespace qbracket {

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw PoleError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_pow(const Rational& base, long e) {
    if (e < 0 && base == 0) {
        throw PoleError("0 raised to a negative power");
    }
    unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), m);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), m);
    Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
}

Integer integer_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    Rational r;
    if (text.empty() || r.set_str(std::string(text), 10) != 0 || r.get_den() == 0) {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    r.canonicalize();
    return r;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace qbracket
