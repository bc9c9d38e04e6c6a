#include <doctest.h>

#include "oracles.hpp"
#include "qbracket/errors.hpp"
#include "qbracket/special.hpp"

using namespace qbracket;
using C = std::complex<double>;

TEST_SUITE("special") {

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(13) == 0);
    for (int n = 0; n <= 40; ++n) CHECK(bernoulli(n) == oracle::bernoulli(n));
    CHECK_THROWS_AS(bernoulli(-1), DomainError);
    CHECK_THROWS_AS(bernoulli(kBernoulliCap + 1), ResourceLimitError);
}

TEST_CASE("zeta at integers") {
    const auto z2 = zeta_int(2);
    REQUIRE(z2.exact());
    CHECK(*z2.rational == Rational(1, 6));
    CHECK(z2.pi_power == 2);
    CHECK(z2.value == doctest::Approx(oracle::pi * oracle::pi / 6).epsilon(1e-15));
    CHECK(*zeta_int(0).rational == Rational(-1, 2));
    CHECK(*zeta_int(-1).rational == Rational(-1, 12));
    CHECK(*zeta_int(-2).rational == 0);
    CHECK_FALSE(zeta_int(3).exact());
    CHECK(zeta(3) == doctest::Approx(1.2020569031595942854).epsilon(1e-15));
    CHECK(zeta(5) == doctest::Approx(1.0369277551433699263).epsilon(1e-15));
    CHECK_THROWS_AS(zeta_int(1), PoleError);
}

TEST_CASE("complex zeta") {
    for (double s : {-3.5, -0.5, 0.3, 2.0, 3.0, 7.5}) {
        const double ref = s == 2.0 ? oracle::pi * oracle::pi / 6 : s == 3.0 ? zeta(3L) : 0;
        if (ref != 0) CHECK(std::abs(zeta(C(s, 0)) - ref) < 1e-13);
        CHECK(std::abs(zeta(C(s, 0)).imag()) < 1e-14);
    }
    // first nontrivial zero
    CHECK(std::abs(zeta(C(0.5, 14.134725141734693790))) < 1e-10);
    // functional equation region agrees with the series region across Re s = 1/2
    CHECK(std::abs(zeta(C(0.49999, 3.0)) - zeta(C(0.50001, 3.0))) < 1e-4);
    CHECK(std::abs(zeta(C(-1, 0)) + 1.0 / 12) < 1e-13);
    CHECK(zeta(C(-0.5, 0)).real() == doctest::Approx(-0.207886224977354566).epsilon(1e-12));
}

TEST_CASE("Hurwitz zeta against the direct sum") {
    for (C w : {C(1, 0), C(0.3, 0), C(0.5, 2), C(3, -4)}) {
        for (int s : {2, 3, 5}) {
            const C ref = oracle::hurwitz(s, w, 200000);
            CHECK(std::abs(hurwitz_zeta(s, w) - ref) < 1e-10 * std::max(1.0, std::abs(ref)));
        }
    }
    CHECK(std::abs(hurwitz_zeta(2, 1.0) - oracle::pi * oracle::pi / 6) < 1e-14);
    CHECK_THROWS_AS(hurwitz_zeta(2, C(-0.5, 1)), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(1, C(1, 0)), DomainError);
}

TEST_CASE("Gamma") {
    CHECK(gamma_real(5) == doctest::Approx(24));
    CHECK(gamma_real(0.25) == doctest::Approx(oracle::gamma_quarter()).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_real(0), DomainError);
    CHECK_THROWS_AS(gamma_real(101), DomainError);
    for (double x : {0.25, 0.5, 1.7, 6.0, 20.5}) {
        CHECK(std::abs(gamma_complex(C(x, 0)) - std::tgamma(x)) < 1e-13 * std::tgamma(x));
    }
    // |Gamma(iy)|^2 = pi / (y sinh(pi y)) and Gamma(s+1) = s Gamma(s)
    for (double y : {0.5, 1.0, 3.0}) {
        const double mod2 = std::norm(gamma_complex(C(0, y)));
        CHECK(mod2 == doctest::Approx(oracle::pi / (y * std::sinh(oracle::pi * y))).epsilon(1e-12));
        const C s(-1.3, y);
        CHECK(std::abs(gamma_complex(s + 1.0) - s * gamma_complex(s)) < 1e-12 * std::abs(gamma_complex(s + 1.0)));
    }
    CHECK_THROWS_AS(gamma_complex(C(-2, 0)), PoleError);
}

TEST_CASE("normalized incomplete gamma") {
    CHECK(incomplete_gamma_star(1, 2.0) == doctest::Approx(std::exp(-2.0)));
    CHECK(incomplete_gamma_star(3, 0.0) == 1);
    CHECK(incomplete_gamma_star(2, 1.5) == doctest::Approx(std::exp(-1.5) * 2.5));
    CHECK_THROWS_AS(incomplete_gamma_star(0, 1.0), DomainError);
    CHECK_THROWS_AS(incomplete_gamma_star(2, -1.0), DomainError);
}

TEST_CASE("named constants") {
    const auto& c = named_constants();
    CHECK(c.euler_gamma == doctest::Approx(0.57721566490153286061).epsilon(1e-14));
    CHECK(c.zeta_prime_2 == doctest::Approx(-0.93754825431584375370).epsilon(1e-13));
    CHECK(c.log2 == doctest::Approx(std::log(2.0)));
    CHECK(c.pi == oracle::pi);
}

}  // TEST_SUITE
