#include <doctest.h>

#include "oracles.hpp"
#include "qbracket/errors.hpp"
#include "qbracket/qseries.hpp"

using namespace qbracket;

namespace {

std::vector<oracle::Q> coeffs(const QSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

}  // namespace

TEST_SUITE("qseries") {

TEST_CASE("partition series and eta") {
    const auto e = euler_series(40);
    std::vector<oracle::Q> one(41, 0);
    one[0] = 1;
    CHECK(oracle::mul(coeffs(e), oracle::euler_product(40)) == one);
    CHECK(e[40] == 37338);
    CHECK(e.offset() == 0);
    const auto eta = eta_series(10);
    CHECK(eta.offset() == Rational(1, 24));
    CHECK(eta[1] == -1);
    CHECK(eta[5] == 1);
    CHECK(eta[3] == 0);
}

TEST_CASE("divisor sums") {
    for (long l = -3; l <= 3; ++l) {
        for (long n = 1; n <= 30; ++n) CHECK(sigma(l, n) == oracle::sigma(l, n));
    }
    CHECK_THROWS_AS(sigma(1, 0), DomainError);
}

TEST_CASE("Lambert and divisor forms of the Eichler series agree") {
    for (long a : {-3L, -1L, 0L, 2L, 3L}) {
        const auto x = eichler_lambert(a, 25), y = eichler_divisor(a, 25);
        CHECK(x == y);
        CHECK(x[0] == 0);
        for (long n = 1; n <= 25; ++n) CHECK(x[n] == oracle::sigma(1 - a, n));
    }
}

TEST_CASE("hook bracket agrees with the brute-force bracket") {
    const std::size_t order = 12;
    for (long a : {-1L, 2L, 3L}) {
        for (int t : {1, 2, 3}) {
            const auto ref = oracle::q_bracket([&](const std::vector<int>& p) { return oracle::f_hook(p, a, t); }, order);
            CHECK(coeffs(hook_bracket(a, t, order)) == ref);
            const auto generic =
                q_bracket([&](const Partition& p) { return f_hook(p, a, t); }, order);
            CHECK(coeffs(generic) == ref);
        }
    }
}

TEST_CASE("bracket of the constant function is 1") {
    CHECK(q_bracket([](const Partition&) { return Rational(1); }, 15) == QSeries::one(15));
}

TEST_CASE("map bracket requires every partition") {
    std::map<Partition, Rational> values;
    for (int n = 0; n <= 4; ++n) {
        for (const auto& p : enumerate_partitions(n)) values[p] = p.size();
    }
    CHECK_NOTHROW(q_bracket(values, 4));
    CHECK_THROWS_AS(q_bracket(values, 5), DomainError);
}

TEST_CASE("hook brackets give divisor sums on the full parameter list") {
    const auto hist = hook_histogram(50);
    for (auto [a, t] : std::vector<std::pair<long, int>>{{-3, 1}, {-1, 1}, {0, 2}, {2, 1}, {2, 3}, {3, 2}, {4, 1}, {6, 1}}) {
        const auto r = verify_theorem1(a, t, 50, &hist);
        CHECK_MESSAGE(r.pass, "a = " << a << ", t = " << t);
        CHECK(r.coefficients_checked == 51);
    }
}

TEST_CASE("divisor-sum side is supported on multiples of t") {
    const auto rhs = theorem1_rhs(2, 3, 30);
    for (std::size_t n = 0; n <= 30; ++n) {
        if (n % 3 != 0 || n == 0) {
            CHECK(rhs[n] == 0);
        } else {
            CHECK(rhs[n] == oracle::sigma(-1, n / 3));
        }
    }
    CHECK_THROWS_AS(theorem1_rhs(2, 0, 10), DomainError);
}

TEST_CASE("hook bracket differs from a wrong divisor sum") {
    // a = 1 gives sigma_0; comparing the a = 2 bracket against it must fail
    CHECK_FALSE(hook_bracket(2, 1, 10) == theorem1_rhs(1, 1, 10));
}

TEST_CASE("bivariate identity") {
    CHECK(verify_hanji(2, 1, 16).pass);
    CHECK(verify_hanji(3, 2, 16).pass);
    CHECK(hanji_lhs(2, 1, 8) == hanji_rhs(2, 1, 8));
    CHECK_FALSE(hanji_lhs(2, 1, 8) == hanji_rhs(3, 1, 8));
    CHECK_FALSE(hanji_lhs(2, 2, 8) == hanji_rhs(2, 1, 8));
    CHECK(hanji_lhs(2, 1, 8)[3].degree() > 0);
}

TEST_CASE("alpha-polynomial identity") {
    const auto r = verify_nekrasov_okounkov(20);
    CHECK(r.pass);
    const auto lhs = nekrasov_okounkov_lhs(8);
    // alpha = 1 gives eta itself; alpha = 24 gives the discriminant
    std::vector<oracle::Q> at1, at24;
    for (std::size_t n = 0; n <= 8; ++n) {
        at1.push_back(lhs[n](Rational(1)));
        at24.push_back(lhs[n](Rational(24)));
    }
    CHECK(at1 == oracle::euler_product(8));
    std::vector<oracle::Q> delta(9, 0);
    delta[0] = 1;
    for (int i = 0; i < 24; ++i) delta = oracle::mul(delta, oracle::euler_product(8));
    CHECK(at24 == delta);
}

TEST_CASE("moment brackets give Eisenstein series") {
    for (int k = 1; k <= 3; ++k) CHECK(verify_S2k_bracket(k, 40).pass);
    const auto e4 = eisenstein_series(2, 5);
    CHECK(e4[0] == 1);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 2160);
}

TEST_CASE("order limits") {
    CHECK_THROWS_AS(hook_bracket(2, 1, 61), ResourceLimitError);
}

TEST_CASE("json rendering") {
    const auto j = to_json(eta_series(3));
    CHECK(j["offset"] == "1/24");
    CHECK(j["coeffs"].size() == 4);
    CHECK(j["coeffs"][1] == "-1");
}

}  // TEST_SUITE
