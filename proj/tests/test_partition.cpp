#include <doctest.h>

#include "oracles.hpp"
#include "qbracket/errors.hpp"
#include "qbracket/partition.hpp"

using namespace qbracket;

TEST_SUITE("partition") {

TEST_CASE("construction validates parts") {
    CHECK_NOTHROW(Partition{4, 3, 1});
    CHECK_THROWS_AS(Partition({3, 4}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
    CHECK_THROWS_AS(Partition({-1}), DomainError);
    const Partition empty;
    CHECK(empty.size() == 0);
    CHECK(empty.length() == 0);
    CHECK(empty.largest() == 0);
}

TEST_CASE("conjugate and printing") {
    const Partition p{4, 3, 1};
    CHECK(p.conjugate() == Partition{3, 2, 2, 1});
    CHECK(p.size() == 8);
    CHECK(p.to_string() == "(4,3,1)");
    CHECK(Partition{}.conjugate() == Partition{});
}

TEST_CASE("enumeration matches the recursive oracle") {
    static const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
    for (int n = 0; n < 16; ++n) {
        const auto got = enumerate_partitions(n);
        CHECK(got.size() == static_cast<std::size_t>(counts[n]));
        auto ref = oracle::partitions(n);
        std::vector<std::vector<int>> mine;
        for (const auto& p : got) mine.push_back(p.parts());
        std::sort(ref.begin(), ref.end());
        std::sort(mine.begin(), mine.end());
        CHECK(mine == ref);
    }
    CHECK_THROWS_AS(enumerate_partitions(61), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_partitions(-1), DomainError);
}

TEST_CASE("hooks of (4,3,1)") {
    CHECK(hook_multiset(Partition{4, 3, 1}).values() == std::vector<int>{1, 1, 1, 2, 3, 4, 4, 6});
    CHECK(t_hook_multiset(Partition{4, 3, 1}, 2).values() == std::vector<int>{2, 4, 4, 6});
    CHECK(t_hook_multiset(Partition{4, 3, 1}, 3).values() == std::vector<int>{3, 6});
    CHECK(hook_multiset(Partition{4, 3, 1}).multiplicity(4) == 2);
    CHECK_THROWS_AS(t_hook_multiset(Partition{1}, 0), DomainError);
}

TEST_CASE("worked hook examples are exact") {
    const Partition p{4, 3, 1};
    CHECK(f_hook(p, 3, 1) == make_rational(307, 96));
    CHECK(f_hook(p, 3, 2) == make_rational(139, 216));
    CHECK(f_hook(p, 3, 3) == make_rational(3, 8));
}

TEST_CASE("f_hook agrees with the diagram oracle") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& parts : oracle::partitions(n)) {
            const Partition p(parts);
            for (long a = -3; a <= 4; ++a) {
                for (int t = 1; t <= 3; ++t) CHECK(f_hook(p, a, t) == oracle::f_hook(parts, a, t));
            }
        }
    }
}

TEST_CASE("numeric f_hook matches the exact one at integer a") {
    const Partition p{5, 2, 2, 1};
    for (long a = -2; a <= 3; ++a) {
        const double exact = to_double(f_hook(p, a, 1));
        CHECK(std::abs(f_hook_numeric(p, double(a), 1) - exact) < 1e-12 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("D_alpha is the product of (1 - alpha/h^2)") {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& parts : oracle::partitions(n)) {
            const auto D = nekrasov_okounkov_D(Partition(parts));
            CHECK(D.degree() == n);
            for (long x : {-3L, 1L, 2L, 5L}) {
                oracle::Q expect = 1;
                for (int h : oracle::hooks(parts)) expect *= 1 - oracle::Q(x) / (h * h);
                CHECK(D(Rational(x)) == expect);
            }
        }
    }
}

TEST_CASE("moment S_2k is the sum of odd powers of parts") {
    const Partition p{3, 3, 1};
    CHECK(moment_S(p, 1) == 7);
    CHECK(moment_S(p, 2) == 27 + 27 + 1);
    CHECK(moment_S(p, 3) == 243 + 243 + 1);
}

}  // TEST_SUITE
