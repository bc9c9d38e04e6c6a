#include <doctest.h>

#include "oracles.hpp"
#include "qbracket/errors.hpp"
#include "qbracket/modular.hpp"
#include "qbracket/qseries.hpp"
#include "qbracket/special.hpp"
#include "qbracket/transformations.hpp"

using namespace qbracket;
using C = std::complex<double>;
constexpr double pi = oracle::pi;
const C I(0, 1);

namespace {

// eta by the product formula, independent of the library's series code
C eta_product(C z) {
    const C q = std::exp(2 * pi * I * z);
    C prod = std::exp(2 * pi * I * z / 24.0), qn = 1;
    for (int n = 1; n < 2000; ++n) {
        qn *= q;
        prod *= 1.0 - qn;
        if (std::abs(qn) < 1e-20) break;
    }
    return prod;
}

}  // namespace

TEST_SUITE("modular") {

TEST_CASE("points and branches") {
    CHECK_THROWS_AS(UpperHalfPoint(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(UpperHalfPoint(0.5, -1.0), DomainError);
    const UpperHalfPoint p(0.25, 1.0);
    CHECK(std::abs(p.q() - std::exp(2 * pi * I * p.z())) < 1e-15);
    CHECK(std::abs(sqrt_minus_iz(C(0, 4)) - 2.0) < 1e-15);
    CHECK(sqrt_minus_iz(C(-1, 0.01)).real() > 0);
    CHECK(std::abs(q_power(C(0, 1), 1.0 / 24) - std::exp(-2 * pi / 24)) < 1e-16);
}

TEST_CASE("eta values") {
    const double g = oracle::gamma_quarter();
    CHECK(std::abs(eta_value(I) - g / (2 * std::pow(pi, 0.75))) < 1e-14);
    CHECK(std::abs(eta_value(0.5 * I) - 0.8377557634766) < 1e-12);
    for (C z : {C(0.1, 0.4), C(-0.3, 0.8), C(0.5, 1.7)}) CHECK(std::abs(eta_value(z) - eta_product(z)) < 1e-13);
    // eta(-1/z) = sqrt(-iz) eta(z)
    const C z(0.2, 0.7);
    CHECK(std::abs(eta_value(-1.0 / z) - sqrt_minus_iz(z) * eta_value(z)) < 1e-13);
}

TEST_CASE("Eichler series values") {
    for (long a : {-3L, -1L, 2L, 4L}) {
        for (C z : {C(0.1, 0.4), C(0.25, 1.1), C(0, 2)}) {
            const C ref = oracle::eichler(a, z, 4000);
            CHECK(std::abs(eichler_value(a, z) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("truncated evaluation honours the floor") {
    const auto s = eichler_coeffs(2, 60);
    const C z(0.1, 0.5);
    CHECK(std::abs(eval_truncated(s, z) - eichler_value(2, z)) < 1e-12);
    CHECK_THROWS_AS(eichler_value(2, C(0, 0.01)), DomainError);
    CHECK_THROWS_AS(eval_truncated(s, C(0, 0.02)), DomainError);
    // too few coefficients for the tolerance
    CHECK_THROWS_AS(eval_truncated(eichler_coeffs(2, 5), C(0, 0.1)), TruncationError);
}

TEST_CASE("closed forms at 2i") {
    CHECK(std::abs(psi_value(1, 2.0 * I) - (37 * std::pow(pi, 3) / 1440 - 5 * zeta(3L) / 8)) < 1e-14);
    CHECK(std::abs(psi_value(2, 2.0 * I) - (std::pow(pi, 5) / 576 - 15 * zeta(5L) / 32)) < 1e-14);
    CHECK_THROWS_AS(P_poly(1, C(0, 0)), PoleError);
}

TEST_CASE("H* is the quotient of the Eichler value by eta") {
    for (int k : {1, 2}) {
        const C z(0.1, 0.9);
        CHECK(std::abs(h_star_value(k, z) - oracle::eichler(2L * k + 2, z, 3000) / eta_product(z)) < 1e-13);
    }
}

TEST_CASE("shift and inversion of M on the generic grid") {
    const auto grid = default_grid();
    for (int k : {1, 2}) {
        for (int t : {1, 2}) {
            CHECK(verify_theorem3_shift(k, t, grid, 1e-10).pass);
            CHECK(verify_theorem3_inversion(k, t, grid, 1e-10).pass);
        }
        CHECK(verify_berndt(k, grid, 1e-10).pass);
        CHECK(verify_corollary4_shift(k, grid, 1e-10).pass);
        CHECK(verify_corollary4_inversion(k, grid, 1e-10).pass);
    }
}

TEST_CASE("the polynomial-only shift formula misses a rational term") {
    const C z(0.1, 0.4);
    const C exact = M_shift_rhs(1, 1, z);
    const C diff = M_value(1, 1, z + 1.0) - M_value(1, 1, z);
    CHECK(std::abs(diff - exact) < 1e-10);
    CHECK(std::abs(diff - M_shift_polynomial_only(1, 1, z)) > 1e-3);
}

TEST_CASE("cocycle representations agree") {
    const std::vector<C> pts{I, 1.0 + I, 0.5 * I, (1.0 + 2.0 * I) / 3.0};
    for (long a : {-1L, -3L}) {
        const auto r = verify_cocycle(a, pts, 1e-6);
        CHECK(r.pass);
        CHECK(r.max_residual < 1e-10);
    }
    const auto lattice = cocycle_lattice_sum(-1, I);
    CHECK(lattice.terms > 0);
    CHECK(lattice.tail_bound < 1e-10);
    CHECK_THROWS_AS(cocycle_eichler(2, I), DomainError);
    CHECK_THROWS_AS(cocycle_eichler(-2, I), DomainError);
}

TEST_CASE("harmonic Maass forms") {
    const auto grid = default_grid();
    CHECK(verify_maass_E0_inversion(grid, 1e-8).pass);
    CHECK(verify_maass_E_neg_inversion(2, grid, 1e-8).pass);
    const std::vector<C> interior{C(0.1, 0.9), C(-0.2, 1.3), C(0.3, 2.0)};
    CHECK(verify_maass_E0_laplacian(1, interior, 1e-4).pass);
    CHECK(verify_maass_E0_laplacian(2, interior, 1e-4).pass);
    CHECK(verify_maass_E_neg_laplacian(2, 1, interior, 1e-3).pass);
    CHECK(verify_maass_periodicity(2, 3, grid, 1e-10).pass);
    CHECK(std::abs(maass_E0_complex(1, C(0.2, 1.1)).imag()) < 1e-12);
    CHECK_THROWS_AS(maass_E_neg(1, 1, I), DomainError);
}

TEST_CASE("finite-difference Laplacian") {
    // Delta_0 of y is zero; Delta_0 of y^2 is -2 y^2
    const auto y2 = [](C z) { return C(z.imag() * z.imag(), 0); };
    CHECK(std::abs(laplacian_fd(0, [](C z) { return C(z.imag(), 0); }, C(0.3, 1.2))) < 1e-8);
    CHECK(std::abs(laplacian_fd(0, y2, C(0.3, 1.2)) + 2.0 * 1.44) < 1e-6);
    CHECK_THROWS_AS(laplacian_fd(0, y2, C(0, 5e-4)), DomainError);
}

}  // TEST_SUITE
