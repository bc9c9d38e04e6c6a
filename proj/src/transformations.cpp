#include "qbracket/transformations.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "qbracket/complex_io.hpp"
#include "qbracket/special.hpp"

namespace qbracket {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

using Sides = std::pair<Complex, Complex>;

TransformReport run(std::string identity, nlohmann::json params, const std::vector<Complex>& points, double tol,
                    const std::function<Sides(Complex)>& sides) {
    TransformReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.tol = tol;
    for (Complex z : points) {
        const auto [lhs, rhs] = sides(z);
        r.add({z, lhs, rhs, std::abs(lhs - rhs), {}});
    }
    return r;
}

}  // namespace

std::vector<Complex> default_grid() {
    return {{0.1, 0.4}, {-0.3, 0.8}, {0.25, 1.1}, {0.5, 1.7}, {-0.2, 3.0}};
}

TransformReport verify_theorem3_shift(int k, int t, const std::vector<Complex>& points, double tol) {
    return run("theorem3-shift", {{"k", k}, {"t", t}}, points, tol, [&](Complex z) {
        return Sides{M_value(k, t, z + 1.0) - M_value(k, t, z), M_shift_rhs(k, t, z)};
    });
}

TransformReport verify_theorem3_inversion(int k, int t, const std::vector<Complex>& points, double tol) {
    return run("theorem3-inversion", {{"k", k}, {"t", t}}, points, tol, [&](Complex z) {
        const Complex w = -1.0 / (double(t * t) * z);
        return Sides{M_value(k, t, z), std::pow(double(t) * z, 2 * k) * M_value(k, t, w)};
    });
}

TransformReport verify_corollary4_shift(int k, const std::vector<Complex>& points, double tol) {
    return run("corollary4-shift", {{"k", k}}, points, tol, [&](Complex z) {
        return Sides{h_star_value(k, z + 1.0), std::exp(-kI * kPi / 12.0) * h_star_value(k, z)};
    });
}

TransformReport verify_corollary4_inversion(int k, const std::vector<Complex>& points, double tol) {
    return run("corollary4-inversion", {{"k", k}}, points, tol, [&](Complex z) {
        const Complex w = -1.0 / z;
        const Complex lhs = h_star_value(k, w) - h_star_value(k, z) / (std::pow(z, 2 * k) * sqrt_minus_iz(z));
        return Sides{lhs, psi_value(k, z) / eta_value(w)};
    });
}

TransformReport verify_berndt(int k, const std::vector<Complex>& points, double tol) {
    return run("berndt", {{"k", k}}, points, tol, [&](Complex z) {
        const Complex z2k = std::pow(z, 2 * k);
        const Complex lhs = eichler_value(2 * k + 2, z) - z2k * eichler_value(2 * k + 2, -1.0 / z);
        const Complex rhs = -0.5 * (1.0 - z2k) * zeta(2L * k + 1) - P_poly(k, z);
        return Sides{lhs, rhs};
    });
}

TransformReport verify_cocycle(long a, const std::vector<Complex>& points, double tol) {
    TransformReport r;
    r.identity = "theorem6-cocycle";
    r.params = {{"a", a}};
    r.tol = tol;
    for (Complex z : points) {
        const Complex e = cocycle_eichler(a, z);
        const Complex d = cocycle_double_sum(a, z);
        const Complex c = cocycle_contour(a, z);
        const double residual = std::max({std::abs(e - d), std::abs(e - c), std::abs(d - c)});
        nlohmann::json detail{{"eichler_difference", format_complex(e, 17)},
                              {"double_sum", format_complex(d, 17)},
                              {"contour", format_complex(c, 17)}};
        r.add({z, e, d, residual, detail});
    }
    return r;
}

TransformReport verify_maass_E0_inversion(const std::vector<Complex>& points, double tol) {
    return run("theorem2-e0-inversion", {{"t", 1}}, points, tol, [&](Complex z) {
        return Sides{maass_E0(1, z), maass_E0(1, -1.0 / z)};
    });
}

TransformReport verify_maass_E_neg_inversion(int k, const std::vector<Complex>& points, double tol) {
    return run("theorem2-eneg-inversion", {{"k", k}, {"t", 1}}, points, tol, [&](Complex z) {
        return Sides{maass_E_neg(k, 1, -1.0 / z), std::pow(z, 2 - 2 * k) * maass_E_neg(k, 1, z)};
    });
}

TransformReport verify_maass_E0_laplacian(int t, const std::vector<Complex>& points, double tol) {
    return run("theorem2-e0-laplacian", {{"t", t}}, points, tol, [&](Complex z) {
        const Complex lap = laplacian_fd(0, [t](Complex w) { return Complex(maass_E0(t, w)); }, z);
        return Sides{lap, Complex(-3.0 / kPi)};
    });
}

TransformReport verify_maass_E_neg_laplacian(int k, int t, const std::vector<Complex>& points, double tol) {
    return run("theorem2-eneg-laplacian", {{"k", k}, {"t", t}}, points, tol, [&](Complex z) {
        const Complex lap = laplacian_fd(2 - 2 * k, [k, t](Complex w) { return maass_E_neg(k, t, w); }, z);
        return Sides{lap, Complex(0)};
    });
}

TransformReport verify_maass_periodicity(int k, int t, const std::vector<Complex>& points, double tol) {
    return run("theorem2-periodicity", {{"k", k}, {"t", t}}, points, tol, [&](Complex z) {
        const Complex d0 = maass_E0(t, z + 1.0) - maass_E0(t, z);
        const Complex dk = maass_E_neg(k, t, z + 1.0) - maass_E_neg(k, t, z);
        // both differences vanish; report them side by side
        return Sides{Complex(std::abs(d0), 0), Complex(-std::abs(dk), 0)};
    });
}

}  // namespace qbracket
