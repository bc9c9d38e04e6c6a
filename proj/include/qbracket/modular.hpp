#ifndef QBRACKET_MODULAR_HPP
#define QBRACKET_MODULAR_HPP

#include <complex>
#include <functional>

#include "qbracket/series.hpp"

namespace qbracket {

using Complex = std::complex<double>;

// Below this imaginary part q-series truncation orders blow up in double
// precision; evaluation is rejected instead of degraded.
inline constexpr double kDefaultYFloor = 0.05;

// z = x + iy with y > 0.
class UpperHalfPoint {
public:
    UpperHalfPoint(double x, double y);
    explicit UpperHalfPoint(Complex z) : UpperHalfPoint(z.real(), z.imag()) {}

    double x() const { return x_; }
    double y() const { return y_; }
    Complex z() const { return {x_, y_}; }
    // e^{2 pi i z}
    Complex q() const;

private:
    double x_;
    double y_;
};

// Branch conventions live here: q^r = e^{2 pi i r z} (principal), and
// sqrt(-iz) is the principal root, positive at z = i.
Complex q_power(Complex z, double r);
Complex sqrt_minus_iz(Complex z);

// sum c_n q^{n + offset}, cut where a cubic-growth tail bound drops below eps.
Complex eval_truncated(const QSeries& s, Complex z, double eps = 1e-14, double y_floor = kDefaultYFloor);

// E_{2-a}(z) = sum n^{1-a} q^n/(1-q^n), Lambert form with a tail bound.
Complex eichler_value(long a, Complex z, double y_floor = kDefaultYFloor);

// Dedekind eta.
Complex eta_value(Complex z, double y_floor = kDefaultYFloor);

// Period polynomial P_{-2k}(z) (Laurent; z != 0).
Complex P_poly(int k, Complex z);

// M_{-2k,t}(z) = E_{-2k}(tz) + P_{-2k}(tz)/2 + zeta(2k+1)/2. The sign of the
// P term is the one for which the inversion law holds.
Complex M_value(int k, int t, Complex z, double y_floor = kDefaultYFloor);

// M(z+1) - M(z) = (P(t(z+1)) - P(tz))/2, expanded from the exact Laurent
// coefficients (includes the z^{-1} contribution).
Complex M_shift_rhs(int k, int t, Complex z);

// The shift polynomial without its z^{-1} part and with the opposite overall
// sign; kept to document how it differs from the actual shift.
Complex M_shift_polynomial_only(int k, int t, Complex z);

// Psi_{-2k}(z) = -P_{-2k}(-1/z) - (1 - z^{-2k}) zeta(2k+1)/2.
Complex psi_value(int k, Complex z);

// H*_{2k+2,1}(z) = E_{-2k}(z)/eta(z).
Complex h_star_value(int k, Complex z, double y_floor = kDefaultYFloor);

// Weight 0 sesquiharmonic form E_0(tz) (real valued).
double maass_E0(int t, Complex z, double y_floor = kDefaultYFloor);
// Same expansion without forcing the q and conj(q) sums together.
Complex maass_E0_complex(int t, Complex z, double y_floor = kDefaultYFloor);

// Weight 2-2k harmonic form E_{2-2k}(tz), k >= 2.
Complex maass_E_neg(int k, int t, Complex z, double y_floor = kDefaultYFloor);

// Delta_k f = -y^2 (f_xx + f_yy) + i k y (f_x + i f_y), 5-point stencil.
Complex laplacian_fd(int weight, const std::function<Complex(Complex)>& f, Complex z, double h = 1e-3);

// Period function of E_k, k = 2 - a >= 3 odd:
//   psi(z) = E_k(z) - z^{-k} E_k(-1/z).
Complex cocycle_eichler(long a, Complex z, double y_floor = kDefaultYFloor);

struct LatticeSum {
    Complex value;       // 2 sum' (mz+n)^{-k}
    double tail_bound;   // first omitted term of the outer tail expansion
    int terms;           // outer terms summed directly
};

// 2 sum'_{m,n>=0} (mz+n)^{-k}, half weight on the axes.
LatticeSum cocycle_lattice_sum(long a, Complex z);

// psi(z) from the lattice sum: psi = (k-1)!/(-2 pi i)^k * 2 sum'.
Complex cocycle_double_sum(long a, Complex z);

// (1/2pi) int_{Re s = k/2} Gamma(s) zeta(s) zeta(s-k+1) / ((2pi)^s sin(pi s/2)) z^{-s} ds
// with ds = i dtau.
Complex cocycle_contour_line(long a, Complex z);

// psi(z) from the line integral plus the s = 0 residue
// Gamma(k) zeta(k) (2pi)^{-k} (i^k z^{-k} - i^{-k}).
Complex cocycle_contour(long a, Complex z);

}  // namespace qbracket

#endif
