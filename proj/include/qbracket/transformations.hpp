#ifndef QBRACKET_TRANSFORMATIONS_HPP
#define QBRACKET_TRANSFORMATIONS_HPP

#include <string>
#include <vector>

#include "qbracket/modular.hpp"
#include "qbracket/report.hpp"

namespace qbracket {

// Generic points with Im z in [0.4, 3] whose images under the inversions
// used below stay above the evaluation floor.
std::vector<Complex> default_grid();

// M(z+1) - M(z) against the exact shift of the period polynomial.
TransformReport verify_theorem3_shift(int k, int t, const std::vector<Complex>& points, double tol);
// M(z) against (tz)^{2k} M(-1/(t^2 z)).
TransformReport verify_theorem3_inversion(int k, int t, const std::vector<Complex>& points, double tol);

// H*(z+1) against e^{-pi i/12} H*(z).
TransformReport verify_corollary4_shift(int k, const std::vector<Complex>& points, double tol);
// H*(-1/z) - H*(z)/(z^{2k} sqrt(-iz)) against Psi(z)/eta(-1/z).
TransformReport verify_corollary4_inversion(int k, const std::vector<Complex>& points, double tol);

// E_{-2k}(z) - z^{2k} E_{-2k}(-1/z) against -(1 - z^{2k}) zeta(2k+1)/2 - P_{-2k}(z).
TransformReport verify_berndt(int k, const std::vector<Complex>& points, double tol);

// Eichler difference vs lattice sum vs contour integral; the residual is the
// largest pairwise difference.
TransformReport verify_cocycle(long a, const std::vector<Complex>& points, double tol);

// E_0(z) against E_0(-1/z) (t = 1).
TransformReport verify_maass_E0_inversion(const std::vector<Complex>& points, double tol);
// E_{2-2k}(-1/z) against z^{2-2k} E_{2-2k}(z) (t = 1).
TransformReport verify_maass_E_neg_inversion(int k, const std::vector<Complex>& points, double tol);
// Delta_0 E_0 against -3/pi.
TransformReport verify_maass_E0_laplacian(int t, const std::vector<Complex>& points, double tol);
// Delta_{2-2k} E_{2-2k} against 0.
TransformReport verify_maass_E_neg_laplacian(int k, int t, const std::vector<Complex>& points, double tol);
// E(z+1) against E(z) for both forms at level t.
TransformReport verify_maass_periodicity(int k, int t, const std::vector<Complex>& points, double tol);

}  // namespace qbracket

#endif
