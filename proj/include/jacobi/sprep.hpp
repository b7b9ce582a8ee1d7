#ifndef JACOBI_SPREP_HPP
#define JACOBI_SPREP_HPP

#include <functional>
#include <variant>
#include <vector>

#include "jacobi/matrix2.hpp"
#include "jacobi/spectrum.hpp"

// The L^2(mu) matrix-measure inner product and the spectral-representation
// map V_Theta, including the closed-form image of the ground eigenfunction.

namespace jacobi::sprep {

using spectrum::Atom;
using spectrum::AtomicMatrixMeasure;

/// C^2-valued function given by samples on a finite support set.
struct VectorFunctionSample {
    std::vector<double> support;  // strictly increasing
    std::vector<Vec2> values;     // one per support point
};

/// Compactly supported C^1 scalar profile h with its support interval and a
/// bound on |h'|.
struct ScalarProfile {
    std::function<double(double)> h;
    double lo = 0.0, hi = 0.0;
    double deriv_bound = 0.0;

    double operator()(double x) const {
        return (x <= lo || x >= hi) ? 0.0 : h(x);
    }
};

/// C^1 cubic (smoothstep) bump: 1 at center, 0 with vanishing derivative at
/// center +- radius.
ScalarProfile make_bump(double center, double radius);

/// Bump centered at mu.atoms[index] whose radius is shrunk below the distance
/// to every other atom of mu and of the extra spectra.
ScalarProfile single_atom_bump(const AtomicMatrixMeasure& mu, std::size_t index,
                               const std::vector<double>& other_spectrum,
                               double radius_cap = 0.5);

/// sum_n < mu{lambda_n} phi(lambda_n), psi(lambda_n) >_{C^2}; points missing
/// from a sample are treated as zero.
Complex mu_inner(const VectorFunctionSample& phi, const VectorFunctionSample& psi,
                 const AtomicMatrixMeasure& mu);

/// (V_Theta h e)(t) = h(t) e - Theta * sum_n (h(l_n)-h(t))/(l_n-t) mu{l_n} e,
/// the difference quotient replaced by h'(t) when |l_n - t| < 1e-8. Throws
/// TailTooFat when the discarded tail (estimated from the trailing atoms)
/// exceeds tail_tol.
Vec2 v_theta_apply(const ScalarProfile& h, const Vec2& e, const Matrix2& theta,
                   const AtomicMatrixMeasure& mu, double t, double tail_tol = 1e-8);

/// Closed-form image of the ground eigenfunction f_0 under V_Theta.
Vec2 trace_f0(const Matrix2& theta, const JacobiParams& p, double t);

/// Coefficient(s) of v along the atom's eigenvector direction(s): a single
/// scalar for simple atoms, the pair for degenerate ones.
std::variant<Complex, std::pair<Complex, Complex>> project_eigvec(const Vec2& v,
                                                                  const Atom& atom);

}  // namespace jacobi::sprep

#endif
