#ifndef JACOBI_PARAMS_HPP
#define JACOBI_PARAMS_HPP

#include <array>
#include <complex>
#include <utility>

#include "jacobi/errors.hpp"

// Operator parameters, the lambda <-> z spectral parameterization, the
// coefficient functions c1..c4, and the endpoint model solutions w1, w2.

namespace jacobi {

using Complex = std::complex<double>;

/// The pair (alpha, beta) of the Jacobi expression. Both strictly inside
/// (0,1): this is the standing assumption keeping both endpoints limit-circle.
struct JacobiParams {
    double alpha;
    double beta;

    JacobiParams(double a, double b) : alpha(a), beta(b) {
        if (!(a > 0.0 && a < 1.0) || !(b > 0.0 && b < 1.0))
            throw ValidationError("JacobiParams: alpha and beta must lie strictly in (0,1)");
    }

    double sum() const { return alpha + beta; }
    /// Fixed point of the branch involution z -> alpha+beta-1-z.
    double branch_vertex() const { return 0.5 * (alpha + beta - 1.0); }
};

/// The four coefficient values at a spectral point z. Each c_j is entire in z;
/// spectral_zero[j] marks a first-order zero caused by a pole of a Gamma in
/// c_j's denominator (these zeros locate spectra: c2 -> A_inf, c3 -> A_0).
struct CoeffQuad {
    Complex c1, c2, c3, c4;
    std::array<bool, 4> spectral_zero{false, false, false, false};
};

/// lambda = (-z-1)(-z+alpha+beta).
Complex lambda_of_z(Complex z, const JacobiParams& p);

/// Mirror root of the same lambda: alpha+beta-1-z.
Complex branch_mirror(Complex z, const JacobiParams& p);

/// Both roots of z^2 + (1-alpha-beta) z - (alpha+beta+lambda) = 0, ordered
/// ascending by real part, ties by imaginary part. Stable quadratic formula.
std::pair<Complex, Complex> z_of_lambda(Complex lam, const JacobiParams& p);

/// c1..c4 at z, assembled from constant numerator Gammas and reciprocal
/// Gammas of the z-dependent denominators (no overflow near their poles).
CoeffQuad coeffs(Complex z, const JacobiParams& p);

/// Integer-z closed forms: c1(n) = (-1)^n prod_{k=0}^{n} (k-alpha)/(k-beta)
/// and c4(n) its reciprocal.
std::pair<double, double> coeffs_int(int n, const JacobiParams& p);

/// Endpoint model solutions at x, branch chosen by sign of x:
/// w1 = +-1, w2 the singular hypergeometric solution.
std::pair<double, double> w_solutions(double x, const JacobiParams& p);

}  // namespace jacobi

#endif
