#ifndef JACOBI_SPECTRUM_HPP
#define JACOBI_SPECTRUM_HPP

#include <string>
#include <utility>
#include <vector>

#include "jacobi/matrix2.hpp"
#include "jacobi/params.hpp"
#include "jacobi/weyl.hpp"

// Eigenvalue location for A_0, A_inf and A_Theta, matrix-valued point masses,
// eigenvector directions, multiplicities, degeneracy construction, and the
// mutual-singularity sampling experiment.
//
// Residue convention: all epsilon-ladders evaluate M along the z-parameterized
// path z = z_n + i*eps at the scan-branch root (the paper takes its limits
// "with respect to the corresponding z"); this makes the ladders agree with
// the closed-form point-mass theorem. The true lambda-residue differs by the
// positive Jacobian dlambda/dz, which rescales weights but leaves directions,
// ranks and multiplicities unchanged.

namespace jacobi::spectrum {

/// One spectral atom of a matrix-valued measure.
struct Atom {
    double lambda = 0.0;
    /// The two z-roots of lambda, ascending by (Re, Im). Real pair for
    /// ordinary atoms; a conjugate pair on the branch symmetry axis for
    /// eigenvalues below the parabola vertex -((alpha+beta+1)/2)^2.
    std::pair<Complex, Complex> z_roots;
    Matrix2 weight;                // Hermitian PSD, rank = multiplicity
    std::vector<Vec2> eigvec_dirs; // one or two unit vectors
    int multiplicity = 1;
};

struct Truncation {
    int count = 0;
    double lam_cutoff = 0.0;
};

/// Finite truncation of a matrix-valued spectral measure.
struct AtomicMatrixMeasure {
    JacobiParams params;
    weyl::ThetaParam theta;
    std::vector<Atom> atoms;  // strictly increasing in lambda
    Truncation truncation;
};

struct ScanOptions {
    double dz = 0.05;              // uniform z-grid spacing
    double root_rel_tol = 1e-12;   // accept |D| <= tol * local term scale
    double ainf_excl = 1e-6;       // drop roots this close (in z) to sigma(A_inf)
    double dip_rel = 1e-9;         // magnitude-dip acceptance for double roots
    bool scan_axis = true;         // include the symmetry-axis segment
    std::vector<std::string>* warnings = nullptr;
};

struct ResidueOptions {
    double eps0 = 1e-4;            // ladder start; geometric ratio 10
    int levels = 3;
    double converge_rel = 1e-4;    // Richardson agreement between last levels
};

/// lambda_n = (-n-1)(-n+alpha+beta), n = 0..n_max.
std::vector<double> eigenvalues_a0(const JacobiParams& p, int n_max);

/// lambda_n = n(n+alpha+beta+1), n = 0..n_max.
std::vector<double> eigenvalues_ainf(const JacobiParams& p, int n_max);

/// All eigenvalues of A_Theta with lambda <= lam_max: sign-change bracketing
/// of char_det on the z-grid, bisection+secant polish, a magnitude-dip
/// detector for double roots, and (scan_axis) the symmetry-axis segment down
/// to lambda = -(alpha+beta)-1. Returns Atoms with lambda and z_roots set.
std::vector<Atom> eigenvalues_theta(const JacobiParams& p, const Matrix2& theta,
                                    double lam_max, const ScanOptions& opt = {});

/// Closed-form point mass of A_0 at lambda_n (paper convention, equal to the
/// z-ladder residue at the root z = n). Near alpha+beta = 1 the closed form
/// degenerates and the numeric lambda-path residue is used instead
/// (NearDoubleRoot warning).
Atom point_mass_a0(int n, const JacobiParams& p,
                   std::vector<std::string>* warnings = nullptr);

/// Residue weight of M_Theta at a located atom via the Richardson ladder,
/// plus eigenvector direction(s) and multiplicity.
Atom point_mass_theta(const Atom& atom_in, const Matrix2& theta,
                      const JacobiParams& p, const ResidueOptions& opt = {});

/// dim Ker(Theta - M_inf(lam)): 0, 1 or 2. Throws OnAInfSpectrum when lam is
/// within tolerance of an eigenvalue of A_inf.
int multiplicity(double lam, const Matrix2& theta, const JacobiParams& p);

/// The Hermitian Theta making lambda(z0) a degenerate (multiplicity-two)
/// eigenvalue: Theta = M_inf at z0. Throws Excluded when lambda(z0) hits
/// sigma(A_0) or sigma(A_inf).
Matrix2 make_degenerate(double z0, const JacobiParams& p);

struct DisjointnessReport {
    int samples = 0;
    int collisions = 0;
    double min_distance = 0.0;
    std::vector<double> t_values;
    std::vector<double> per_t_min_distance;
    std::vector<int> per_t_collisions;
};

/// Samples t uniformly from [-10,10] and intersects sigma(A_{Theta0+t*Theta})
/// with sigma(A_{ThetaTilde}) up to lam_max. Theta must be positive definite.
DisjointnessReport disjointness_experiment(const Matrix2& theta0, const Matrix2& theta,
                                           const Matrix2& theta_tilde,
                                           const JacobiParams& p, int t_samples,
                                           double lam_max, unsigned seed = 20240901);

/// Assembled measures.
AtomicMatrixMeasure a0_measure(const JacobiParams& p, int n_max);
AtomicMatrixMeasure theta_measure(const JacobiParams& p, const Matrix2& theta,
                                  double lam_max, const ScanOptions& sopt = {},
                                  const ResidueOptions& ropt = {});
/// Measure of the Friedrichs extension A_inf (Theta = {0} x C^2): atoms at
/// n(n+alpha+beta+1) with residue weights of M_inf.
AtomicMatrixMeasure friedrichs_measure(const JacobiParams& p, double lam_max,
                                       const ResidueOptions& ropt = {});

/// Scan oracles: eigenvalues located as zeros of c2 (A_inf) / c3 (A_0) by
/// bracketing, independent of the closed forms.
std::vector<double> pole_scan_m_infinity(const JacobiParams& p, double lam_max);
std::vector<double> pole_scan_m_zero(const JacobiParams& p, double lam_max);

/// Enforces the Atom invariants; throws ValidationError on violation.
void validate_atom(const Atom& atom, const JacobiParams& p);

}  // namespace jacobi::spectrum

#endif
