#ifndef JACOBI_ORACLE_HPP
#define JACOBI_ORACLE_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/params.hpp"
#include "jacobi/weyl.hpp"

// Independent verification path: direct numerical integration of the Jacobi
// ODE in (f, pf') form, endpoint boundary functionals by known-exponent
// extrapolation, and shooting-based eigenvalue location for arbitrary Theta.
// Nothing here touches the Gamma/hypergeometric closed forms the Weyl
// pipeline is built from.

namespace jacobi::oracle {

/// Solution samples along a grid in (-1,1); pf = (1-x)^{a+1}(1+x)^{b+1} f'.
struct SolutionTrace {
    double lambda = 0.0;
    std::vector<double> grid;
    std::vector<double> f, pf;
};

/// Values of the boundary triple maps: g0 = (f^[0](-1), f^[0](+1)),
/// g1 = (f^[1](-1), -f^[1](+1)).
struct BoundaryData {
    std::array<double, 2> g0{0.0, 0.0};
    std::array<double, 2> g1{0.0, 0.0};
};

struct IntegrateOptions {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    double eps_end = 1e-6;   // endpoint standoff
    int tail_points = 6;     // extrapolation ladder length per endpoint
    double coarse_step = 0.1;
};

/// Integrates (f, pf')' with initial conditions ics at from_x up to to_x,
/// recording a coarse interior grid plus a geometric ladder of endpoint
/// standoffs. Throws StepUnderflow if the stepper stalls.
SolutionTrace integrate(double lam, const JacobiParams& p, double from_x,
                        std::pair<double, double> ics, double to_x,
                        const IntegrateOptions& opt = {});

/// Two-sided trace from interior initial conditions at x = 0, reaching within
/// eps_end of both endpoints.
SolutionTrace full_trace(double lam, const JacobiParams& p,
                         std::pair<double, double> ics_at_zero,
                         const IntegrateOptions& opt = {});

/// The four endpoint limits assembled with the triple's signs, each obtained
/// by solving the local Frobenius basis {1, s^{1-g}, s, s^{1+g}, s^{2-g}, s^2}
/// (g = alpha at +1, beta at -1) on the trace's standoff ladder. Throws
/// ExtrapolationUnstable when successive basis orders disagree.
BoundaryData boundary_functionals(const SolutionTrace& trace, const JacobiParams& p,
                                  const IntegrateOptions& opt = {});

/// Normalized shooting determinant: det(Theta G0 - G1) (matrix case) or
/// det(A* G1 - B* G0) (relation case) over ||G0|| ||G1||, where the columns of
/// G0, G1 are the boundary maps of the two interior-anchored solutions.
double shooting_det(double lam, const weyl::ThetaParam& theta, const JacobiParams& p,
                    const IntegrateOptions& opt = {});

struct OracleScanOptions {
    double dlam = 0.25;
    double lam_tol = 1e-8;
    double dip_abs = 1e-10;  // |det| dip accepted as a double root
    IntegrateOptions integ{};
    std::vector<std::string>* warnings = nullptr;
};

/// Bracketing driver over shooting_det on [-(alpha+beta)-1, lam_max];
/// sign-change roots refined by bisection+secant, double roots caught by the
/// magnitude-dip detector.
std::vector<double> oracle_eigenvalues(const weyl::ThetaParam& theta,
                                       const JacobiParams& p, double lam_max,
                                       const OracleScanOptions& opt = {});

}  // namespace jacobi::oracle

#endif
