#ifndef JACOBI_SPECFUN_HPP
#define JACOBI_SPECFUN_HPP

#include <complex>

#include "jacobi/errors.hpp"

// Special functions used throughout: complex Gamma (Lanczos with reflection),
// reciprocal Gamma (entire, safe at the poles), Gamma residues, the real-argument
// Gauss hypergeometric series, and Jacobi polynomials by three-term recurrence.
// Everything here is pure and reentrant.

namespace jacobi::specfun {

using Complex = std::complex<double>;

/// sin(pi z) with argument reduction; exact zeros at integers.
Complex sinpi(Complex z);

/// Principal log-Gamma for Re z >= 0.5 (Lanczos, g = 607/128, 15 terms).
Complex lgamma_right(Complex z);

/// Gamma(z). Throws PoleAt when z is within pole_tol of a non-positive integer.
Complex gamma(Complex z, double pole_tol = 1e-12);

/// 1/Gamma(z). Entire: returns exact 0 at the poles of Gamma, never throws.
Complex rgamma(Complex z);

/// Res(Gamma, -n) = (-1)^n / n! for n >= 0.
double gamma_residue(int n);

struct Hyp2f1Options {
    double tol = 1e-12;
    int max_iter = 200000;
};

/// Gauss 2F1(a,b;c;x) for x in [0,1). Direct series for x <= 1/2; the (1-x)
/// linear transformation above. Throws ParameterPole when c is a non-positive
/// integer, NoConverge past the iteration cap.
double hyp2f1(double a, double b, double c, double x, Hyp2f1Options opt = {});

/// Jacobi polynomial P_n^{(alpha,beta)}(x) by the standard recurrence.
double jacobi_poly(int n, double alpha, double beta, double x);

}  // namespace jacobi::specfun

#endif
