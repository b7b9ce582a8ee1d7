#ifndef JACOBI_ERRORS_HPP
#define JACOBI_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace jacobi {

/// Base class for all failures raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad inputs: parameters out of range, malformed Theta, unusable config.
struct ValidationError : Error {
    using Error::Error;
};

/// Gamma evaluated within the exclusion radius of a non-positive integer.
struct PoleAt : Error {
    int n;
    explicit PoleAt(int n_)
        : Error("gamma pole at z = " + std::to_string(-n_)), n(n_) {}
};

/// hyp2f1 with c a non-positive integer.
struct ParameterPole : Error {
    using Error::Error;
};

/// Series or transformation failed to reach tolerance within the cap.
struct NoConverge : Error {
    using Error::Error;
};

/// m-function requested at an eigenvalue of the defining extension.
struct PoleOfM : Error {
    using Error::Error;
};

/// Theta - M_inf (or the relation analogue) numerically singular: lam is an
/// eigenvalue of A_Theta.
struct SingularAt : Error {
    std::complex<double> lam;
    explicit SingularAt(std::complex<double> l)
        : Error("Theta - M_inf singular at lambda = (" +
                std::to_string(l.real()) + "," + std::to_string(l.imag()) + ")"),
          lam(l) {}
};

/// Richardson levels of the residue ladder disagree beyond tolerance.
struct ResidueNoConverge : Error {
    using Error::Error;
};

/// Multiplicity requested at a point of sigma(A_inf), outside the
/// proposition's hypothesis.
struct OnAInfSpectrum : Error {
    using Error::Error;
};

/// make_degenerate at a lambda hitting sigma(A_0) or sigma(A_inf).
struct Excluded : Error {
    double lam;
    explicit Excluded(double l)
        : Error("lambda = " + std::to_string(l) +
                " lies in sigma(A_0) or sigma(A_inf)"), lam(l) {}
};

/// Discarded measure tail exceeds the requested tolerance.
struct TailTooFat : Error {
    using Error::Error;
};

/// trace_f0 at t = -(alpha+beta).
struct PoleAtT : Error {
    using Error::Error;
};

/// trace_f0 with alpha+beta = 1 (Gamma(1-alpha-beta) pole).
struct ParamPole : Error {
    using Error::Error;
};

/// ODE step size underflowed near a singular endpoint.
struct StepUnderflow : Error {
    using Error::Error;
};

/// Successive endpoint-extrapolation orders disagree beyond tolerance.
struct ExtrapolationUnstable : Error {
    using Error::Error;
};

}  // namespace jacobi

#endif
