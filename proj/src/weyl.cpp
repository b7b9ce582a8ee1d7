#include "jacobi/weyl.hpp"

#include <cmath>

namespace jacobi::weyl {

namespace {

constexpr double kRelationTol = 1e-12;
constexpr double kHermitianTol = 1e-14;

bool small(const Matrix2& m, double tol) { return m.norm() <= tol; }

}  // namespace

ThetaParam ThetaParam::matrix(const Matrix2& H) {
    if (!is_hermitian(H, kHermitianTol))
        throw ValidationError("ThetaParam: matrix variant must be Hermitian");
    return {Kind::Matrix, H, {}, {}};
}

ThetaParam ThetaParam::relation(const Matrix2& A, const Matrix2& B) {
    const Matrix2 I = Matrix2::identity();
    double scale = std::max(1.0, std::max(A.norm(), B.norm()));
    auto As = A.conj_transpose(), Bs = B.conj_transpose();
    if (!small(As * B - Bs * A, kRelationTol * scale) ||
        !small(A * Bs - B * As, kRelationTol * scale) ||
        !small(As * A + Bs * B - I, kRelationTol * scale) ||
        !small(A * As + B * Bs - I, kRelationTol * scale))
        throw ValidationError("ThetaParam: (A,B) do not satisfy the relation constraints");
    return {Kind::Relation, {}, A, B};
}

ThetaParam ThetaParam::friedrichs() {
    return {Kind::Friedrichs, {}, Matrix2::zero(), Matrix2::identity()};
}

Matrix2 m_infinity_z(Complex z, const JacobiParams& p) {
    CoeffQuad q = coeffs(z, p);
    if (q.spectral_zero[1] || std::abs(q.c2) == 0.0)
        throw PoleOfM("m_infinity: lambda is an eigenvalue of A_inf");
    Complex r = 1.0 / q.c2;
    return {-q.c4 * r, r, r, -q.c1 * r};
}

Matrix2 m_zero_z(Complex z, const JacobiParams& p) {
    CoeffQuad q = coeffs(z, p);
    if (q.spectral_zero[2] || std::abs(q.c3) == 0.0)
        throw PoleOfM("m_zero: lambda is an eigenvalue of A_0");
    // The sign makes M_0 = -M_inf^{-1} (Herglotz); see the identity
    // c1 c4 + c2 c3 = 1.
    Complex r = -1.0 / q.c3;
    return {q.c1 * r, r, r, q.c4 * r};
}

Matrix2 m_theta_z(Complex z, const ThetaParam& theta, const JacobiParams& p) {
    Matrix2 Mi = m_infinity_z(z, p);
    if (theta.kind == ThetaParam::Kind::Matrix) {
        Matrix2 N = theta.H - Mi;
        Complex d = N.det();
        double scale = N.norm();
        if (std::abs(d) < 1e-12 * scale * scale)
            throw SingularAt(lambda_of_z(z, p));
        return N.adjugate() * (1.0 / d);
    }
    // Relation form, Friedrichs included via A = 0, B = I.
    auto As = theta.A.conj_transpose(), Bs = theta.B.conj_transpose();
    Matrix2 num = As + Bs * Mi;
    Matrix2 den = Bs - As * Mi;
    Complex d = den.det();
    double scale = den.norm();
    if (std::abs(d) < 1e-12 * scale * scale)
        throw SingularAt(lambda_of_z(z, p));
    return num * (den.adjugate() * (1.0 / d));
}

namespace {

Complex canonical_root(Complex lam, const JacobiParams& p) {
    auto [r1, r2] = z_of_lambda(lam, p);
    return r2;  // the root with Re z >= (alpha+beta-1)/2
}

}  // namespace

Matrix2 m_infinity(Complex lam, const JacobiParams& p) {
    return m_infinity_z(canonical_root(lam, p), p);
}

Matrix2 m_zero(Complex lam, const JacobiParams& p) {
    return m_zero_z(canonical_root(lam, p), p);
}

Matrix2 m_theta(Complex lam, const ThetaParam& theta, const JacobiParams& p) {
    return m_theta_z(canonical_root(lam, p), theta, p);
}

Complex char_det(Complex z, const Matrix2& theta, const JacobiParams& p) {
    CoeffQuad q = coeffs(z, p);
    return (theta.a11 * q.c2 + q.c4) * (theta.a22 * q.c2 + q.c1) -
           (theta.a12 * q.c2 - 1.0) * (theta.a21 * q.c2 - 1.0);
}

}  // namespace jacobi::weyl
