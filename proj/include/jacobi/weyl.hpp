#ifndef JACOBI_WEYL_HPP
#define JACOBI_WEYL_HPP

#include "jacobi/matrix2.hpp"
#include "jacobi/params.hpp"

// Weyl m-functions of the boundary triple: M_inf (Friedrichs side), M_0
// (unperturbed side), M_Theta for a general extension, and the characteristic
// determinant D(z) whose zeros locate the eigenvalues of A_Theta.
//
// All m-functions are single-valued functions of lambda: the coefficients are
// invariant under the branch involution z -> alpha+beta-1-z, so either z-root
// may be used. The z-forms are exposed for residue ladders and root scans.

namespace jacobi::weyl {

/// Extension selector: a 2x2 Hermitian matrix, a self-adjoint relation given
/// by the normalized pair (A, B), or the Friedrichs relation {0} x C^2.
struct ThetaParam {
    enum class Kind { Matrix, Relation, Friedrichs };

    Kind kind;
    Matrix2 H;     // Matrix case
    Matrix2 A, B;  // Relation case

    /// Hermitian matrix variant; validated to 1e-14.
    static ThetaParam matrix(const Matrix2& H);
    static ThetaParam zero() { return matrix(Matrix2::zero()); }
    /// Relation {(A phi, B phi)}; the normalization constraints
    /// A*B = B*A, AB* = BA*, A*A + B*B = I = AA* + BB* are hard errors here.
    static ThetaParam relation(const Matrix2& A, const Matrix2& B);
    /// Theta = {0} x C^2, i.e. A = 0, B = I: the Friedrichs extension A_inf.
    static ThetaParam friedrichs();
};

Matrix2 m_infinity_z(Complex z, const JacobiParams& p);
Matrix2 m_zero_z(Complex z, const JacobiParams& p);
Matrix2 m_theta_z(Complex z, const ThetaParam& theta, const JacobiParams& p);

/// M_inf(lam) = (1/c2)[[-c4,1],[1,-c1]]. Throws PoleOfM at eigenvalues of A_inf.
Matrix2 m_infinity(Complex lam, const JacobiParams& p);

/// M_0(lam) = -M_inf(lam)^{-1} = -(1/c3)[[c1,1],[1,c4]].
/// Throws PoleOfM at eigenvalues of A_0.
Matrix2 m_zero(Complex lam, const JacobiParams& p);

/// M_Theta(lam): (Theta - M_inf)^{-1} in the matrix case, the relation formula
/// (A* + B* M_inf)(B* - A* M_inf)^{-1} otherwise. Throws SingularAt when the
/// inverted matrix is numerically singular (lam is an eigenvalue of A_Theta).
Matrix2 m_theta(Complex lam, const ThetaParam& theta, const JacobiParams& p);

/// D(z) = (Th11 c2 + c4)(Th22 c2 + c1) - (Th12 c2 - 1)(Th21 c2 - 1)
///      = c2^2 det(Theta - M_inf). Entire in z; real on the real axis and on
/// the branch symmetry axis Re z = (alpha+beta-1)/2 for Hermitian Theta.
Complex char_det(Complex z, const Matrix2& theta, const JacobiParams& p);

}  // namespace jacobi::weyl

#endif
