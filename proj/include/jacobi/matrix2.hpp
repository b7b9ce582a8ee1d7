#ifndef JACOBI_MATRIX2_HPP
#define JACOBI_MATRIX2_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "jacobi/errors.hpp"

namespace jacobi {

using Complex = std::complex<double>;

struct Vec2 {
    Complex x{0.0, 0.0}, y{0.0, 0.0};

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(Complex s) const { return {s * x, s * y}; }
    double norm() const { return std::sqrt(std::norm(x) + std::norm(y)); }
};

inline Complex dot(const Vec2& u, const Vec2& v) {
    // <u, v> = v* u, linear in the first slot.
    return u.x * std::conj(v.x) + u.y * std::conj(v.y);
}

/// Dense complex 2x2 matrix with the closed-form operations the m-function
/// algebra needs. Inversion is by adjugate with an explicit singularity test.
struct Matrix2 {
    Complex a11{0.0, 0.0}, a12{0.0, 0.0}, a21{0.0, 0.0}, a22{0.0, 0.0};

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2 zero() { return {}; }

    Matrix2 operator+(const Matrix2& o) const {
        return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
    }
    Matrix2 operator-(const Matrix2& o) const {
        return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
    }
    Matrix2 operator*(const Matrix2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Matrix2 operator*(Complex s) const { return {s * a11, s * a12, s * a21, s * a22}; }
    Vec2 operator*(const Vec2& v) const {
        return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
    }

    Complex det() const { return a11 * a22 - a12 * a21; }
    Complex trace() const { return a11 + a22; }
    Matrix2 adjugate() const { return {a22, -a12, -a21, a11}; }
    Matrix2 conj_transpose() const {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }
    double norm() const {  // Frobenius
        return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22));
    }

    /// Inverse by adjugate. Throws Error when |det| < sing_tol * norm^2.
    Matrix2 inverse(double sing_tol = 1e-12) const {
        Complex d = det();
        double scale = norm();
        if (std::abs(d) < sing_tol * scale * scale)
            throw Error("Matrix2::inverse: numerically singular");
        return adjugate() * (1.0 / d);
    }
};

inline Matrix2 operator*(Complex s, const Matrix2& m) { return m * s; }

inline bool is_hermitian(const Matrix2& m, double tol) {
    double scale = std::max(m.norm(), 1.0);
    return std::abs(m.a11.imag()) <= tol * scale &&
           std::abs(m.a22.imag()) <= tol * scale &&
           std::abs(m.a12 - std::conj(m.a21)) <= tol * scale;
}

/// Eigenvalues of a Hermitian 2x2, ascending.
inline std::pair<double, double> hermitian_eigenvalues(const Matrix2& m) {
    double t = 0.5 * (m.a11.real() + m.a22.real());
    double d = (m.a11.real() * m.a22.real()) - std::norm(m.a12);
    double disc = std::sqrt(std::max(t * t - d, 0.0));
    return {t - disc, t + disc};
}

/// Singular values, ascending.
inline std::pair<double, double> singular_values(const Matrix2& m) {
    Matrix2 g = m.conj_transpose() * m;  // Hermitian PSD
    auto [lo, hi] = hermitian_eigenvalues(g);
    return {std::sqrt(std::max(lo, 0.0)), std::sqrt(std::max(hi, 0.0))};
}

/// (M - M*)/(2i): the Herglotz imaginary part, a Hermitian matrix.
inline Matrix2 herglotz_imag(const Matrix2& m) {
    return (m - m.conj_transpose()) * Complex(0.0, -0.5);
}

/// Unit vector with the first significant component rotated real-positive.
inline Vec2 normalize_direction(Vec2 v) {
    double n = v.norm();
    if (n == 0.0) throw Error("normalize_direction: zero vector");
    v = v * (1.0 / n);
    Complex lead = (std::abs(v.x) >= 1e-8) ? v.x : v.y;
    double m = std::abs(lead);
    if (m > 0.0) v = v * (std::conj(lead) / m);
    return v;
}

}  // namespace jacobi

#endif
