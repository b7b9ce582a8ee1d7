#include "jacobi/params.hpp"

#include <cmath>

#include "jacobi/specfun.hpp"

namespace jacobi {

using specfun::rgamma;

Complex lambda_of_z(Complex z, const JacobiParams& p) {
    return (-z - 1.0) * (-z + p.sum());
}

Complex branch_mirror(Complex z, const JacobiParams& p) {
    return p.sum() - 1.0 - z;
}

std::pair<Complex, Complex> z_of_lambda(Complex lam, const JacobiParams& p) {
    const double B = 1.0 - p.sum();
    const Complex C = -(p.sum() + lam);
    Complex disc = std::sqrt(B * B - 4.0 * C);
    // Sign-matched discriminant avoids cancellation in the larger root.
    if (B * disc.real() < 0.0) disc = -disc;
    Complex q = -0.5 * (B + disc);
    Complex r1, r2;
    if (std::abs(q) > 0.0) {
        r1 = q;
        r2 = C / q;
    } else {
        r1 = r2 = Complex(-0.5 * B, 0.0);  // double root at the vertex
    }
    auto before = [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    };
    if (before(r2, r1)) std::swap(r1, r2);
    return {r1, r2};
}

namespace {

bool is_denominator_pole(Complex w, double tol = 1e-12) {
    // Poles of Gamma(w): non-positive integers.
    if (w.real() > 0.5) return false;
    double r = std::round(w.real());
    return r <= 0.0 && std::abs(w.real() - r) <= tol && std::abs(w.imag()) <= tol;
}

}  // namespace

CoeffQuad coeffs(Complex z, const JacobiParams& p) {
    const double a = p.alpha, b = p.beta;
    const double two_ab1 = std::pow(2.0, a + b + 1.0);
    // z-independent numerators, all real.
    const double g_a1 = std::tgamma(a + 1.0);
    const double g_b = std::tgamma(b);
    const double g_1a = std::tgamma(1.0 - a);
    const double g_mb = std::tgamma(1.0 - b) / (-b);  // Gamma(-beta) < 0

    CoeffQuad q;
    q.c1 = -g_a1 * g_mb * rgamma(a - z) * rgamma(z - b + 1.0);
    q.c2 = b * two_ab1 * g_a1 * g_b * rgamma(z + 1.0) * rgamma(a + b - z);
    q.c3 = g_1a * g_mb / (a * two_ab1) * rgamma(-z) * rgamma(z - a - b + 1.0);
    q.c4 = (b / a) * g_1a * g_b * rgamma(z - a + 1.0) * rgamma(b - z);
    q.spectral_zero[0] = is_denominator_pole(a - z) || is_denominator_pole(z - b + 1.0);
    q.spectral_zero[1] = is_denominator_pole(z + 1.0) || is_denominator_pole(a + b - z);
    q.spectral_zero[2] = is_denominator_pole(-z) || is_denominator_pole(z - a - b + 1.0);
    q.spectral_zero[3] = is_denominator_pole(z - a + 1.0) || is_denominator_pole(b - z);
    return q;
}

std::pair<double, double> coeffs_int(int n, const JacobiParams& p) {
    if (n < 0) throw ValidationError("coeffs_int: n must be >= 0");
    double c1 = 1.0, c4 = 1.0;
    for (int k = 0; k <= n; ++k) {
        c1 *= (k - p.alpha) / (k - p.beta);
        c4 *= (k - p.beta) / (k - p.alpha);
    }
    if (n % 2 != 0) {
        c1 = -c1;
        c4 = -c4;
    }
    return {c1, c4};
}

std::pair<double, double> w_solutions(double x, const JacobiParams& p) {
    if (!(x > -1.0 && x < 1.0))
        throw ValidationError("w_solutions: x must lie in (-1,1)");
    const double a = p.alpha, b = p.beta;
    const double two_ab1 = std::pow(2.0, a + b + 1.0);
    if (x >= 0.0) {
        double s = 0.5 * (1.0 - x);
        double w2 = std::pow(s, -a) / (a * two_ab1) *
                    specfun::hyp2f1(-a, b + 1.0, 1.0 - a, s);
        return {1.0, w2};
    }
    double s = 0.5 * (1.0 + x);
    double w2 = std::pow(s, -b) / (b * two_ab1) *
                specfun::hyp2f1(-b, a + 1.0, 1.0 - b, s);
    return {-1.0, w2};
}

}  // namespace jacobi
