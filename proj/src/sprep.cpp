#include "jacobi/sprep.hpp"

#include <algorithm>
#include <cmath>

#include "jacobi/specfun.hpp"

namespace jacobi::sprep {

ScalarProfile make_bump(double center, double radius) {
    if (!(radius > 0.0)) throw ValidationError("make_bump: radius must be positive");
    ScalarProfile prof;
    prof.lo = center - radius;
    prof.hi = center + radius;
    prof.deriv_bound = 1.5 / radius;  // max |s'(u)|/r for s(u) = 3u^2 - 2u^3
    prof.h = [center, radius](double x) {
        double u = 1.0 - std::abs(x - center) / radius;
        if (u <= 0.0) return 0.0;
        if (u >= 1.0) return 1.0;
        return u * u * (3.0 - 2.0 * u);
    };
    return prof;
}

ScalarProfile single_atom_bump(const AtomicMatrixMeasure& mu, std::size_t index,
                               const std::vector<double>& other_spectrum,
                               double radius_cap) {
    if (index >= mu.atoms.size())
        throw ValidationError("single_atom_bump: index out of range");
    double c = mu.atoms[index].lambda;
    double r = radius_cap;
    for (std::size_t k = 0; k < mu.atoms.size(); ++k)
        if (k != index) r = std::min(r, 0.5 * std::abs(mu.atoms[k].lambda - c));
    for (double l : other_spectrum) r = std::min(r, 0.5 * std::abs(l - c));
    if (!(r > 0.0))
        throw ValidationError("single_atom_bump: another atom sits at the center");
    return make_bump(c, r);
}

namespace {

const Vec2* sample_at(const VectorFunctionSample& f, double x) {
    auto it = std::lower_bound(f.support.begin(), f.support.end(), x - 1e-12);
    if (it == f.support.end() || std::abs(*it - x) > 1e-12) return nullptr;
    return &f.values[static_cast<std::size_t>(it - f.support.begin())];
}

}  // namespace

Complex mu_inner(const VectorFunctionSample& phi, const VectorFunctionSample& psi,
                 const AtomicMatrixMeasure& mu) {
    if (phi.support.size() != phi.values.size() ||
        psi.support.size() != psi.values.size())
        throw ValidationError("mu_inner: sample support/value lengths differ");
    Complex acc{0.0, 0.0};
    for (const Atom& a : mu.atoms) {
        const Vec2* pv = sample_at(phi, a.lambda);
        const Vec2* qv = sample_at(psi, a.lambda);
        if (!pv || !qv) continue;
        acc += dot(a.weight * (*pv), *qv);
    }
    return acc;
}

Vec2 v_theta_apply(const ScalarProfile& h, const Vec2& e, const Matrix2& theta,
                   const AtomicMatrixMeasure& mu, double t, double tail_tol) {
    if (!is_hermitian(theta, 1e-14))
        throw ValidationError("v_theta_apply: theta must be Hermitian");
    const double ht = h(t);

    Vec2 sum{0.0, 0.0};
    for (const Atom& a : mu.atoms) {
        double g;
        if (std::abs(a.lambda - t) < 1e-8) {
            // Removable singularity: the Mean Value Theorem limit h'(t).
            double d = 1e-6;
            g = (h(t + d) - h(t - d)) / (2.0 * d);
        } else {
            g = (h(a.lambda) - ht) / (a.lambda - t);
        }
        sum = sum + (a.weight * e) * Complex(g, 0.0);
    }

    // Tail bound for the dropped atoms: beyond the truncation every h(l_n)
    // vanishes if the cutoff lies past the support, so the dropped terms are
    // |h(t)| * ||mu{l_n}|| / |l_n - t|; estimate with the trailing weight norm
    // and a harmonic tail.
    if (!mu.atoms.empty()) {
        double cutoff = mu.truncation.lam_cutoff;
        if (h.hi > cutoff)
            throw TailTooFat("v_theta_apply: profile support extends past the "
                             "measure truncation");
        if (std::abs(ht) > 0.0) {
            double wtail = mu.atoms.back().weight.norm();
            double gap = std::max(cutoff - t, 1.0);
            double est = std::abs(ht) * wtail * 2.0 / gap;  // ~ sum w/(n^2 gap)
            if (est > tail_tol)
                throw TailTooFat("v_theta_apply: estimated tail " +
                                 std::to_string(est) + " exceeds tolerance");
        }
    }

    return e * Complex(ht, 0.0) - theta * sum;
}

Vec2 trace_f0(const Matrix2& theta, const JacobiParams& p, double t) {
    if (!is_hermitian(theta, 1e-14))
        throw ValidationError("trace_f0: theta must be Hermitian");
    const double a = p.alpha, b = p.beta, s = a + b;
    if (std::abs(s - 1.0) < 1e-12)
        throw ParamPole("trace_f0: alpha+beta = 1 (Gamma(1-alpha-beta) pole)");
    if (std::abs(t + s) < 1e-12)
        throw PoleAtT("trace_f0: t = -(alpha+beta)");
    double g_1ab = specfun::gamma(Complex(1.0 - s, 0.0)).real();
    double g_1a = std::tgamma(1.0 - a);
    double g_mb = std::tgamma(1.0 - b) / (-b);
    double pref = -std::pow(2.0, s + 1.0) * (a * a + b * b) * g_1ab /
                  ((s + t) * g_1a * g_mb);
    Vec2 v{theta.a12 / a + theta.a11 / b, theta.a22 / a + theta.a21 / b};
    return v * Complex(pref, 0.0);
}

std::variant<Complex, std::pair<Complex, Complex>> project_eigvec(const Vec2& v,
                                                                  const Atom& atom) {
    if (atom.eigvec_dirs.empty())
        throw ValidationError("project_eigvec: atom has no eigenvector directions");
    if (atom.multiplicity == 1) return dot(v, atom.eigvec_dirs[0]);
    return std::make_pair(dot(v, atom.eigvec_dirs[0]), dot(v, atom.eigvec_dirs[1]));
}

}  // namespace jacobi::sprep
