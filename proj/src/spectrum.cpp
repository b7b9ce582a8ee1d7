#include "jacobi/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "jacobi/detail/rootfind.hpp"
#include "jacobi/specfun.hpp"

namespace jacobi::spectrum {

namespace {

constexpr Complex kImagUnit{0.0, 1.0};

void warn(std::vector<std::string>* sink, std::string msg) {
    if (sink) sink->push_back(std::move(msg));
}

// D(z) together with the magnitude scale of its constituent terms.
struct DetValue {
    double value;
    double scale;
};

DetValue char_det_scaled(Complex z, const Matrix2& th, const JacobiParams& p) {
    CoeffQuad q = coeffs(z, p);
    Complex t1 = th.a11 * q.c2 + q.c4;
    Complex t2 = th.a22 * q.c2 + q.c1;
    Complex t3 = (th.a12 * q.c2 - 1.0) * (th.a21 * q.c2 - 1.0);
    Complex d = t1 * t2 - t3;
    return {d.real(), std::abs(t1 * t2) + std::abs(t3) + 1e-300};
}

struct ZRoot {
    Complex z;       // scan-branch root (real, or vertex + i y on the axis)
    bool on_axis;
};

// Distance from real z to the on-branch sigma(A_inf) points alpha+beta+n.
double dist_to_ainf_z(double z, const JacobiParams& p) {
    double k = std::round(z - p.sum());
    if (k < 0.0) k = 0.0;
    double best = std::abs(z - (p.sum() + k));
    if (k > 0.0) best = std::min(best, std::abs(z - (p.sum() + k - 1.0)));
    return best;
}

// Scans f for sign changes and magnitude dips on the nodes grid; appends
// polished roots. f must be real-valued on the grid.
template <class F>
void scan_roots(F&& f, const std::vector<double>& nodes, const ScanOptions& opt,
                std::vector<double>* roots) {
    if (nodes.size() < 2) return;
    std::vector<DetValue> vals(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) vals[i] = f(nodes[i]);

    const double xtol = 1e-13;
    auto fv = [&](double x) { return f(x).value; };

    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        double a = nodes[i], b = nodes[i + 1];
        double fa = vals[i].value, fb = vals[i + 1].value;
        if (fa == 0.0) {
            roots->push_back(a);
            continue;
        }
        if ((fa < 0.0) != (fb < 0.0)) {
            roots->push_back(detail::find_root(fv, a, b, fa, fb, xtol));
            continue;
        }
        // Same sign: a local dip can hide a double root (degenerate Theta) or
        // a close pair the grid cannot separate.
        if (i + 2 < nodes.size()) {
            double fc = vals[i + 2].value;
            bool dip = std::abs(fb) < std::abs(fa) && std::abs(fb) < std::abs(fc);
            if (dip) {
                auto [zmin, fmin] =
                    detail::refine_minimum(fv, a, nodes[i + 2], xtol);
                double scale = f(zmin).scale;
                if (fmin <= opt.dip_rel * scale) {
                    roots->push_back(zmin);  // double root (no sign change)
                } else if (fmin < 1e-3 * std::min(std::abs(fa), std::abs(fc))) {
                    warn(opt.warnings,
                         "GridTooCoarse: unresolved dip of char_det near z = " +
                             std::to_string(zmin) + "; increase grid density");
                }
            }
        }
    }
}

std::vector<double> uniform_nodes(double lo, double hi, double step) {
    std::vector<double> nodes;
    int n = std::max(2, static_cast<int>(std::ceil((hi - lo) / step)) + 1);
    nodes.reserve(n);
    for (int i = 0; i < n; ++i)
        nodes.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
    return nodes;
}

Matrix2 hermitize(const Matrix2& m) {
    return (m + m.conj_transpose()) * Complex(0.5, 0.0);
}

// Richardson extrapolation of -i*eps*M along the given path, geometric
// ladder with ratio 10.
template <class MAtEps>
Matrix2 residue_ladder(MAtEps&& m_at_eps, const ResidueOptions& opt) {
    if (opt.levels < 3) throw ValidationError("residue ladder needs >= 3 levels");
    std::vector<Matrix2> w(opt.levels);
    double eps = opt.eps0;
    for (int k = 0; k < opt.levels; ++k, eps /= 10.0)
        w[k] = (-kImagUnit * eps) * m_at_eps(eps);
    std::vector<Matrix2> r1(opt.levels - 1);
    for (int k = 0; k + 1 < opt.levels; ++k)
        r1[k] = (w[k + 1] * 10.0 - w[k]) * (1.0 / 9.0);
    Matrix2 r2 = (r1.back() * 100.0 - r1[r1.size() - 2]) * (1.0 / 99.0);
    double diff = (r2 - r1.back()).norm();
    if (diff > opt.converge_rel * std::max(r2.norm(), 1e-300))
        throw ResidueNoConverge("residue Richardson levels disagree beyond tolerance");
    return hermitize(r2);
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

std::vector<double> eigenvalues_a0(const JacobiParams& p, int n_max) {
    if (n_max < 0) throw ValidationError("eigenvalues_a0: n_max must be >= 0");
    std::vector<double> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        out.push_back((-n - 1.0) * (-n + p.sum()));
    return out;
}

std::vector<double> eigenvalues_ainf(const JacobiParams& p, int n_max) {
    if (n_max < 0) throw ValidationError("eigenvalues_ainf: n_max must be >= 0");
    std::vector<double> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        out.push_back(n * (n + p.sum() + 1.0));
    return out;
}

std::vector<Atom> eigenvalues_theta(const JacobiParams& p, const Matrix2& theta,
                                    double lam_max, const ScanOptions& opt) {
    if (!is_hermitian(theta, 1e-14))
        throw ValidationError("eigenvalues_theta: theta must be Hermitian");
    if (!std::isfinite(lam_max))
        throw ValidationError("eigenvalues_theta: lam_max must be finite");
    if (std::abs(p.sum() - 1.0) < 1e-6)
        warn(opt.warnings, "NearDoubleRoot: alpha+beta within 1e-6 of 1; "
                           "z-roots of the lowest eigenvalue nearly coincide");

    const double u = p.branch_vertex();
    const double lam_vertex = lambda_of_z(Complex(u, 0.0), p).real();

    std::vector<ZRoot> zroots;

    // Real branch z >= vertex, lambda in [lam_vertex, lam_max].
    if (lam_max > lam_vertex) {
        double z_hi = z_of_lambda(Complex(lam_max, 0.0), p).second.real() + opt.dz;
        auto f = [&](double z) { return char_det_scaled(Complex(z, 0.0), theta, p); };
        std::vector<double> found;
        scan_roots(f, uniform_nodes(u, z_hi, opt.dz), opt, &found);
        for (double z : found) {
            if (dist_to_ainf_z(z, p) < opt.ainf_excl) {
                warn(opt.warnings,
                     "dropped char_det root at z = " + std::to_string(z) +
                         ": coincides with sigma(A_inf), outside the "
                         "multiplicity proposition's hypothesis");
                continue;
            }
            zroots.push_back({Complex(z, 0.0), false});
        }
    }

    // Symmetry-axis segment: lambda = -((alpha+beta+1)/2)^2 - y^2 down to
    // -(alpha+beta)-1, matching the ODE oracle's scan window. D is real there
    // because the branch involution acts as conjugation on the axis.
    const double lam_min = -(p.sum() + 1.0);
    if (opt.scan_axis && lam_min < lam_vertex) {
        double cap = std::min(lam_max, lam_vertex);
        double y_lo = (cap < lam_vertex) ? std::sqrt(lam_vertex - cap) : 1e-8;
        double y_hi = std::sqrt(lam_vertex - lam_min);
        if (y_hi > y_lo) {
            auto f = [&](double y) { return char_det_scaled(Complex(u, y), theta, p); };
            std::vector<double> found;
            scan_roots(f, uniform_nodes(y_lo, y_hi, opt.dz), opt, &found);
            for (double y : found) zroots.push_back({Complex(u, y), true});
        }
    }

    std::vector<Atom> atoms;
    for (const ZRoot& r : zroots) {
        Atom a;
        a.lambda = lambda_of_z(r.z, p).real();
        if (a.lambda > lam_max + 1e-9) continue;
        Complex mirror = branch_mirror(r.z, p);
        if (r.on_axis) mirror = std::conj(r.z);
        a.z_roots = (mirror.real() < r.z.real() ||
                     (mirror.real() == r.z.real() && mirror.imag() < r.z.imag()))
                        ? std::make_pair(mirror, r.z)
                        : std::make_pair(r.z, mirror);
        atoms.push_back(std::move(a));
    }

    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.lambda < b.lambda; });
    std::vector<Atom> dedup;
    for (Atom& a : atoms) {
        double sep = 1e-9 * std::max(1.0, std::abs(a.lambda));
        if (!dedup.empty() && a.lambda - dedup.back().lambda < sep) {
            warn(opt.warnings, "merged duplicate root at lambda = " +
                                   std::to_string(a.lambda));
            continue;
        }
        dedup.push_back(std::move(a));
    }
    return dedup;
}

Atom point_mass_a0(int n, const JacobiParams& p,
                   std::vector<std::string>* warnings) {
    if (n < 0) throw ValidationError("point_mass_a0: n must be >= 0");
    const double s = p.sum();
    Atom atom;
    atom.lambda = (-n - 1.0) * (-n + s);
    double mirror = s - 1.0 - n;
    atom.z_roots = {Complex(std::min<double>(n, mirror), 0.0),
                    Complex(std::max<double>(n, mirror), 0.0)};
    atom.multiplicity = 1;

    auto [c1n, c4n] = coeffs_int(n, p);
    bool near_double = (n == 0 && std::abs(s - 1.0) < 1e-6);
    if (near_double) {
        warn(warnings, "NearDoubleRoot: alpha+beta within 1e-6 of 1 at n=0; "
                       "using the numeric lambda-path residue");
        // Gamma(n-alpha-beta+1) degenerates; the lambda-space residue of M_0
        // stays finite and is taken numerically.
        ResidueOptions ropt;
        atom.weight = residue_ladder(
            [&](double eps) {
                return weyl::m_zero(Complex(atom.lambda, eps), p);
            },
            ropt);
    } else {
        if (n == 0 && s > 1.0)
            warn(warnings,
                 "point_mass_a0: paper sign convention yields a negative "
                 "semi-definite weight for n=0 when alpha+beta>1");
        double g_num = specfun::gamma(Complex(n + 1.0 - s, 0.0)).real();
        double g_1a = std::tgamma(1.0 - p.alpha);
        double g_mb = std::tgamma(1.0 - p.beta) / (-p.beta);
        double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
        double pref = p.alpha * std::pow(2.0, s + 1.0) * sign * g_num /
                      (factorial(n) * g_1a * g_mb);
        atom.weight = Matrix2{Complex(pref * c1n, 0.0), Complex(pref, 0.0),
                              Complex(pref, 0.0), Complex(pref * c4n, 0.0)};
    }
    atom.eigvec_dirs = {normalize_direction({1.0, Complex(c4n, 0.0)})};
    return atom;
}

Atom point_mass_theta(const Atom& atom_in, const Matrix2& theta,
                      const JacobiParams& p, const ResidueOptions& opt) {
    if (!is_hermitian(theta, 1e-14))
        throw ValidationError("point_mass_theta: theta must be Hermitian");
    Atom atom = atom_in;
    const Complex zr = atom.z_roots.second;  // scan-branch root
    const bool on_axis = std::abs(zr.imag()) > 0.0;
    weyl::ThetaParam tp = weyl::ThetaParam::matrix(theta);

    // Ladder path: +i*eps off a real root; +eps along Re z off an axis root
    // (both map into the upper lambda half-plane).
    atom.weight = residue_ladder(
        [&](double eps) {
            Complex z = on_axis ? zr + eps : zr + kImagUnit * eps;
            return weyl::m_theta_z(z, tp, p);
        },
        opt);

    atom.multiplicity = multiplicity(atom.lambda, theta, p);
    atom.eigvec_dirs.clear();
    if (atom.multiplicity == 2) {
        atom.eigvec_dirs = {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}};
    } else {
        CoeffQuad q = coeffs(zr, p);
        Vec2 col2{1.0 - theta.a12 * q.c2, theta.a11 * q.c2 + q.c4};
        Vec2 col1{theta.a22 * q.c2 + q.c1, 1.0 - theta.a21 * q.c2};
        Vec2 dir = (col2.norm() >= col1.norm()) ? col2 : col1;
        atom.eigvec_dirs = {normalize_direction(dir)};
    }
    return atom;
}

int multiplicity(double lam, const Matrix2& theta, const JacobiParams& p) {
    if (!is_hermitian(theta, 1e-14))
        throw ValidationError("multiplicity: theta must be Hermitian");
    double tol = 1e-8 * std::max(1.0, std::abs(lam));
    for (int n = 0;; ++n) {
        double le = n * (n + p.sum() + 1.0);
        if (std::abs(lam - le) < tol)
            throw OnAInfSpectrum("multiplicity: lambda lies on sigma(A_inf)");
        if (le > lam + 1.0) break;
    }
    Matrix2 N = theta - weyl::m_infinity(Complex(lam, 0.0), p);
    auto [s_lo, s_hi] = singular_values(N);
    double thresh =
        1e-8 * std::max({theta.norm(),
                         weyl::m_infinity(Complex(lam, 0.0), p).norm(), 1.0});
    return (s_lo < thresh) + (s_hi < thresh);
}

Matrix2 make_degenerate(double z0, const JacobiParams& p) {
    double lam = lambda_of_z(Complex(z0, 0.0), p).real();
    if (lam <= -p.sum())
        throw ValidationError("make_degenerate: lambda(z0) must exceed -(alpha+beta)");
    double tol = 1e-8 * std::max(1.0, std::abs(lam));
    for (int n = 0;; ++n) {
        double l0 = (-n - 1.0) * (-n + p.sum());
        double li = n * (n + p.sum() + 1.0);
        if (std::abs(lam - l0) < tol || std::abs(lam - li) < tol) throw Excluded(lam);
        if (l0 > lam + 1.0 && li > lam + 1.0) break;
    }
    CoeffQuad q = coeffs(Complex(z0, 0.0), p);
    if (q.spectral_zero[1] || std::abs(q.c2) < 1e-300) throw Excluded(lam);
    Complex t11 = -q.c4 / q.c2, t12 = 1.0 / q.c2, t22 = -q.c1 / q.c2;
    // c's are real at real z0 away from poles.
    return Matrix2{t11.real(), t12.real(), t12.real(), t22.real()};
}

DisjointnessReport disjointness_experiment(const Matrix2& theta0, const Matrix2& theta,
                                           const Matrix2& theta_tilde,
                                           const JacobiParams& p, int t_samples,
                                           double lam_max, unsigned seed) {
    if (!is_hermitian(theta, 1e-14) || !is_hermitian(theta0, 1e-14) ||
        !is_hermitian(theta_tilde, 1e-14))
        throw ValidationError("disjointness_experiment: inputs must be Hermitian");
    if (hermitian_eigenvalues(theta).first <= 0.0)
        throw ValidationError("disjointness_experiment: theta must be positive definite");
    if (t_samples <= 0)
        throw ValidationError("disjointness_experiment: t_samples must be positive");

    auto lambdas_of = [&](const Matrix2& th) {
        std::vector<double> ls;
        for (const Atom& a : eigenvalues_theta(p, th, lam_max)) ls.push_back(a.lambda);
        return ls;
    };
    std::vector<double> fixed = lambdas_of(theta_tilde);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-10.0, 10.0);

    DisjointnessReport rep;
    rep.samples = t_samples;
    rep.min_distance = std::numeric_limits<double>::infinity();
    for (int k = 0; k < t_samples; ++k) {
        double t = unif(rng);
        std::vector<double> moving = lambdas_of(theta0 + theta * Complex(t, 0.0));
        double best = std::numeric_limits<double>::infinity();
        int coll = 0;
        for (double a : moving)
            for (double b : fixed) {
                double d = std::abs(a - b);
                best = std::min(best, d);
                if (d < 1e-6) ++coll;
            }
        rep.t_values.push_back(t);
        rep.per_t_min_distance.push_back(best);
        rep.per_t_collisions.push_back(coll);
        rep.collisions += coll;
        rep.min_distance = std::min(rep.min_distance, best);
    }
    return rep;
}

AtomicMatrixMeasure a0_measure(const JacobiParams& p, int n_max) {
    AtomicMatrixMeasure mu{p, weyl::ThetaParam::zero(), {}, {}};
    for (int n = 0; n <= n_max; ++n) mu.atoms.push_back(point_mass_a0(n, p));
    mu.truncation = {n_max + 1, mu.atoms.back().lambda};
    return mu;
}

AtomicMatrixMeasure theta_measure(const JacobiParams& p, const Matrix2& theta,
                                  double lam_max, const ScanOptions& sopt,
                                  const ResidueOptions& ropt) {
    AtomicMatrixMeasure mu{p, weyl::ThetaParam::matrix(theta), {}, {}};
    for (Atom& a : eigenvalues_theta(p, theta, lam_max, sopt))
        mu.atoms.push_back(point_mass_theta(a, theta, p, ropt));
    mu.truncation = {static_cast<int>(mu.atoms.size()), lam_max};
    return mu;
}

AtomicMatrixMeasure friedrichs_measure(const JacobiParams& p, double lam_max,
                                       const ResidueOptions& ropt) {
    AtomicMatrixMeasure mu{p, weyl::ThetaParam::friedrichs(), {}, {}};
    for (int n = 0;; ++n) {
        double lam = n * (n + p.sum() + 1.0);
        if (lam > lam_max) break;
        Atom a;
        a.lambda = lam;
        double zr = p.sum() + n;  // on-branch root; mirror is -1-n
        a.z_roots = {Complex(-1.0 - n, 0.0), Complex(zr, 0.0)};
        a.weight = residue_ladder(
            [&](double eps) {
                return weyl::m_infinity_z(Complex(zr, eps), p);
            },
            ropt);
        a.multiplicity = 1;
        // Range direction of the rank-one weight.
        Vec2 col1{a.weight.a11, a.weight.a21}, col2{a.weight.a12, a.weight.a22};
        a.eigvec_dirs = {normalize_direction(col1.norm() >= col2.norm() ? col1 : col2)};
        mu.atoms.push_back(std::move(a));
    }
    mu.truncation = {static_cast<int>(mu.atoms.size()), lam_max};
    return mu;
}

namespace {

std::vector<double> pole_scan(const JacobiParams& p, double lam_max, int coeff_index) {
    const double u = p.branch_vertex();
    double z_hi = z_of_lambda(Complex(lam_max, 0.0), p).second.real() + 0.05;
    auto f = [&](double z) -> DetValue {
        CoeffQuad q = coeffs(Complex(z, 0.0), p);
        Complex c = (coeff_index == 1) ? q.c2 : q.c3;
        return {c.real(), std::abs(c) + 1.0};
    };
    ScanOptions opt;
    opt.dip_rel = 0.0;  // poles of M are simple; c has clean sign changes
    std::vector<double> roots;
    scan_roots(f, uniform_nodes(u, z_hi, 0.05), opt, &roots);
    std::vector<double> lams;
    for (double z : roots) {
        double lam = lambda_of_z(Complex(z, 0.0), p).real();
        if (lam <= lam_max + 1e-9) lams.push_back(lam);
    }
    std::sort(lams.begin(), lams.end());
    return lams;
}

}  // namespace

std::vector<double> pole_scan_m_infinity(const JacobiParams& p, double lam_max) {
    return pole_scan(p, lam_max, 1);
}

std::vector<double> pole_scan_m_zero(const JacobiParams& p, double lam_max) {
    return pole_scan(p, lam_max, 2);
}

void validate_atom(const Atom& atom, const JacobiParams& p) {
    if (!std::isfinite(atom.lambda))
        throw ValidationError("atom: lambda not finite");
    for (Complex z : {atom.z_roots.first, atom.z_roots.second}) {
        Complex lam = lambda_of_z(z, p);
        if (std::abs(lam - Complex(atom.lambda, 0.0)) >
            1e-10 * std::max(1.0, std::abs(atom.lambda)))
            throw ValidationError("atom: z_roots do not map to lambda");
    }
    if (!is_hermitian(atom.weight, 1e-10))
        throw ValidationError("atom: weight not Hermitian");
    auto [w_lo, w_hi] = hermitian_eigenvalues(atom.weight);
    double tr = atom.weight.trace().real();
    if (w_lo < -1e-10 * std::max(tr, 0.0) || tr <= 0.0)
        throw ValidationError("atom: weight not positive semi-definite");
    int rank = (w_hi > 1e-8 * tr) + (w_lo > 1e-8 * tr);
    if (rank != atom.multiplicity)
        throw ValidationError("atom: rank(weight) != multiplicity");
    if (atom.eigvec_dirs.size() != static_cast<std::size_t>(atom.multiplicity))
        throw ValidationError("atom: eigenvector count != multiplicity");
    for (const Vec2& v : atom.eigvec_dirs)
        if (std::abs(v.norm() - 1.0) > 1e-10)
            throw ValidationError("atom: eigenvector not unit length");
}

}  // namespace jacobi::spectrum
