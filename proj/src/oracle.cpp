#include "jacobi/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "jacobi/detail/rootfind.hpp"

namespace jacobi::oracle {

namespace {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>;  // (f, pf')

struct JacobiOde {
    double lam, alpha, beta;
    void operator()(const State& y, State& dy, double x) const {
        double om = 1.0 - x, op = 1.0 + x;
        double p = std::pow(om, alpha + 1.0) * std::pow(op, beta + 1.0);
        double w = std::pow(om, alpha) * std::pow(op, beta);
        dy[0] = y[1] / p;
        dy[1] = -lam * w * y[0];
    }
};

// Checkpoints from `from` to `to`: coarse uniform interior steps, then a
// geometric ladder of endpoint standoffs s = 1-|x| down to eps_end.
std::vector<double> checkpoints(double from, double to, const IntegrateOptions& opt) {
    std::vector<double> pts{from};
    double dir = (to > from) ? 1.0 : -1.0;
    double turn = 0.9;  // switch from uniform to geometric standoffs
    double uniform_end = std::min(std::abs(to), turn);
    for (double ax = std::abs(from) + opt.coarse_step; ax < uniform_end - 1e-15;
         ax += opt.coarse_step)
        pts.push_back(dir * ax);
    if (std::abs(to) > turn) {
        double s_end = 1.0 - std::abs(to);
        for (double s = 1.0 - turn; s > s_end * 1.000001; s /= std::sqrt(10.0))
            pts.push_back(dir * (1.0 - s));
    }
    pts.push_back(to);
    return pts;
}

double solve_lower_order(const std::vector<double>& s, const std::vector<double>& v,
                         double gamma, int n_exp);

// Dense solve with partial pivoting; a is row-major n x n, b length n.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
            std::swap(b[col], b[piv]);
        }
        double d = a[col * n + col];
        if (d == 0.0) throw Error("extrapolation system singular");
        for (int r = col + 1; r < n; ++r) {
            double m = a[r * n + col] / d;
            if (m == 0.0) continue;
            for (int c = col; c < n; ++c) a[r * n + c] -= m * a[col * n + c];
            b[r] -= m * b[col];
        }
    }
    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a[r * n + c] * x[c];
        x[r] = acc / a[r * n + r];
    }
    return x;
}

// Limit s -> 0 of samples v(s) with expansion sum_j c_j s^{e_j} over the
// Frobenius exponents for the endpoint with local index gamma.
double extrapolate_limit(const std::vector<double>& s, const std::vector<double>& v,
                         double gamma) {
    std::vector<double> exps{0.0, 1.0 - gamma, 1.0, 1.0 + gamma, 2.0 - gamma, 2.0};
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-9; }),
               exps.end());
    int n = static_cast<int>(exps.size());
    if (static_cast<int>(s.size()) < n)
        throw ValidationError("extrapolate_limit: not enough ladder points");

    // Use the n smallest standoffs; scale columns for conditioning.
    std::vector<double> a(n * n), b(n);
    double smax = s[s.size() - n];
    for (int i = 0; i < n; ++i) {
        double si = s[s.size() - n + i];
        for (int j = 0; j < n; ++j) a[i * n + j] = std::pow(si / smax, exps[j]);
        b[i] = v[s.size() - n + i];
    }
    double c0 = solve_dense(a, b, n)[0];

    double c0_low = solve_lower_order(s, v, gamma, 3);
    double scale = std::max({std::abs(c0), std::abs(c0_low), 1.0});
    if (std::abs(c0 - c0_low) > 1e-5 * scale)
        throw ExtrapolationUnstable("endpoint extrapolation orders disagree: " +
                                    std::to_string(c0) + " vs " +
                                    std::to_string(c0_low));
    return c0;
}

double solve_lower_order(const std::vector<double>& s, const std::vector<double>& v,
                         double gamma, int n_exp) {
    std::vector<double> exps{0.0, 1.0 - gamma, 1.0};
    int n = std::min<int>(n_exp, static_cast<int>(exps.size()));
    std::vector<double> a(n * n), b(n);
    double smax = s[s.size() - n];
    for (int i = 0; i < n; ++i) {
        double si = s[s.size() - n + i];
        for (int j = 0; j < n; ++j) a[i * n + j] = std::pow(si / smax, exps[j]);
        b[i] = v[s.size() - n + i];
    }
    return solve_dense(a, b, n)[0];
}

}  // namespace

SolutionTrace integrate(double lam, const JacobiParams& p, double from_x,
                        std::pair<double, double> ics, double to_x,
                        const IntegrateOptions& opt) {
    if (!(from_x > -1.0 && from_x < 1.0) || !(to_x > -1.0 && to_x < 1.0))
        throw ValidationError("integrate: endpoints must lie inside (-1,1)");
    SolutionTrace tr;
    tr.lambda = lam;
    JacobiOde ode{lam, p.alpha, p.beta};
    State y{ics.first, ics.second};

    auto stepper = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(
        opt.abs_tol, opt.rel_tol);
    std::vector<double> pts = checkpoints(from_x, to_x, opt);
    tr.grid.push_back(from_x);
    tr.f.push_back(y[0]);
    tr.pf.push_back(y[1]);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        double dt = (pts[i] - pts[i - 1]) / 8.0;
        try {
            odeint::integrate_adaptive(stepper, ode, y, pts[i - 1], pts[i], dt);
        } catch (const std::exception& e) {
            throw StepUnderflow(std::string("integrate: stepper stalled near x = ") +
                                std::to_string(pts[i]) + ": " + e.what());
        }
        tr.grid.push_back(pts[i]);
        tr.f.push_back(y[0]);
        tr.pf.push_back(y[1]);
    }
    if (to_x < from_x) {
        std::reverse(tr.grid.begin(), tr.grid.end());
        std::reverse(tr.f.begin(), tr.f.end());
        std::reverse(tr.pf.begin(), tr.pf.end());
    }
    return tr;
}

SolutionTrace full_trace(double lam, const JacobiParams& p,
                         std::pair<double, double> ics_at_zero,
                         const IntegrateOptions& opt) {
    SolutionTrace left =
        integrate(lam, p, 0.0, ics_at_zero, -1.0 + opt.eps_end, opt);
    SolutionTrace right =
        integrate(lam, p, 0.0, ics_at_zero, 1.0 - opt.eps_end, opt);
    SolutionTrace tr;
    tr.lambda = lam;
    tr.grid = left.grid;
    tr.f = left.f;
    tr.pf = left.pf;
    for (std::size_t i = 1; i < right.grid.size(); ++i) {  // skip shared x = 0
        tr.grid.push_back(right.grid[i]);
        tr.f.push_back(right.f[i]);
        tr.pf.push_back(right.pf[i]);
    }
    return tr;
}

BoundaryData boundary_functionals(const SolutionTrace& trace, const JacobiParams& p,
                                  const IntegrateOptions& opt) {
    const std::size_t n = trace.grid.size();
    const int K = opt.tail_points;
    if (n < static_cast<std::size_t>(2 * K))
        throw ValidationError("boundary_functionals: trace too short");
    if (1.0 + trace.grid.front() > opt.eps_end * 1.01 ||
        1.0 - trace.grid.back() > opt.eps_end * 1.01)
        throw ValidationError("boundary_functionals: trace does not reach the "
                              "endpoint standoff");

    // The extrapolation arrays are ordered with the smallest standoff last.
    // Right endpoint (+1), local variable s = 1-x (descending along the grid):
    //   f^[0] samples: +pf;  f^[1] samples: f - pf / (alpha (1-x)^a (1+x)^{b+1}).
    std::vector<double> s_r, v0_r, v1_r;
    for (std::size_t i = n - 3 * K; i < n; ++i) {
        double x = trace.grid[i];
        double s = 1.0 - x;
        if (s > 0.2) continue;
        s_r.push_back(s);
        v0_r.push_back(trace.pf[i]);
        v1_r.push_back(trace.f[i] -
                       trace.pf[i] / (p.alpha * std::pow(s, p.alpha) *
                                      std::pow(1.0 + x, p.beta + 1.0)));
    }

    // Left endpoint (-1), s = 1+x (ascending along the grid, so reversed):
    //   f^[0] samples: -pf;  f^[1] samples: -f - pf / (beta (1-x)^{a+1} (1+x)^b).
    std::vector<double> s_l, v0_l, v1_l;
    for (std::size_t i = 0; i < std::min<std::size_t>(3 * K, n); ++i) {
        double x = trace.grid[i];
        double s = 1.0 + x;
        if (s > 0.2) break;
        s_l.push_back(s);
        v0_l.push_back(-trace.pf[i]);
        v1_l.push_back(-trace.f[i] -
                       trace.pf[i] / (p.beta * std::pow(1.0 - x, p.alpha + 1.0) *
                                      std::pow(s, p.beta)));
    }
    std::reverse(s_l.begin(), s_l.end());
    std::reverse(v0_l.begin(), v0_l.end());
    std::reverse(v1_l.begin(), v1_l.end());

    BoundaryData bd;
    bd.g0[0] = extrapolate_limit(s_l, v0_l, p.beta);
    bd.g0[1] = extrapolate_limit(s_r, v0_r, p.alpha);
    bd.g1[0] = extrapolate_limit(s_l, v1_l, p.beta);
    bd.g1[1] = -extrapolate_limit(s_r, v1_r, p.alpha);
    return bd;
}

double shooting_det(double lam, const weyl::ThetaParam& theta, const JacobiParams& p,
                    const IntegrateOptions& opt) {
    BoundaryData b1 = boundary_functionals(full_trace(lam, p, {1.0, 0.0}, opt), p, opt);
    BoundaryData b2 = boundary_functionals(full_trace(lam, p, {0.0, 1.0}, opt), p, opt);
    Matrix2 G0{b1.g0[0], b2.g0[0], b1.g0[1], b2.g0[1]};
    Matrix2 G1{b1.g1[0], b2.g1[0], b1.g1[1], b2.g1[1]};
    Complex d;
    if (theta.kind == weyl::ThetaParam::Kind::Matrix) {
        d = (theta.H * G0 - G1).det();
    } else {
        d = (theta.A.conj_transpose() * G1 - theta.B.conj_transpose() * G0).det();
    }
    return d.real() / (G0.norm() * G1.norm());
}

std::vector<double> oracle_eigenvalues(const weyl::ThetaParam& theta,
                                       const JacobiParams& p, double lam_max,
                                       const OracleScanOptions& opt) {
    if (!std::isfinite(lam_max))
        throw ValidationError("oracle_eigenvalues: lam_max must be finite");
    const double lam_lo = -(p.sum()) - 1.0;
    auto f = [&](double lam) { return shooting_det(lam, theta, p, opt.integ); };

    int cells = std::max(2, static_cast<int>(std::ceil((lam_max - lam_lo) / opt.dlam)));
    std::vector<double> grid(cells + 1), val(cells + 1);
    for (int i = 0; i <= cells; ++i) {
        grid[i] = lam_lo + (lam_max - lam_lo) * i / cells;
        val[i] = f(grid[i]);
    }

    std::vector<double> roots;
    for (int i = 0; i < cells; ++i) {
        double a = grid[i], b = grid[i + 1], fa = val[i], fb = val[i + 1];
        if (fa == 0.0) {
            roots.push_back(a);
            continue;
        }
        if ((fa < 0.0) != (fb < 0.0)) {
            roots.push_back(detail::find_root(f, a, b, fa, fb, opt.lam_tol));
            continue;
        }
        if (i + 2 <= cells) {
            double fc = val[i + 2];
            if (std::abs(fb) < std::abs(fa) && std::abs(fb) < std::abs(fc) &&
                std::abs(fb) < 1e-2) {
                auto [lmin, fmin] = detail::refine_minimum(f, a, grid[i + 2], opt.lam_tol);
                if (fmin <= opt.dip_abs) {
                    roots.push_back(lmin);  // double-zero signature, no sign change
                } else if (fmin < 1e-3 * std::min(std::abs(fa), std::abs(fc)) &&
                           opt.warnings) {
                    opt.warnings->push_back(
                        "GridTooCoarse: unresolved shooting-det dip near lambda = " +
                        std::to_string(lmin));
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || r - out.back() > 1e-7 * std::max(1.0, std::abs(r)))
            out.push_back(r);
    return out;
}

}  // namespace jacobi::oracle
