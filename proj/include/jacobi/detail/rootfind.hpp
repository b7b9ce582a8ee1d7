#ifndef JACOBI_DETAIL_ROOTFIND_HPP
#define JACOBI_DETAIL_ROOTFIND_HPP

#include <cmath>
#include <utility>

namespace jacobi::detail {

/// Root of f on a sign-change bracket [a,b] by bisection with secant steps.
template <class F>
double find_root(F&& f, double a, double b, double fa, double fb,
                 double xtol, int max_iter = 200) {
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        double m;
        double denom = fb - fa;
        if (denom != 0.0) {
            m = a - fa * (b - a) / denom;  // secant
            double lo = a + 0.25 * (b - a), hi = b - 0.25 * (b - a);
            if (!(m > a && m < b)) m = 0.5 * (a + b);
            else if (i % 2 == 1) m = 0.5 * (a + b);  // alternate to guarantee shrink
            else m = std::min(std::max(m, lo), hi);
        } else {
            m = 0.5 * (a + b);
        }
        double fm = f(m);
        if (fm == 0.0) return m;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

/// Golden-section minimum of |f| on [a,b]; returns (argmin, min value).
template <class F>
std::pair<double, double> refine_minimum(F&& f, double a, double b, double xtol,
                                         int max_iter = 200) {
    const double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = std::abs(f(c)), fd = std::abs(f(d));
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = std::abs(f(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = std::abs(f(d));
        }
    }
    double m = 0.5 * (a + b);
    return {m, std::abs(f(m))};
}

}  // namespace jacobi::detail

#endif
