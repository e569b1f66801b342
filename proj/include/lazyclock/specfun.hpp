#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lazyclock/errors.hpp"

namespace lazyclock::specfun {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    int max_depth = 60;
};

// --- distribution kernels -------------------------------------------------

double norm_cdf(double x);
double norm_pdf(double x);
double norm_ppf(double p);  // inverse of norm_cdf on (0, 1)

// Exponentially scaled modified Bessel function of the first kind,
// e^{-x} I_k(x). Scaling keeps the Skellam pmf finite for large arguments.
double bessel_i_scaled(int order, double x);

// Modified Bessel function of the second kind, real order.
double bessel_k(double order, double x);

// Complete elliptic integral of the first kind, parameterized by the
// SQUARED modulus m = k^2: K(m) = \int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt.
// Returns +inf for m within 1e-15 of 1; throws for m outside [0, 1).
double complete_elliptic_k(double m);

// Regularized lower incomplete gamma P(a, x) and regularized incomplete
// beta I_x(a, b).
double gamma_p(double a, double x);
double beta_inc(double a, double b, double x);

// --- adaptive quadrature ---------------------------------------------------

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1, 1] (QUADPACK dqk15 abscissae/weights).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
};
inline constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
};

template <class F>
std::pair<double, double> gk15(F& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double fc = f(mid);
    double gauss = fc * kGaussWeights[3];
    double kron = fc * kKronrodWeights[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double fsum = f(mid - dx) + f(mid + dx);
        kron += fsum * kKronrodWeights[j];
        if (j % 2 == 1) gauss += fsum * kGaussWeights[j / 2];
    }
    kron *= half;
    gauss *= half;
    return {kron, std::abs(kron - gauss)};
}

struct Panel {
    double a, b, value, error;
    int depth;
    bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b]. Panels are
// bisected worst-error-first until the summed error estimate is below
// abs_tol; exceeding max_depth bisection levels raises QuadratureError.
// Kronrod nodes are interior, so integrable endpoint singularities are
// never evaluated at the endpoint itself.
template <class F>
double integrate(F&& f, double a, double b, QuadratureSpec spec = {}) {
    if (!(spec.abs_tol > 0.0) || spec.max_depth < 1)
        throw std::domain_error("integrate: invalid QuadratureSpec");
    if (!(a == a) || !(b == b)) throw std::domain_error("integrate: NaN endpoint");
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::priority_queue<detail::Panel> panels;
    auto [v0, e0] = detail::gk15(f, a, b);
    panels.push({a, b, v0, e0, 0});
    double total_value = v0;
    double total_error = e0;

    while (total_error > spec.abs_tol) {
        const detail::Panel worst = panels.top();
        if (worst.depth >= spec.max_depth)
            throw QuadratureError("integrate: tolerance not reached at max_depth");
        panels.pop();
        total_value -= worst.value;
        total_error -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        auto [vl, el] = detail::gk15(f, worst.a, mid);
        auto [vr, er] = detail::gk15(f, mid, worst.b);
        panels.push({worst.a, mid, vl, el, worst.depth + 1});
        panels.push({mid, worst.b, vr, er, worst.depth + 1});
        total_value += vl + vr;
        total_error += el + er;
    }
    return sign * total_value;
}

// Integration with algebraic endpoint singularities f ~ (s-a)^{exp_lo} near
// a and (b-s)^{exp_hi} near b (exponents in (-1, 0]). The interval is split
// at the midpoint and each half is mapped by s = a + u^q with q chosen so
// the transformed integrand vanishes at the endpoint.
template <class F>
double integrate_power_endpoints(F&& f, double a, double b, double exp_lo,
                                 double exp_hi, QuadratureSpec spec = {}) {
    if (!(exp_lo > -1.0) || !(exp_hi > -1.0))
        throw std::domain_error("integrate_power_endpoints: exponents must be > -1");
    if (a == b) return 0.0;
    if (a > b) return -integrate_power_endpoints(f, b, a, exp_hi, exp_lo, spec);
    const double mid = 0.5 * (a + b);
    QuadratureSpec half_spec = spec;
    half_spec.abs_tol = 0.5 * spec.abs_tol;

    double lower;
    if (exp_lo < 0.0) {
        const double q = 2.0 / (1.0 + exp_lo);
        lower = integrate(
            [&](double u) { return q * std::pow(u, q - 1.0) * f(a + std::pow(u, q)); },
            0.0, std::pow(mid - a, 1.0 / q), half_spec);
    } else {
        lower = integrate(f, a, mid, half_spec);
    }

    double upper;
    if (exp_hi < 0.0) {
        const double q = 2.0 / (1.0 + exp_hi);
        upper = integrate(
            [&](double u) { return q * std::pow(u, q - 1.0) * f(b - std::pow(u, q)); },
            0.0, std::pow(b - mid, 1.0 / q), half_spec);
    } else {
        upper = integrate(f, mid, b, half_spec);
    }
    return lower + upper;
}

// Convenience wrapper for the common s^{-1/2}-type endpoint behavior
// (arcsine-like densities).
template <class F>
double integrate_sqrt_endpoints(F&& f, double a, double b, QuadratureSpec spec = {}) {
    return integrate_power_endpoints(std::forward<F>(f), a, b, -0.5, -0.5, spec);
}

// Integral over [a, +inf) via the rational map s = a + v/(1-v). The
// integrand must decay faster than s^{-2}.
template <class F>
double integrate_to_infinity(F&& f, double a, QuadratureSpec spec = {}) {
    return integrate(
        [&](double v) {
            const double om = 1.0 - v;
            return f(a + v / om) / (om * om);
        },
        0.0, 1.0, spec);
}

// --- root finding -----------------------------------------------------------

// Brent's method on a bracketing interval. Throws BracketError when
// f(lo), f(hi) have the same (nonzero) sign.
template <class F>
double find_root(F&& f, double lo, double hi, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("find_root: tol must be > 0");
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw BracketError("find_root: interval does not bracket a sign change");

    double c = a, fc = fa;
    double d = b - a, e = d;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < 200; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic / secant step
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw NumericalError("find_root: iteration limit reached");
}

}  // namespace lazyclock::specfun
