#ifndef AVGRECON_QUADRATURE_HPP
#define AVGRECON_QUADRATURE_HPP

#include <cstddef>
#include <vector>

#include "avgrecon/errors.hpp"

namespace avgrecon {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes and weights for an n-point rule, computed once and cached.
const GaussLegendreRule& gauss_legendre(int n);

/// Integrate f over [a, b] split into `panels` equal panels, `nodes` points each.
template <typename F>
double integrate_panels(F&& f, double a, double b, int panels, int nodes = 32) {
    const GaussLegendreRule& rule = gauss_legendre(nodes);
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        const double half = 0.5 * h;
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += half * acc;
    }
    return total;
}

namespace detail {

template <typename F>
double adaptive_rec(F& f, double a, double b, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double left = integrate_panels(f, a, m, 1, 16);
    const double right = integrate_panels(f, m, b, 1, 16);
    const double err = left + right - whole;
    if (err < tol && err > -tol)
        return left + right;
    if (depth <= 0)
        throw QuadratureNotConverged("adaptive quadrature: depth exhausted");
    return adaptive_rec(f, a, m, left, 0.5 * tol, depth - 1) +
           adaptive_rec(f, m, b, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive bisection quadrature; `rel_tol` is relative to the first whole-interval
/// estimate (with an absolute floor to survive near-zero integrals).
/// Suited to integrands with kinks, e.g. |polynomial|.
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol, int max_depth = 40) {
    const double whole = integrate_panels(f, a, b, 1, 16);
    double scale = whole < 0 ? -whole : whole;
    if (scale < 1e-300) scale = 1e-300;
    return detail::adaptive_rec(f, a, b, whole, rel_tol * scale, max_depth);
}

} // namespace avgrecon

#endif
