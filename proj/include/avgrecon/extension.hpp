#ifndef AVGRECON_EXTENSION_HPP
#define AVGRECON_EXTENSION_HPP

#include <span>
#include <vector>

#include "avgrecon/measures.hpp"

namespace avgrecon {

/// Everything derived from (measure, delta, k) that defines the spectral
/// kernel phi_hat:
///   - d_j    = (1/W)^(j)(delta)
///   - d'_j   = (-1)^j (2pi-2delta)^j d_j      (boundary data after the
///              change of variables t = (2pi-delta-xi)/(2pi-2delta))
///   - q_j    = moments of psi^(k) on [0,1] equivalent to the boundary data
///   - c      = H_k^{-1} q, solved exactly in rational arithmetic
///   - vk     = minimal L2 norm sqrt(q^T H_k^{-1} q) / (2pi-2delta)^(k-1)
///
/// psi(t) = sum_j c_j j!/(j+k)! t^{j+k} is the k-fold integral of the
/// minimizing polynomial with zero data at t = 0; phi_hat on [delta,
/// 2pi-delta] is psi evaluated at t(xi).
///
/// Immutable after build_plan; evaluation is pure.
struct ExtensionPlan {
    MeasureContext ctx;
    int k = 1;
    std::vector<double> d;
    std::vector<double> dprime;
    std::vector<double> q;
    std::vector<double> c;
    double vk = 0.0;

    // Evaluation copies, rounded once from the exact rationals. long double
    // keeps the large-|c| cancellation at t near 1 below the gluing budget.
    std::vector<long double> c_eval;
    std::vector<long double> psi_coeffs; // c_j j!/(j+k)!

    double band_edge() const { return ctx.delta; }
    double support_edge() const; // 2pi - delta
};

/// h^(j)(xi) for j = 0..count-1 where h = 1/W, by the Leibniz recursion
///   h^(m) = -(1/W) sum_{j<m} C(m,j) h^(j) W^(m-j).
std::vector<double> inv_w_derivatives_at(const MeasureContext& ctx, int count, double xi);

/// d_j = (1/W)^(j)(delta), j = 0..k-1. Throws OrderTooLarge outside [1, 12].
std::vector<double> inv_w_derivatives(const MeasureContext& ctx, int k);

/// q_j = d'_{k-1} + sum_{l=1}^{j} (-1)^l j!/(j-l)! d'_{k-l-1}.
std::vector<double> boundary_to_moments(std::span<const double> dprime);

/// Builds the full plan; the Hilbert solve runs in exact rational arithmetic
/// and is converted to floating point once. Throws OrderTooLarge.
ExtensionPlan build_plan(const MeasureContext& ctx, int k);

/// Even piecewise spectral kernel: 1/W on the band, psi(t(xi)) on
/// [delta, 2pi-delta], 0 beyond.
double phi_hat(const ExtensionPlan& plan, double xi);

/// j-th derivative (0 <= j <= k-1) of the polynomial piece on
/// [delta, 2pi-delta]. Throws OutOfDomain.
double phi_hat_derivative(const ExtensionPlan& plan, int order, double xi);

/// Normwise backward residual of the converted solve:
/// ||H c - q||_inf / max(||q||_inf, ||H||_inf ||c||_inf), evaluated in double.
double plan_residual(const ExtensionPlan& plan);

} // namespace avgrecon

#endif
