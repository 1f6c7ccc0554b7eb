#include "avgrecon/extension.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "avgrecon/hilbert.hpp"

namespace avgrecon {

namespace {

void check_order(int k) {
    if (k < 1 || k > kMaxHilbertOrder)
        throw OrderTooLarge("smoothness order k = " + std::to_string(k) +
                            " outside [1, " + std::to_string(kMaxHilbertOrder) + "]");
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

} // namespace

double ExtensionPlan::support_edge() const {
    return 2 * std::numbers::pi - ctx.delta;
}

std::vector<double> inv_w_derivatives_at(const MeasureContext& ctx, int count, double xi) {
    const double w0 = w_derivative(ctx, 0, xi);
    std::vector<double> h(static_cast<std::size_t>(count));
    h[0] = 1.0 / w0;
    for (int m = 1; m < count; ++m) {
        // C(m, j) built incrementally along the row
        double cmj = 1.0;
        double sum = 0.0;
        for (int j = 0; j < m; ++j) {
            sum += cmj * h[static_cast<std::size_t>(j)] * w_derivative(ctx, m - j, xi);
            cmj = cmj * (m - j) / (j + 1);
        }
        h[static_cast<std::size_t>(m)] = -sum / w0;
    }
    return h;
}

std::vector<double> inv_w_derivatives(const MeasureContext& ctx, int k) {
    check_order(k);
    return inv_w_derivatives_at(ctx, k, ctx.delta);
}

std::vector<double> boundary_to_moments(std::span<const double> dprime) {
    const int k = static_cast<int>(dprime.size());
    std::vector<double> q(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        double sum = dprime[static_cast<std::size_t>(k - 1)];
        double perm = 1.0; // j!/(j-l)!
        for (int l = 1; l <= j; ++l) {
            perm *= j - l + 1;
            const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
            sum += sgn * perm * dprime[static_cast<std::size_t>(k - l - 1)];
        }
        q[static_cast<std::size_t>(j)] = sum;
    }
    return q;
}

ExtensionPlan build_plan(const MeasureContext& ctx, int k) {
    check_order(k);
    ExtensionPlan plan;
    plan.ctx = ctx;
    plan.k = k;
    plan.d = inv_w_derivatives(ctx, k);

    const double L = 2 * std::numbers::pi - 2 * ctx.delta;
    plan.dprime.resize(static_cast<std::size_t>(k));
    std::vector<BigRat> dprime_exact(static_cast<std::size_t>(k));
    {
        double Lj = 1.0;
        for (int j = 0; j < k; ++j) {
            const double v = ((j % 2 == 0) ? 1.0 : -1.0) * Lj * plan.d[static_cast<std::size_t>(j)];
            plan.dprime[static_cast<std::size_t>(j)] = v;
            dprime_exact[static_cast<std::size_t>(j)] = BigRat(v);
            Lj *= L;
        }
    }

    // q from d' with exact integer coefficients, then the exact Hilbert solve.
    std::vector<BigRat> q_exact(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        BigRat sum = dprime_exact[static_cast<std::size_t>(k - 1)];
        BigInt perm = 1;
        for (int l = 1; l <= j; ++l) {
            perm *= j - l + 1;
            const BigRat term = BigRat(perm) * dprime_exact[static_cast<std::size_t>(k - l - 1)];
            if (l % 2 == 0)
                sum += term;
            else
                sum -= term;
        }
        q_exact[static_cast<std::size_t>(j)] = sum;
    }

    const RationalMatrix hinv = hilbert_inverse(k);
    const std::vector<BigRat> c_exact = apply(hinv, q_exact);
    const BigRat qhq = dot(q_exact, c_exact); // q^T H^{-1} q >= 0 exactly

    plan.q.resize(static_cast<std::size_t>(k));
    plan.c.resize(static_cast<std::size_t>(k));
    plan.c_eval.resize(static_cast<std::size_t>(k));
    plan.psi_coeffs.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        plan.q[static_cast<std::size_t>(j)] = q_exact[static_cast<std::size_t>(j)].convert_to<double>();
        plan.c[static_cast<std::size_t>(j)] = c_exact[static_cast<std::size_t>(j)].convert_to<double>();
        plan.c_eval[static_cast<std::size_t>(j)] =
            c_exact[static_cast<std::size_t>(j)].convert_to<long double>();
        const BigRat coeff =
            c_exact[static_cast<std::size_t>(j)] * BigRat(factorial(j), factorial(j + k));
        plan.psi_coeffs[static_cast<std::size_t>(j)] = coeff.convert_to<long double>();
    }

    double Lk1 = 1.0;
    for (int j = 0; j < k - 1; ++j)
        Lk1 *= L;
    plan.vk = std::sqrt(qhq.convert_to<double>()) / Lk1;
    return plan;
}

double phi_hat(const ExtensionPlan& plan, double xi) {
    xi = std::abs(xi);
    const double delta = plan.ctx.delta;
    const double edge = plan.support_edge();
    if (xi <= delta)
        return 1.0 / w_derivative(plan.ctx, 0, xi);
    if (xi >= edge)
        return 0.0;
    const long double t = (edge - xi) / (edge - delta);
    long double poly = 0.0L;
    for (int j = plan.k - 1; j >= 0; --j)
        poly = poly * t + plan.psi_coeffs[static_cast<std::size_t>(j)];
    long double tk = 1.0L;
    for (int j = 0; j < plan.k; ++j)
        tk *= t;
    return static_cast<double>(tk * poly);
}

double phi_hat_derivative(const ExtensionPlan& plan, int order, double xi) {
    const double delta = plan.ctx.delta;
    const double edge = plan.support_edge();
    if (order < 0 || order >= plan.k)
        throw OutOfDomain("phi_hat_derivative: order " + std::to_string(order) +
                          " outside [0, k-1]");
    if (xi < delta || xi > edge)
        throw OutOfDomain("phi_hat_derivative: xi outside [delta, 2pi-delta]");

    const long double L = edge - delta;
    const long double t = (edge - xi) / L;
    // psi^(order)(t) = sum_m c_m m!/(m+k-order)! t^{m+k-order}
    long double poly = 0.0L;
    for (int m = plan.k - 1; m >= 0; --m) {
        long double fall = 1.0L; // m!/(m+k-order)!
        for (int i = m + 1; i <= m + plan.k - order; ++i)
            fall /= i;
        poly = poly * t + plan.c_eval[static_cast<std::size_t>(m)] * fall;
    }
    long double tpow = 1.0L;
    for (int j = 0; j < plan.k - order; ++j)
        tpow *= t;
    long double result = tpow * poly;
    // chain rule: d/dxi = -(1/L) d/dt, applied `order` times
    for (int j = 0; j < order; ++j)
        result /= -L;
    return static_cast<double>(result);
}

double plan_residual(const ExtensionPlan& plan) {
    const int k = plan.k;
    double rmax = 0.0, qmax = 0.0, cmax = 0.0, hmax = 0.0;
    for (int i = 0; i < k; ++i) {
        double row = 0.0, hrow = 0.0;
        for (int j = 0; j < k; ++j) {
            row += plan.c[static_cast<std::size_t>(j)] / (i + j + 1);
            hrow += 1.0 / (i + j + 1);
        }
        rmax = std::max(rmax, std::abs(row - plan.q[static_cast<std::size_t>(i)]));
        qmax = std::max(qmax, std::abs(plan.q[static_cast<std::size_t>(i)]));
        cmax = std::max(cmax, std::abs(plan.c[static_cast<std::size_t>(i)]));
        hmax = std::max(hmax, hrow);
    }
    const double scale = std::max(qmax, hmax * cmax);
    return scale > 0.0 ? rmax / scale : rmax;
}

} // namespace avgrecon
