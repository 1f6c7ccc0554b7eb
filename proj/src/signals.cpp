#include "avgrecon/signals.hpp"

#include <cmath>
#include <numbers>

#include "avgrecon/quadrature.hpp"

namespace avgrecon {

namespace {
constexpr double kSeriesSwitch = 1e-8;
}

BandSignal sinc_target(double delta) {
    return BandSignal{delta, {{0.0, 1.0}}};
}

double pw_kernel(double delta, double u) {
    const double pi = std::numbers::pi;
    if (std::abs(u) < kSeriesSwitch) {
        // sin(du)/(pi u) = (d/pi)(1 - (du)^2/6 + (du)^4/120 - (du)^6/5040 + ...)
        const double s = delta * u;
        const double s2 = s * s;
        return delta / pi * (1.0 - s2 / 6.0 + s2 * s2 / 120.0 - s2 * s2 * s2 / 5040.0);
    }
    return std::sin(delta * u) / (pi * u);
}

double eval_signal(const BandSignal& f, double x) {
    double sum = 0.0;
    for (const SignalTerm& t : f.terms)
        sum += t.coefficient * pw_kernel(f.delta, x - t.center);
    return sum;
}

double inner_product(const BandSignal& f, const BandSignal& g) {
    double sum = 0.0;
    for (const SignalTerm& a : f.terms)
        for (const SignalTerm& b : g.terms)
            sum += a.coefficient * b.coefficient * pw_kernel(f.delta, a.center - b.center);
    return sum;
}

double signal_norm(const BandSignal& f) {
    const double gram = inner_product(f, f);
    if (gram < -1e-12)
        throw NegativeGram("Gram form is negative: " + std::to_string(gram));
    return gram > 0.0 ? std::sqrt(gram) : 0.0;
}

double average_sample(const MeasureContext& ctx, const BandSignal& f, long j) {
    if (f.delta != ctx.delta)
        throw DeltaMismatch("signal delta differs from context delta");
    if (ctx.measure.kind == MeasureKind::Atoms) {
        double sum = 0.0;
        for (const Atom& a : ctx.measure.atoms)
            sum += a.weight * eval_signal(f, static_cast<double>(j) + a.position);
        return sum;
    }
    const double s = ctx.measure.sigma;
    return integrate_panels(
               [&](double t) { return eval_signal(f, static_cast<double>(j) + t); },
               -s / 2, s / 2, 1, 64) /
           s;
}

BandSignal riesz_representer(const MeasureContext& ctx, long j) {
    if (ctx.measure.kind != MeasureKind::Atoms)
        throw UnsupportedMeasureKind("riesz_representer needs an atomic measure");
    BandSignal g;
    g.delta = ctx.delta;
    g.terms.reserve(ctx.measure.atoms.size());
    for (const Atom& a : ctx.measure.atoms)
        g.terms.push_back({static_cast<double>(j) + a.position, a.weight});
    return g;
}

SampleVector collect_samples(const MeasureContext& ctx, const BandSignal& f, int n) {
    SampleVector sv;
    sv.n = n;
    sv.values.reserve(2 * static_cast<std::size_t>(n) + 1);
    for (long j = -n; j <= n; ++j)
        sv.values.push_back(average_sample(ctx, f, j));
    return sv;
}

} // namespace avgrecon
