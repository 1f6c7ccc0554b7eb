#ifndef AVGRECON_SIGNALS_HPP
#define AVGRECON_SIGNALS_HPP

#include <vector>

#include "avgrecon/measures.hpp"

namespace avgrecon {

struct SignalTerm {
    double center;      // x_m
    double coefficient; // a_m
};

/// A test function in the Paley-Wiener space B_delta, represented as a finite
/// combination of reproducing-kernel translates:
///   f(x) = sum_m a_m sin(delta (x - x_m)) / (pi (x - x_m)),
/// with the removable singularity filled by delta/pi.
///
/// Closed-form Gram identities make norms and inner products exact:
/// <K(.-x), K(.-y)> = K(x-y) with K(u) = sin(delta u)/(pi u).
struct BandSignal {
    double delta = 0.0;
    std::vector<SignalTerm> terms;
};

/// The section-3 target sin(delta x)/(pi x): one kernel translate at 0.
BandSignal sinc_target(double delta);

/// The reproducing kernel K(u) = sin(delta u)/(pi u), K(0) = delta/pi.
/// Switches to a 4-term series at |u| < 1e-8.
double pw_kernel(double delta, double u);

double eval_signal(const BandSignal& f, double x);

/// L2 inner product via the Gram closed form.
double inner_product(const BandSignal& f, const BandSignal& g);

/// sqrt of the Gram form; throws NegativeGram below -1e-12, clamps tiny
/// negatives to 0.
double signal_norm(const BandSignal& f);

/// mu_j(f) = integral of f(j + t) dnu(t). Throws DeltaMismatch.
double average_sample(const MeasureContext& ctx, const BandSignal& f, long j);

/// Riesz representer g_j with <f, g_j> = mu_j(f): kernel translates at
/// j + t_m weighted by w_m. Atom measures only (UnsupportedMeasureKind).
BandSignal riesz_representer(const MeasureContext& ctx, long j);

struct SampleVector {
    int n = 0;
    std::vector<double> values; // mu_j for j = -n..n

    double at(long j) const { return values[static_cast<std::size_t>(j + n)]; }
};

SampleVector collect_samples(const MeasureContext& ctx, const BandSignal& f, int n);

} // namespace avgrecon

#endif
