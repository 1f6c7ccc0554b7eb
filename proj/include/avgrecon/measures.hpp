#ifndef AVGRECON_MEASURES_HPP
#define AVGRECON_MEASURES_HPP

#include <vector>

#include "avgrecon/errors.hpp"

namespace avgrecon {

enum class MeasureKind { Atoms, UniformDensity };

struct Atom {
    double position; // t in [-sigma/2, sigma/2]
    double weight;   // > 0
};

/// Symmetric averaging probability measure on [-sigma/2, sigma/2]:
/// either finitely many weighted atoms or the uniform density.
struct AveragingMeasure {
    MeasureKind kind = MeasureKind::Atoms;
    std::vector<Atom> atoms; // empty for UniformDensity
    double sigma = 0.0;      // support width

    static AveragingMeasure from_atoms(std::vector<Atom> atoms, double sigma);
    static AveragingMeasure uniform(double sigma);
    static AveragingMeasure point_mass(); // single atom at 0, sigma = 0
};

/// A validated (measure, delta) pair together with gamma = cos(sigma*delta/2).
/// Immutable after construction; safe for concurrent reads.
struct MeasureContext {
    AveragingMeasure measure;
    double delta = 0.0;
    double gamma = 1.0;
};

/// Checks the measure invariants (weights normalized and positive, symmetric
/// atom set, support inside [-sigma/2, sigma/2], sigma*delta < pi) and
/// computes gamma.
///
/// Throws AsymmetricMeasure, WeightsNotNormalized, NegativeWeight,
/// BandwidthTooLarge.
MeasureContext validate_measure(const AveragingMeasure& measure, double delta);

/// W^(j)(xi) where W(xi) = integral of e^{i t xi} dnu(t).
///
/// Atoms: sum w_m t_m^j cos(t_m xi + j pi/2), with 0^0 = 1.
/// Uniform density: 64-node Gauss-Legendre over [-sigma/2, sigma/2].
/// Real-valued since nu is symmetric; |W^(j)| <= (sigma/2)^j.
double w_derivative(const MeasureContext& ctx, int order, double xi);

} // namespace avgrecon

#endif
