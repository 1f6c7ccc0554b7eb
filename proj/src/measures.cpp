#include "avgrecon/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "avgrecon/quadrature.hpp"

namespace avgrecon {

namespace {

constexpr double kWeightTol = 1e-14;
constexpr double kPairTol = 1e-14;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

AveragingMeasure AveragingMeasure::from_atoms(std::vector<Atom> atoms, double sigma) {
    AveragingMeasure m;
    m.kind = MeasureKind::Atoms;
    m.atoms = std::move(atoms);
    m.sigma = sigma;
    return m;
}

AveragingMeasure AveragingMeasure::uniform(double sigma) {
    AveragingMeasure m;
    m.kind = MeasureKind::UniformDensity;
    m.sigma = sigma;
    return m;
}

AveragingMeasure AveragingMeasure::point_mass() {
    return from_atoms({{0.0, 1.0}}, 0.0);
}

MeasureContext validate_measure(const AveragingMeasure& measure, double delta) {
    const double pi = std::numbers::pi;
    if (!(delta > 0.0) || !(delta < pi))
        throw BandwidthTooLarge("delta must lie in (0, pi), got " + fmt(delta));
    if (measure.sigma < 0.0)
        throw DomainError("sigma must be nonnegative, got " + fmt(measure.sigma));
    if (!(measure.sigma * delta < pi))
        throw BandwidthTooLarge("sigma*delta = " + fmt(measure.sigma * delta) +
                                " >= pi; gamma = cos(sigma*delta/2) would not be positive");

    if (measure.kind == MeasureKind::Atoms) {
        if (measure.atoms.empty())
            throw WeightsNotNormalized("measure has no atoms");
        double sum = 0.0;
        for (const Atom& a : measure.atoms) {
            if (!(a.weight > 0.0))
                throw NegativeWeight("atom weight must be positive, got " + fmt(a.weight));
            if (std::abs(a.position) > measure.sigma / 2 + kPairTol)
                throw DomainError("atom at " + fmt(a.position) +
                                  " lies outside [-sigma/2, sigma/2]");
            sum += a.weight;
        }
        if (std::abs(sum - 1.0) > kWeightTol)
            throw WeightsNotNormalized("atom weights sum to " + fmt(sum));

        // Symmetry: pair each off-origin atom with its mirror after sorting.
        std::vector<Atom> sorted = measure.atoms;
        std::sort(sorted.begin(), sorted.end(),
                  [](const Atom& a, const Atom& b) { return a.position < b.position; });
        std::size_t lo = 0, hi = sorted.size();
        while (lo < hi) {
            if (std::abs(sorted[lo].position) <= kPairTol) {
                ++lo; // the origin atom needs no partner
                continue;
            }
            const Atom& left = sorted[lo];
            const Atom& right = sorted[hi - 1];
            if (std::abs(left.position + right.position) > kPairTol ||
                std::abs(left.weight - right.weight) > kPairTol)
                throw AsymmetricMeasure("no mirror atom for position " + fmt(left.position));
            ++lo;
            --hi;
        }
    } else {
        if (!(measure.sigma > 0.0))
            throw DomainError("uniform density requires sigma > 0");
    }

    MeasureContext ctx;
    ctx.measure = measure;
    ctx.delta = delta;
    ctx.gamma = std::cos(measure.sigma * delta / 2);
    return ctx;
}

double w_derivative(const MeasureContext& ctx, int order, double xi) {
    const double half_pi = std::numbers::pi / 2;
    if (ctx.measure.kind == MeasureKind::Atoms) {
        double sum = 0.0;
        for (const Atom& a : ctx.measure.atoms) {
            const double tj = (order == 0) ? 1.0 : std::pow(a.position, order); // 0^0 = 1
            sum += a.weight * tj * std::cos(a.position * xi + order * half_pi);
        }
        return sum;
    }
    // (1/sigma) * int_{-s/2}^{s/2} t^j cos(t xi + j pi/2) dt; 64 nodes resolve
    // the polynomial-times-trig integrand far below 1e-14 at desk-scale xi.
    const double s = ctx.measure.sigma;
    const double val = integrate_panels(
        [&](double t) {
            const double tj = (order == 0) ? 1.0 : std::pow(t, order);
            return tj * std::cos(t * xi + order * half_pi);
        },
        -s / 2, s / 2, 1, 64);
    return val / s;
}

} // namespace avgrecon
