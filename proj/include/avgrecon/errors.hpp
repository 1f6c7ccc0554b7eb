#ifndef AVGRECON_ERRORS_HPP
#define AVGRECON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace avgrecon {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// measure validation
struct AsymmetricMeasure : Error { using Error::Error; };
struct WeightsNotNormalized : Error { using Error::Error; };
struct BandwidthTooLarge : Error { using Error::Error; };
struct NegativeWeight : Error { using Error::Error; };

// signals
struct DeltaMismatch : Error { using Error::Error; };
struct UnsupportedMeasureKind : Error { using Error::Error; };
struct NegativeGram : Error { using Error::Error; };

// extension / exact algebra
struct OrderTooLarge : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };

// kernel / quadrature
struct QuadratureNotConverged : Error { using Error::Error; };

// reconstruction
struct DimensionMismatch : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };

// config / CLI
struct ConfigError : Error { using Error::Error; };

} // namespace avgrecon

#endif
