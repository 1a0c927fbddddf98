#pragma once

// Seeded sensor-noise models.
//
// All randomness comes from std::mt19937_64 seeded with the spec's seed.
// Uniform variates take the top 53 bits of one 64-bit draw: u = (x >> 11) * 2^-53.
// Normal variates use the Marsaglia polar method; both values of each accepted
// pair are consumed before the next pair is drawn. Pixels are visited in
// row-major order on a single stream.

#include "vpix/image.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace vpix {

enum class NoiseKind { none, salt_pepper, gaussian, speckle };

const char* to_string(NoiseKind kind);
NoiseKind parse_noise_kind(const std::string& s);

struct NoiseSpec {
    NoiseKind kind = NoiseKind::none;
    double density = 0.05;   ///< salt & pepper corruption probability
    double sigma = 25.5;     ///< gaussian std-dev on the [0, 255] scale
    double variance = 0.04;  ///< speckle multiplicative variance
    std::uint64_t seed = 42;
};

/// Deterministic uniform and normal variates over mt19937_64.
class NoiseSource {
public:
    explicit NoiseSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal.
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Each pixel is hit with probability `density`; a hit pixel takes one more
/// uniform draw and becomes 0 (u < 0.5) or 255.
GrayImage add_salt_pepper(const GrayImage& img, double density, std::uint64_t seed);

/// clip(x + sigma * z)
GrayImage add_gaussian(const GrayImage& img, double sigma, std::uint64_t seed);

/// clip(x + x * sqrt(variance) * z)
GrayImage add_speckle(const GrayImage& img, double variance, std::uint64_t seed);

GrayImage add_noise(const GrayImage& img, const NoiseSpec& spec);

}  // namespace vpix
