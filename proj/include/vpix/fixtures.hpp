#pragma once

#include "vpix/pipeline.hpp"

#include <vector>

namespace vpix {

/// Side length of the synthetic test scenes (deliberately not a multiple of 6).
inline constexpr int kFixtureSize = 128;

/// Five deterministic integer-valued test scenes: disk, wedge, rotated
/// checkerboard, polygon collage, and a shaded blob field with hard edges.
std::vector<NamedImage> synthetic_fixtures();

}  // namespace vpix
