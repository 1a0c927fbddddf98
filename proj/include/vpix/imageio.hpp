#pragma once

#include "vpix/image.hpp"

#include <filesystem>
#include <iosfwd>

namespace vpix {

/// Reads a binary (P5) or ASCII (P2) PGM with maxval <= 255. Samples are stored unscaled.
GrayImage read_pgm(const std::filesystem::path& path);
GrayImage parse_pgm(std::istream& in);

/// Writes P5 with samples rounded half-up and clipped to [0, 255].
void write_pgm(const GrayImage& img, const std::filesystem::path& path);
void write_pgm(const GrayImage& img, std::ostream& out);

/// Byte value stored for a real sample: floor(x + 0.5) clipped to [0, 255].
std::uint8_t quantize(double sample);

/// Lossless real-valued dump: `raw <width> <height>` then one row of
/// round-trippable decimal samples per line.
void write_raw(const GrayImage& img, const std::filesystem::path& path);
GrayImage read_raw(const std::filesystem::path& path);

/// Dispatches on the leading magic: P2/P5 -> PGM, `raw` -> raw dump.
GrayImage read_image(const std::filesystem::path& path);

/// `labels <width> <height>` then one line of space-separated integers per row.
void write_labelmap(const LabelMap& labels, const std::filesystem::path& path);
void write_labelmap(const LabelMap& labels, std::ostream& out);
LabelMap read_labelmap(const std::filesystem::path& path);
LabelMap parse_labelmap(std::istream& in);

}  // namespace vpix
