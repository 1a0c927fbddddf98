#pragma once

// End-to-end experiment: scan -> noise -> filter -> PSNR against the clean input.

#include "vpix/filters.hpp"
#include "vpix/image.hpp"
#include "vpix/mask.hpp"
#include "vpix/metrics.hpp"
#include "vpix/noise.hpp"
#include "vpix/scanner.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vpix {

enum class Layout { square, fused };
enum class Pipeline { square, variable, variable_adaptive };

const char* to_string(Layout l);
const char* to_string(Pipeline p);
const char* to_string(SelectionCriterion c);
Layout parse_layout(const std::string& s);
SelectionCriterion parse_criterion(const std::string& s);

/// Pads to whole blocks, scans, and crops back to the input size.
ScanResult scan_image(const GrayImage& img, Layout layout, const MaskSet& masks, SelectionCriterion crit);
ScanResult scan_image_uniform(const GrayImage& img, const Mask& m);

struct PipelineConfig {
    std::vector<std::filesystem::path> inputs;  ///< PGM/raw files or directories of *.pgm
    std::optional<std::filesystem::path> mask_file;
    SelectionCriterion criterion = SelectionCriterion::min_recon_error;
    std::vector<NoiseKind> noises = {NoiseKind::salt_pepper, NoiseKind::gaussian, NoiseKind::speckle};
    NoiseSpec noise;  ///< parameters and seed; `kind` is taken from `noises`
    std::vector<int> kernels = {5};
    std::vector<Statistic> statistics = {Statistic::mean, Statistic::median};
    FilterMode adaptive_mode = FilterMode::adaptive_literal;
    std::optional<std::filesystem::path> dump_dir;  ///< intermediates are written here when set
    bool raw_dump = false;                          ///< lossless raw dumps instead of PGM
};

struct PsnrRow {
    std::string image;
    NoiseKind noise;
    Pipeline pipeline;
    Statistic statistic;
    int kernel;
    double psnr_db;
};

struct NamedImage {
    std::string name;
    GrayImage image;
};

/// Throws ValidationError on an invalid configuration.
void validate(const PipelineConfig& cfg);

/// Input files (directories expanded to their sorted *.pgm entries) loaded with their stems as names.
std::vector<NamedImage> load_inputs(const std::vector<std::filesystem::path>& inputs);

/// All rows for one clean image, in (noise, kernel, pipeline, statistic) order.
std::vector<PsnrRow> run_image(const NamedImage& input, const PipelineConfig& cfg, const MaskSet& masks);

/// Rows for every input, sorted by image name.
std::vector<PsnrRow> run_pipeline(const PipelineConfig& cfg);
std::vector<PsnrRow> run_pipeline(const std::vector<NamedImage>& inputs, const PipelineConfig& cfg);

inline constexpr const char* kCsvHeader = "image,noise,pipeline,statistic,kernel,psnr_db";
std::string format_row(const PsnrRow& row);
void write_csv(const std::vector<PsnrRow>& rows, std::ostream& out);

}  // namespace vpix
