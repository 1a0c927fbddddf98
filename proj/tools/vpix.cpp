// vpix: variable-pixel scanning, noise, filtering and PSNR from the command line.
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 validation error.

#include "vpix/error.hpp"
#include "vpix/filters.hpp"
#include "vpix/fixtures.hpp"
#include "vpix/imageio.hpp"
#include "vpix/mask.hpp"
#include "vpix/metrics.hpp"
#include "vpix/noise.hpp"
#include "vpix/pipeline.hpp"
#include "vpix/scanner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

enum ExitCode { kOk = 0, kConfigError = 2, kIoError = 3, kValidationError = 4 };

class ConfigError : public vpix::Error {
public:
    using vpix::Error::Error;
};

void write_image(const vpix::GrayImage& img, const fs::path& path, bool raw)
{
    if (raw)
        vpix::write_raw(img, path);
    else
        vpix::write_pgm(img, path);
}

vpix::MaskSet mask_source(const std::string& mask_file)
{
    return mask_file.empty() ? vpix::builtin_masks() : vpix::load_masks(mask_file);
}

struct NoiseOptions {
    double density = 0.05;
    double sigma = 25.5;
    double variance = 0.04;
    std::uint64_t seed = 42;

    void attach(CLI::App* app)
    {
        app->add_option("--density", density, "salt & pepper corruption probability")->capture_default_str();
        app->add_option("--sigma", sigma, "gaussian std-dev on the 0..255 scale")->capture_default_str();
        app->add_option("--variance", variance, "speckle multiplicative variance")->capture_default_str();
        app->add_option("--seed", seed, "mt19937_64 seed")->capture_default_str();
    }

    vpix::NoiseSpec spec(vpix::NoiseKind kind) const { return {kind, density, sigma, variance, seed}; }
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Variable-pixel image scanning and shape-adaptive filtering"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "scan -> noise -> filter -> PSNR for all three pipelines, as CSV");
    std::vector<std::string> run_inputs;
    std::string run_masks, run_criterion = "min-recon-error", run_adaptive = "adaptive-literal";
    std::vector<std::string> run_noises = {"salt_pepper", "gaussian", "speckle"};
    std::vector<int> run_kernels = {5};
    std::vector<std::string> run_stats = {"mean", "median"};
    std::string run_csv, run_dump;
    bool run_raw = false;
    NoiseOptions run_noise_opts;
    run->add_option("inputs", run_inputs, "PGM/raw files or directories of *.pgm")->required();
    run->add_option("--masks", run_masks, "mask file (default: the 8 built-in masks)");
    run->add_option("--criterion", run_criterion, "min-recon-error | min-mean-difference")->capture_default_str();
    run->add_option("--noise", run_noises, "comma-separated noise kinds")->delimiter(',')->capture_default_str();
    run->add_option("--kernel", run_kernels, "comma-separated odd kernel sizes")->delimiter(',')->capture_default_str();
    run->add_option("--statistic", run_stats, "comma-separated statistics")->delimiter(',')->capture_default_str();
    run->add_option("--mode", run_adaptive, "adaptive-literal | adaptive-block")->capture_default_str();
    run->add_option("--csv", run_csv, "write CSV here instead of stdout");
    run->add_option("--dump", run_dump, "directory for intermediate images");
    run->add_flag("--raw", run_raw, "dump intermediates as lossless raw files");
    run_noise_opts.attach(run);

    // scan
    auto* scan = app.add_subcommand("scan", "square or variable-pixel scan of one image");
    std::string scan_in, scan_out, scan_labels, scan_layout = "fused", scan_mask_id, scan_masks,
                                                scan_criterion = "min-recon-error", scan_label_mode = "literal",
                                                scan_chosen;
    bool scan_raw = false;
    scan->add_option("input", scan_in)->required();
    scan->add_option("-o,--out", scan_out, "scanned image")->required();
    scan->add_option("--layout", scan_layout, "square | fused | uniform")->capture_default_str();
    scan->add_option("--mask-id", scan_mask_id, "mask used by --layout uniform");
    scan->add_option("--masks", scan_masks, "mask file (default: built-in)");
    scan->add_option("--criterion", scan_criterion)->capture_default_str();
    scan->add_option("--labels", scan_labels, "write the label map here");
    scan->add_option("--label-mode", scan_label_mode, "literal | block")->capture_default_str();
    scan->add_option("--chosen", scan_chosen, "write per-block chosen mask indices here");
    scan->add_flag("--raw", scan_raw, "write a lossless raw dump instead of PGM");

    // noise
    auto* noise = app.add_subcommand("noise", "add seeded noise to one image");
    std::string noise_in, noise_out, noise_kind = "gaussian";
    bool noise_raw = false;
    NoiseOptions noise_opts;
    noise->add_option("input", noise_in)->required();
    noise->add_option("-o,--out", noise_out)->required();
    noise->add_option("--noise", noise_kind, "none | salt_pepper | gaussian | speckle")->capture_default_str();
    noise->add_flag("--raw", noise_raw);
    noise_opts.attach(noise);

    // filter
    auto* filter = app.add_subcommand("filter", "square or shape-adaptive filtering of one image");
    std::string filter_in, filter_out, filter_labels, filter_stat = "mean", filter_mode = "square";
    int filter_kernel = 5;
    bool filter_raw = false;
    filter->add_option("input", filter_in)->required();
    filter->add_option("-o,--out", filter_out)->required();
    filter->add_option("--labels", filter_labels, "label map (required by adaptive modes)");
    filter->add_option("--kernel", filter_kernel)->capture_default_str();
    filter->add_option("--statistic", filter_stat, "mean | median")->capture_default_str();
    filter->add_option("--mode", filter_mode, "square | adaptive-literal | adaptive-block")->capture_default_str();
    filter->add_flag("--raw", filter_raw);

    // psnr
    auto* psnr_cmd = app.add_subcommand("psnr", "PSNR of a test image against a reference");
    std::string psnr_ref, psnr_test, psnr_row;
    psnr_cmd->add_option("reference", psnr_ref)->required();
    psnr_cmd->add_option("test", psnr_test)->required();
    psnr_cmd->add_option("--row", psnr_row, "emit a CSV row: image,noise,pipeline,statistic,kernel");

    // masks
    auto* masks = app.add_subcommand("masks", "print the built-in mask set in the mask text format");
    std::string masks_out;
    masks->add_option("-o,--out", masks_out, "write to a file instead of stdout");

    // fixtures
    auto* fixtures = app.add_subcommand("fixtures", "write the synthetic test scenes as PGM files");
    std::string fixtures_dir;
    fixtures->add_option("dir", fixtures_dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*run) {
            vpix::PipelineConfig cfg;
            for (const auto& in : run_inputs) cfg.inputs.emplace_back(in);
            if (!run_masks.empty()) cfg.mask_file = run_masks;
            cfg.noises.clear();
            cfg.statistics.clear();
            try {
                cfg.criterion = vpix::parse_criterion(run_criterion);
                for (const auto& n : run_noises) cfg.noises.push_back(vpix::parse_noise_kind(n));
                for (const auto& s : run_stats) cfg.statistics.push_back(vpix::parse_statistic(s));
                cfg.adaptive_mode = vpix::parse_filter_mode(run_adaptive);
                cfg.kernels = run_kernels;
                cfg.noise = run_noise_opts.spec(vpix::NoiseKind::none);
                if (run_raw && run_dump.empty()) throw ConfigError("--raw requires --dump");
                if (!run_dump.empty()) cfg.dump_dir = run_dump;
                cfg.raw_dump = run_raw;
                vpix::validate(cfg);
            } catch (const vpix::ValidationError& e) {
                throw ConfigError(e.what());
            }

            const auto rows = vpix::run_pipeline(cfg);
            if (run_csv.empty()) {
                vpix::write_csv(rows, std::cout);
            } else {
                std::ofstream out(run_csv);
                if (!out) throw vpix::IoError("cannot write " + run_csv);
                vpix::write_csv(rows, out);
                out.flush();
                if (!out) throw vpix::IoError("write failed: " + run_csv);
            }
        } else if (*scan) {
            vpix::SelectionCriterion crit;
            try {
                crit = vpix::parse_criterion(scan_criterion);
                if (scan_label_mode != "literal" && scan_label_mode != "block")
                    throw ConfigError("--label-mode must be literal or block");
                if (scan_layout == "uniform" && scan_mask_id.empty())
                    throw ConfigError("--layout uniform needs --mask-id");
                if (scan_layout != "uniform" && !scan_mask_id.empty())
                    throw ConfigError("--mask-id only applies to --layout uniform");
            } catch (const vpix::ValidationError& e) {
                throw ConfigError(e.what());
            }
            const vpix::GrayImage img = vpix::read_image(scan_in);
            const vpix::MaskSet set = mask_source(scan_masks);

            vpix::ScanResult res;
            if (scan_layout == "uniform") {
                const auto it = std::find_if(set.masks.begin(), set.masks.end(),
                                             [&](const vpix::Mask& m) { return m.id == scan_mask_id; });
                if (it == set.masks.end()) throw ConfigError("no mask with id '" + scan_mask_id + "'");
                res = vpix::scan_image_uniform(img, *it);
            } else {
                vpix::Layout layout;
                try {
                    layout = vpix::parse_layout(scan_layout);
                } catch (const vpix::ValidationError& e) {
                    throw ConfigError(e.what());
                }
                res = vpix::scan_image(img, layout, set, crit);
            }
            write_image(res.image, scan_out, scan_raw);
            if (!scan_labels.empty())
                vpix::write_labelmap(scan_label_mode == "block" ? vpix::block_scoped_labels(res.labels) : res.labels,
                                     scan_labels);
            if (!scan_chosen.empty()) {
                std::ofstream out(scan_chosen);
                if (!out) throw vpix::IoError("cannot write " + scan_chosen);
                for (std::size_t i = 0; i < res.chosen_masks.size(); ++i) {
                    const int idx = res.chosen_masks[i];
                    out << idx << ' ' << set[static_cast<std::size_t>(idx)].id << '\n';
                }
            }
        } else if (*noise) {
            vpix::NoiseKind kind;
            try {
                kind = vpix::parse_noise_kind(noise_kind);
            } catch (const vpix::ValidationError& e) {
                throw ConfigError(e.what());
            }
            const vpix::GrayImage img = vpix::read_image(noise_in);
            write_image(vpix::add_noise(img, noise_opts.spec(kind)), noise_out, noise_raw);
        } else if (*filter) {
            vpix::FilterSpec spec;
            try {
                spec = {filter_kernel, vpix::parse_statistic(filter_stat), vpix::parse_filter_mode(filter_mode)};
            } catch (const vpix::ValidationError& e) {
                throw ConfigError(e.what());
            }
            if (spec.mode != vpix::FilterMode::square && filter_labels.empty())
                throw ConfigError("adaptive modes need --labels");
            if (spec.mode == vpix::FilterMode::square && !filter_labels.empty())
                throw ConfigError("--labels is only used by adaptive modes");
            const vpix::GrayImage img = vpix::read_image(filter_in);
            const vpix::LabelMap labels = filter_labels.empty() ? vpix::LabelMap() : vpix::read_labelmap(filter_labels);
            write_image(vpix::apply_filter(img, labels, spec), filter_out, filter_raw);
        } else if (*psnr_cmd) {
            const auto q = vpix::psnr(vpix::read_image(psnr_ref), vpix::read_image(psnr_test));
            if (psnr_row.empty())
                std::cout << vpix::format_psnr(q.psnr_db) << '\n';
            else
                std::cout << psnr_row << ',' << vpix::format_psnr(q.psnr_db) << '\n';
        } else if (*masks) {
            const auto set = vpix::builtin_masks();
            if (masks_out.empty())
                vpix::write_masks(set, std::cout);
            else
                vpix::save_masks(set, masks_out);
        } else if (*fixtures) {
            std::error_code ec;
            fs::create_directories(fixtures_dir, ec);
            if (ec) throw vpix::IoError("cannot create " + fixtures_dir);
            for (const auto& f : vpix::synthetic_fixtures())
                vpix::write_pgm(f.image, fs::path(fixtures_dir) / (f.name + ".pgm"));
        }
    } catch (const ConfigError& e) {
        std::cerr << "vpix: " << e.what() << '\n';
        return kConfigError;
    } catch (const vpix::IoError& e) {
        std::cerr << "vpix: " << e.what() << '\n';
        return kIoError;
    } catch (const vpix::ValidationError& e) {
        std::cerr << "vpix: " << e.what() << '\n';
        return kValidationError;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "vpix: " << e.what() << '\n';
        return kIoError;
    }
    return kOk;
}
