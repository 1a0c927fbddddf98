#include "vpix/pipeline.hpp"

#include "vpix/error.hpp"
#include "vpix/imageio.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace fs = std::filesystem;

namespace vpix {

const char* to_string(Layout l)
{
    return l == Layout::square ? "square" : "fused";
}

const char* to_string(Pipeline p)
{
    switch (p) {
    case Pipeline::square: return "square";
    case Pipeline::variable: return "variable";
    case Pipeline::variable_adaptive: return "variable-adaptive";
    }
    return "square";
}

const char* to_string(SelectionCriterion c)
{
    return c == SelectionCriterion::min_recon_error ? "min-recon-error" : "min-mean-difference";
}

Layout parse_layout(const std::string& s)
{
    if (s == "square") return Layout::square;
    if (s == "fused" || s == "variable") return Layout::fused;
    throw ValidationError("unknown layout '" + s + "'");
}

SelectionCriterion parse_criterion(const std::string& s)
{
    if (s == "min-recon-error" || s == "min_recon_error") return SelectionCriterion::min_recon_error;
    if (s == "min-mean-difference" || s == "min_mean_difference") return SelectionCriterion::min_mean_difference;
    throw ValidationError("unknown selection criterion '" + s + "'");
}

ScanResult scan_image(const GrayImage& img, Layout layout, const MaskSet& masks, SelectionCriterion crit)
{
    const GrayImage padded = pad_to_block_multiple(img);
    ScanResult scan = layout == Layout::square ? scan_square(padded) : scan_parallel_fused(padded, masks, crit);
    return crop(scan, img.rows(), img.cols());
}

ScanResult scan_image_uniform(const GrayImage& img, const Mask& m)
{
    return crop(scan_uniform(pad_to_block_multiple(img), m), img.rows(), img.cols());
}

void validate(const PipelineConfig& cfg)
{
    if (cfg.inputs.empty()) throw ValidationError("no input images");
    if (cfg.noises.empty()) throw ValidationError("no noise kinds requested");
    if (cfg.kernels.empty()) throw ValidationError("no kernel sizes requested");
    if (cfg.statistics.empty()) throw ValidationError("no statistics requested");
    for (int k : cfg.kernels) require_kernel(k);
    if (cfg.adaptive_mode == FilterMode::square)
        throw ValidationError("the adaptive pipeline needs an adaptive filter mode");
}

std::vector<NamedImage> load_inputs(const std::vector<fs::path>& inputs)
{
    std::vector<fs::path> files;
    for (const auto& p : inputs) {
        if (fs::is_directory(p)) {
            std::vector<fs::path> found;
            for (const auto& e : fs::directory_iterator(p))
                if (e.is_regular_file() && e.path().extension() == ".pgm") found.push_back(e.path());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.push_back(p);
        }
    }
    if (files.empty()) throw ValidationError("no input images found");

    std::vector<NamedImage> out;
    std::set<std::string> names;
    for (const auto& f : files) {
        const std::string name = f.stem().string();
        if (!names.insert(name).second) throw ValidationError("duplicate image name '" + name + "'");
        out.push_back({name, read_image(f)});
    }
    return out;
}

namespace {

void dump(const PipelineConfig& cfg, const std::string& image, const std::string& stem, const GrayImage& img)
{
    const fs::path dir = *cfg.dump_dir / image;
    if (cfg.raw_dump)
        write_raw(img, dir / (stem + ".raw"));
    else
        write_pgm(img, dir / (stem + ".pgm"));
}

}  // namespace

std::vector<PsnrRow> run_image(const NamedImage& input, const PipelineConfig& cfg, const MaskSet& masks)
{
    const GrayImage& clean = input.image;
    const ScanResult square = scan_image(clean, Layout::square, masks, cfg.criterion);
    const ScanResult fused = scan_image(clean, Layout::fused, masks, cfg.criterion);

    if (cfg.dump_dir) {
        std::error_code ec;
        fs::create_directories(*cfg.dump_dir / input.name, ec);
        if (ec) throw IoError("cannot create " + (*cfg.dump_dir / input.name).string());
        dump(cfg, input.name, "scan_square", square.image);
        dump(cfg, input.name, "scan_fused", fused.image);
        write_labelmap(fused.labels, *cfg.dump_dir / input.name / "labels_fused.txt");
    }

    std::vector<PsnrRow> rows;
    for (NoiseKind kind : cfg.noises) {
        NoiseSpec spec = cfg.noise;
        spec.kind = kind;
        const GrayImage noisy_square = add_noise(square.image, spec);
        const GrayImage noisy_fused = add_noise(fused.image, spec);
        const std::string noise_name = to_string(kind);
        if (cfg.dump_dir) {
            dump(cfg, input.name, "noisy_" + noise_name + "_square", noisy_square);
            dump(cfg, input.name, "noisy_" + noise_name + "_fused", noisy_fused);
        }

        for (int k : cfg.kernels) {
            for (Pipeline p : {Pipeline::square, Pipeline::variable, Pipeline::variable_adaptive}) {
                for (Statistic stat : cfg.statistics) {
                    GrayImage filtered;
                    switch (p) {
                    case Pipeline::square: filtered = box_filter(noisy_square, k, stat); break;
                    case Pipeline::variable: filtered = box_filter(noisy_fused, k, stat); break;
                    case Pipeline::variable_adaptive:
                        filtered = apply_filter(noisy_fused, fused.labels, {k, stat, cfg.adaptive_mode});
                        break;
                    }
                    if (cfg.dump_dir)
                        dump(cfg, input.name,
                             "filtered_" + noise_name + "_" + to_string(p) + "_" + to_string(stat) + "_k" +
                                 std::to_string(k),
                             filtered);
                    rows.push_back({input.name, kind, p, stat, k, psnr(clean, filtered).psnr_db});
                }
            }
        }
    }
    return rows;
}

std::vector<PsnrRow> run_pipeline(const std::vector<NamedImage>& inputs, const PipelineConfig& cfg)
{
    const MaskSet masks = cfg.mask_file ? load_masks(*cfg.mask_file) : builtin_masks();

    std::vector<const NamedImage*> order;
    for (const auto& in : inputs) order.push_back(&in);
    std::stable_sort(order.begin(), order.end(),
                     [](const NamedImage* a, const NamedImage* b) { return a->name < b->name; });

    std::vector<PsnrRow> rows;
    for (const NamedImage* in : order) {
        auto r = run_image(*in, cfg, masks);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    return rows;
}

std::vector<PsnrRow> run_pipeline(const PipelineConfig& cfg)
{
    validate(cfg);
    return run_pipeline(load_inputs(cfg.inputs), cfg);
}

std::string format_row(const PsnrRow& row)
{
    return row.image + "," + to_string(row.noise) + "," + to_string(row.pipeline) + "," + to_string(row.statistic) +
           "," + std::to_string(row.kernel) + "," + format_psnr(row.psnr_db);
}

void write_csv(const std::vector<PsnrRow>& rows, std::ostream& out)
{
    out << kCsvHeader << '\n';
    for (const auto& r : rows) out << format_row(r) << '\n';
}

}  // namespace vpix
