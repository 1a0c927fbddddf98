#include "vpix/fixtures.hpp"
#include "vpix/imageio.hpp"
#include "vpix/pipeline.hpp"

#include "reference.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace vpix;
namespace fs = std::filesystem;

#ifndef VPIX_FIXTURE_DIR
#error "VPIX_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace {

std::string csv(const std::vector<PsnrRow>& rows)
{
    std::ostringstream out;
    write_csv(rows, out);
    return out.str();
}

}  // namespace

TEST_CASE("noiseless constant image stays exact through every pipeline")
{
    PipelineConfig cfg;
    cfg.noise.density = 0.0;
    cfg.noise.sigma = 0.0;
    cfg.noise.variance = 0.0;
    cfg.noises = {NoiseKind::none, NoiseKind::salt_pepper, NoiseKind::gaussian, NoiseKind::speckle};
    cfg.kernels = {1, 3, 5, 7};
    const std::vector<NamedImage> inputs = {{"flat", GrayImage::Constant(40, 50, 123.0)}};
    for (auto mode : {FilterMode::adaptive_literal, FilterMode::adaptive_block}) {
        cfg.adaptive_mode = mode;
        const auto rows = run_pipeline(inputs, cfg);
        CHECK(rows.size() == 4u * 4u * 3u * 2u);
        for (const auto& r : rows) CHECK(std::isinf(r.psnr_db));
    }
}

TEST_CASE("run_pipeline rows, order and determinism")
{
    std::mt19937 rng(17);
    const std::vector<NamedImage> inputs = {{"zeta", reference::random_image(rng, 30, 31)},
                                            {"alpha", reference::random_image(rng, 24, 24)}};
    PipelineConfig cfg;
    cfg.noises = {NoiseKind::salt_pepper, NoiseKind::gaussian};
    cfg.kernels = {3, 5};
    const auto rows = run_pipeline(inputs, cfg);
    REQUIRE(rows.size() == 2u * 2u * 2u * 3u * 2u);
    CHECK(rows.front().image == "alpha");
    CHECK(rows.back().image == "zeta");
    CHECK(rows[0].pipeline == Pipeline::square);
    CHECK(rows[0].statistic == Statistic::mean);
    CHECK(rows[1].statistic == Statistic::median);
    CHECK(rows[2].pipeline == Pipeline::variable);
    CHECK(rows[4].pipeline == Pipeline::variable_adaptive);
    CHECK(csv(rows) == csv(run_pipeline(inputs, cfg)));

    const std::string text = csv(rows);
    CHECK(text.rfind("image,noise,pipeline,statistic,kernel,psnr_db\n", 0) == 0);
    CHECK(text.find("\nalpha,salt_pepper,variable-adaptive,median,3,") != std::string::npos);

    cfg.noise.seed = 43;
    CHECK(csv(rows) != csv(run_pipeline(inputs, cfg)));
}

TEST_CASE("pipeline rows match the stages run by hand")
{
    std::mt19937 rng(23);
    const NamedImage in{"img", reference::random_image(rng, 20, 26)};
    PipelineConfig cfg;
    cfg.noises = {NoiseKind::speckle};
    cfg.kernels = {5};
    cfg.adaptive_mode = FilterMode::adaptive_block;
    const MaskSet masks = builtin_masks();
    const auto rows = run_image(in, cfg, masks);

    NoiseSpec spec = cfg.noise;
    spec.kind = NoiseKind::speckle;
    const ScanResult fused = scan_image(in.image, Layout::fused, masks, cfg.criterion);
    const GrayImage noisy = add_noise(fused.image, spec);
    const GrayImage adaptive = adaptive_filter(noisy, block_scoped_labels(fused.labels), 5, Statistic::median);
    const auto& row = rows[5];
    CHECK(row.pipeline == Pipeline::variable_adaptive);
    CHECK(row.statistic == Statistic::median);
    CHECK(row.psnr_db == psnr(in.image, adaptive).psnr_db);
}

TEST_CASE("config validation")
{
    PipelineConfig cfg;
    CHECK_THROWS_AS(validate(cfg), ValidationError);
    cfg.inputs = {"x.pgm"};
    CHECK_NOTHROW(validate(cfg));
    cfg.kernels = {4};
    CHECK_THROWS_AS(validate(cfg), ValidationError);
    cfg.kernels = {5};
    cfg.adaptive_mode = FilterMode::square;
    CHECK_THROWS_AS(validate(cfg), ValidationError);
    cfg.adaptive_mode = FilterMode::adaptive_literal;
    cfg.noises.clear();
    CHECK_THROWS_AS(validate(cfg), ValidationError);
}

TEST_CASE("intermediates are dumped when requested")
{
    const fs::path dir = fs::temp_directory_path() / "vpix_dump_test";
    fs::remove_all(dir);
    PipelineConfig cfg;
    cfg.noises = {NoiseKind::gaussian};
    cfg.statistics = {Statistic::mean};
    cfg.dump_dir = dir;
    cfg.raw_dump = true;
    std::mt19937 rng(3);
    const NamedImage in{"pic", reference::random_image(rng, 12, 12)};
    const auto rows = run_pipeline({in}, cfg);
    CHECK(fs::exists(dir / "pic" / "scan_fused.raw"));
    CHECK(fs::exists(dir / "pic" / "labels_fused.txt"));
    CHECK(fs::exists(dir / "pic" / "noisy_gaussian_square.raw"));
    const GrayImage adaptive = read_raw(dir / "pic" / "filtered_gaussian_variable-adaptive_mean_k5.raw");
    CHECK(psnr(in.image, adaptive).psnr_db == rows[2].psnr_db);
    fs::remove_all(dir);
}

TEST_CASE("shipped fixtures match the generator")
{
    const auto generated = synthetic_fixtures();
    REQUIRE(generated.size() == 5);
    const auto shipped = load_inputs({fs::path(VPIX_FIXTURE_DIR)});
    REQUIRE(shipped.size() == generated.size());
    for (std::size_t i = 0; i < generated.size(); ++i) {
        CHECK(shipped[i].name == generated[i].name);
        CHECK((shipped[i].image == generated[i].image).all());
        CHECK(generated[i].image.rows() == kFixtureSize);
    }
}

TEST_CASE("load_inputs errors")
{
    CHECK_THROWS_AS(load_inputs({}), ValidationError);
    CHECK_THROWS_AS(load_inputs({"/nonexistent/a.pgm"}), IoError);
}
