#include "vpix/error.hpp"
#include "vpix/noise.hpp"

#include "reference.hpp"

#include <doctest.h>

#include <cmath>

using namespace vpix;

TEST_CASE("salt and pepper")
{
    std::mt19937 rng(1);
    const GrayImage img = reference::random_image(rng, 64, 64).max(1.0).min(254.0);

    CHECK((add_salt_pepper(img, 0.0, 5) == img).all());

    const GrayImage full = add_salt_pepper(img, 1.0, 5);
    CHECK(((full == 0.0) || (full == 255.0)).all());
    CHECK((full == 0.0).count() > 0);
    CHECK((full == 255.0).count() > 0);

    CHECK_THROWS_AS(add_salt_pepper(img, -0.1, 5), ValidationError);
    CHECK_THROWS_AS(add_salt_pepper(img, 1.5, 5), ValidationError);
}

TEST_CASE("salt and pepper corruption count is binomial")
{
    // n = 512^2, p = 0.05: mean 13107.2, sigma = sqrt(n p (1 - p)) ~= 111.6
    const GrayImage gray = GrayImage::Constant(512, 512, 128.0);
    const GrayImage noisy = add_salt_pepper(gray, 0.05, 42);
    const double n = 512.0 * 512.0;
    const double sigma = std::sqrt(n * 0.05 * 0.95);
    const auto corrupted = static_cast<double>((noisy != 128.0).count());
    CHECK(std::abs(corrupted - n * 0.05) <= 4.0 * sigma);
    CHECK(sigma == doctest::Approx(111.6).epsilon(1e-3));
}

TEST_CASE("gaussian")
{
    std::mt19937 rng(2);
    const GrayImage img = reference::random_image(rng, 32, 32);
    CHECK((add_gaussian(img, 0.0, 9) == img).all());

    const GrayImage a = add_gaussian(img, 20.0, 9);
    const GrayImage b = add_gaussian(img, 20.0, 9);
    const GrayImage c = add_gaussian(img, 20.0, 10);
    CHECK((a == b).all());
    CHECK((a != c).any());
    CHECK((a >= 0.0).all());
    CHECK((a <= 255.0).all());

    // sample mean of 512^2 draws with sigma 10 lies within 4 * 10 / 512 of 128
    const GrayImage flat = GrayImage::Constant(512, 512, 128.0);
    const GrayImage noisy = add_gaussian(flat, 10.0, 42);
    CHECK(std::abs(noisy.mean() - 128.0) <= 4.0 * 10.0 / 512.0);
    const double sd = std::sqrt((noisy - noisy.mean()).square().mean());
    CHECK(sd == doctest::Approx(10.0).epsilon(0.02));
    CHECK_THROWS_AS(add_gaussian(flat, -1.0, 1), ValidationError);
}

TEST_CASE("speckle")
{
    std::mt19937 rng(3);
    const GrayImage img = reference::random_image(rng, 32, 32);
    CHECK((add_speckle(img, 0.0, 4) == img).all());
    CHECK((add_speckle(GrayImage(GrayImage::Zero(16, 16)), 0.5, 4) == 0.0).all());
    CHECK((add_speckle(img, 0.04, 4) == add_speckle(img, 0.04, 4)).all());
    CHECK((add_speckle(img, 0.04, 4) != add_speckle(img, 0.04, 5)).any());

    // per-pixel std-dev is 100 * sqrt(0.04) = 20
    const GrayImage flat = GrayImage::Constant(512, 512, 100.0);
    const GrayImage noisy = add_speckle(flat, 0.04, 42);
    const double sd = std::sqrt((noisy - noisy.mean()).square().mean());
    CHECK(std::abs(sd - 20.0) <= 0.05 * 20.0);
    CHECK(((noisy >= 0.0) && (noisy <= 255.0)).all());
    CHECK_THROWS_AS(add_speckle(flat, -0.1, 1), ValidationError);
}

TEST_CASE("noise source")
{
    NoiseSource a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        const double u = a.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(u == b.uniform());
    }
    // the first uniform is the top 53 bits of the first mt19937_64 output
    std::mt19937_64 engine(7);
    NoiseSource c(7);
    CHECK(c.uniform() == static_cast<double>(engine() >> 11) / 9007199254740992.0);
}

TEST_CASE("add_noise dispatch")
{
    const GrayImage img = GrayImage::Constant(6, 6, 50.0);
    NoiseSpec spec;
    CHECK((add_noise(img, spec) == img).all());
    spec.kind = NoiseKind::gaussian;
    CHECK((add_noise(img, spec) == add_gaussian(img, spec.sigma, spec.seed)).all());
    CHECK(parse_noise_kind("salt_pepper") == NoiseKind::salt_pepper);
    CHECK(std::string(to_string(NoiseKind::speckle)) == "speckle");
    CHECK_THROWS_AS(parse_noise_kind("poisson"), ValidationError);
}
