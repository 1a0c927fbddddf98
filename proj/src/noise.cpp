#include "vpix/noise.hpp"

#include "vpix/error.hpp"

#include <cmath>

namespace vpix {

const char* to_string(NoiseKind kind)
{
    switch (kind) {
    case NoiseKind::none: return "none";
    case NoiseKind::salt_pepper: return "salt_pepper";
    case NoiseKind::gaussian: return "gaussian";
    case NoiseKind::speckle: return "speckle";
    }
    return "none";
}

NoiseKind parse_noise_kind(const std::string& s)
{
    if (s == "none") return NoiseKind::none;
    if (s == "salt_pepper" || s == "salt-pepper" || s == "sp") return NoiseKind::salt_pepper;
    if (s == "gaussian") return NoiseKind::gaussian;
    if (s == "speckle") return NoiseKind::speckle;
    throw ValidationError("unknown noise kind '" + s + "'");
}

double NoiseSource::normal()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

GrayImage add_salt_pepper(const GrayImage& img, double density, std::uint64_t seed)
{
    if (!(density >= 0.0 && density <= 1.0))
        throw ValidationError("salt & pepper density must lie in [0, 1], got " + std::to_string(density));
    NoiseSource rng(seed);
    GrayImage out = img;
    for (Eigen::Index i = 0; i < out.size(); ++i)
        if (rng.uniform() < density) out.data()[i] = rng.uniform() < 0.5 ? 0.0 : 255.0;
    return out;
}

GrayImage add_gaussian(const GrayImage& img, double sigma, std::uint64_t seed)
{
    if (!(sigma >= 0.0)) throw ValidationError("gaussian sigma must be >= 0");
    NoiseSource rng(seed);
    GrayImage out(img.rows(), img.cols());
    for (Eigen::Index i = 0; i < out.size(); ++i) out.data()[i] = img.data()[i] + sigma * rng.normal();
    return clip_intensity(out);
}

GrayImage add_speckle(const GrayImage& img, double variance, std::uint64_t seed)
{
    if (!(variance >= 0.0)) throw ValidationError("speckle variance must be >= 0");
    const double sd = std::sqrt(variance);
    NoiseSource rng(seed);
    GrayImage out(img.rows(), img.cols());
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        const double x = img.data()[i];
        out.data()[i] = x + x * sd * rng.normal();
    }
    return clip_intensity(out);
}

GrayImage add_noise(const GrayImage& img, const NoiseSpec& spec)
{
    switch (spec.kind) {
    case NoiseKind::none: return img;
    case NoiseKind::salt_pepper: return add_salt_pepper(img, spec.density, spec.seed);
    case NoiseKind::gaussian: return add_gaussian(img, spec.sigma, spec.seed);
    case NoiseKind::speckle: return add_speckle(img, spec.variance, spec.seed);
    }
    return img;
}

}  // namespace vpix
