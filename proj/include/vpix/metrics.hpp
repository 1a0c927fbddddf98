#pragma once

#include "vpix/error.hpp"

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <string>

namespace vpix {

struct QualityReport {
    double mse = 0.0;
    double psnr_db = std::numeric_limits<double>::infinity();  ///< +inf when mse == 0

    bool infinite() const { return std::isinf(psnr_db); }
};

template <typename DerivedA, typename DerivedB>
double mse(const Eigen::ArrayBase<DerivedA>& a, const Eigen::ArrayBase<DerivedB>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("mse: dimension mismatch (" + std::to_string(a.cols()) + "x" + std::to_string(a.rows()) +
                              " vs " + std::to_string(b.cols()) + "x" + std::to_string(b.rows()) + ")");
    if (a.size() == 0) throw ValidationError("mse: empty images");
    return (a.template cast<double>() - b.template cast<double>()).square().sum() / static_cast<double>(a.size());
}

inline double psnr_from_mse(double mse_value, double peak = 255.0)
{
    if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / mse_value);
}

template <typename DerivedA, typename DerivedB>
QualityReport psnr(const Eigen::ArrayBase<DerivedA>& a, const Eigen::ArrayBase<DerivedB>& b, double peak = 255.0)
{
    QualityReport q;
    q.mse = mse(a, b);
    q.psnr_db = psnr_from_mse(q.mse, peak);
    return q;
}

/// "inf" for the sentinel, otherwise fixed-point with six decimals.
std::string format_psnr(double psnr_db);

}  // namespace vpix
