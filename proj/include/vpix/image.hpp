#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>

namespace vpix {

/// Row-major dense raster; rows() is the height, cols() the width.
template <typename Scalar>
using Image = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Real-valued grayscale intensities on the [0, 255] scale.
using GrayImage = Image<double>;

/// Per-pixel region label aligned with a GrayImage.
using LabelMap = Image<std::int32_t>;

/// Side length of a scan block / mask.
inline constexpr int kBlockSize = 6;

template <typename Scalar>
using Block = Eigen::Array<Scalar, kBlockSize, kBlockSize, Eigen::RowMajor>;

/// Edge-replicated padding: `top`/`left` rows and columns before, `bottom`/`right` after.
template <typename Derived>
Image<typename Derived::Scalar> pad_replicate(const Eigen::DenseBase<Derived>& src, Eigen::Index top,
                                              Eigen::Index bottom, Eigen::Index left, Eigen::Index right)
{
    const Eigen::Index h = src.rows();
    const Eigen::Index w = src.cols();
    Image<typename Derived::Scalar> out(h + top + bottom, w + left + right);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
        const Eigen::Index sr = std::clamp<Eigen::Index>(r - top, 0, h - 1);
        for (Eigen::Index c = 0; c < out.cols(); ++c)
            out(r, c) = src(sr, std::clamp<Eigen::Index>(c - left, 0, w - 1));
    }
    return out;
}

/// Clamp every sample into [0, 255].
template <typename Derived>
auto clip_intensity(const Eigen::ArrayBase<Derived>& a)
{
    using S = typename Derived::Scalar;
    return a.max(S(0)).min(S(255));
}

}  // namespace vpix
