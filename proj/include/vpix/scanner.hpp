#pragma once

// Square-pixel and variable-pixel scans of a grayscale image.
//
// Every scan works on whole 6x6 blocks. Inside a block each mask region is
// replaced by the mean of the original samples under it, so a scanned image is
// piecewise constant per (block, region). The label map produced alongside
// holds the region bit of every pixel; block_scoped_labels() turns it into
// labels that are unique per (block, region).

#include "vpix/error.hpp"
#include "vpix/image.hpp"
#include "vpix/mask.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace vpix {

enum class SelectionCriterion {
    min_recon_error,     ///< smallest squared deviation from the region means
    min_mean_difference  ///< smallest |mean(region 0) - mean(region 1)|
};

template <typename Scalar>
struct BlockScan {
    Block<Scalar> block;
    Scalar recon_error;  ///< sum of squared deviations over the 36 cells
};

struct MaskChoice {
    int index;
    double score;
};

template <typename Scalar>
struct ScanResultT {
    Image<Scalar> image;
    LabelMap labels;               ///< region bit per pixel
    std::vector<int> chosen_masks;  ///< row-major per block; empty for square and uniform scans
    Eigen::Index blocks_x = 0;
    Eigen::Index blocks_y = 0;
};

using ScanResult = ScanResultT<double>;

/// Replaces each region of `cells` by its mean. Cells may hold a single region;
/// an all-zero grid reproduces the square block mean.
template <typename Derived>
BlockScan<typename Derived::Scalar> apply_partition(const Eigen::ArrayBase<Derived>& block, const MaskCells& cells)
{
    using Scalar = typename Derived::Scalar;
    // Means are accumulated relative to the first sample of each region, so a
    // constant region reproduces its value exactly and rescanning is a no-op.
    Scalar origin[2] = {Scalar(0), Scalar(0)};
    Scalar sum[2] = {Scalar(0), Scalar(0)};
    int count[2] = {0, 0};
    for (int r = 0; r < kBlockSize; ++r)
        for (int c = 0; c < kBlockSize; ++c) {
            const int b = cells(r, c);
            if (count[b]++ == 0) origin[b] = block(r, c);
            sum[b] += block(r, c) - origin[b];
        }
    Scalar mean[2];
    for (int b = 0; b < 2; ++b) mean[b] = count[b] > 0 ? origin[b] + sum[b] / Scalar(count[b]) : Scalar(0);

    BlockScan<Scalar> out{Block<Scalar>{}, Scalar(0)};
    for (int r = 0; r < kBlockSize; ++r)
        for (int c = 0; c < kBlockSize; ++c) {
            out.block(r, c) = mean[cells(r, c)];
            const Scalar d = block(r, c) - out.block(r, c);
            out.recon_error += d * d;
        }
    return out;
}

template <typename Derived>
BlockScan<typename Derived::Scalar> apply_mask_to_block(const Eigen::ArrayBase<Derived>& block, const Mask& m)
{
    return apply_partition(block, m.cells);
}

/// |mean(region 0) - mean(region 1)| of a block that has already been scanned with `cells`.
template <typename Derived>
double scanned_mean_difference(const Eigen::ArrayBase<Derived>& scanned, const MaskCells& cells)
{
    double mean[2] = {0.0, 0.0};
    bool seen[2] = {false, false};
    for (int i = 0; i < kBlockSize * kBlockSize && !(seen[0] && seen[1]); ++i) {
        const int bit = cells(i / kBlockSize, i % kBlockSize);
        if (!seen[bit]) {
            mean[bit] = static_cast<double>(scanned(i / kBlockSize, i % kBlockSize));
            seen[bit] = true;
        }
    }
    return std::abs(mean[0] - mean[1]);
}

inline bool better_score(double candidate, double best) { return candidate < best; }

/// Lowest-scoring mask under `crit`; ties go to the lowest index.
template <typename Derived>
MaskChoice select_mask(const Eigen::ArrayBase<Derived>& block, const MaskSet& set, SelectionCriterion crit)
{
    if (set.empty()) throw ValidationError("select_mask: empty mask set");
    MaskChoice best{-1, 0.0};
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto scan = apply_mask_to_block(block, set[i]);
        const double score = crit == SelectionCriterion::min_recon_error
                                 ? static_cast<double>(scan.recon_error)
                                 : scanned_mean_difference(scan.block, set[i].cells);
        if (best.index < 0 || better_score(score, best.score)) best = {static_cast<int>(i), score};
    }
    return best;
}

namespace detail {

template <typename Scalar>
void require_block_multiple(const Image<Scalar>& img, const char* op)
{
    if (img.rows() == 0 || img.cols() == 0 || img.rows() % kBlockSize != 0 || img.cols() % kBlockSize != 0)
        throw ValidationError(std::string(op) + ": dimensions " + std::to_string(img.cols()) + "x" +
                              std::to_string(img.rows()) + " are not a positive multiple of 6");
}

template <typename Scalar>
ScanResultT<Scalar> empty_result(const Image<Scalar>& img)
{
    ScanResultT<Scalar> res;
    res.image.resize(img.rows(), img.cols());
    res.labels.resize(img.rows(), img.cols());
    res.blocks_x = img.cols() / kBlockSize;
    res.blocks_y = img.rows() / kBlockSize;
    return res;
}

inline void tile_cells(LabelMap& labels, Eigen::Index by, Eigen::Index bx, const MaskCells& cells)
{
    labels.template block<kBlockSize, kBlockSize>(by * kBlockSize, bx * kBlockSize) = cells.cast<std::int32_t>();
}

}  // namespace detail

/// Right/bottom edge replication up to the next multiple of 6.
template <typename Scalar>
Image<Scalar> pad_to_block_multiple(const Image<Scalar>& img)
{
    const auto up = [](Eigen::Index n) { return (n + kBlockSize - 1) / kBlockSize * kBlockSize; };
    return pad_replicate(img, 0, up(img.rows()) - img.rows(), 0, up(img.cols()) - img.cols());
}

/// Square baseline: every 6x6 block replaced by its mean; labels all 0.
template <typename Scalar>
ScanResultT<Scalar> scan_square(const Image<Scalar>& img)
{
    detail::require_block_multiple(img, "scan_square");
    auto res = detail::empty_result(img);
    const MaskCells single = MaskCells::Zero();
    for (Eigen::Index by = 0; by < res.blocks_y; ++by)
        for (Eigen::Index bx = 0; bx < res.blocks_x; ++bx)
            res.image.template block<kBlockSize, kBlockSize>(by * kBlockSize, bx * kBlockSize) =
                apply_partition(img.template block<kBlockSize, kBlockSize>(by * kBlockSize, bx * kBlockSize), single)
                    .block;
    res.labels.setZero();
    return res;
}

/// Every block scanned with the same mask; labels are the mask tiled across the image.
template <typename Scalar>
ScanResultT<Scalar> scan_uniform(const Image<Scalar>& img, const Mask& m)
{
    detail::require_block_multiple(img, "scan_uniform");
    auto res = detail::empty_result(img);
    for (Eigen::Index by = 0; by < res.blocks_y; ++by)
        for (Eigen::Index bx = 0; bx < res.blocks_x; ++bx) {
            res.image.template block<kBlockSize, kBlockSize>(by * kBlockSize, bx * kBlockSize) =
                apply_mask_to_block(img.template block<kBlockSize, kBlockSize>(by * kBlockSize, bx * kBlockSize), m)
                    .block;
            detail::tile_cells(res.labels, by, bx, m.cells);
        }
    return res;
}

/// Per-block select_mask followed by apply_mask_to_block.
template <typename Scalar>
ScanResultT<Scalar> scan_blockwise(const Image<Scalar>& img, const MaskSet& set, SelectionCriterion crit)
{
    detail::require_block_multiple(img, "scan_blockwise");
    if (set.empty()) throw ValidationError("scan_blockwise: empty mask set");
    auto res = detail::empty_result(img);
    res.chosen_masks.reserve(static_cast<std::size_t>(res.blocks_x * res.blocks_y));
    for (Eigen::Index by = 0; by < res.blocks_y; ++by)
        for (Eigen::Index bx = 0; bx < res.blocks_x; ++bx) {
            const auto src = img.template block<kBlockSize, kBlockSize>(by * kBlockSize, bx * kBlockSize);
            const auto choice = select_mask(src, set, crit);
            const Mask& m = set[static_cast<std::size_t>(choice.index)];
            res.image.template block<kBlockSize, kBlockSize>(by * kBlockSize, bx * kBlockSize) =
                apply_mask_to_block(src, m).block;
            detail::tile_cells(res.labels, by, bx, m.cells);
            res.chosen_masks.push_back(choice.index);
        }
    return res;
}

/// The parallel scan array: one uniform scan per mask, then per block the
/// block of the scan that the criterion prefers. Agrees exactly with scan_blockwise.
template <typename Scalar>
ScanResultT<Scalar> scan_parallel_fused(const Image<Scalar>& img, const MaskSet& set, SelectionCriterion crit)
{
    detail::require_block_multiple(img, "scan_parallel_fused");
    if (set.empty()) throw ValidationError("scan_parallel_fused: empty mask set");

    std::vector<ScanResultT<Scalar>> scans;
    scans.reserve(set.size());
    for (const Mask& m : set.masks) scans.push_back(scan_uniform(img, m));

    auto res = detail::empty_result(img);
    res.chosen_masks.reserve(static_cast<std::size_t>(res.blocks_x * res.blocks_y));
    for (Eigen::Index by = 0; by < res.blocks_y; ++by)
        for (Eigen::Index bx = 0; bx < res.blocks_x; ++bx) {
            const Eigen::Index r0 = by * kBlockSize, c0 = bx * kBlockSize;
            const auto src = img.template block<kBlockSize, kBlockSize>(r0, c0);
            int best = -1;
            double best_score = 0.0;
            for (std::size_t i = 0; i < scans.size(); ++i) {
                const auto scanned = scans[i].image.template block<kBlockSize, kBlockSize>(r0, c0);
                double score;
                if (crit == SelectionCriterion::min_recon_error) {
                    Scalar err(0);
                    for (int r = 0; r < kBlockSize; ++r)
                        for (int c = 0; c < kBlockSize; ++c) {
                            const Scalar d = src(r, c) - scanned(r, c);
                            err += d * d;
                        }
                    score = static_cast<double>(err);
                } else {
                    score = scanned_mean_difference(scanned, set[i].cells);
                }
                if (best < 0 || better_score(score, best_score)) {
                    best = static_cast<int>(i);
                    best_score = score;
                }
            }
            const auto& winner = scans[static_cast<std::size_t>(best)];
            res.image.template block<kBlockSize, kBlockSize>(r0, c0) =
                winner.image.template block<kBlockSize, kBlockSize>(r0, c0);
            res.labels.template block<kBlockSize, kBlockSize>(r0, c0) =
                winner.labels.template block<kBlockSize, kBlockSize>(r0, c0);
            res.chosen_masks.push_back(best);
        }
    return res;
}

/// Region labels made unique per block: (block_index * 2 + bit), block_index
/// counted row-major over the 6x6 grid anchored at the top-left pixel.
/// Idempotent, since only the parity of each input label is used.
inline LabelMap block_scoped_labels(const LabelMap& labels)
{
    const Eigen::Index blocks_x = (labels.cols() + kBlockSize - 1) / kBlockSize;
    LabelMap out(labels.rows(), labels.cols());
    for (Eigen::Index r = 0; r < labels.rows(); ++r)
        for (Eigen::Index c = 0; c < labels.cols(); ++c) {
            const auto block = (r / kBlockSize) * blocks_x + c / kBlockSize;
            out(r, c) = static_cast<std::int32_t>(block * 2 + (labels(r, c) & 1));
        }
    return out;
}

/// Top-left `rows` x `cols` corner of a scan; used to undo pad_to_block_multiple.
template <typename Scalar>
ScanResultT<Scalar> crop(const ScanResultT<Scalar>& scan, Eigen::Index rows, Eigen::Index cols)
{
    ScanResultT<Scalar> out = scan;
    out.image = scan.image.topLeftCorner(rows, cols);
    out.labels = scan.labels.topLeftCorner(rows, cols);
    return out;
}

}  // namespace vpix
