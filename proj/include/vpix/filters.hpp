#pragma once

// Square and shape-adaptive sliding-window filters.
//
// Windows are k x k, centred on the output pixel, over an edge-replicated
// padding of the image (and of the label map). The adaptive filter keeps only
// the window pixels whose label equals the centre (anchor) label, then takes
// their mean or median. Candidates are always visited in row-major window
// order, so mean outputs are reproducible bit-for-bit.

#include "vpix/error.hpp"
#include "vpix/image.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

namespace vpix {

enum class Statistic { mean, median };
enum class FilterMode { square, adaptive_literal, adaptive_block };

const char* to_string(Statistic s);
const char* to_string(FilterMode m);
Statistic parse_statistic(const std::string& s);
FilterMode parse_filter_mode(const std::string& s);

struct FilterSpec {
    int kernel = 5;
    Statistic statistic = Statistic::mean;
    FilterMode mode = FilterMode::adaptive_literal;
};

/// Median that reorders `values` in place. Even counts give the midpoint of the two middle values.
template <typename Scalar>
Scalar median_inplace(std::span<Scalar> values)
{
    if (values.empty()) throw ValidationError("median of an empty set");
    const std::size_t n = values.size();
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(values.begin(), mid, values.end());
    if (n % 2 == 1) return *mid;
    const Scalar lower = *std::max_element(values.begin(), mid);
    return (lower + *mid) / Scalar(2);
}

template <typename Scalar>
Scalar median(std::vector<Scalar> values)
{
    return median_inplace(std::span<Scalar>(values));
}

inline void require_kernel(int k)
{
    if (k < 1 || k % 2 == 0) throw ValidationError("kernel size must be odd and >= 1, got " + std::to_string(k));
}

namespace detail {

// Shared window walk. `keep(pr, pc)` decides whether padded position (pr, pc)
// joins the candidate set of the current output pixel.
template <typename Scalar, typename Keep>
Image<Scalar> window_filter(const Image<Scalar>& padded, Eigen::Index rows, Eigen::Index cols, int k,
                            Statistic stat, Keep&& keep)
{
    Image<Scalar> out(rows, cols);
    std::vector<Scalar> buf(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            const int half = k / 2;
            const Eigen::Index ar = r + half, ac = c + half;
            if (stat == Statistic::mean) {
                Scalar sum(0);
                int n = 0;
                for (Eigen::Index wr = r; wr < r + k; ++wr) {
                    const Scalar* row = padded.data() + wr * padded.cols();
                    for (Eigen::Index wc = c; wc < c + k; ++wc)
                        if (keep(ar, ac, wr, wc)) {
                            sum += row[wc];
                            ++n;
                        }
                }
                out(r, c) = sum / Scalar(n);
            } else {
                std::size_t n = 0;
                for (Eigen::Index wr = r; wr < r + k; ++wr) {
                    const Scalar* row = padded.data() + wr * padded.cols();
                    for (Eigen::Index wc = c; wc < c + k; ++wc)
                        if (keep(ar, ac, wr, wc)) buf[n++] = row[wc];
                }
                out(r, c) = median_inplace(std::span<Scalar>(buf.data(), n));
            }
        }
    }
    return out;
}

}  // namespace detail

/// Plain k x k mean or median.
template <typename Scalar>
Image<Scalar> box_filter(const Image<Scalar>& img, int k, Statistic stat)
{
    require_kernel(k);
    const int half = k / 2;
    const auto padded = pad_replicate(img, half, half, half, half);
    return detail::window_filter(padded, img.rows(), img.cols(), k, stat,
                                 [](Eigen::Index, Eigen::Index, Eigen::Index, Eigen::Index) { return true; });
}

/// Mean or median over the window pixels that share the anchor's label.
template <typename Scalar>
Image<Scalar> adaptive_filter(const Image<Scalar>& img, const LabelMap& labels, int k, Statistic stat)
{
    require_kernel(k);
    if (labels.rows() != img.rows() || labels.cols() != img.cols())
        throw ValidationError("adaptive_filter: label map is " + std::to_string(labels.cols()) + "x" +
                              std::to_string(labels.rows()) + ", image is " + std::to_string(img.cols()) + "x" +
                              std::to_string(img.rows()));
    const int half = k / 2;
    const auto padded = pad_replicate(img, half, half, half, half);
    const LabelMap plabels = pad_replicate(labels, half, half, half, half);
    return detail::window_filter(padded, img.rows(), img.cols(), k, stat,
                                 [&plabels](Eigen::Index ar, Eigen::Index ac, Eigen::Index wr, Eigen::Index wc) {
                                     return plabels(wr, wc) == plabels(ar, ac);
                                 });
}

/// Dispatch on the spec's mode. `labels` are region bits (or already block-scoped
/// labels); adaptive_block scopes them per 6x6 block before filtering.
GrayImage apply_filter(const GrayImage& img, const LabelMap& labels, const FilterSpec& spec);

}  // namespace vpix
