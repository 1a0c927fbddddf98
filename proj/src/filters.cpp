#include "vpix/filters.hpp"

#include "vpix/scanner.hpp"

namespace vpix {

const char* to_string(Statistic s)
{
    return s == Statistic::mean ? "mean" : "median";
}

const char* to_string(FilterMode m)
{
    switch (m) {
    case FilterMode::square: return "square";
    case FilterMode::adaptive_literal: return "adaptive-literal";
    case FilterMode::adaptive_block: return "adaptive-block";
    }
    return "square";
}

Statistic parse_statistic(const std::string& s)
{
    if (s == "mean") return Statistic::mean;
    if (s == "median") return Statistic::median;
    throw ValidationError("unknown statistic '" + s + "'");
}

FilterMode parse_filter_mode(const std::string& s)
{
    if (s == "square") return FilterMode::square;
    if (s == "adaptive-literal" || s == "adaptive_literal") return FilterMode::adaptive_literal;
    if (s == "adaptive-block" || s == "adaptive_block") return FilterMode::adaptive_block;
    throw ValidationError("unknown filter mode '" + s + "'");
}

GrayImage apply_filter(const GrayImage& img, const LabelMap& labels, const FilterSpec& spec)
{
    switch (spec.mode) {
    case FilterMode::square: return box_filter(img, spec.kernel, spec.statistic);
    case FilterMode::adaptive_literal: return adaptive_filter(img, labels, spec.kernel, spec.statistic);
    case FilterMode::adaptive_block:
        return adaptive_filter(img, block_scoped_labels(labels), spec.kernel, spec.statistic);
    }
    return img;
}

}  // namespace vpix
