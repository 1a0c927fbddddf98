#include "vpix/metrics.hpp"

#include <cstdio>

namespace vpix {

std::string format_psnr(double psnr_db)
{
    if (std::isinf(psnr_db)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", psnr_db);
    return buf;
}

}  // namespace vpix
