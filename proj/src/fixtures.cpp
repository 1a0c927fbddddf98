#include "vpix/fixtures.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace vpix {

namespace {

using Fn = double (*)(double x, double y);

GrayImage render(Fn f)
{
    GrayImage img(kFixtureSize, kFixtureSize);
    for (int r = 0; r < kFixtureSize; ++r)
        for (int c = 0; c < kFixtureSize; ++c)
            img(r, c) = std::round(std::clamp(f(c + 0.5, r + 0.5), 0.0, 255.0));
    return img;
}

double disk(double x, double y)
{
    const double dx = x - 60.0, dy = y - 68.0;
    const double d = std::hypot(dx, dy);
    const double background = 40.0 + 0.3 * x;
    return d < 38.0 ? 200.0 - 0.8 * d : background;
}

double wedge(double x, double y)
{
    // two half-planes at 30 and 120 degrees over a slow ramp
    const double a = std::tan(std::numbers::pi / 6.0);
    double v = 60.0 + 0.4 * y;
    if (y < a * x + 20.0) v += 90.0;
    if (y > 150.0 - 1.5 * x) v += 60.0;
    return v;
}

double checker(double x, double y)
{
    const double t = 0.5;  // radians
    const double u = std::cos(t) * x + std::sin(t) * y;
    const double v = -std::sin(t) * x + std::cos(t) * y;
    const int cu = static_cast<int>(std::floor(u / 24.0));
    const int cv = static_cast<int>(std::floor(v / 24.0));
    return ((cu + cv) & 1) ? 190.0 : 70.0;
}

bool in_triangle(double x, double y, std::array<double, 6> t)
{
    const auto side = [](double ax, double ay, double bx, double by, double px, double py) {
        return (bx - ax) * (py - ay) - (by - ay) * (px - ax);
    };
    const double d1 = side(t[0], t[1], t[2], t[3], x, y);
    const double d2 = side(t[2], t[3], t[4], t[5], x, y);
    const double d3 = side(t[4], t[5], t[0], t[1], x, y);
    const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
    const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(neg && pos);
}

double polygons(double x, double y)
{
    double v = 110.0;
    if (x > 14 && x < 62 && y > 20 && y < 100) v = 180.0;
    if (in_triangle(x, y, {50, 10, 120, 40, 70, 80})) v = 40.0;
    if (in_triangle(x, y, {20, 120, 110, 70, 100, 125})) v = 230.0;
    if (std::hypot(x - 95.0, y - 95.0) < 14.0) v = 90.0;
    return v;
}

double blobs(double x, double y)
{
    double v = 50.0;
    v += 120.0 * std::exp(-(std::pow(x - 40.0, 2) + std::pow(y - 45.0, 2)) / 700.0);
    v += 90.0 * std::exp(-(std::pow(x - 95.0, 2) + std::pow(y - 80.0, 2)) / 400.0);
    if (x + 0.6 * y > 120.0) v += 45.0;
    if (y - 0.9 * x > 40.0) v -= 30.0;
    return v;
}

}  // namespace

std::vector<NamedImage> synthetic_fixtures()
{
    return {
        {"blobs", render(blobs)},   {"checker", render(checker)}, {"disk", render(disk)},
        {"polygons", render(polygons)}, {"wedge", render(wedge)},
    };
}

}  // namespace vpix
