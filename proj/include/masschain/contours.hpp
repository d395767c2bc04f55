#pragma once

// Rectangular g-plane grids of the convergence/amplification metrics and
// contour extraction by marching squares with linear interpolation.
// Nodes on the cut (g real, Re g <= -1/4, i.e. h in (-4, 0)) are masked so
// the cut does not contaminate interpolated contours.

#include <cstdint>
#include <vector>

#include "masschain/metrics.hpp"

namespace masschain {

enum class GridMetric { AbsZeta, AbsMuPlus1, MaxF_i1, MaxF_allI };

const char* to_string(GridMetric m);

struct GridRegion {
    double re_min = -1.5, re_max = 0.5;
    double im_min = -1.0, im_max = 1.0;
};

using Polyline = std::vector<std::pair<double, double>>; // (Re g, Im g)

struct ContourLevel {
    double level = 0.0;
    std::vector<Polyline> lines;
};

struct GridResult {
    GridRegion region;
    int nx = 0, ny = 0;
    GridMetric metric = GridMetric::AbsZeta;
    int n_max = 200;
    int fixed_i = 1;                 // for the single-i metric
    std::vector<double> values;      // row-major [iy * nx + ix]; sentinel on masked nodes
    std::vector<std::uint8_t> excluded;
    std::vector<ContourLevel> contours;

    static constexpr double kMaskedSentinel = -1.0;

    double g_re(int ix) const { return region.re_min + (region.re_max - region.re_min) * ix / (nx - 1); }
    double g_im(int iy) const { return region.im_min + (region.im_max - region.im_min) * iy / (ny - 1); }
    double value(int ix, int iy) const { return values[static_cast<size_t>(iy) * nx + ix]; }
    bool masked(int ix, int iy) const { return excluded[static_cast<size_t>(iy) * nx + ix] != 0; }
};

// Metric value at a single g-plane point (h = 1/g); g = 0 uses the
// analytic h -> infinity limits.
double metric_at_g(Complex g, GridMetric metric, int n_max, int fixed_i = 1);

GridResult contour_grid(const GridRegion& region, int nx, int ny, GridMetric metric, int n_max,
                        const std::vector<double>& levels, int fixed_i = 1, int workers = 0);

// Marching-squares extraction at one level over an existing grid.
std::vector<Polyline> extract_contour(const GridResult& grid, double level);

} // namespace masschain
