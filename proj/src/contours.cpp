#include "masschain/contours.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

namespace masschain {

const char* to_string(GridMetric m) {
    switch (m) {
        case GridMetric::AbsZeta: return "abs_zeta";
        case GridMetric::AbsMuPlus1: return "abs_mu_plus_1";
        case GridMetric::MaxF_i1: return "max_f_single_i";
        case GridMetric::MaxF_allI: return "max_f_all_i";
    }
    return "?";
}

double metric_at_g(Complex g, GridMetric metric, int n_max, int fixed_i) {
    if (g == Complex(0.0, 0.0)) {
        // h -> infinity: zeta -> 0, mu_+^{(1)} -> 1, F_N^{(1)} -> 1.
        switch (metric) {
            case GridMetric::AbsZeta: return 0.0;
            case GridMetric::AbsMuPlus1: return 1.0;
            case GridMetric::MaxF_i1: return fixed_i == 1 ? 1.0 : 0.0;
            case GridMetric::MaxF_allI: return 1.0;
        }
    }
    const Complex h = 1.0 / g;
    switch (metric) {
        case GridMetric::AbsZeta: return metric_abs_zeta(h);
        case GridMetric::AbsMuPlus1: return metric_abs_mu1(h);
        case GridMetric::MaxF_i1: return metric_max_F(fixed_i, h, n_max);
        case GridMetric::MaxF_allI: return metric_max_F_all(h, n_max);
    }
    return 0.0;
}

GridResult contour_grid(const GridRegion& region, int nx, int ny, GridMetric metric, int n_max,
                        const std::vector<double>& levels, int fixed_i, int workers) {
    if (nx < 2 || ny < 2) throw ConfigError("contour_grid: resolution must be at least 2x2");
    if (n_max < 1) throw ConfigError("contour_grid: N_max must be >= 1");
    if (!(region.re_max > region.re_min) || !(region.im_max > region.im_min))
        throw ConfigError("contour_grid: malformed region");

    GridResult grid;
    grid.region = region;
    grid.nx = nx;
    grid.ny = ny;
    grid.metric = metric;
    grid.n_max = n_max;
    grid.fixed_i = fixed_i;
    grid.values.assign(static_cast<size_t>(nx) * ny, 0.0);
    grid.excluded.assign(static_cast<size_t>(nx) * ny, 0);

    const double cell_h = (region.im_max - region.im_min) / (ny - 1);
    auto fill_row = [&](int iy) {
        const double gi = grid.g_im(iy);
        for (int ix = 0; ix < nx; ++ix) {
            const double gr = grid.g_re(ix);
            const size_t idx = static_cast<size_t>(iy) * nx + ix;
            if (gr <= -0.25 && std::abs(gi) < 0.5 * cell_h) {
                grid.excluded[idx] = 1;
                grid.values[idx] = GridResult::kMaskedSentinel;
                continue;
            }
            grid.values[idx] = metric_at_g(Complex(gr, gi), metric, n_max, fixed_i);
        }
    };

    int nthreads = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::clamp(nthreads, 1, ny);
    if (nthreads == 1) {
        for (int iy = 0; iy < ny; ++iy) fill_row(iy);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t]() {
                for (int iy = t; iy < ny; iy += nthreads) fill_row(iy);
            });
        }
        for (auto& th : pool) th.join();
    }

    grid.contours.reserve(levels.size());
    for (double level : levels) grid.contours.push_back({level, extract_contour(grid, level)});
    return grid;
}

namespace {

// A contour vertex lives on a unique grid edge; keying segments by edge ids
// makes stitching exact (shared edges produce identical interpolants).
struct EdgeId {
    int ix, iy;
    bool vertical;
    auto operator<=>(const EdgeId&) const = default;
};

struct Segment {
    EdgeId a, b;
};

std::pair<double, double> edge_point(const GridResult& g, const EdgeId& e, double level) {
    const double v0 = g.value(e.ix, e.iy);
    const double x0 = g.g_re(e.ix), y0 = g.g_im(e.iy);
    double v1, x1, y1;
    if (e.vertical) {
        v1 = g.value(e.ix, e.iy + 1);
        x1 = x0;
        y1 = g.g_im(e.iy + 1);
    } else {
        v1 = g.value(e.ix + 1, e.iy);
        x1 = g.g_re(e.ix + 1);
        y1 = y0;
    }
    double t = (v1 == v0) ? 0.5 : (level - v0) / (v1 - v0);
    t = std::clamp(t, 0.0, 1.0);
    return {x0 + t * (x1 - x0), y0 + t * (y1 - y0)};
}

} // namespace

std::vector<Polyline> extract_contour(const GridResult& grid, double level) {
    std::vector<Segment> segments;
    for (int iy = 0; iy + 1 < grid.ny; ++iy) {
        for (int ix = 0; ix + 1 < grid.nx; ++ix) {
            if (grid.masked(ix, iy) || grid.masked(ix + 1, iy) || grid.masked(ix, iy + 1) ||
                grid.masked(ix + 1, iy + 1))
                continue;
            const double v00 = grid.value(ix, iy), v10 = grid.value(ix + 1, iy);
            const double v01 = grid.value(ix, iy + 1), v11 = grid.value(ix + 1, iy + 1);
            if (!std::isfinite(v00) || !std::isfinite(v10) || !std::isfinite(v01) || !std::isfinite(v11))
                continue;
            int idx = 0;
            if (v00 >= level) idx |= 1;
            if (v10 >= level) idx |= 2;
            if (v11 >= level) idx |= 4;
            if (v01 >= level) idx |= 8;
            if (idx == 0 || idx == 15) continue;

            const EdgeId south{ix, iy, false};
            const EdgeId north{ix, iy + 1, false};
            const EdgeId west{ix, iy, true};
            const EdgeId east{ix + 1, iy, true};
            auto add = [&](EdgeId a, EdgeId b) { segments.push_back({a, b}); };
            switch (idx) {
                case 1: case 14: add(west, south); break;
                case 2: case 13: add(south, east); break;
                case 3: case 12: add(west, east); break;
                case 4: case 11: add(east, north); break;
                case 6: case 9:  add(south, north); break;
                case 7: case 8:  add(north, west); break;
                case 5: case 10: {
                    // Saddle: disambiguate with the cell-centre average.
                    const double centre = 0.25 * (v00 + v10 + v01 + v11);
                    const bool centre_in = centre >= level;
                    if ((idx == 5) == centre_in) {
                        add(west, south);
                        add(east, north);
                    } else {
                        add(west, north);
                        add(east, south);
                    }
                    break;
                }
                default: break;
            }
        }
    }

    // Stitch segments into polylines; maps keyed by EdgeId keep the result
    // deterministic.
    std::multimap<EdgeId, size_t> by_end;
    for (size_t k = 0; k < segments.size(); ++k) {
        by_end.emplace(segments[k].a, k);
        by_end.emplace(segments[k].b, k);
    }
    std::vector<bool> used(segments.size(), false);
    std::vector<Polyline> lines;

    auto take_next = [&](const EdgeId& at) -> long {
        auto [lo, hi] = by_end.equal_range(at);
        for (auto it = lo; it != hi; ++it) {
            if (!used[it->second]) return static_cast<long>(it->second);
        }
        return -1;
    };

    for (size_t start = 0; start < segments.size(); ++start) {
        if (used[start]) continue;
        used[start] = true;
        std::vector<EdgeId> chain{segments[start].a, segments[start].b};
        // Extend forward from the back, then backward from the front.
        for (int dir = 0; dir < 2; ++dir) {
            while (true) {
                const EdgeId tip = dir == 0 ? chain.back() : chain.front();
                const long next = take_next(tip);
                if (next < 0) break;
                used[static_cast<size_t>(next)] = true;
                const Segment& s = segments[static_cast<size_t>(next)];
                const EdgeId other = (s.a == tip) ? s.b : s.a;
                if (dir == 0)
                    chain.push_back(other);
                else
                    chain.insert(chain.begin(), other);
            }
        }
        Polyline line;
        line.reserve(chain.size());
        for (const EdgeId& e : chain) line.push_back(edge_point(grid, e, level));
        lines.push_back(std::move(line));
    }
    return lines;
}

} // namespace masschain
