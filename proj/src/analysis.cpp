#include "masschain/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "masschain/metrics.hpp"

namespace masschain {

namespace {

// Midpoints and boundaries of the intervals of w > 0 where a real-valued
// h(w) = m w R(w)/|n(jw)|^2 falls inside (lo, hi); used for lossless
// devices whose Im h vanishes identically.
std::vector<double> real_h_interval_witnesses(const RationalAdmittance& y, double mass,
                                              double lo, double hi) {
    const Poly nr = y.num.imag_axis_real_part();
    const Poly ni = y.num.imag_axis_imag_part();
    const Poly dr = y.den.imag_axis_real_part();
    const Poly di = y.den.imag_axis_imag_part();
    const Poly r = dr * ni - di * nr;       // h(jw) = m w R(w) / |n|^2 (real)
    const Poly n2 = nr * nr + ni * ni;
    const Poly w_r = Poly{0.0, mass} * r;   // m w R(w)
    // Boundary crossings: h = lo and h = hi.
    Poly bound_lo = w_r - lo * n2;
    Poly bound_hi = w_r - hi * n2;
    std::vector<double> cuts{0.0};
    for (double w : positive_real_roots(bound_lo)) cuts.push_back(w);
    for (double w : positive_real_roots(bound_hi)) cuts.push_back(w);
    for (double w : positive_real_roots(w_r)) cuts.push_back(w);       // h = 0
    for (double w : positive_real_roots(n2)) cuts.push_back(w);        // poles of h
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<double> witnesses;
    auto h_at = [&](double w) { return w_r(w) / n2(w); };
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        const double v = h_at(mid);
        if (v > lo && v < hi) witnesses.push_back(mid);
    }
    // Unbounded tail interval.
    const double tail = cuts.back() + std::max(1.0, cuts.back());
    const double v = h_at(tail);
    if (v > lo && v < hi) witnesses.push_back(tail);
    return witnesses;
}

StabilityReport interval_check_impl(const RationalAdmittance& y, double mass,
                                    double lo, double hi, bool include_lo, bool include_hi) {
    StabilityReport rep;
    const Poly nr = y.num.imag_axis_real_part();
    const Poly ni = y.num.imag_axis_imag_part();
    const Poly dr = y.den.imag_axis_real_part();
    const Poly di = y.den.imag_axis_imag_part();
    // Im h(jw) = m w (dr nr + di ni)/|n|^2.
    const Poly s = dr * nr + di * ni;

    const double tol = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    auto in_interval = [&](double x) {
        const bool above_lo = include_lo ? (x >= lo - tol) : (x > lo);
        const bool below_hi = include_hi ? (x <= hi + tol) : (x < hi);
        return above_lo && below_hi;
    };
    auto h_at = [&](double w) { return h_of_s(y, mass, Complex(0.0, w)); };

    if (s.is_zero()) {
        // h(jw) is real for all w: crossings form intervals.
        for (double w : real_h_interval_witnesses(y, mass, lo, hi))
            rep.crossings.push_back({w, h_at(w)});
        // Endpoint membership of half-closed intervals: boundary touch at lo.
        if (include_lo) {
            const Poly n2 = nr * nr + ni * ni;
            const Poly w_r = Poly{0.0, mass} * (dr * ni - di * nr);
            for (double w : positive_real_roots(w_r - lo * n2)) rep.crossings.push_back({w, h_at(w)});
        }
        rep.stable = rep.crossings.empty();
        return rep;
    }

    for (double w : positive_real_roots(s)) {
        const Complex h = h_at(w);
        if (in_interval(h.real())) rep.crossings.push_back({w, h});
    }
    rep.stable = rep.crossings.empty();
    return rep;
}

double golden_max(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    // Maximize on [a, b] (log-omega coordinates), golden-section.
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (std::abs(b - a) > rel_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return std::max(f1, f2);
}

// Coarse log grid + refinement of every interior local maximum.
double refined_axis_sup(double omega_char, const HinfOptions& opts,
                        const std::function<double(double)>& value_at_omega) {
    const std::vector<double> grid =
        log_grid(opts.omega_lo_factor * omega_char, opts.omega_hi_factor * omega_char, opts.coarse_points);
    std::vector<double> vals(grid.size());
    for (size_t k = 0; k < grid.size(); ++k) vals[k] = value_at_omega(grid[k]);
    double best = *std::max_element(vals.begin(), vals.end());
    auto f_log = [&](double t) { return value_at_omega(std::exp(t)); };
    for (size_t k = 1; k + 1 < grid.size(); ++k) {
        if (vals[k] >= vals[k - 1] && vals[k] >= vals[k + 1]) {
            const double refined =
                golden_max(f_log, std::log(grid[k - 1]), std::log(grid[k + 1]), opts.rel_tol);
            best = std::max(best, refined);
        }
    }
    return best;
}

} // namespace

StabilityReport stability_check(const RationalAdmittance& y, double mass) {
    return interval_check_impl(y, mass, -4.0, 0.0, false, false);
}

StabilityReport stability_check(const DeviceSpec& dev, double mass) {
    const double wc = std::sqrt(dev.k / mass);
    const std::vector<double> grid = log_grid(1e-4 * wc, 1e4 * wc, 512);
    const PositiveRealResult pr = is_positive_real_on_axis(dev, grid);
    if (!pr.ok)
        throw ConfigError("stability_check: device is not positive-real on the axis");
    return stability_check(dev.rational(), mass);
}

StabilityReport interval_avoidance_check(const RationalAdmittance& y, double mass,
                                         double lo, double hi, bool include_lo, bool include_hi) {
    return interval_check_impl(y, mass, lo, hi, include_lo, include_hi);
}

double ellipse_bound(Complex h) {
    const double a = 0.5 * (std::abs(h) + std::abs(h + 4.0));
    if (a <= 2.0 + 1e-14) throw OnCutError("ellipse_bound: h on the cut (A <= 2)");
    const double zmod = 2.0 / (a + std::sqrt(a * a - 4.0));
    return (1.0 + zmod) * (1.0 + zmod * zmod) / (1.0 - zmod * zmod * zmod);
}

double low_freq_bound(const TaylorConstants& tc) {
    const double arg = (tc.c2 - tc.omega0 * tc.c3) * M_PI * tc.omega0 / (8.0 * tc.c4 * tc.c4);
    if (!(arg > 0.0))
        throw DegenerateConstantsError("low_freq_bound: nonpositive exponential argument");
    const double num = 2.0 * std::sqrt(tc.c1 + tc.c2 + tc.c3) * tc.omega0;
    return num / (1.0 - std::exp(-arg));
}

BoundReport global_bound(const RationalAdmittance& y, double mass, double omega1, double omega_char) {
    // Hypotheses: spring term with positive k, Y1(0) > 0, h(jw) avoids [-4, 0).
    const StabilityReport avoid = interval_avoidance_check(y, mass, -4.0, 0.0, true, false);
    if (!avoid.crossings.empty())
        throw HypothesesError("global_bound: h(jw) intersects [-4, 0)");

    BoundReport rep;
    rep.taylor = taylor_constants(y, mass, omega1); // throws HypothesesError if k, Y1(0) invalid
    rep.low_freq_bound = low_freq_bound(rep.taylor);

    // A0 = min over w >= w0 of the ellipse semi-major axis through h(jw).
    auto semi_axis = [&](double w) {
        const Complex h = h_of_s(y, mass, Complex(0.0, w));
        return 0.5 * (std::abs(h) + std::abs(h + 4.0));
    };
    const double w0 = rep.taylor.omega0;
    const std::vector<double> grid = log_grid(w0, 1e4 * omega_char, 2000);
    double a0 = semi_axis(w0);
    size_t best_k = 0;
    for (size_t k = 0; k < grid.size(); ++k) {
        const double v = semi_axis(grid[k]);
        if (v < a0) {
            a0 = v;
            best_k = k;
        }
    }
    // Parabolic refinement in log-omega around an interior grid minimum.
    if (best_k > 0 && best_k + 1 < grid.size()) {
        double t0 = std::log(grid[best_k - 1]), t1 = std::log(grid[best_k]), t2 = std::log(grid[best_k + 1]);
        for (int iter = 0; iter < 40; ++iter) {
            const double f0 = semi_axis(std::exp(t0)), f1 = semi_axis(std::exp(t1)), f2 = semi_axis(std::exp(t2));
            const double den = (t1 - t0) * (f1 - f2) - (t1 - t2) * (f1 - f0);
            if (std::abs(den) < 1e-30) break;
            const double tv = t1 - 0.5 * ((t1 - t0) * (t1 - t0) * (f1 - f2) - (t1 - t2) * (t1 - t2) * (f1 - f0)) / den;
            if (!(tv > t0 && tv < t2)) break;
            const double fv = semi_axis(std::exp(tv));
            a0 = std::min(a0, fv);
            if (fv < f1) {
                if (tv < t1) { t2 = t1; } else { t0 = t1; }
                t1 = tv;
            } else {
                if (tv < t1) t0 = tv; else t2 = tv;
            }
            if (t2 - t0 < 1e-12) break;
        }
    }
    // Tail beyond the grid: |h| growth keeps A increasing for proper rational
    // h; validated per device rather than assumed.
    for (double w : {1e5 * omega_char, 1e6 * omega_char}) a0 = std::min(a0, semi_axis(w));
    rep.a0 = a0;
    if (a0 <= 2.0 + 1e-14)
        throw HypothesesError("global_bound: h(jw) reaches the cut for w >= omega0 (A0 <= 2)");
    rep.zeta0_mod = 2.0 / (a0 + std::sqrt(a0 * a0 - 4.0));
    rep.high_freq_bound =
        (1.0 + rep.zeta0_mod) * (1.0 + rep.zeta0_mod * rep.zeta0_mod) /
        (1.0 - rep.zeta0_mod * rep.zeta0_mod * rep.zeta0_mod);
    rep.global_bound = std::max(rep.low_freq_bound, rep.high_freq_bound);

    // Diagnostic: refined empirical sup over a small (i, N) sample.
    HinfOptions opts;
    double emp = 0.0;
    for (int i = 1; i <= 5; ++i) {
        for (int n : {1, 10, 50, 100, 200}) {
            if (n < i) continue;
            auto value_at = [&](double w) {
                const Complex h = h_of_s(y, mass, Complex(0.0, w));
                return std::abs(F_closed(i, n, h));
            };
            emp = std::max(emp, refined_axis_sup(omega_char, opts, value_at));
        }
    }
    rep.empirical_sup = emp;
    return rep;
}

BoundReport global_bound(const DeviceSpec& dev, double mass) {
    dev.validate();
    return global_bound(dev.rational(), mass, default_omega1(dev, mass), std::sqrt(dev.k / mass));
}

double hinf_norm(const DeviceSpec& dev, double mass, int i, int n, const HinfOptions& opts) {
    if (i < 1 || n < i) throw ConfigError("hinf_norm: need 1 <= i <= N");
    const StabilityReport st = stability_check(dev, mass);
    if (!st.stable) throw InstabilityError("hinf_norm: device fails the stability condition");
    const double wc = std::sqrt(dev.k / mass);
    auto value_at = [&](double w) {
        const Complex h = h_of_s(dev, mass, Complex(0.0, w));
        return std::abs(F_closed(i, n, h));
    };
    return refined_axis_sup(wc, opts, value_at);
}

double hinf_norm_max_all(const DeviceSpec& dev, double mass, int n_max, const HinfOptions& opts) {
    const StabilityReport st = stability_check(dev, mass);
    if (!st.stable) throw InstabilityError("hinf_norm_max_all: device fails the stability condition");
    const double wc = std::sqrt(dev.k / mass);
    auto value_at = [&](double w) {
        const Complex h = h_of_s(dev, mass, Complex(0.0, w));
        return metric_max_F_all(h, n_max);
    };
    return refined_axis_sup(wc, opts, value_at);
}

std::vector<std::pair<double, Complex>> nyquist_locus(const DeviceSpec& dev, double mass,
                                                      std::span<const double> omegas) {
    std::vector<std::pair<double, Complex>> locus;
    locus.reserve(omegas.size());
    for (double w : omegas) locus.emplace_back(w, g_of_s(dev, mass, Complex(0.0, w)));
    return locus;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2) throw ConfigError("log_grid: invalid range");
    std::vector<double> g(static_cast<size_t>(points));
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int k = 0; k < points; ++k)
        g[static_cast<size_t>(k)] = std::exp(llo + (lhi - llo) * k / (points - 1));
    return g;
}

} // namespace masschain
