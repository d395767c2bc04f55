#pragma once

// Stability of the interconnected chain, H-infinity norms over frequency,
// and the two-band uniform-in-N bound (ellipse bound away from the cut,
// Taylor-constant bound near w = 0).

#include <vector>

#include "masschain/devices.hpp"
#include "masschain/mobius.hpp"

namespace masschain {

struct StabilityReport {
    bool stable = false;
    bool undetermined = false;
    std::string note;
    struct Crossing {
        double omega;
        Complex h;
    };
    std::vector<Crossing> crossings; // h(j omega) values inside the test interval
};

// The chain (any N) is stable when h(jw) avoids (-4, 0).
// Crossings are located by root-finding on the numerator polynomial of
// Im h(jw); lossless devices (Im h identically 0) are handled by interval
// analysis of the real-valued h(w).
StabilityReport stability_check(const DeviceSpec& dev, double mass);
StabilityReport stability_check(const RationalAdmittance& y, double mass);

// Same machinery against the half-open interval [-4, 0) used by the
// bound hypotheses.
StabilityReport interval_avoidance_check(const RationalAdmittance& y, double mass,
                                         double lo, double hi,
                                         bool include_lo, bool include_hi);

// Ellipse bound (1+|zeta|)(1+|zeta|^2)/(1-|zeta|^3) with
// |zeta| = (A - sqrt(A^2-4))/2, A = (|h| + |h+4|)/2.  Requires A > 2.
double ellipse_bound(Complex h);

// Low-frequency band bound
// 2 sqrt(c1+c2+c3) w0 / (1 - exp(-(c2 - w0 c3) pi w0 / (8 c4^2))).
double low_freq_bound(const TaylorConstants& tc);

struct BoundReport {
    TaylorConstants taylor;
    double low_freq_bound = 0.0;
    double a0 = 0.0;        // min over w >= w0 of (|h|+|h+4|)/2
    double zeta0_mod = 0.0; // (A0 - sqrt(A0^2-4))/2
    double high_freq_bound = 0.0;
    double global_bound = 0.0;
    double empirical_sup = 0.0; // diagnostic: max_{i<=5, N in {1,10,50,100,200}} hinf
};

BoundReport global_bound(const DeviceSpec& dev, double mass);
BoundReport global_bound(const RationalAdmittance& y, double mass, double omega1, double omega_char);

// sup over w of |F_N^{(i)}(h(jw))|: log-spaced coarse grid plus
// golden-section refinement of the local maxima.
struct HinfOptions {
    int coarse_points = 2000;
    double omega_lo_factor = 1e-3; // times sqrt(k/m)
    double omega_hi_factor = 1e3;
    double rel_tol = 1e-6;
};
double hinf_norm(const DeviceSpec& dev, double mass, int i, int n, const HinfOptions& opts = {});

// sup over w of max_{i <= N <= n_max} |F_N^{(i)}(h(jw))| (the all-i metric
// along the device locus).
double hinf_norm_max_all(const DeviceSpec& dev, double mass, int n_max, const HinfOptions& opts = {});

std::vector<std::pair<double, Complex>> nyquist_locus(const DeviceSpec& dev, double mass,
                                                      std::span<const double> omegas);

// Log-spaced grid helper shared by the sweeps.
std::vector<double> log_grid(double lo, double hi, int points);

} // namespace masschain
