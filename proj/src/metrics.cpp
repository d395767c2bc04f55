#include "masschain/metrics.hpp"

#include <cmath>
#include <limits>

namespace masschain {

namespace {

// |F_N^{(i)}|^2 = |1-zeta|^2 r2^{i-1} |1-zeta^{2(N-i+1)}|^2 / |1+zeta^{2N+1}|^2
// with r2 = |zeta|^2.  For fixed N the inner max over i satisfies
//   best(N) = max(|1-zeta^{2N}|^2, r2 * best(N-1)),
// which gives the max over all pairs in a single pass over N.
constexpr double kDenFloor = 1e-280;

} // namespace

double metric_max_F(int i, Complex h, int n_max) {
    if (i < 1 || n_max < i) throw ConfigError("metric_max_F: need 1 <= i <= N_max");
    const Complex z = zeta(h);
    const Complex z2 = z * z;
    const double mu2 = std::norm(complex_ipow(z, i - 1) * (1.0 - z));
    Complex a = z2;                          // zeta^{2(N-i+1)}
    Complex p = complex_ipow(z, 2L * i + 1); // zeta^{2N+1}
    double best = 0.0;
    for (int n = i; n <= n_max; ++n) {
        const double den = std::norm(1.0 + p);
        const double v = den < kDenFloor ? std::numeric_limits<double>::infinity()
                                         : mu2 * std::norm(1.0 - a) / den;
        if (v > best) best = v;
        a *= z2;
        p *= z2;
    }
    return std::sqrt(best);
}

double metric_max_F_all(Complex h, int n_max) {
    if (n_max < 1) throw ConfigError("metric_max_F_all: N_max must be >= 1");
    const Complex z = zeta(h);
    const Complex z2 = z * z;
    const double r2 = std::norm(z);
    const double mu1_2 = std::norm(1.0 - z);
    Complex a = z2;     // zeta^{2N}
    Complex p = z2 * z; // zeta^{2N+1}
    double best_inner = 0.0;
    double best = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        best_inner = std::max(std::norm(1.0 - a), r2 * best_inner);
        const double den = std::norm(1.0 + p);
        const double v = den < kDenFloor ? std::numeric_limits<double>::infinity()
                                         : mu1_2 * best_inner / den;
        if (v > best) best = v;
        a *= z2;
        p *= z2;
    }
    return std::sqrt(best);
}

void max_F_per_N(Complex h, std::span<double> out) {
    const int n_max = static_cast<int>(out.size());
    if (n_max == 0) return;
    const Complex z = zeta(h);
    const Complex z2 = z * z;
    const double r2 = std::norm(z);
    const double mu1_2 = std::norm(1.0 - z);
    Complex a = z2;
    Complex p = z2 * z;
    double best_inner = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        best_inner = std::max(std::norm(1.0 - a), r2 * best_inner);
        const double den = std::norm(1.0 + p);
        out[static_cast<size_t>(n - 1)] = den < kDenFloor
                                              ? std::numeric_limits<double>::infinity()
                                              : std::sqrt(mu1_2 * best_inner / den);
        a *= z2;
        p *= z2;
    }
}

} // namespace masschain
