#include "masschain/chain.hpp"

#include <algorithm>
#include <cmath>

namespace masschain {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Relative threshold: |d_N| below this fraction of the largest |d_i|
// counts as singular.
constexpr double kSingularRel = 1e-12;

} // namespace

DSequence::DSequence(Complex h, int i_max) : h_(h) {
    if (i_max < 1) throw ConfigError("d_seq: i_max must be >= 1");
    values_.reserve(static_cast<size_t>(i_max) + 2);
    values_.push_back({1.0, 0.0}); // d_{-1}
    values_.push_back({1.0, 0.0}); // d_0
    values_.push_back(h + 1.0);    // d_1
    const Complex w = h + 2.0;
    for (int i = 2; i <= i_max; ++i) {
        const Complex next = w * values_[values_.size() - 1] - values_[values_.size() - 2];
        if (!finite(next))
            throw OverflowError("d_seq: magnitude overflow at i=" + std::to_string(i));
        values_.push_back(next);
    }
    for (const Complex& v : values_) max_abs_ = std::max(max_abs_, std::abs(v));
}

DSequence d_seq(Complex h, int i_max) { return DSequence(h, i_max); }

Eigen::MatrixXd build_H(int n) {
    if (n < 1) throw ConfigError("build_H: N must be >= 1");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int r = 0; r < n; ++r) {
        m(r, r) = (r == n - 1) ? -1.0 : -2.0;
        if (r + 1 < n) {
            m(r, r + 1) = 1.0;
            m(r + 1, r) = 1.0;
        }
    }
    return m;
}

std::vector<Complex> solve_chain_direct(Complex h, int n) {
    const DSequence d = d_seq(h, n);
    if (std::abs(d[n]) < kSingularRel * d.max_abs())
        throw SingularSystemError("solve_chain_direct: d_N(h) ~ 0, h is at or near an eigenvalue of H_N");
    std::vector<Complex> x(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) x[static_cast<size_t>(j - 1)] = d[n - j] / d[n];
    return x;
}

Complex intermass_tf_direct(Complex h, const ChainConfig& cfg) {
    cfg.validate();
    const DSequence d = d_seq(h, cfg.n);
    if (std::abs(d[cfg.n]) < kSingularRel * d.max_abs())
        throw SingularSystemError("intermass_tf_direct: d_N(h) ~ 0, h is at or near an eigenvalue of H_N");
    return (d[cfg.n - cfg.i] - d[cfg.n - cfg.i + 1]) / d[cfg.n];
}

Complex p_identity(int n, int i, Complex h) {
    if (i < 1 || i > n) throw ConfigError("p_identity: need 1 <= i <= N");
    const DSequence d = d_seq(h, n + 1);
    const Complex delta1 = d[n - i + 1] - d[n - i];
    const Complex delta2 = d[n - i] - d[n - i - 1];
    const Complex prod1 = delta1 * delta2;
    const Complex prod2 = delta1 * d[n - 1] * d[i];
    const Complex prod3 = d[n] * d[i - 2] * delta2;
    const Complex prod4 = h * d[n - 1] * d[n];
    const Complex p = prod1 + prod2 - prod3 - prod4;
    const double scale = std::max({std::abs(prod1), std::abs(prod2), std::abs(prod3), std::abs(prod4)});
    if (scale < 1e-300) return p;
    return p / scale;
}

double dist_to_cut(Complex h) {
    if (h.real() < -4.0) return std::abs(h - Complex(-4.0, 0.0));
    if (h.real() > 0.0) return std::abs(h);
    return std::abs(h.imag());
}

} // namespace masschain
