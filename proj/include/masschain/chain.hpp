#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "masschain/errors.hpp"

namespace masschain {

using Complex = std::complex<double>;

// Chain description: N identical masses m, intermass index i (1 <= i <= N).
struct ChainConfig {
    double mass = 1.0;
    int n = 1;
    int i = 1;

    void validate() const {
        if (!(mass > 0.0)) throw ConfigError("chain: mass must be positive");
        if (n < 1) throw ConfigError("chain: N must be >= 1");
        if (i < 1 || i > n) throw ConfigError("chain: need 1 <= i <= N");
    }
};

// The sequence d_{-1}, d_0, ..., d_imax of characteristic polynomials of
// H_i evaluated at a fixed complex h.  d_{-1} = d_0 = 1, d_1 = h + 1 and
// d_i = (h+2) d_{i-1} - d_{i-2}.
class DSequence {
  public:
    DSequence(Complex h, int i_max);

    Complex h() const { return h_; }
    int i_max() const { return static_cast<int>(values_.size()) - 2; }

    // Valid for -1 <= i <= i_max().
    Complex operator[](int i) const { return values_[static_cast<size_t>(i + 1)]; }

    const std::vector<Complex>& values() const { return values_; }

    // max_i |d_i| over the stored range; scale for singularity thresholds.
    double max_abs() const { return max_abs_; }

  private:
    Complex h_;
    std::vector<Complex> values_;
    double max_abs_ = 0.0;
};

DSequence d_seq(Complex h, int i_max);

// The N x N symmetric tridiagonal matrix of the chain: diagonal
// (-2, ..., -2, -1), super/sub-diagonals 1.
Eigen::MatrixXd build_H(int n);

// Solves (h I_N - H_N) x = e_1; component j (1-based) equals d_{N-j}/d_N.
std::vector<Complex> solve_chain_direct(Complex h, int n);

// Transfer function x0 -> delta_i for a chain of length N:
// T = (d_{N-i} - d_{N-i+1}) / d_N.  Note -T = F_N^{(i)}.
Complex intermass_tf_direct(Complex h, const ChainConfig& cfg);

// Consistency identity p(N,i) linking the length-N and length-(N-1)
// transfer functions, normalized by the largest intermediate product
// magnitude.  Must be ~0 for all 1 <= i <= N; test oracle only.
Complex p_identity(int n, int i, Complex h);

// Distance from h to the interval [-4, 0] on the real axis.
double dist_to_cut(Complex h);

} // namespace masschain
