#pragma once

// Test-only oracles, independent of the library's evaluation paths:
// dense linear solves and determinants via Eigen, brute-force metric maxima
// via the closed form, and seeded random h generators.

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "masschain/chain.hpp"
#include "masschain/mobius.hpp"

namespace oracle {

using masschain::Complex;

// det(h I_n - H_n) by LU factorization of the dense complex matrix.
inline Complex det_hI_minus_H(Complex h, int n) {
    Eigen::MatrixXcd m = h * Eigen::MatrixXcd::Identity(n, n);
    m -= masschain::build_H(n).cast<Complex>();
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
}

// Solve (h I - H_N) x = e_1 densely and return x (unit disturbance).
inline Eigen::VectorXcd dense_chain_solve(Complex h, int n) {
    Eigen::MatrixXcd m = h * Eigen::MatrixXcd::Identity(n, n);
    m -= masschain::build_H(n).cast<Complex>();
    Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(n);
    e1(0) = 1.0;
    return m.partialPivLu().solve(e1);
}

// delta_i = x_i - x_{i-1} with x_0 = 1, from the dense solve.
inline Complex dense_intermass_tf(Complex h, int n, int i) {
    const Eigen::VectorXcd x = dense_chain_solve(h, n);
    const Complex prev = (i == 1) ? Complex(1.0, 0.0) : x(i - 2);
    return x(i - 1) - prev;
}

inline double rel_err(Complex got, Complex want) {
    const double scale = std::max(std::abs(got), std::abs(want));
    if (scale == 0.0) return 0.0;
    return std::abs(got - want) / scale;
}

// Random h with a minimum distance from the cut [-4, 0].
class HSampler {
  public:
    explicit HSampler(unsigned seed, double min_dist = 0.05)
        : rng_(seed), re_(-8.0, 4.0), im_(-3.0, 3.0), min_dist_(min_dist) {}

    Complex operator()() {
        while (true) {
            const Complex h(re_(rng_), im_(rng_));
            if (masschain::dist_to_cut(h) > min_dist_) return h;
        }
    }

  private:
    std::mt19937 rng_;
    std::uniform_real_distribution<double> re_, im_;
    double min_dist_;
};

} // namespace oracle
