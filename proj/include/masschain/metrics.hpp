#pragma once

// Fast scalar metrics of h used by contour grids, frequency responses and
// the acceptance sweeps.  All run in O(N_max) per point by updating the
// powers of zeta incrementally; brute-force equivalents via F_closed are
// kept in the tests as oracles.

#include <span>

#include "masschain/mobius.hpp"

namespace masschain {

inline double metric_abs_zeta(Complex h) { return std::abs(zeta(h)); }

inline double metric_abs_mu1(Complex h) { return std::abs(1.0 - zeta(h)); }

// max over N in {i..n_max} of |F_N^{(i)}(h)|.
double metric_max_F(int i, Complex h, int n_max);

// max over 1 <= i <= N <= n_max of |F_N^{(i)}(h)|.
double metric_max_F_all(Complex h, int n_max);

// out[N-1] = max_{1<=i<=N} |F_N^{(i)}(h)| for N = 1..out.size().
void max_F_per_N(Complex h, std::span<double> out);

} // namespace masschain
