#pragma once

// Iterated-Moebius representation of the intermass transfer functions:
// the sequence F_N^{(i)} is the orbit of 0 under f_i(z) = (d_{i-2} z + h)/(z + d_i),
// conjugate to z -> zeta^2 z, with zeta + 1/zeta = h + 2 and |zeta| <= 1.

#include <complex>

#include "masschain/chain.hpp"

namespace masschain {

enum class MapClass { Parabolic, Elliptic, Loxodromic };

const char* to_string(MapClass c);

struct MobiusData {
    Complex h;
    Complex zeta;
    Complex mu_plus_1;
    MapClass classification;
};

// Attractive and repulsive fixed points of f_i (roots of
// mu^2 + (d_i - d_{i-2}) mu - h = 0, labelled via zeta).
struct FixedPointPair {
    Complex mu_plus;
    Complex mu_minus;
    int i = 1;
};

// The root of zeta^2 - (h+2) zeta + 1 = 0 with |zeta| <= 1, evaluated
// without subtractive cancellation.  On the cut (both roots unimodular)
// the root with Im(zeta) <= 0 is returned.
Complex zeta(Complex h);

// mu_+^{(i)} = zeta^{i-1} (1 - zeta).
Complex mu_plus(int i, Complex h);

FixedPointPair fixed_points(int i, Complex h);

// Parabolic at h in {0, -4}; elliptic on the open interval (-4, 0);
// loxodromic elsewhere.
MapClass classify_map(Complex h);

MobiusData mobius_data(Complex h);

// z^n for integer n >= 0 by repeated squaring; flushes to 0 when
// |z|^n is below the representable range.
Complex complex_ipow(Complex z, long n);

// F_N^{(i)} by iterating f_i from 0 (N - i + 1 steps).
Complex F_recursive(int i, int n, Complex h);
inline Complex F_recursive(const ChainConfig& cfg, Complex h) { return F_recursive(cfg.i, cfg.n, h); }

// F_N^{(i)} = mu_+^{(i)} (1 - zeta^{2(N-i+1)}) / (1 + zeta^{2N+1}).
Complex F_closed(int i, int n, Complex h);
inline Complex F_closed(const ChainConfig& cfg, Complex h) { return F_closed(cfg.i, cfg.n, h); }

struct SupFResult {
    double value = 0.0;
    int argmax_n = 0;
    bool attained_at_n_max = false;
    // Set for elliptic h: the orbit does not converge, so the running max
    // is a truncation, not an approximation of a limit.
    bool non_convergent = false;
};

// max over N in {i, ..., n_max} of |F_N^{(i)}(h)|.
SupFResult sup_F_over_N(int i, Complex h, int n_max);

} // namespace masschain
