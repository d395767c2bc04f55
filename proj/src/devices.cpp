#include "masschain/devices.hpp"

#include <algorithm>
#include <cmath>

namespace masschain {

Complex RationalAdmittance::operator()(Complex s) const {
    const Complex d = den(s);
    if (std::abs(d) == 0.0) throw PoleError("admittance: evaluation at a pole");
    return num(s) / d;
}

Complex admittance(const DeviceSpec& dev, Complex s) {
    if (s == Complex(0.0, 0.0)) throw PoleError("admittance: pole at s = 0");
    Complex y = dev.c + dev.k / s;
    if (dev.layout == Layout::L2) y += dev.b * s;
    return y;
}

Complex admittance(const RationalAdmittance& y, Complex s) { return y(s); }

Complex h_of_s(const RationalAdmittance& y, double mass, Complex s) {
    const Complex n = y.num(s);
    if (std::abs(n) == 0.0) throw NumericError("h_of_s: admittance zero, h has a pole here");
    return mass * s * y.den(s) / n;
}

Complex h_of_s(const DeviceSpec& dev, double mass, Complex s) {
    // m s^2 / (b s^2 + c s + k); finite at s = 0.
    const Complex den = (dev.b * s + dev.c) * s + dev.k;
    if (std::abs(den) == 0.0) throw NumericError("h_of_s: admittance zero, h has a pole here");
    return mass * s * s / den;
}

Complex g_of_s(const RationalAdmittance& y, double mass, Complex s) {
    if (s == Complex(0.0, 0.0)) throw PoleError("g_of_s: pole at s = 0");
    return y(s) / (s * mass);
}

Complex g_of_s(const DeviceSpec& dev, double mass, Complex s) {
    return g_of_s(dev.rational(), mass, s);
}

PositiveRealResult is_positive_real_on_axis(const RationalAdmittance& y, std::span<const double> omega_grid) {
    PositiveRealResult res;
    for (double w : omega_grid) {
        Complex v;
        try {
            v = y(Complex(0.0, w));
        } catch (const PoleError&) {
            continue; // poles on the axis are allowed for lossless parts
        }
        if (v.real() < -1e-12 * std::abs(v)) {
            res.ok = false;
            res.witness_omega = w;
            res.witness_value = v;
            return res;
        }
    }
    return res;
}

PositiveRealResult is_positive_real_on_axis(const DeviceSpec& dev, std::span<const double> omega_grid) {
    return is_positive_real_on_axis(dev.rational(), omega_grid);
}

double default_omega1(const DeviceSpec& dev, double mass) {
    return 0.5 * std::sqrt(dev.k / mass);
}

SpringSplit spring_split(const RationalAdmittance& y) {
    // Y = num/den with den = s * d1, d1(0) != 0 -> k = num(0)/d1(0),
    // Y1(0) = (num'(0) - k d1'(0))/d1(0).
    if (y.den.is_zero() || y.num.is_zero())
        throw HypothesesError("device: admittance is degenerate");
    if (y.den.coeff(0) != 0.0)
        throw HypothesesError("device: admittance has no spring term (no pole at s = 0)");
    std::vector<double> d1c(y.den.coeffs().begin() + 1, y.den.coeffs().end());
    const Poly d1{std::move(d1c)};
    if (d1.coeff(0) == 0.0)
        throw HypothesesError("device: admittance pole at s = 0 is not simple");
    SpringSplit sp;
    sp.k = y.num.coeff(0) / d1.coeff(0);
    sp.y1_at_0 = (y.num.coeff(1) - sp.k * d1.coeff(1)) / d1.coeff(0);
    return sp;
}

DeflatedRemainder taylor_remainder(const RationalAdmittance& y, double mass) {
    const SpringSplit sp = spring_split(y);
    const double c1 = mass / sp.k;
    const double c2 = mass * sp.y1_at_0 / (sp.k * sp.k);
    // E(s) = h(s) - c1 s^2 + c2 s^3 = P(s)/num(s) with
    // P = m s den - c1 s^2 num + c2 s^3 num; P has a fourth-order zero at 0.
    const Poly p = (mass * y.den).shifted_up(1) - (c1 * y.num).shifted_up(2) + (c2 * y.num).shifted_up(3);
    double scale = 0.0;
    for (double v : p.coeffs()) scale = std::max(scale, std::abs(v));
    std::vector<double> shifted;
    const auto& pc = p.coeffs();
    for (size_t k = 0; k < 4 && k < pc.size(); ++k) {
        if (std::abs(pc[k]) > 1e-9 * scale)
            throw NumericError("taylor_remainder: low-order coefficients failed to cancel");
    }
    for (size_t k = 4; k < pc.size(); ++k) shifted.push_back(pc[k]);
    return {Poly(std::move(shifted)), y.num};
}

Complex DeflatedRemainder::operator()(double omega) const {
    const Complex s(0.0, omega);
    return num(s) / den(s);
}

TaylorConstants taylor_constants(const RationalAdmittance& y, double mass, double omega1) {
    if (!(omega1 > 0.0)) throw ConfigError("taylor_constants: omega1 must be positive");
    const SpringSplit sp = spring_split(y);
    if (!(sp.k > 0.0))
        throw HypothesesError("taylor_constants: spring constant k must be positive");
    if (!(sp.y1_at_0 > 0.0))
        throw HypothesesError("taylor_constants: Y1(0) must be positive (lossless at dc)");

    TaylorConstants tc;
    tc.omega1 = omega1;
    tc.c1 = mass / sp.k;
    tc.c2 = mass * sp.y1_at_0 / (sp.k * sp.k);

    const DeflatedRemainder h1 = taylor_remainder(y, mass);
    double c3 = std::abs(h1.num.coeff(0) / h1.den.coeff(0)); // analytic w -> 0 limit
    const int kGrid = 4096;
    const double lo = std::log(1e-6 * omega1);
    const double hi = std::log(omega1);
    for (int k = 0; k < kGrid; ++k) {
        const double w = std::exp(lo + (hi - lo) * k / (kGrid - 1));
        c3 = std::max(c3, std::abs(h1(w)));
    }
    tc.c3 = 1.01 * c3; // grid max with a 1% safety factor
    tc.c4 = std::sqrt(2.0 * (2.0 * tc.c1 + tc.c2 + 2.0 * tc.c3));
    double w0 = std::min(1.0, tc.omega1);
    w0 = std::min(w0, std::sqrt(2.0 / (tc.c1 + tc.c3)));
    if (tc.c3 > 0.0) w0 = std::min(w0, tc.c2 / tc.c3);
    w0 = std::min(w0, std::sqrt(2.0 * tc.c4 / tc.c2));
    tc.omega0 = w0;
    return tc;
}

TaylorConstants taylor_constants(const DeviceSpec& dev, double mass, double omega1) {
    if (!(dev.k > 0.0)) throw HypothesesError("taylor_constants: k must be positive");
    if (!(dev.c > 0.0)) throw HypothesesError("taylor_constants: Y1(0) = c must be positive");
    return taylor_constants(dev.rational(), mass, omega1);
}

} // namespace masschain
