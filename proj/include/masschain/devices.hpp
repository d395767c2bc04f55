#pragma once

// Passive interconnection devices: the two standard layouts (spring-damper and
// spring-damper-inerter), the dimensionless maps h(s) = s Z(s) m and
// g(s) = Y(s)/(s m), and the low-frequency Taylor constants feeding the
// uniform bound.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "masschain/polynomial.hpp"

namespace masschain {

enum class Layout { L1, L2 };

// Admittance as a ratio of real polynomials in s.  The standard layouts map
// to (b s^2 + c s + k)/s; user-supplied rational devices use it directly.
struct RationalAdmittance {
    Poly num;
    Poly den;
    Complex operator()(Complex s) const;
};

struct DeviceSpec {
    Layout layout = Layout::L1;
    double k = 0.0; // stiffness  [N/m]
    double c = 0.0; // damping    [N s/m]
    double b = 0.0; // inertance  [kg]

    void validate() const {
        if (!(k > 0.0)) throw ConfigError("device: k must be positive");
        if (c < 0.0) throw ConfigError("device: c must be nonnegative");
        if (b < 0.0) throw ConfigError("device: b must be nonnegative");
        if (layout == Layout::L1 && b != 0.0) throw ConfigError("device: layout L1 requires b = 0");
    }

    // Y(s) = (b s^2 + c s + k) / s.
    RationalAdmittance rational() const { return {Poly{k, c, b}, Poly{0.0, 1.0}}; }
};

// Constants of the low-frequency expansion h(jw) = -c1 w^2 + j c2 w^3 + w^4 h1(jw).
struct TaylorConstants {
    double c1 = 0.0;     // [s^2]
    double c2 = 0.0;     // [s^3]
    double c3 = 0.0;     // bound on |h1| over [0, omega1]
    double c4 = 0.0;     // sqrt(2 (2 c1 + c2 + 2 c3))
    double omega0 = 0.0; // [rad/s]
    double omega1 = 0.0; // [rad/s]
};

struct PositiveRealResult {
    bool ok = true;
    std::optional<double> witness_omega;
    Complex witness_value{0.0, 0.0};
};

Complex admittance(const DeviceSpec& dev, Complex s);
Complex admittance(const RationalAdmittance& y, Complex s);

// h = s Z(s) m = m s den(s)/num(s); the pole of Y at s=0 cancels, so h(0)=0.
Complex h_of_s(const DeviceSpec& dev, double mass, Complex s);
Complex h_of_s(const RationalAdmittance& y, double mass, Complex s);

// g = 1/h = Y(s)/(s m); has a pole at s = 0.
Complex g_of_s(const DeviceSpec& dev, double mass, Complex s);
Complex g_of_s(const RationalAdmittance& y, double mass, Complex s);

// Necessary positive-realness check on the imaginary axis:
// Re Y(jw) >= -1e-12 |Y(jw)| on the grid.
PositiveRealResult is_positive_real_on_axis(const DeviceSpec& dev, std::span<const double> omega_grid);
PositiveRealResult is_positive_real_on_axis(const RationalAdmittance& y, std::span<const double> omega_grid);

// Default window for the low-frequency expansion: half the characteristic
// frequency sqrt(k/m).
double default_omega1(const DeviceSpec& dev, double mass);

TaylorConstants taylor_constants(const DeviceSpec& dev, double mass, double omega1);
TaylorConstants taylor_constants(const RationalAdmittance& y, double mass, double omega1);

// Spring constant k (residue of Y at s=0) and Y1(0) of the decomposition
// Y = k/s + Y1(s); throws HypothesesError when Y has no simple pole at 0.
struct SpringSplit {
    double k = 0.0;
    double y1_at_0 = 0.0;
};
SpringSplit spring_split(const RationalAdmittance& y);

// Stable evaluation of h1(jw) = (h(jw) + c1 w^2 - j c2 w^3)/w^4 as a
// deflated rational function (no small-w cancellation).
struct DeflatedRemainder {
    Poly num; // degree-shifted numerator
    Poly den; // admittance numerator
    Complex operator()(double omega) const;
};
DeflatedRemainder taylor_remainder(const RationalAdmittance& y, double mass);

} // namespace masschain
