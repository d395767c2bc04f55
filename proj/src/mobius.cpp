#include "masschain/mobius.hpp"

#include <cmath>

namespace masschain {

const char* to_string(MapClass c) {
    switch (c) {
        case MapClass::Parabolic: return "parabolic";
        case MapClass::Elliptic: return "elliptic";
        case MapClass::Loxodromic: return "loxodromic";
    }
    return "?";
}

Complex zeta(Complex h) {
    const Complex w = h + 2.0;
    // On the cut both roots are unimodular conjugates; take Im(zeta) <= 0.
    // (The generic branch is unusable here: signed zeros in Im(w*w - 4)
    // flip the side of the sqrt branch cut.)
    if (h.imag() == 0.0 && h.real() >= -4.0 && h.real() <= 0.0) {
        const double x = 0.5 * w.real();
        return {x, -std::sqrt(std::max(0.0, 1.0 - x * x))};
    }
    const Complex q = std::sqrt(w * w - 4.0);
    // The two roots are (w+q)/2 and (w-q)/2 with product 1; divide by the
    // larger of w+q, w-q so the small root never comes from a subtraction.
    if (std::abs(w + q) >= std::abs(w - q)) return 2.0 / (w + q);
    return 2.0 / (w - q);
}

Complex mu_plus(int i, Complex h) {
    if (i < 1) throw ConfigError("mu_plus: i must be >= 1");
    const Complex z = zeta(h);
    return complex_ipow(z, i - 1) * (1.0 - z);
}

FixedPointPair fixed_points(int i, Complex h) {
    FixedPointPair fp;
    fp.i = i;
    fp.mu_plus = mu_plus(i, h);
    // Sum of roots is -(d_i - d_{i-2}); avoids dividing by mu_plus ~ 0 at h ~ 0.
    const DSequence d = d_seq(h, std::max(i, 1));
    fp.mu_minus = -(d[i] - d[i - 2]) - fp.mu_plus;
    return fp;
}

MapClass classify_map(Complex h) {
    if (h.imag() == 0.0) {
        const double x = h.real();
        if (x == 0.0 || x == -4.0) return MapClass::Parabolic;
        if (x > -4.0 && x < 0.0) return MapClass::Elliptic;
    }
    return MapClass::Loxodromic;
}

MobiusData mobius_data(Complex h) {
    MobiusData md;
    md.h = h;
    md.zeta = zeta(h);
    md.mu_plus_1 = 1.0 - md.zeta;
    md.classification = classify_map(h);
    return md;
}

Complex complex_ipow(Complex z, long n) {
    if (n < 0) throw ConfigError("complex_ipow: negative exponent");
    if (n == 0) return {1.0, 0.0};
    const double r = std::abs(z);
    if (r > 0.0 && r < 1.0 && static_cast<double>(n) * std::log10(r) < -300.0)
        return {0.0, 0.0};
    Complex acc{1.0, 0.0};
    Complex base = z;
    long e = n;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Complex F_recursive(int i, int n, Complex h) {
    if (i < 1 || n < i) throw ConfigError("F_recursive: need 1 <= i <= N");
    const DSequence d = d_seq(h, i);
    const Complex a = d[i - 2];
    const Complex b = d[i];
    Complex f{0.0, 0.0};
    for (int k = i; k <= n; ++k) {
        const Complex den = f + b;
        if (std::abs(den) < 1e-14 * std::max({1.0, std::abs(f), std::abs(b)}))
            throw DivisionBreakdownError("F_recursive: denominator F + d_i vanished at N=" + std::to_string(k));
        f = (a * f + h) / den;
    }
    return f;
}

Complex F_closed(int i, int n, Complex h) {
    if (i < 1 || n < i) throw ConfigError("F_closed: need 1 <= i <= N");
    const Complex z = zeta(h);
    const Complex zi = complex_ipow(z, i - 1);
    const Complex num = 1.0 - complex_ipow(z, 2L * (n - i + 1));
    const Complex den = 1.0 + complex_ipow(z, 2L * n + 1);
    if (std::abs(den) < 1e-12)
        throw DenominatorVanishesError("F_closed: 1 + zeta^(2N+1) vanished (h on the cut)");
    return zi * (1.0 - z) * num / den;
}

SupFResult sup_F_over_N(int i, Complex h, int n_max) {
    if (i < 1 || n_max < i) throw ConfigError("sup_F_over_N: need 1 <= i <= N_max");
    SupFResult res;
    res.non_convergent = classify_map(h) == MapClass::Elliptic;
    const Complex z = zeta(h);
    const Complex z2 = z * z;
    const Complex mu = complex_ipow(z, i - 1) * (1.0 - z);
    const double mu2 = std::norm(mu);
    Complex a = z2;                          // zeta^{2(N-i+1)} at N = i
    Complex p = complex_ipow(z, 2L * i + 1); // zeta^{2N+1} at N = i
    res.argmax_n = i;
    double best = 0.0;
    for (int n = i; n <= n_max; ++n) {
        const double den = std::norm(1.0 + p);
        double v;
        if (den < 1e-24) {
            // Closed form blows up on the cut; fall back to the recursion.
            try {
                v = std::norm(F_recursive(i, n, h));
            } catch (const NumericError&) {
                v = std::numeric_limits<double>::infinity();
            }
        } else {
            v = mu2 * std::norm(1.0 - a) / den;
        }
        if (v > best) {
            best = v;
            res.argmax_n = n;
        }
        a *= z2;
        p *= z2;
    }
    res.value = std::sqrt(best);
    res.attained_at_n_max = (res.argmax_n == n_max);
    return res;
}

} // namespace masschain
