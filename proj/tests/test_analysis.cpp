#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "masschain/analysis.hpp"
#include "masschain/metrics.hpp"
#include "oracles.hpp"

using masschain::Complex;
using masschain::DeviceSpec;
using masschain::Layout;

namespace {

constexpr double kMass = 1.0e5;
constexpr double kStiff = 1.7e8;

DeviceSpec device1() { return {Layout::L1, kStiff, 4.0e6, 0.0}; }
DeviceSpec device2() { return {Layout::L1, kStiff, 6.0e6, 0.0}; }
DeviceSpec device3() { return {Layout::L2, kStiff, 6.0e6, 1.0e5}; }

} // namespace

TEST_CASE("table devices are stable") {
    for (const DeviceSpec& dev : {device1(), device2(), device3()}) {
        const auto rep = masschain::stability_check(dev, kMass);
        CHECK(rep.stable);
        CHECK(rep.crossings.empty());
    }
}

TEST_CASE("pure spring is unstable with witnesses") {
    const DeviceSpec spring{Layout::L1, kStiff, 0.0, 0.0};
    const auto rep = masschain::stability_check(spring, kMass);
    CHECK_FALSE(rep.stable);
    REQUIRE_FALSE(rep.crossings.empty());
    for (const auto& c : rep.crossings) {
        CHECK(c.h.real() > -4.0);
        CHECK(c.h.real() < 0.0);
        CHECK(std::abs(c.h.imag()) < 1e-9);
        // h = -m w^2 / k on the witness frequency.
        CHECK(c.h.real() == doctest::Approx(-kMass * c.omega * c.omega / kStiff).epsilon(1e-9));
    }
}

TEST_CASE("lossless spring-inerter is unstable") {
    const DeviceSpec li{Layout::L2, kStiff, 0.0, 1.0e5};
    const auto rep = masschain::stability_check(li, kMass);
    CHECK_FALSE(rep.stable);
    REQUIRE_FALSE(rep.crossings.empty());
    for (const auto& c : rep.crossings) {
        CHECK(c.h.real() > -4.0);
        CHECK(c.h.real() < 0.0);
    }
}

TEST_CASE("ellipse bound at h=1 and limits") {
    const double bound = masschain::ellipse_bound({1.0, 0.0});
    // A = 3, |zeta| = (3 - sqrt 5)/2; formula value.
    const double zmod = (3.0 - std::sqrt(5.0)) / 2.0;
    const double want = (1.0 + zmod) * (1.0 + zmod * zmod) / (1.0 - zmod * zmod * zmod);
    CHECK(bound == doctest::Approx(want).epsilon(1e-12));
    CHECK(bound == doctest::Approx(1.6770509831).epsilon(1e-6));
    // |zeta| must match the zeta() modulus at the same h.
    CHECK(zmod == doctest::Approx(std::abs(masschain::zeta({1.0, 0.0}))).epsilon(1e-12));
    // |h| -> infinity: bound -> 1.
    CHECK(masschain::ellipse_bound({1e9, 0.0}) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK_THROWS_AS(masschain::ellipse_bound({-2.0, 0.0}), masschain::OnCutError);
}

TEST_CASE("ellipse bound dominates the sup over N") {
    oracle::HSampler sample(5150, 0.1);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex h = sample();
        const double bound = masschain::ellipse_bound(h);
        const auto sup = masschain::sup_F_over_N(1, h, 500);
        CHECK(sup.value <= bound * (1.0 + 1e-12));
    }
}

TEST_CASE("|zeta| constant along the ellipse h = zeta + 1/zeta - 2") {
    for (double r : {0.3, 0.6, 0.9}) {
        double lo = 2.0, hi = 0.0;
        for (int k = 0; k < 720; ++k) {
            const double th = -M_PI + 2.0 * M_PI * k / 720.0;
            const Complex z = std::polar(r, th);
            const Complex h = z + 1.0 / z - 2.0;
            const double zmod = std::abs(masschain::zeta(h));
            lo = std::min(lo, zmod);
            hi = std::max(hi, zmod);
        }
        CHECK(hi - lo < 1e-10);
        CHECK(lo == doctest::Approx(r).epsilon(1e-10));
    }
}

TEST_CASE("low frequency bound formula and monotonicity") {
    masschain::TaylorConstants tc;
    tc.c1 = 5.882e-4;
    tc.c2 = 2.076e-5;
    tc.c3 = 0.0;
    tc.c4 = std::sqrt(2.0 * (2.0 * tc.c1 + tc.c2));
    tc.omega1 = 20.0;
    tc.omega0 = 1.0;
    // c3 = 0 specialization.
    const double want = 2.0 * std::sqrt(tc.c1 + tc.c2) * tc.omega0 /
                        (1.0 - std::exp(-tc.c2 * M_PI * tc.omega0 / (8.0 * tc.c4 * tc.c4)));
    CHECK(masschain::low_freq_bound(tc) == doctest::Approx(want).epsilon(1e-12));
    // Monotone in omega0 with constants fixed.
    double prev = 0.0;
    for (double w0 : {0.25, 0.5, 1.0, 2.0}) {
        tc.omega0 = w0;
        const double b = masschain::low_freq_bound(tc);
        CHECK(b > prev);
        prev = b;
    }
    // Degenerate exponential argument.
    tc.c3 = 1.0;
    tc.omega0 = tc.c2; // c2 - w0 c3 < 0
    CHECK_THROWS_AS(masschain::low_freq_bound(tc), masschain::DegenerateConstantsError);
}

TEST_CASE("low frequency bound dominates the low band empirically") {
    const DeviceSpec dev = device2();
    const auto tc = masschain::taylor_constants(dev, kMass, masschain::default_omega1(dev, kMass));
    const double bound = masschain::low_freq_bound(tc);
    CHECK(bound > 0.0);
    double emp = 0.0;
    for (double w : masschain::log_grid(1e-4 * tc.omega0, tc.omega0 * 0.999, 400)) {
        const Complex h = masschain::h_of_s(dev, kMass, {0.0, w});
        emp = std::max(emp, masschain::metric_max_F(1, h, 200));
    }
    CHECK(bound >= emp);
}

TEST_CASE("global bound is finite and sound for devices 2 and 3") {
    for (const DeviceSpec& dev : {device2(), device3()}) {
        const auto rep = masschain::global_bound(dev, kMass);
        CHECK(std::isfinite(rep.global_bound));
        CHECK(rep.global_bound > 0.0);
        CHECK(rep.global_bound == std::max(rep.low_freq_bound, rep.high_freq_bound));
        CHECK(rep.a0 > 2.0);
        CHECK(rep.zeta0_mod < 1.0);
        CHECK(rep.global_bound >= rep.empirical_sup);
    }
}

TEST_CASE("global bound rejects the pure spring") {
    CHECK_THROWS_AS(masschain::global_bound(DeviceSpec{Layout::L1, kStiff, 0.0, 0.0}, kMass),
                    masschain::HypothesesError);
}

TEST_CASE("global bound is invariant under joint parameter scaling") {
    const auto base = masschain::global_bound(device3(), kMass);
    DeviceSpec dev = device3();
    dev.k *= 2.0;
    dev.c *= 2.0;
    dev.b *= 2.0;
    const auto scaled = masschain::global_bound(dev, 2.0 * kMass);
    CHECK(scaled.global_bound == doctest::Approx(base.global_bound).epsilon(1e-12));
    CHECK(scaled.empirical_sup == doctest::Approx(base.empirical_sup).epsilon(1e-12));
    CHECK(scaled.taylor.c1 == doctest::Approx(base.taylor.c1).epsilon(1e-12));
}

TEST_CASE("hinf norm for N=i=1 equals the peak of |h/(h+1)|") {
    const DeviceSpec dev = device2();
    const double got = masschain::hinf_norm(dev, kMass, 1, 1);
    double want = 0.0;
    for (double w : masschain::log_grid(1e-3 * std::sqrt(kStiff / kMass),
                                        1e3 * std::sqrt(kStiff / kMass), 40000)) {
        const Complex h = masschain::h_of_s(dev, kMass, {0.0, w});
        want = std::max(want, std::abs(h / (h + 1.0)));
    }
    CHECK(got == doctest::Approx(want).epsilon(1e-5));
    CHECK(got >= want * (1.0 - 1e-9)); // refinement can only improve on the grid
}

TEST_CASE("hinf endpoints decay to zero at dc") {
    const DeviceSpec dev = device3();
    const Complex h_low = masschain::h_of_s(dev, kMass, {0.0, 1e-6});
    CHECK(std::abs(masschain::F_closed(1, 50, h_low)) < 1e-8);
}

TEST_CASE("hinf refinement is grid-converged for table devices") {
    masschain::HinfOptions coarse;
    masschain::HinfOptions fine;
    fine.coarse_points = 2 * coarse.coarse_points;
    for (const DeviceSpec& dev : {device2(), device3()}) {
        const double a = masschain::hinf_norm(dev, kMass, 1, 50, coarse);
        const double b = masschain::hinf_norm(dev, kMass, 1, 50, fine);
        CHECK(std::abs(a - b) / b < 1e-5);
    }
}

TEST_CASE("hinf norm requires stability") {
    const DeviceSpec spring{Layout::L1, kStiff, 0.0, 0.0};
    CHECK_THROWS_AS(masschain::hinf_norm(spring, kMass, 1, 10), masschain::InstabilityError);
}

TEST_CASE("device 2 keeps max_i |F_100| at or below one") {
    const DeviceSpec dev = device2();
    std::vector<double> per_n(100);
    for (double w : masschain::log_grid(0.1, 4e4, 600)) {
        const Complex h = masschain::h_of_s(dev, kMass, {0.0, w});
        masschain::max_F_per_N(h, per_n);
        CHECK(per_n[99] <= 1.0 + 1e-9);
    }
}

TEST_CASE("monotone limit: |F_N| -> |mu_plus| with gap < 1e-6 at N=400") {
    oracle::HSampler sample(24680, 0.05);
    int tested = 0;
    while (tested < 50) {
        const Complex h = sample();
        if (std::abs(masschain::zeta(h)) > 0.9) continue;
        ++tested;
        for (int i : {1, 2, 3}) {
            const double gap =
                std::abs(std::abs(masschain::F_closed(i, 400, h)) - std::abs(masschain::mu_plus(i, h)));
            CHECK(gap < 1e-6);
        }
    }
}

TEST_CASE("nyquist locus endpoints") {
    const auto grid = masschain::log_grid(1e-2, 1e7, 50);
    const auto locus3 = masschain::nyquist_locus(device3(), kMass, grid);
    CHECK(std::abs(locus3.back().second - Complex(1.0, 0.0)) < 1e-3);
    // Device 1 vs 2: imaginary parts scale with c where the spring dominates.
    const auto l1 = masschain::nyquist_locus(device1(), kMass, grid);
    const auto l2 = masschain::nyquist_locus(device2(), kMass, grid);
    for (size_t k = 0; k < grid.size(); ++k) {
        CHECK(l1[k].second.real() == doctest::Approx(l2[k].second.real()).epsilon(1e-12));
        CHECK(l1[k].second.imag() * 6.0 == doctest::Approx(l2[k].second.imag() * 4.0).epsilon(1e-12));
    }
}
