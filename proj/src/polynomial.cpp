#include "masschain/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace masschain {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Poly::operator()(double x) const {
    double acc = 0.0;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

Complex Poly::operator()(Complex s) const {
    Complex acc{0.0, 0.0};
    for (size_t k = c_.size(); k-- > 0;) acc = acc * s + c_[k];
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<double> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::imag_axis_real_part() const {
    // (j)^k cycles 1, j, -1, -j: even k contribute (-1)^{k/2} w^k.
    std::vector<double> r(c_.size());
    for (size_t k = 0; k < c_.size(); k += 2) r[k] = ((k / 2) % 2 == 0 ? 1.0 : -1.0) * c_[k];
    return Poly(std::move(r));
}

Poly Poly::imag_axis_imag_part() const {
    std::vector<double> r(c_.size());
    for (size_t k = 1; k < c_.size(); k += 2) r[k] = (((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * c_[k];
    return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < a.c_.size()) r[k] += a.c_[k];
        if (k < b.c_.size()) r[k] += b.c_[k];
    }
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < a.c_.size()) r[k] += a.c_[k];
        if (k < b.c_.size()) r[k] -= b.c_[k];
    }
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
    for (size_t p = 0; p < a.c_.size(); ++p)
        for (size_t q = 0; q < b.c_.size(); ++q) r[p + q] += a.c_[p] * b.c_[q];
    return Poly(std::move(r));
}

Poly operator*(double s, const Poly& p) {
    std::vector<double> r = p.c_;
    for (double& v : r) v *= s;
    return Poly(std::move(r));
}

Poly Poly::shifted_up(int k) const {
    if (is_zero()) return Poly();
    std::vector<double> r(c_.size() + static_cast<size_t>(k), 0.0);
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return Poly(std::move(r));
}

std::vector<Complex> poly_roots(const Poly& p) {
    std::vector<double> c = p.coeffs();
    // Drop a numerically negligible leading coefficient before forming the
    // companion matrix.
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    while (c.size() > 1 && std::abs(c.back()) < 1e-14 * scale) c.pop_back();
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 0) return {};
    if (deg == 1) return {Complex(-c[0] / c[1], 0.0)};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int r = 1; r < deg; ++r) comp(r, r - 1) = 1.0;
    for (int r = 0; r < deg; ++r) comp(r, deg - 1) = -c[static_cast<size_t>(r)] / c[static_cast<size_t>(deg)];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<Complex> roots(static_cast<size_t>(deg));
    for (int r = 0; r < deg; ++r) roots[static_cast<size_t>(r)] = es.eigenvalues()(r);
    return roots;
}

std::vector<double> positive_real_roots(const Poly& p, double tol_im) {
    std::vector<double> out;
    for (const Complex& z : poly_roots(p)) {
        if (std::abs(z.imag()) <= tol_im * std::max(1.0, std::abs(z)) && z.real() > 0.0)
            out.push_back(z.real());
    }
    std::sort(out.begin(), out.end());
    // Merge near-duplicates (multiple roots come back as eigenvalue clusters).
    std::vector<double> dedup;
    for (double w : out) {
        if (dedup.empty() || w - dedup.back() > 1e-9 * std::max(1.0, w)) dedup.push_back(w);
    }
    return dedup;
}

} // namespace masschain
