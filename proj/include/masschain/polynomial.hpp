#pragma once

// Small real-polynomial toolkit used by the device models: evaluation at
// complex points, products, real/imaginary parts along the imaginary axis,
// and root extraction via the companion matrix.

#include <complex>
#include <vector>

#include "masschain/errors.hpp"

namespace masschain {

using Complex = std::complex<double>;

class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<double> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

    const std::vector<double>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    double coeff(size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

    double operator()(double x) const;
    Complex operator()(Complex s) const;

    Poly derivative() const;

    // Even/odd split of p(jw): p(jw) = re_part(w) + j * im_part(w)
    // with both parts real polynomials in w.
    Poly imag_axis_real_part() const;
    Poly imag_axis_imag_part() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(double s, const Poly& p);

    // Multiply by x^k.
    Poly shifted_up(int k) const;

  private:
    void trim();
    std::vector<double> c_; // ascending powers
};

// All roots via the companion matrix of the monic form (Eigen eigensolver).
std::vector<Complex> poly_roots(const Poly& p);

// Real roots x > 0, deduplicated; tol_im filters eigenvalues with small
// imaginary part (relative to magnitude).
std::vector<double> positive_real_roots(const Poly& p, double tol_im = 1e-7);

} // namespace masschain
