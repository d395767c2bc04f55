#pragma once

// Exact evaluation path for the d_i family: arbitrary-precision integers and
// integer-coefficient polynomials in h.  Products like d_{i-2} d_i overflow
// 64-bit coefficients well before i = 30, hence cpp_int.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "masschain/errors.hpp"

namespace masschain::exact {

using BigInt = boost::multiprecision::cpp_int;

// d_i evaluated at an integer h, exactly.  Valid for i >= -1.
inline BigInt d_at_int(int i, const BigInt& h) {
    if (i < -1) throw ConfigError("d_at_int: i must be >= -1");
    if (i <= 0) return 1;
    const BigInt w = h + 2;
    BigInt prev = 1;    // d_0
    BigInt cur = h + 1; // d_1
    for (int k = 2; k <= i; ++k) {
        BigInt next = w * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Dense integer-coefficient polynomial in h, ascending powers.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(long v) { return IntPoly({BigInt(v)}); }

    const std::vector<BigInt>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    BigInt operator()(const BigInt& h) const {
        BigInt acc = 0;
        for (size_t k = c_.size(); k-- > 0;) acc = acc * h + c_[k];
        return acc;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < r.size(); ++k) {
            if (k < a.c_.size()) r[k] += a.c_[k];
            if (k < b.c_.size()) r[k] += b.c_[k];
        }
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < r.size(); ++k) {
            if (k < a.c_.size()) r[k] += a.c_[k];
            if (k < b.c_.size()) r[k] -= b.c_[k];
        }
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
        for (size_t p = 0; p < a.c_.size(); ++p)
            for (size_t q = 0; q < b.c_.size(); ++q) r[p + q] += a.c_[p] * b.c_[q];
        return IntPoly(std::move(r));
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

// d_i as an exact polynomial in h.  Valid for i >= -1.
inline IntPoly d_poly(int i) {
    if (i < -1) throw ConfigError("d_poly: i must be >= -1");
    if (i <= 0) return IntPoly::constant(1);
    IntPoly prev = IntPoly::constant(1);     // d_0
    IntPoly cur({BigInt(1), BigInt(1)});     // d_1 = h + 1
    const IntPoly w({BigInt(2), BigInt(1)}); // h + 2
    for (int k = 2; k <= i; ++k) {
        IntPoly next = w * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace masschain::exact
