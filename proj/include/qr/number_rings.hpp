#pragma once

#include "qr/laurent.hpp"

namespace qr {

/// Element a + b*sigma of Z[sigma], sigma = (1+i*sqrt(3))/2, sigma^2 = sigma - 1.
struct EisensteinValue {
    Int a{0};
    Int b{0};

    friend bool operator==(const EisensteinValue& x, const EisensteinValue& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend EisensteinValue operator+(const EisensteinValue& x, const EisensteinValue& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend EisensteinValue operator-(const EisensteinValue& x, const EisensteinValue& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend EisensteinValue operator*(const EisensteinValue& x, const EisensteinValue& y) {
        // (a + b s)(c + d s), s^2 = s - 1
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    bool is_zero() const { return a == 0 && b == 0; }
    std::string to_string() const;
};

/// Exact value of p at q = sigma. Handles negative exponents via
/// sigma^-1 = sigma^5 = 1 - sigma (sigma is a 6th root of unity).
EisensteinValue eval_sigma(const LaurentPoly& p);

/// v in {±1, ±sigma, ±(sigma-1)}, the units of Z[sigma].
bool is_sixth_root_of_unity(const EisensteinValue& v);

struct GaussianInt {
    Int re{0};
    Int im{0};

    friend bool operator==(const GaussianInt& x, const GaussianInt& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    GaussianInt conj() const { return {re, -im}; }
    Int norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
    std::string to_string() const;
};

/// Euclidean gcd in Z[i], normalized to the associate with re > 0, im >= 0.
/// Throws if both arguments are zero.
GaussianInt gaussian_gcd(GaussianInt a, GaussianInt b);

}  // namespace qr
