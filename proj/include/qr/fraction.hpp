#pragma once

#include "qr/laurent.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qr {

/// Reduced rational a/b with b >= 0; infinity is 1/0. Value semantics.
struct Fraction {
    Int num{0};
    Int den{1};

    Fraction() = default;
    /// Reduces and fixes signs; (0, 0) is rejected.
    Fraction(Int n, Int d);
    Fraction(long n, long d) : Fraction(Int(n), Int(d)) {}
    Fraction(long n) : Fraction(Int(n), Int(1)) {}

    static Fraction infinity() { return Fraction(1, 0); }
    bool is_infinity() const { return den == 0; }
    bool is_integer() const { return den == 1; }

    /// Parses "a/b", "-a/b", plain integers and the literal "inf".
    static Fraction parse(const std::string& text);
    std::string to_string() const;

    Int floor() const;

    friend bool operator==(const Fraction& x, const Fraction& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const Fraction& x, const Fraction& y) { return !(x == y); }
    /// Order on QP^1 with infinity greater than every rational.
    friend bool operator<(const Fraction& x, const Fraction& y) {
        if (x.is_infinity()) return false;
        if (y.is_infinity()) return true;
        return x.num * y.den < y.num * x.den;
    }
    friend bool operator>(const Fraction& x, const Fraction& y) { return y < x; }
    friend bool operator<=(const Fraction& x, const Fraction& y) { return !(y < x); }

    double to_double() const;
};

/// Total order usable as a map key (by denominator, then numerator).
struct FractionKeyLess {
    bool operator()(const Fraction& x, const Fraction& y) const {
        if (x.den != y.den) return x.den < y.den;
        return x.num < y.num;
    }
};

/// Reduces a raw integer pair via the Fraction constructor.
Fraction reduce_pair(const std::pair<Int, Int>& p);

/// Canonical floor continued fraction [a1, a2, ...] with ai >= 1 for i >= 2.
std::vector<Int> continued_fraction_canonical(const Fraction& x);

/// Even-length expansion obtained from the canonical one by the tail rewrite
/// [..., an] -> [..., an-1, 1]. Throws on infinity.
std::vector<Int> continued_fraction_even(const Fraction& x);

/// Evaluates [a1, a2, ...] = a1 + 1/(a2 + 1/(...)).
Fraction evaluate_continued_fraction(const std::vector<Int>& cf);

}  // namespace qr
