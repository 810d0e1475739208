#pragma once

#include "qr/fraction.hpp"
#include "qr/laurent.hpp"

#include <string>
#include <vector>

namespace qr {

enum class Side { sharp, flat };

inline Side other(Side s) { return s == Side::sharp ? Side::flat : Side::sharp; }
std::string side_name(Side s);

/// Reduced rational function in q: coprime numerator/denominator, no common
/// monomial, and the denominator's lowest nonzero coefficient positive (the
/// numerator's when the denominator is zero, i.e. the projective point 1/0).
struct RatFun {
    LaurentPoly num;
    LaurentPoly den;

    friend bool operator==(const RatFun& x, const RatFun& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const RatFun& x, const RatFun& y) { return !(x == y); }
    bool is_infinity() const { return den.is_zero(); }
    double eval(double q) const;
    std::string to_string() const;
};

/// Fully reduces (num, den): divides by the polynomial gcd and the common
/// integer content, strips the common monomial, fixes the sign.
RatFun reduce_fraction(LaurentPoly num, LaurentPoly den);

/// A q-deformed rational: reduced A/B plus which deformation it is.
struct QRational {
    LaurentPoly num;
    LaurentPoly den;
    Side side{Side::sharp};

    RatFun fun() const { return RatFun{num, den}; }
    bool is_infinity() const { return den.is_zero(); }
    friend bool operator==(const QRational& x, const QRational& y) {
        return x.side == y.side && x.num == y.num && x.den == y.den;
    }
    std::string to_string() const;
    std::string to_json() const;
};

/// Word in the generators of PGL2(Z). Construction via word_for asserts that
/// the word evaluated at q = 1 sends infinity to the fraction it encodes.
class ModularWord {
public:
    enum class Letter { T, Tinv, S, N };

    ModularWord() = default;
    explicit ModularWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    const std::vector<Letter>& letters() const { return letters_; }
    std::string to_string() const;

private:
    std::vector<Letter> letters_;
};

/// A word sending infinity to x: T^{a1} L^{a2} T^{a3} ... with L = TST for
/// x not in Z_{<=0}; T^x S for x in Z_{<=0}; the empty word for infinity.
ModularWord word_for(const Fraction& x);

/// 2x2 matrix of Laurent polynomials, defined up to a global monomial.
struct QMatrix {
    LaurentPoly a, b, c, d;  // (a b; c d)

    LaurentPoly det() const { return a * d - b * c; }
    /// Entries at q = 1 as integers.
    std::array<Int, 4> at_one() const;
    static QMatrix identity();
    static QMatrix generator(ModularWord::Letter l);
    friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
};

/// Product of the deformed generators over the word, with the common monomial
/// stripped off.
QMatrix matrix_quantize(const ModularWord& w);

/// The left/right q-deformation of x (memoized, thread-safe).
const QRational& quantize(const Fraction& x, Side side);

/// g_q(x) = (1+(x-1)q)/(1+(q-1)x) applied to a rational function, reduced.
RatFun transition_map(const RatFun& r);

/// Mobius action of m on r, renormalized; the side flips iff det(m) = -1 at
/// q = 1. Throws if the image is the indeterminate 0/0.
QRational apply(const QMatrix& m, const QRational& r);

/// The unique integer with A#*Bb - Ab*B# = q^eps (1-q).
int epsilon(const Fraction& x);

/// Exact data of the jump l_q(x) = |1-q| q^eps / (B# Bb): numerator
/// q^eps (1-q) and denominator B#*Bb. Throws on infinity.
struct JumpParts {
    LaurentPoly num;
    LaurentPoly den;
    double eval(double q) const { return std::abs(num.eval(q)) / den.eval(q); }
};
JumpParts jump(const Fraction& x);

}  // namespace qr
