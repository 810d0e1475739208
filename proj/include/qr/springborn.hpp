#pragma once

#include "qr/farey.hpp"
#include "qr/number_rings.hpp"

#include <optional>

namespace qr {

/// Raw (ab+cd, b^2+d^2) / (ab-cd, b^2-d^2); reduce via Fraction.
std::pair<Int, Int> springborn_sum(const Fraction& x, const Fraction& y);
std::pair<Int, Int> springborn_diff(const Fraction& x, const Fraction& y);

struct RegularityReport {
    bool inner = false;
    bool outer = false;
    Int d_f;
    Int inner_gcd;       // gcd(|ab+cd|, b^2+d^2, a^2+c^2)
    Int outer_gcd;       // gcd(|ab-cd|, |b^2-d^2|, |a^2-c^2|)
    bool gaussian_check; // N(gcd(a+ic, b+id)) == d_F, Thm. charact-regularity (2')
};

/// Classifies the pair and cross-validates the gcd definitions against the
/// Gaussian-integer criterion (inner) and the two-gcd criterion (outer).
/// Inconsistent criteria throw (they would falsify Thm. charact-regularity).
RegularityReport regularity(const Fraction& x, const Fraction& y);

enum class HomothetyMode { inner, outer };

/// Unreduced homothety-center numerator/denominator:
///   inner: (q^e2 A# Bb + q^e1 Cb D#, q^e2 B# Bb + q^e1 D# Db)
///   outer: (q^e2 A# Bb - q^e1 C# Db, q^e2 B# Bb - q^e1 D# Db)
/// The symmetric variant of the numerator is computed and asserted equal.
/// The pair (x, infinity) returns [x]# / [x]b per the explicit extension.
std::pair<LaurentPoly, LaurentPoly> homothety_symbolic(const Fraction& x, const Fraction& y,
                                                       HomothetyMode mode);

struct QgcdResult {
    QRational reduced;
    LaurentPoly gcd;
};
/// Divides the unreduced homothety center by the actual gcd and asserts the
/// gcd is ==_q the predicted q-Farey determinant (d^{sf} inner, d^{ss} outer).
/// Requires the pair to be regular in the requested mode.
QgcdResult qgcd_reduce(const Fraction& x, const Fraction& y, HomothetyMode mode);

enum class MainTheoremStatus { regular_verified, exceptional_holds, fails };
struct MainTheoremReport {
    MainTheoremStatus inner;
    MainTheoremStatus outer;
    std::optional<Fraction> inner_result;  // reduced Springborn sum, when defined
    std::optional<Fraction> outer_result;  // reduced Springborn difference
};
/// Checks [x +S y]# = i([x],[y]) and [x -S y]b = e([x],[y]) in both modes.
/// A regular pair failing its identity throws (falsifies Thm. main);
/// non-regular pairs are probed and recorded as exceptional when they hold.
MainTheoremReport main_theorem_check(const Fraction& x, const Fraction& y);

/// [1/2 (x+y)]b for a pair of Farey determinant 1, via the Springborn
/// difference of the Farey sum and difference; cross-checked against direct
/// quantization (flat and, through the transition map, sharp).
QRational q_midpoint(const Fraction& x, const Fraction& y);

struct SpringbornSolveFailure {
    std::string reason;
};
/// Solves a/b (+S|-S) c/d = target for c/d. Returns the failure reason when
/// the divisibility or coprimality condition blocks a solution.
std::optional<Fraction> springborn_solve(const Fraction& target, const Fraction& ab,
                                         HomothetyMode mode, std::string* why = nullptr);

/// True iff the iteration hypotheses (b | a^2+-1 and d | c^2+-1) hold;
/// double-checked by testing regularity of both children pairs.
/// Requires the pair regular in the mode and gcd(b, d) = 1.
bool iteration_check(const Fraction& x, const Fraction& y, HomothetyMode mode);

/// Exact cross ratio with the convention cross_ratio(x, y, x +S y, x -S y) = -1.
Fraction cross_ratio(const Fraction& p1, const Fraction& p2, const Fraction& p3,
                     const Fraction& p4);

}  // namespace qr
