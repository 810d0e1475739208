#pragma once

#include "qr/qrat.hpp"

#include <optional>

namespace qr {

/// Which deformation goes in each slot of a q-Farey determinant.
struct QFareyKind {
    Side left;
    Side right;

    static QFareyKind parse(const std::string& s);  // "ss" | "sf" | "fs" | "ff"
    std::string to_string() const;
};

/// |ad - bc| on reduced forms; infinity allowed.
Int farey_det(const Fraction& x, const Fraction& y);

/// Raw (a+c, b+d) / (a-c, b-d); reduce with Fraction's constructor.
std::pair<Int, Int> farey_sum(const Fraction& x, const Fraction& y);
std::pair<Int, Int> farey_diff(const Fraction& x, const Fraction& y);

enum class GraphDistance { one, two, more };
struct GraphDistanceResult {
    GraphDistance dist;
    std::optional<Fraction> witness;  // midpoint for distance 2
};
/// Farey-graph distance classification of Prop. 4.x: distance 1 iff the
/// determinant is 1; distance 2 iff gcd(a+-c, b+-d) equals the determinant,
/// with the reduced sum/difference as witness.
GraphDistanceResult graph_distance_le2(const Fraction& x, const Fraction& y);

/// Signed A^l D^r - B^l C^r; the flat-flat case is divided exactly by
/// q^2 - q + 1 (a remainder would falsify the special-values lemma).
LaurentPoly q_farey_det(const Fraction& x, const Fraction& y, QFareyKind kind);

struct SpecialValuesReport {
    bool sharp_unit;  // B#(s) + (s-1)A#(s) in U6
    bool flat_zero;   // Bb(s) + (s-1)Ab(s) = 0
    bool flat_units;  // Ab(s), Bb(s) in U6
    bool all() const { return sharp_unit && flat_zero && flat_units; }
};
SpecialValuesReport special_values_check(const Fraction& x);

struct DualityReport {
    bool mixed;     // dF^{bs}(q) ==_q dF^{sf}(q^-1)
    bool diagonal;  // dF^{bb}(q) ==_q dF^{ss}(q^-1)
    bool all() const { return mixed && diagonal; }
};
DualityReport q_farey_det_duality_check(const Fraction& x, const Fraction& y);

struct QFareyAddResult {
    QRational sum;   // quantized reduced Farey sum, in the requested side
    int alpha;
    int beta;
    int solutions;   // how many (alpha, beta) pairs the window contained
};
/// Exponent search for Thm. q-Farey-operations and its slot variants:
/// finds (alpha, beta) with d^{kind} * R = q^a A^l + q^b C^r and
/// d^{kind} * S = q^a B^l + q^b D^r (up to one global sign), re-verified
/// exactly before returning. Requires gcd(a+c, b+d) = dF.
QFareyAddResult q_farey_add(const Fraction& x, const Fraction& y, Side side, QFareyKind slots);

/// alpha of the recalled dF = 1 rule: eps(x)-eps(y)+1 if eps(x) >= eps(y), else 1.
int q_farey_rule_alpha(const Fraction& x, const Fraction& y);

}  // namespace qr
