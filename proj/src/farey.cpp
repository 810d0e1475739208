#include "qr/farey.hpp"

#include "qr/number_rings.hpp"

#include <algorithm>

namespace qr {

QFareyKind QFareyKind::parse(const std::string& s) {
    auto one = [](char c) {
        if (c == 's') return Side::sharp;
        if (c == 'f') return Side::flat;
        throw std::invalid_argument("bad q-Farey kind letter");
    };
    if (s.size() != 2) throw std::invalid_argument("q-Farey kind must be ss|sf|fs|ff");
    return QFareyKind{one(s[0]), one(s[1])};
}

std::string QFareyKind::to_string() const {
    auto one = [](Side s) { return s == Side::sharp ? 's' : 'f'; };
    return std::string{one(left), one(right)};
}

Int farey_det(const Fraction& x, const Fraction& y) {
    Int d = x.num * y.den - x.den * y.num;
    return d < 0 ? Int(-d) : d;
}

std::pair<Int, Int> farey_sum(const Fraction& x, const Fraction& y) {
    return {x.num + y.num, x.den + y.den};
}

std::pair<Int, Int> farey_diff(const Fraction& x, const Fraction& y) {
    if (x == y) throw std::domain_error("farey_diff of equal fractions is 0/0");
    return {x.num - y.num, x.den - y.den};
}

GraphDistanceResult graph_distance_le2(const Fraction& x, const Fraction& y) {
    if (x == y) throw std::invalid_argument("graph_distance_le2: x == y");
    Int d = farey_det(x, y);
    if (d == 1) return {GraphDistance::one, std::nullopt};
    using boost::multiprecision::gcd;
    auto [sn, sd] = farey_sum(x, y);
    if (gcd(sn < 0 ? Int(-sn) : sn, sd < 0 ? Int(-sd) : sd) == d)
        return {GraphDistance::two, Fraction(sn / d, sd / d)};
    auto [dn, dd] = farey_diff(x, y);
    if (gcd(dn < 0 ? Int(-dn) : dn, dd < 0 ? Int(-dd) : dd) == d)
        return {GraphDistance::two, Fraction(dn / d, dd / d)};
    return {GraphDistance::more, std::nullopt};
}

LaurentPoly q_farey_det(const Fraction& x, const Fraction& y, QFareyKind kind) {
    const QRational& xs = quantize(x, kind.left);
    const QRational& ys = quantize(y, kind.right);
    LaurentPoly p = xs.num * ys.den - xs.den * ys.num;
    if (kind.left == Side::flat && kind.right == Side::flat) {
        const LaurentPoly sigma_min = LaurentPoly::from_terms({{2, 1}, {1, -1}, {0, 1}});
        auto quo = exact_div(p, sigma_min);
        if (!quo)
            throw std::logic_error("dF^bb not divisible by q^2-q+1 for (" + x.to_string() +
                                   ", " + y.to_string() + ") — falsifies Lemma special-values");
        return *quo;
    }
    return p;
}

SpecialValuesReport special_values_check(const Fraction& x) {
    if (x.is_infinity()) throw std::invalid_argument("special_values_check needs x in Q");
    const QRational& s = quantize(x, Side::sharp);
    const QRational& f = quantize(x, Side::flat);
    const LaurentPoly qm1 = LaurentPoly::from_terms({{1, 1}, {0, -1}});  // q-1
    SpecialValuesReport r{};
    r.sharp_unit = is_sixth_root_of_unity(eval_sigma(s.den + qm1 * s.num));
    r.flat_zero = eval_sigma(f.den + qm1 * f.num).is_zero();
    r.flat_units = is_sixth_root_of_unity(eval_sigma(f.num)) &&
                   is_sixth_root_of_unity(eval_sigma(f.den));
    return r;
}

DualityReport q_farey_det_duality_check(const Fraction& x, const Fraction& y) {
    if (x == y) throw std::invalid_argument("duality check: x == y");
    DualityReport r{};
    LaurentPoly bs = q_farey_det(x, y, QFareyKind{Side::flat, Side::sharp});
    LaurentPoly sf = q_farey_det(x, y, QFareyKind{Side::sharp, Side::flat});
    r.mixed = equiv_q(bs, subst_qinv(sf));
    LaurentPoly bb = q_farey_det(x, y, QFareyKind{Side::flat, Side::flat});
    LaurentPoly ss = q_farey_det(x, y, QFareyKind{Side::sharp, Side::sharp});
    r.diagonal = equiv_q(bb, subst_qinv(ss));
    return r;
}

namespace {

// q^b * c == p exactly? returns b.
std::optional<int> monomial_quotient(const LaurentPoly& p, const LaurentPoly& c) {
    if (p.is_zero() || c.is_zero()) return std::nullopt;
    int b = p.low_exp() - c.low_exp();
    if (c.shifted(b) == p) return b;
    return std::nullopt;
}

}  // namespace

QFareyAddResult q_farey_add(const Fraction& x, const Fraction& y, Side side, QFareyKind slots) {
    using boost::multiprecision::gcd;
    auto [sn, sd] = farey_sum(x, y);
    Int d_f = farey_det(x, y);
    if (gcd(sn < 0 ? Int(-sn) : sn, sd < 0 ? Int(-sd) : sd) != d_f)
        throw std::invalid_argument("q_farey_add: gcd(a+c, b+d) != dF (theorem hypothesis)");
    Fraction r(sn, sd);

    const QRational& rq = quantize(r, side);
    const QRational& xq = quantize(x, slots.left);
    const QRational& yq = quantize(y, slots.right);
    const LaurentPoly det = q_farey_det(x, y, slots);

    const LaurentPoly &A = xq.num, &B = xq.den, &C = yq.num, &D = yq.den;
    const LaurentPoly &R = rq.num, &S = rq.den;

    int max_deg = 2;
    for (const LaurentPoly* p : {&A, &B, &C, &D})
        if (!p->is_zero()) max_deg = std::max(max_deg, p->degree());
    const int window = 2 * max_deg + 2;

    QFareyAddResult out{rq, 0, 0, 0};
    for (int sign = 0; sign < 2; ++sign) {
        LaurentPoly ds = sign ? -det : det;
        LaurentPoly dR = ds * R, dS = ds * S;
        for (int alpha = -window; alpha <= window; ++alpha) {
            std::optional<int> beta;
            LaurentPoly p1 = dR - A.shifted(alpha);
            if (!A.is_zero() || !p1.is_zero()) {
                if (p1.is_zero()) {
                    if (!C.is_zero()) continue;
                    // beta unconstrained by the first equation; pin via the second
                    beta = monomial_quotient(dS - B.shifted(alpha), D);
                } else {
                    beta = monomial_quotient(p1, C);
                }
            } else {
                beta = monomial_quotient(dS - B.shifted(alpha), D);
            }
            if (!beta || *beta < -window || *beta > window) continue;
            if (dR != A.shifted(alpha) + C.shifted(*beta)) continue;
            if (dS != B.shifted(alpha) + D.shifted(*beta)) continue;
            if (out.solutions == 0) {
                out.alpha = alpha;
                out.beta = *beta;
            }
            ++out.solutions;
        }
    }
    if (out.solutions == 0)
        throw std::runtime_error("q_farey_add: exponent search exhausted in [-" +
                                 std::to_string(window) + ", " + std::to_string(window) +
                                 "] for (" + x.to_string() + ", " + y.to_string() + ") slots " +
                                 slots.to_string() + " side " + side_name(side));
    return out;
}

int q_farey_rule_alpha(const Fraction& x, const Fraction& y) {
    int e1 = epsilon(x), e2 = epsilon(y);
    return e1 >= e2 ? e1 - e2 + 1 : 1;
}

}  // namespace qr
