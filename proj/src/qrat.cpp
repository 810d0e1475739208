#include "qr/qrat.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace qr {

std::string side_name(Side s) { return s == Side::sharp ? "sharp" : "flat"; }

double RatFun::eval(double q) const {
    if (den.is_zero()) return std::numeric_limits<double>::infinity();
    return num.eval(q) / den.eval(q);
}

std::string RatFun::to_string() const {
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

RatFun reduce_fraction(LaurentPoly num, LaurentPoly den) {
    if (num.is_zero() && den.is_zero())
        throw std::domain_error("reduce_fraction(0/0)");
    if (num.is_zero()) return RatFun{LaurentPoly{}, LaurentPoly(1)};
    if (den.is_zero()) return RatFun{LaurentPoly(1), LaurentPoly{}};

    LaurentPoly g = gcd_primitive(num, den);
    if (g.degree() > 0 || g != LaurentPoly(1)) {
        auto qn = exact_div(num, g);
        auto qd = exact_div(den, g);
        if (!qn || !qd) throw std::logic_error("reduce_fraction: gcd does not divide");
        num = *qn;
        den = *qd;
    }
    Int c = boost::multiprecision::gcd(num.content(), den.content());
    if (c > 1) {
        LaurentPoly n2, d2;
        for (const auto& [e, co] : num.coeffs()) n2.set_coeff(e, co / c);
        for (const auto& [e, co] : den.coeffs()) d2.set_coeff(e, co / c);
        num = n2;
        den = d2;
    }
    int sh = std::min(num.low_exp(), den.low_exp());
    num = num.shifted(-sh);
    den = den.shifted(-sh);
    if (den.lowest_coeff() < 0) {
        num = -num;
        den = -den;
    }
    return RatFun{num, den};
}

std::string QRational::to_string() const {
    return "[" + fun().to_string() + "]_" + side_name(side);
}

std::string QRational::to_json() const {
    nlohmann::ordered_json j;
    j["num"] = num.to_string();
    j["den"] = den.to_string();
    j["side"] = side_name(side);
    return j.dump();
}

std::string ModularWord::to_string() const {
    std::string s;
    for (Letter l : letters_) {
        switch (l) {
            case Letter::T: s += "T"; break;
            case Letter::Tinv: s += "T'"; break;
            case Letter::S: s += "S"; break;
            case Letter::N: s += "N"; break;
        }
    }
    return s.empty() ? "e" : s;
}

namespace {

using Letter = ModularWord::Letter;

// Word evaluated at q = 1 acting on infinity, as an exact fraction.
Fraction word_at_one_on_infinity(const std::vector<Letter>& letters) {
    Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (Letter l : letters) {
        Int a, b, c, d;
        switch (l) {
            case Letter::T: a = 1; b = 1; c = 0; d = 1; break;
            case Letter::Tinv: a = 1; b = -1; c = 0; d = 1; break;
            case Letter::S: a = 0; b = -1; c = 1; d = 0; break;
            case Letter::N: a = -1; b = 0; c = 0; d = 1; break;
        }
        Int n00 = m00 * a + m01 * c, n01 = m00 * b + m01 * d;
        Int n10 = m10 * a + m11 * c, n11 = m10 * b + m11 * d;
        m00 = n00; m01 = n01; m10 = n10; m11 = n11;
    }
    return Fraction(m00, m10);
}

}  // namespace

ModularWord word_for(const Fraction& x) {
    std::vector<Letter> letters;
    if (x.is_infinity()) return ModularWord{};
    if (x.is_integer() && x.num <= 0) {
        for (Int i = 0; i < -x.num; ++i) letters.push_back(Letter::Tinv);
        letters.push_back(Letter::S);
    } else {
        std::vector<Int> cf = continued_fraction_even(x);
        for (size_t i = 0; i < cf.size(); ++i) {
            if (i % 2 == 0) {
                Letter l = cf[i] >= 0 ? Letter::T : Letter::Tinv;
                Int n = cf[i] >= 0 ? cf[i] : Int(-cf[i]);
                for (Int k = 0; k < n; ++k) letters.push_back(l);
            } else {
                for (Int k = 0; k < cf[i]; ++k) {
                    letters.push_back(Letter::T);
                    letters.push_back(Letter::S);
                    letters.push_back(Letter::T);
                }
            }
        }
    }
    if (word_at_one_on_infinity(letters) != x)
        throw std::logic_error("word_for: word does not evaluate to " + x.to_string());
    return ModularWord{std::move(letters)};
}

std::array<Int, 4> QMatrix::at_one() const {
    auto at1 = [](const LaurentPoly& p) {
        Int s = 0;
        for (const auto& [e, c] : p.coeffs()) s += c;
        return s;
    };
    return {at1(a), at1(b), at1(c), at1(d)};
}

QMatrix QMatrix::identity() {
    return QMatrix{LaurentPoly(1), LaurentPoly{}, LaurentPoly{}, LaurentPoly(1)};
}

QMatrix QMatrix::generator(ModularWord::Letter l) {
    const LaurentPoly one(1), zero{};
    const LaurentPoly mq = LaurentPoly::monomial(1, 1);
    switch (l) {
        case Letter::T:  // (q 1; 0 1)
            return QMatrix{mq, one, zero, one};
        case Letter::Tinv:  // (1 -1; 0 q), inverse of T_q up to a monomial
            return QMatrix{one, LaurentPoly(-1), zero, mq};
        case Letter::S:  // (0 -1; q 0)
            return QMatrix{zero, LaurentPoly(-1), mq, zero};
        case Letter::N:  // (-1 1-q^-1; q-1 1)
            return QMatrix{LaurentPoly(-1),
                           LaurentPoly::from_terms({{0, 1}, {-1, -1}}),
                           LaurentPoly::from_terms({{1, 1}, {0, -1}}), one};
    }
    throw std::logic_error("unknown letter");
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    return QMatrix{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                   x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

QMatrix matrix_quantize(const ModularWord& w) {
    QMatrix m = QMatrix::identity();
    for (auto l : w.letters()) m = m * QMatrix::generator(l);
    // strip the common monomial
    int sh = 0;
    bool any = false;
    for (const LaurentPoly* p : {&m.a, &m.b, &m.c, &m.d}) {
        if (p->is_zero()) continue;
        sh = any ? std::min(sh, p->low_exp()) : p->low_exp();
        any = true;
    }
    if (any && sh != 0) {
        m.a = m.a.shifted(-sh);
        m.b = m.b.shifted(-sh);
        m.c = m.c.shifted(-sh);
        m.d = m.d.shifted(-sh);
    }
    return m;
}

namespace {

struct QuantizeKey {
    Fraction x;
    Side side;
    bool operator<(const QuantizeKey& o) const {
        if (side != o.side) return side < o.side;
        return FractionKeyLess{}(x, o.x);
    }
};

std::shared_mutex cache_mutex;
std::map<QuantizeKey, QRational> cache;

}  // namespace

const QRational& quantize(const Fraction& x, Side side) {
    QuantizeKey key{x, side};
    {
        std::shared_lock lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    QMatrix m = matrix_quantize(word_for(x));
    LaurentPoly num, den;
    if (side == Side::sharp) {
        num = m.a;
        den = m.c;
    } else {
        const LaurentPoly col = LaurentPoly::from_terms({{0, 1}, {1, -1}});  // 1-q
        num = m.a + m.b * col;
        den = m.c + m.d * col;
    }
    RatFun f = reduce_fraction(std::move(num), std::move(den));
    QRational result{f.num, f.den, side};
    std::unique_lock lock(cache_mutex);
    auto [it, inserted] = cache.emplace(key, std::move(result));
    return it->second;
}

RatFun transition_map(const RatFun& r) {
    const LaurentPoly mq = LaurentPoly::monomial(1, 1);
    const LaurentPoly one_minus_q = LaurentPoly::from_terms({{0, 1}, {1, -1}});
    LaurentPoly num = mq * r.num + one_minus_q * r.den;
    LaurentPoly den = -one_minus_q * r.num + r.den;
    return reduce_fraction(std::move(num), std::move(den));
}

QRational apply(const QMatrix& m, const QRational& r) {
    LaurentPoly num = m.a * r.num + m.b * r.den;
    LaurentPoly den = m.c * r.num + m.d * r.den;
    if (num.is_zero() && den.is_zero())
        throw std::domain_error("apply: indeterminate image");
    auto e = m.at_one();
    Int det1 = e[0] * e[3] - e[1] * e[2];
    Side side = (det1 < 0) ? other(r.side) : r.side;
    RatFun f = reduce_fraction(std::move(num), std::move(den));
    return QRational{f.num, f.den, side};
}

int epsilon(const Fraction& x) {
    const QRational& s = quantize(x, Side::sharp);
    const QRational& f = quantize(x, Side::flat);
    LaurentPoly p = s.num * f.den - f.num * s.den;
    // must be q^eps - q^(eps+1)
    if (!p.is_zero() && p.term_count() == 2) {
        int e = p.low_exp();
        if (p.coeff(e) == 1 && p.coeff(e + 1) == -1) return e;
    }
    throw std::logic_error("epsilon identity A#*Bb - Ab*B# = q^e(1-q) fails for " +
                           x.to_string() + " (would falsify the determinant identity)");
}

JumpParts jump(const Fraction& x) {
    if (x.is_infinity()) throw std::domain_error("jump of infinity");
    int e = epsilon(x);
    LaurentPoly num = LaurentPoly::from_terms({{e, 1}, {e + 1, -1}});  // q^e (1-q)
    const QRational& s = quantize(x, Side::sharp);
    const QRational& f = quantize(x, Side::flat);
    return JumpParts{num, s.den * f.den};
}

}  // namespace qr
