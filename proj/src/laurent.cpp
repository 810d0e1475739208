#include "qr/laurent.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace qr {

LaurentPoly::LaurentPoly(const Int& constant) {
    if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(const Int& coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exp] = coeff;
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<int, Int>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.set_coeff(e, p.coeff(e) + c);
    return p;
}

int LaurentPoly::low_exp() const {
    if (is_zero()) throw std::domain_error("low_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return coeffs_.rbegin()->first;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
}

Int LaurentPoly::lowest_coeff() const {
    return is_zero() ? Int(0) : coeffs_.begin()->second;
}

Int LaurentPoly::leading_coeff() const {
    return is_zero() ? Int(0) : coeffs_.rbegin()->second;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : coeffs_) g = boost::multiprecision::gcd(g, c < 0 ? Int(-c) : c);
    return g;
}

void LaurentPoly::set_coeff(int exp, const Int& c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) set_coeff(e, coeff(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) set_coeff(e, coeff(e) - c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            int e = ea + eb;
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end())
                r.coeffs_.emplace(e, ca * cb);
            else
                it->second += ca * cb;
        }
    for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
        it = (it->second == 0) ? r.coeffs_.erase(it) : std::next(it);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Int& k) const {
    LaurentPoly r;
    if (k == 0) return r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = c * k;
    return r;
}

LaurentPoly LaurentPoly::shifted(int n) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + n] = c;
    return r;
}

double LaurentPoly::eval(double q) const {
    double acc = 0.0;
    for (const auto& [e, c] : coeffs_) acc += c.convert_to<double>() * std::pow(q, e);
    return acc;
}

std::pair<Int, Int> LaurentPoly::eval_rational(const Int& a, const Int& b) const {
    if (b == 0) throw std::domain_error("eval_rational: zero denominator");
    if (is_zero()) return {0, 1};
    int lo = low_exp(), n = degree() - lo;
    // Horner on the shifted polynomial P (lowest exponent 0): P(a/b) = H / b^n.
    Int h = 0, bp = 1;
    for (int i = n; i >= 0; --i) {
        h = h * a + coeff(lo + i) * bp;
        if (i > 0) bp *= b;
    }
    Int num = h, den = boost::multiprecision::pow(b, static_cast<unsigned>(n));
    // multiply by (a/b)^lo
    if (lo > 0) {
        num *= boost::multiprecision::pow(a, static_cast<unsigned>(lo));
        den *= boost::multiprecision::pow(b, static_cast<unsigned>(lo));
    } else if (lo < 0) {
        num *= boost::multiprecision::pow(b, static_cast<unsigned>(-lo));
        den *= boost::multiprecision::pow(a, static_cast<unsigned>(-lo));
    }
    return {num, den};
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Int c = it->second;
        int e = it->first;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int ac = c < 0 ? Int(-c) : c;
        if (e == 0) {
            os << ac.str();
        } else {
            if (ac != 1) os << ac.str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly p;
    size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    int sign = 1;
    bool any = false;
    while (i < n) {
        skip_ws();
        if (i >= n) break;
        if (text[i] == '+') { sign = 1; ++i; skip_ws(); }
        else if (text[i] == '-') { sign = -1; ++i; skip_ws(); }
        else if (any) throw std::invalid_argument("poly parse: expected + or - at '" + text.substr(i) + "'");
        // coefficient digits
        std::string digits;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        Int c = digits.empty() ? Int(1) : Int(digits);
        skip_ws();
        if (i < n && text[i] == '*') { ++i; skip_ws(); }
        int e = 0;
        if (i < n && text[i] == 'q') {
            ++i;
            e = 1;
            if (i < n && text[i] == '^') {
                ++i;
                std::string es;
                if (i < n && text[i] == '-') es += text[i++];
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) es += text[i++];
                if (es.empty() || es == "-") throw std::invalid_argument("poly parse: bad exponent");
                e = std::stoi(es);
            }
        } else if (digits.empty()) {
            throw std::invalid_argument("poly parse: bare sign in '" + text + "'");
        }
        p.set_coeff(e, p.coeff(e) + sign * c);
        sign = 1;
        any = true;
        skip_ws();
    }
    if (!any && text.find('0') == std::string::npos)
        throw std::invalid_argument("poly parse: empty input");
    return p;
}

NormalizedPoly normalize(const LaurentPoly& p, bool make_lowest_positive) {
    if (p.is_zero()) throw std::domain_error("normalize: zero polynomial");
    NormalizedPoly r;
    r.shift = p.low_exp();
    r.sign = 1;
    LaurentPoly body = p.shifted(-r.shift);
    if (make_lowest_positive && body.lowest_coeff() < 0) {
        r.sign = -1;
        body = -body;
    }
    r.poly = body;
    return r;
}

bool equiv_q(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.shifted(-a.low_exp()) == b.shifted(-b.low_exp());
}

bool equiv_q_up_to_sign(const LaurentPoly& a, const LaurentPoly& b) {
    return equiv_q(a, b) || equiv_q(a, -b);
}

namespace {

// Primitive part of a nonzero polynomial shifted to lowest exponent 0, with
// positive leading coefficient.
LaurentPoly primitive_part(const LaurentPoly& p) {
    Int c = p.content();
    LaurentPoly r = p.shifted(-p.low_exp());
    if (c != 1) {
        LaurentPoly s;
        for (const auto& [e, co] : r.coeffs()) s.set_coeff(e, co / c);
        r = s;
    }
    if (r.leading_coeff() < 0) r = -r;
    return r;
}

// Pseudo-remainder of a by b, both with lowest exponent 0, deg a >= deg b.
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const Int lb = b.leading_coeff();
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const Int la = a.leading_coeff();
        const int sh = a.degree() - db;
        a = a.scaled(lb) - b.scaled(la).shifted(sh);
    }
    return a;
}

}  // namespace

LaurentPoly gcd_primitive(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd_primitive(0, 0)");
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    LaurentPoly u = primitive_part(a), v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (true) {
        LaurentPoly r = pseudo_rem(u, v);
        if (r.is_zero()) return v;
        u = v;
        v = primitive_part(r);
    }
}

bool is_palindromic(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("is_palindromic: zero polynomial");
    LaurentPoly body = p.shifted(-p.low_exp());
    int d = body.degree();
    for (const auto& [e, c] : body.coeffs())
        if (c != body.coeff(d - e)) return false;
    return true;
}

LaurentPoly subst_qinv(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.coeffs()) r.set_coeff(-e, c);
    return r;
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div by zero");
    if (a.is_zero()) return LaurentPoly{};
    int sa = a.low_exp(), sb = b.low_exp();
    LaurentPoly r = a.shifted(-sa), d = b.shifted(-sb);
    LaurentPoly quo;
    const Int lb = d.leading_coeff();
    const int db = d.degree();
    while (!r.is_zero() && r.degree() >= db) {
        Int la = r.leading_coeff();
        if (la % lb != 0) return std::nullopt;
        Int qc = la / lb;
        int sh = r.degree() - db;
        quo.set_coeff(sh, qc);
        r -= d.scaled(qc).shifted(sh);
    }
    if (!r.is_zero()) return std::nullopt;
    return quo.shifted(sa - sb);
}

std::string poly_to_json(const LaurentPoly& p) {
    nlohmann::ordered_json j;
    j["coeffs"] = nlohmann::ordered_json::object();
    for (const auto& [e, c] : p.coeffs()) j["coeffs"][std::to_string(e)] = c.str();
    return j.dump();
}

LaurentPoly poly_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    LaurentPoly p;
    for (auto& [k, v] : j.at("coeffs").items())
        p.set_coeff(std::stoi(k), Int(v.get<std::string>()));
    return p;
}

}  // namespace qr
