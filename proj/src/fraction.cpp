#include "qr/fraction.hpp"

#include <stdexcept>

namespace qr {

Fraction::Fraction(Int n, Int d) {
    if (n == 0 && d == 0) throw std::domain_error("Fraction(0, 0)");
    if (d == 0) {
        num = 1;
        den = 0;
        return;
    }
    if (n == 0) {
        num = 0;
        den = 1;
        return;
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Int g = boost::multiprecision::gcd(n < 0 ? Int(-n) : n, d);
    num = n / g;
    den = d / g;
}

Fraction Fraction::parse(const std::string& text) {
    if (text == "inf" || text == "1/0") return infinity();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Fraction(Int(text), Int(1));
        return Fraction(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse fraction '" + text + "'");
    }
}

std::string Fraction::to_string() const {
    if (is_infinity()) return "inf";
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Int Fraction::floor() const {
    if (is_infinity()) throw std::domain_error("floor of infinity");
    Int fq = num / den;
    if (num % den != 0 && num < 0) fq -= 1;
    return fq;
}

double Fraction::to_double() const {
    if (is_infinity()) throw std::domain_error("to_double of infinity");
    return num.convert_to<double>() / den.convert_to<double>();
}

Fraction reduce_pair(const std::pair<Int, Int>& p) { return Fraction(p.first, p.second); }

std::vector<Int> continued_fraction_canonical(const Fraction& x) {
    if (x.is_infinity()) throw std::domain_error("continued fraction of infinity");
    std::vector<Int> cf;
    Int a = x.num, b = x.den;
    while (true) {
        Int fl = a / b;
        if (a % b != 0 && ((a < 0) != (b < 0))) fl -= 1;
        cf.push_back(fl);
        Int r = a - fl * b;
        if (r == 0) return cf;
        a = b;
        b = r;
    }
}

std::vector<Int> continued_fraction_even(const Fraction& x) {
    std::vector<Int> cf = continued_fraction_canonical(x);
    if (cf.size() % 2 == 1) {
        Int last = cf.back();
        cf.pop_back();
        if (cf.empty()) {
            cf.push_back(last - 1);  // integer [x] -> [x-1, 1]
        } else {
            cf.push_back(last - 1);  // canonical tails end >= 2
        }
        cf.push_back(1);
    }
    return cf;
}

Fraction evaluate_continued_fraction(const std::vector<Int>& cf) {
    if (cf.empty()) throw std::invalid_argument("empty continued fraction");
    // bottom-up: value = a_i + 1/value
    Int n = cf.back(), d = 1;
    for (auto it = std::next(cf.rbegin()); it != cf.rend(); ++it) {
        // a + d/n
        Int nn = *it * n + d;
        d = n;
        n = nn;
    }
    return Fraction(n, d);
}

}  // namespace qr
