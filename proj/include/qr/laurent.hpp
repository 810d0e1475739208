#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qr {

using Int = boost::multiprecision::cpp_int;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
/// The zero polynomial has an empty coefficient map; stored coefficients are
/// never zero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Int& constant);
    LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}

    static LaurentPoly monomial(const Int& coeff, int exp);
    /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
    static LaurentPoly from_terms(std::initializer_list<std::pair<int, Int>> terms);

    bool is_zero() const { return coeffs_.empty(); }
    /// Lowest exponent with nonzero coefficient. Throws on zero.
    int low_exp() const;
    /// Highest exponent with nonzero coefficient. Throws on zero.
    int degree() const;
    int term_count() const { return static_cast<int>(coeffs_.size()); }

    const std::map<int, Int>& coeffs() const { return coeffs_; }
    Int coeff(int exp) const;
    /// Coefficient of the lowest-degree term (0 for the zero polynomial).
    Int lowest_coeff() const;
    Int leading_coeff() const;
    /// gcd of |coefficients|; 0 for the zero polynomial.
    Int content() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const Int& k) const;
    /// Multiplication by q^n.
    LaurentPoly shifted(int n) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    double eval(double q) const;
    /// Exact value at q = a/b as an unreduced big-integer pair (num, den), b != 0.
    std::pair<Int, Int> eval_rational(const Int& a, const Int& b) const;

    /// Text form in descending powers: "q^3 + 2*q^2 + q + 1", "q^-2 - 1", "0".
    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

    void set_coeff(int exp, const Int& c);

private:
    std::map<int, Int> coeffs_;
};

/// normalize(p) = (poly, shift, sign) with p = sign * q^shift * poly,
/// poly having lowest exponent 0. With make_lowest_positive the lowest-degree
/// coefficient of poly is made positive ("positive dominant coefficient").
struct NormalizedPoly {
    LaurentPoly poly;
    int shift = 0;
    int sign = 1;
};
NormalizedPoly normalize(const LaurentPoly& p, bool make_lowest_positive = true);

/// a == q^n * b for some integer n; zero is equivalent only to zero.
bool equiv_q(const LaurentPoly& a, const LaurentPoly& b);
/// a == +-q^n * b.
bool equiv_q_up_to_sign(const LaurentPoly& a, const LaurentPoly& b);

/// gcd in Z[q] (Laurent units quotiented): primitive, lowest exponent 0,
/// positive leading coefficient. Computed by a primitive pseudo-remainder
/// sequence. Throws if both arguments are zero.
LaurentPoly gcd_primitive(const LaurentPoly& a, const LaurentPoly& b);

bool is_palindromic(const LaurentPoly& p);

/// q -> q^-1 (exponent negation).
LaurentPoly subst_qinv(const LaurentPoly& p);

/// Exact quotient a / b in Z[q, q^-1], or nullopt if b does not divide a.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

std::string poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const std::string& json_text);

}  // namespace qr
