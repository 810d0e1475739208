#include "qr/number_rings.hpp"

#include <array>
#include <sstream>

namespace qr {

std::string EisensteinValue::to_string() const {
    std::ostringstream os;
    os << a.str();
    if (b != 0) os << (b < 0 ? " - " : " + ") << (b < 0 ? Int(-b) : b).str() << "*s";
    return os.str();
}

EisensteinValue eval_sigma(const LaurentPoly& p) {
    // sigma^k for k = 0..5: 1, s, s-1, -1, -s, 1-s.
    static const std::array<EisensteinValue, 6> cycle = {
        EisensteinValue{1, 0},  EisensteinValue{0, 1},  EisensteinValue{-1, 1},
        EisensteinValue{-1, 0}, EisensteinValue{0, -1}, EisensteinValue{1, -1}};
    EisensteinValue acc{0, 0};
    for (const auto& [e, c] : p.coeffs()) {
        int k = ((e % 6) + 6) % 6;
        acc = acc + EisensteinValue{c, 0} * cycle[static_cast<size_t>(k)];
    }
    return acc;
}

bool is_sixth_root_of_unity(const EisensteinValue& v) {
    static const std::array<EisensteinValue, 6> units = {
        EisensteinValue{1, 0},  EisensteinValue{-1, 0}, EisensteinValue{0, 1},
        EisensteinValue{0, -1}, EisensteinValue{-1, 1}, EisensteinValue{1, -1}};
    for (const auto& u : units)
        if (v == u) return true;
    return false;
}

std::string GaussianInt::to_string() const {
    std::ostringstream os;
    os << re.str();
    if (im != 0) os << (im < 0 ? " - " : " + ") << (im < 0 ? Int(-im) : im).str() << "*i";
    return os.str();
}

namespace {

// Nearest integer to a/b (ties toward +inf); b > 0 required.
Int round_div(const Int& a, const Int& b) {
    Int t = 2 * a + b;
    Int d = 2 * b;
    // floor division of t by d
    Int fq = t / d;
    if ((t % d != 0) && ((t < 0) != (d < 0))) fq -= 1;
    return fq;
}

GaussianInt unit_normalize(GaussianInt z) {
    // Cycle through associates z, iz, -z, -iz; pick re > 0, im >= 0.
    for (int k = 0; k < 4; ++k) {
        if (z.re > 0 && z.im >= 0) return z;
        z = GaussianInt{-z.im, z.re};  // multiply by i
    }
    throw std::logic_error("unit_normalize: zero input");
}

}  // namespace

GaussianInt gaussian_gcd(GaussianInt a, GaussianInt b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gaussian_gcd(0, 0)");
    while (!b.is_zero()) {
        // quotient rounded to nearest so that N(r) <= N(b)/2
        GaussianInt num = a * b.conj();
        Int nb = b.norm();
        GaussianInt quo{round_div(num.re, nb), round_div(num.im, nb)};
        GaussianInt r = a - quo * b;
        a = b;
        b = r;
    }
    return unit_normalize(a);
}

}  // namespace qr
