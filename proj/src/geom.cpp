#include "qr/geom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace qr {

namespace {

struct Mat2 {
    double a, b, c, d;
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

double q_int(double q, long n) {  // [n]_q = 1 + q + ... + q^(n-1)
    if (n <= 0) return 0.0;
    if (q == 1.0) return static_cast<double>(n);
    return (1.0 - std::pow(q, static_cast<double>(n))) / (1.0 - q);
}

Mat2 t_power(double q, long n) {
    if (n >= 0) return {std::pow(q, static_cast<double>(n)), q_int(q, n), 0.0, 1.0};
    long k = -n;
    return {1.0, -q_int(q, k), 0.0, std::pow(q, static_cast<double>(k))};
}

Mat2 l_power(double q, long n) {  // L = TST, L^n = (q^n 0; q [n]_q 1)
    return {std::pow(q, static_cast<double>(n)), 0.0, q * q_int(q, n), 1.0};
}

}  // namespace

std::pair<double, double> numeric_values(const Fraction& x, double q) {
    if (q <= 0.0) throw std::invalid_argument("numeric_values: q must be positive");
    if (x.is_infinity())
        return {std::numeric_limits<double>::infinity(), 1.0 / (1.0 - q)};
    Mat2 m{1, 0, 0, 1};
    if (x.is_integer() && x.num <= 0) {
        m = t_power(q, x.num.convert_to<long>()) * Mat2{0, -1, q, 0};
    } else {
        std::vector<Int> cf = continued_fraction_even(x);
        for (size_t i = 0; i < cf.size(); ++i) {
            long a = cf[i].convert_to<long>();
            m = m * (i % 2 == 0 ? t_power(q, a) : l_power(q, a));
        }
    }
    double sharp = m.c != 0.0 ? m.a / m.c : std::numeric_limits<double>::infinity();
    double fn = m.a + m.b * (1.0 - q), fd = m.c + m.d * (1.0 - q);
    double flat = fd != 0.0 ? fn / fd : std::numeric_limits<double>::infinity();
    return {sharp, flat};
}

double numeric_jump(const Fraction& x, double q) {
    auto [s, f] = numeric_values(x, q);
    return std::abs(s - f);
}

Disk disk_of(const Fraction& x, double q) {
    if (q <= 0.0 || q == 1.0) throw std::invalid_argument("disk_of: q in (0,1) or (1,inf)");
    Disk d;
    d.label = x;
    if (x.is_infinity()) {
        d.halfplane = true;
        d.left = 1.0 / (1.0 - q);
        d.right = std::numeric_limits<double>::infinity();
        return d;
    }
    auto [s, f] = numeric_values(x, q);
    d.left = std::min(s, f);
    d.right = std::max(s, f);
    return d;
}

std::optional<double> homothety_numeric(const Disk& d1, const Disk& d2, CenterMode mode) {
    if (d1.halfplane || d2.halfplane)
        throw std::invalid_argument("homothety_numeric needs finite disks");
    double r1 = d1.radius(), r2 = d2.radius(), m1 = d1.center(), m2 = d2.center();
    if (std::abs(m1 - m2) < r1 + r2 - 1e-12)
        throw std::invalid_argument("homothety_numeric: overlapping disks");
    if (mode == CenterMode::inner) return (r1 * m2 + r2 * m1) / (r1 + r2);
    if (r1 == r2) return std::nullopt;  // outer center escapes to infinity
    return (r1 * m2 - r2 * m1) / (r1 - r2);
}

FundamentalDomain fundamental_domain(double q) {
    if (q <= 0.0 || q >= 1.0) throw std::invalid_argument("fundamental_domain: q in (0,1)");
    FundamentalDomain f;
    f.q = q;
    double disc = q * q - q + 1.0;
    f.vertex_i_x = 0.0;
    f.vertex_i_y = 1.0 / std::sqrt(q);
    f.vertex_sigma_x = 0.5;
    f.vertex_sigma_y = std::sqrt(3.0) / 2.0;
    f.p1 = (1.0 + std::sqrt(disc)) / (1.0 - q);
    f.p2 = (1.0 + std::sqrt(q - 1.0 + 1.0 / q)) / (1.0 - q);
    f.unit = Circle{(q - 1.0) / q, 0.0, std::sqrt(disc) / q};
    f.imag_axis = Circle{1.0 / (1.0 - q), 0.0, std::sqrt(disc / q) / (1.0 - q)};
    f.critical = Circle{1.0 / (1.0 - q), 0.0, std::sqrt(disc) / (1.0 - q)};
    f.funnel_x = 1.0 / (1.0 - q);
    return f;
}

std::pair<double, double> modular_surface_stats(double q) {
    if (q <= 0.0) throw std::invalid_argument("modular_surface_stats: q > 0");
    const double s3 = std::sqrt(3.0);
    double len = std::abs(std::log(q));
    double area = std::atan((2.0 * q - 1.0) / s3) + std::atan((2.0 / q - 1.0) / s3);
    return {len, area};
}

double gap_partial_sum(const Fraction& x, const Fraction& y, double q, int max_den) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("gap_partial_sum: q in (0,1)");
    if (x.is_infinity() || !(x < y))
        throw std::invalid_argument("gap_partial_sum: need x < y with x finite");
    double total = 0.0;
    for (int b = 1; b <= max_den; ++b) {
        for (int a = 0; a < b; ++a) {
            if (boost::multiprecision::gcd(Int(a), Int(b)) != 1) continue;
            // class z = n + a/b; l_q(z) = q^n l_q(a/b)
            double ell0 = numeric_jump(Fraction(a, b), q);
            // n > x - a/b  <=>  n*b > x.num*b - a*x.den (x finite)
            Int diff_num = x.num * b - Int(a) * x.den;
            Int diff_den = x.den * Int(b);
            Int n_lo = diff_num / diff_den;
            if (diff_num % diff_den != 0 && diff_num < 0) n_lo -= 1;  // floor
            n_lo += 1;
            long lo = n_lo.convert_to<long>();
            double geom;
            if (y.is_infinity()) {
                geom = std::pow(q, static_cast<double>(lo)) / (1.0 - q);
            } else {
                Int dn = y.num * b - Int(a) * y.den;
                Int dd = y.den * Int(b);
                Int n_hi = dn / dd;
                if (dn % dd != 0 && dn < 0) n_hi -= 1;  // floor
                if (dn % dd == 0) n_hi -= 1;            // strict upper end
                long hi = n_hi.convert_to<long>();
                if (hi < lo) continue;
                geom = std::pow(q, static_cast<double>(lo)) *
                       (1.0 - std::pow(q, static_cast<double>(hi - lo + 1))) / (1.0 - q);
            }
            total += ell0 * geom;
        }
    }
    return total;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

struct View {
    double x0, x1, y0, y1, scale;
    double sx(double x) const { return (x - x0) * scale; }
    double sy(double y) const { return (y1 - y) * scale; }
};

void tangent_lines(std::ostringstream& os, const View& v, double px, double slope) {
    // two lines through (px, 0) with slopes +-slope, clipped by x-extent
    for (double s : {slope, -slope}) {
        double xa = v.x0, xb = v.x1;
        double ya = s * (xa - px), yb = s * (xb - px);
        os << "  <line x1=\"" << fmt(v.sx(xa)) << "\" y1=\"" << fmt(v.sy(ya)) << "\" x2=\""
           << fmt(v.sx(xb)) << "\" y2=\"" << fmt(v.sy(yb))
           << "\" stroke=\"#7a5195\" stroke-width=\"1\"/>\n";
    }
}

}  // namespace

std::string render_svg(const RenderConfig& cfg) {
    if (!(cfg.q > 0.0 && cfg.q < 1.0)) throw std::invalid_argument("render_svg: q in (0,1)");
    if (cfg.max_den < 1) throw std::invalid_argument("render_svg: max_den >= 1");

    // collect labels lo <= x <= hi, den <= max_den, ordered by value
    std::vector<Fraction> labels;
    if (!(cfg.hi < cfg.lo)) {
        auto ceil_div = [](const Int& n, const Int& d) {  // d > 0
            Int v = n / d;
            if (n % d != 0 && n > 0) v += 1;
            return v;
        };
        for (int b = 1; b <= cfg.max_den; ++b) {
            // a/b in [lo, hi]: a >= ceil(lo.num*b / lo.den)
            Int alo = ceil_div(cfg.lo.num * b, cfg.lo.den);
            for (Int a = alo; !(cfg.hi < Fraction(a, b)); ++a) {
                if (boost::multiprecision::gcd(a < 0 ? Int(-a) : a, Int(b)) == 1)
                    labels.push_back(Fraction(a, b));
            }
        }
        std::sort(labels.begin(), labels.end(), [](const Fraction& u, const Fraction& w) {
            if (u < w) return true;
            if (w < u) return false;
            return FractionKeyLess{}(u, w);
        });
    }

    std::vector<Disk> disks;
    disks.reserve(labels.size());
    double max_r = 0.05;
    for (const auto& f : labels) {
        disks.push_back(disk_of(f, cfg.q));
        max_r = std::max(max_r, disks.back().radius());
    }

    View v;
    double lo = cfg.lo < cfg.hi ? cfg.lo.to_double() : 0.0;
    double hi = cfg.lo < cfg.hi ? cfg.hi.to_double() : 1.0;
    for (const auto& d : disks) {
        lo = std::min(lo, d.left);
        hi = std::max(hi, d.right);
    }
    double margin = 0.05 * (hi - lo);
    v.x0 = lo - margin;
    v.x1 = hi + margin;
    double ymax = std::max(max_r * 1.15, 0.3 * (hi - lo));
    if (cfg.domain) ymax = std::max(ymax, 1.0 / std::sqrt(cfg.q) * 1.1);
    v.y0 = -ymax;
    v.y1 = ymax;
    v.scale = cfg.width_px / (v.x1 - v.x0);
    double height = (v.y1 - v.y0) * v.scale;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(cfg.width_px)
       << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(cfg.width_px) << " "
       << fmt(height) << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // real axis
    os << "  <line x1=\"0\" y1=\"" << fmt(v.sy(0)) << "\" x2=\"" << fmt(cfg.width_px)
       << "\" y2=\"" << fmt(v.sy(0)) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // infinity half-plane when its boundary is in view
    double funnel = 1.0 / (1.0 - cfg.q);
    if (funnel > v.x0 && funnel < v.x1) {
        os << "  <rect x=\"" << fmt(v.sx(funnel)) << "\" y=\"0\" width=\""
           << fmt(cfg.width_px - v.sx(funnel)) << "\" height=\"" << fmt(height)
           << "\" fill=\"#e8e8e8\"/>\n";
        os << "  <line x1=\"" << fmt(v.sx(funnel)) << "\" y1=\"0\" x2=\"" << fmt(v.sx(funnel))
           << "\" y2=\"" << fmt(height) << "\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n";
    }

    for (size_t i = 0; i < disks.size(); ++i) {
        const Disk& d = disks[i];
        os << "  <circle cx=\"" << fmt(v.sx(d.center())) << "\" cy=\"" << fmt(v.sy(0))
           << "\" r=\"" << fmt(d.radius() * v.scale)
           << "\" fill=\"#dfe7f2\" stroke=\"#2f4b7c\" stroke-width=\"1\"/>\n";
        if (d.radius() * v.scale > 9.0) {
            os << "  <text x=\"" << fmt(v.sx(d.center())) << "\" y=\""
               << fmt(v.sy(d.radius()) - 4.0)
               << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">"
               << labels[i].to_string() << "</text>\n";
        }
    }

    if (cfg.tangents) {
        Disk d1 = disk_of(cfg.tangents->first, cfg.q);
        Disk d2 = disk_of(cfg.tangents->second, cfg.q);
        auto ic = homothety_numeric(d1, d2, CenterMode::inner);
        auto ec = homothety_numeric(d1, d2, CenterMode::outer);
        if (ic) {
            double dd = std::abs(d1.center() - *ic);
            tangent_lines(os, v, *ic, d1.radius() / std::sqrt(dd * dd - d1.radius() * d1.radius()));
        }
        if (ec) {
            double dd = std::abs(d1.center() - *ec);
            tangent_lines(os, v, *ec, d1.radius() / std::sqrt(dd * dd - d1.radius() * d1.radius()));
        }
    }

    if (cfg.domain) {
        FundamentalDomain fd = fundamental_domain(cfg.q);
        for (const Circle& c : {fd.unit, fd.imag_axis, fd.critical}) {
            os << "  <circle cx=\"" << fmt(v.sx(c.cx)) << "\" cy=\"" << fmt(v.sy(c.cy))
               << "\" r=\"" << fmt(c.r * v.scale)
               << "\" fill=\"none\" stroke=\"#bc5090\" stroke-width=\"1.2\"/>\n";
        }
        os << "  <line x1=\"" << fmt(v.sx(fd.funnel_x)) << "\" y1=\"0\" x2=\""
           << fmt(v.sx(fd.funnel_x)) << "\" y2=\"" << fmt(height)
           << "\" stroke=\"#bc5090\" stroke-width=\"1.2\" stroke-dasharray=\"4 3\"/>\n";
        for (auto [px, py] : {std::pair{fd.vertex_i_x, fd.vertex_i_y},
                              std::pair{fd.vertex_sigma_x, fd.vertex_sigma_y},
                              std::pair{fd.p1, 0.0}, std::pair{fd.p2, 0.0}}) {
            os << "  <circle cx=\"" << fmt(v.sx(px)) << "\" cy=\"" << fmt(v.sy(py))
               << "\" r=\"3\" fill=\"#ffa600\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace qr
