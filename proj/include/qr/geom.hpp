#pragma once

#include "qr/qrat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qr {

/// Fast numeric [x]#_q and [x]b_q at real q > 0 via the 2x2 matrix walk over
/// the continued-fraction word (closed-form generator powers, no symbolic
/// polynomials). For infinity: sharp is +inf, flat is 1/(1-q).
std::pair<double, double> numeric_values(const Fraction& x, double q);

/// Numeric jump l_q(x) = |[x]# - [x]b|.
double numeric_jump(const Fraction& x, double q);

/// The q-disk of a rational: the circle over the segment [[x]b, [x]#] (for
/// q in (0,1); endpoints swap for q > 1). Infinity yields a half-plane.
struct Disk {
    Fraction label;
    double left, right;   // left < right
    double center() const { return (left + right) / 2; }
    double radius() const { return (right - left) / 2; }
    bool halfplane = false;  // the infinity "disk": {x >= left}
};

Disk disk_of(const Fraction& x, double q);

enum class CenterMode { inner, outer };

/// Homothety center of two disjoint finite disks. The outer center of equal
/// radii is the point at infinity (returned as nullopt).
std::optional<double> homothety_numeric(const Disk& d1, const Disk& d2, CenterMode mode);

struct Circle {
    double cx, cy, r;
};

/// Fundamental domain of the deformed PGL2(Z) action, q in (0,1).
struct FundamentalDomain {
    double q;
    double vertex_i_x, vertex_i_y;      // i/sqrt(q)
    double vertex_sigma_x, vertex_sigma_y;
    double p1, p2;                      // ideal vertices on the real axis
    Circle unit;                        // C_{1,q}
    Circle imag_axis;                   // Im_q
    Circle critical;                    // C_{2,q}
    double funnel_x;                    // 1/(1-q)
};

FundamentalDomain fundamental_domain(double q);

/// (boundary geodesic length, area) of the convex core of the deformed
/// modular surface: (|ln q|, arctan((2q-1)/sqrt3) + arctan((2/q-1)/sqrt3)).
std::pair<double, double> modular_surface_stats(double q);

/// Sum of jumps l_q(z) over all reduced z in (x, y) with denominator at most
/// max_den. Unbounded numerator ranges are summed exactly per denominator
/// class via the geometric relation l_q(z+1) = q l_q(z).
double gap_partial_sum(const Fraction& x, const Fraction& y, double q, int max_den);

struct RenderConfig {
    double q = 0.45;
    Fraction lo{-1, 1};
    Fraction hi{3, 1};
    int max_den = 20;
    bool domain = false;
    std::optional<std::pair<Fraction, Fraction>> tangents;
    double width_px = 900.0;
};

/// Deterministic standalone SVG: disks mirrored across the real axis with
/// labels, optional tangent overlay through the homothety centers, optional
/// fundamental-domain overlay.
std::string render_svg(const RenderConfig& cfg);

}  // namespace qr
