#include "qr/markov.hpp"

#include <algorithm>

namespace qr {

namespace {

const Fraction kZero{0, 1};

void fill_quantizations(MarkovNode& n) {
    const Fraction* fs[3] = {&n.left, &n.middle, &n.right};
    for (int i = 0; i < 3; ++i) {
        n.q_sharp[i] = quantize(*fs[i], Side::sharp);
        n.q_flat[i] = quantize(*fs[i], Side::flat);
    }
}

}  // namespace

MarkovTree markov_tree(int depth) {
    if (depth < 1 || depth > 8)
        throw std::invalid_argument("markov_tree: depth must be in [1, 8]");
    MarkovTree t;
    t.depth = depth;
    MarkovNode root;
    root.left = kZero;
    root.right = Fraction(1, 2);
    root.middle = reduce_pair(springborn_sum(root.left, root.right));
    root.depth = 1;
    fill_quantizations(root);
    t.nodes.push_back(root);
    size_t level_begin = 0, level_end = 1;
    for (int d = 2; d <= depth; ++d) {
        for (size_t i = level_begin; i < level_end; ++i) {
            MarkovNode parent = t.nodes[i];  // copy: push_back may reallocate
            for (int side = 0; side < 2; ++side) {
                MarkovNode child;
                child.left = side == 0 ? parent.left : parent.middle;
                child.right = side == 0 ? parent.middle : parent.right;
                RegularityReport reg = regularity(child.left, child.right);
                if (!reg.inner)
                    throw std::logic_error("markov_tree: pair not inner regular at depth " +
                                           std::to_string(d));
                child.middle = reduce_pair(springborn_sum(child.left, child.right));
                child.depth = d;
                fill_quantizations(child);
                int idx = static_cast<int>(t.nodes.size());
                (side == 0 ? t.nodes[i].left_child : t.nodes[i].right_child) = idx;
                t.nodes.push_back(std::move(child));
            }
        }
        level_begin = level_end;
        level_end = t.nodes.size();
    }
    return t;
}

int markov_epsilon(const Fraction& x) {
    if (x == kZero) return -1;
    return epsilon(x);
}

QRational markov_flat(const Fraction& x) {
    if (x == kZero) {
        // A0b = 1 - q^-1, B0b = 1
        return QRational{LaurentPoly::from_terms({{0, 1}, {-1, -1}}), LaurentPoly(1), Side::flat};
    }
    return quantize(x, Side::flat);
}

QMarkovReport check_q_markov(const MarkovNode& n) {
    QMarkovReport rep{};
    const Fraction* fs[3] = {&n.left, &n.middle, &n.right};
    LaurentPoly As[3], Bs[3], Af[3], Bf[3];
    for (int i = 0; i < 3; ++i) {
        As[i] = n.q_sharp[i].num;
        Bs[i] = n.q_sharp[i].den;
        QRational f = markov_flat(*fs[i]);
        Af[i] = f.num;
        Bf[i] = f.den;
    }
    int e0 = markov_epsilon(n.left), e1 = markov_epsilon(n.middle),
        e2 = markov_epsilon(n.right);
    const LaurentPoly three_q = LaurentPoly::from_terms({{0, 1}, {1, 1}, {2, 1}});

    LaurentPoly lhs = Bs[1] * Bf[1] + (Bs[2] * Bf[2]).shifted(e0 + 3) +
                      Bf[0] * (Bs[1] * As[2] - (As[1] * Bs[2]).shifted(3));
    rep.r0 = lhs == three_q * Bs[1] * Bs[2] * Bf[0];
    rep.r1 = equiv_q(Bs[0], Bs[1] * As[2] - As[1] * Bs[2]);
    rep.r1b_first = equiv_q(Bf[0], Bs[1] * Af[2] - As[1] * Bf[2]);
    rep.r1b_second = equiv_q(Bf[0], Bf[1] * As[2] - Af[1] * Bs[2]);
    rep.r2 = equiv_q(Bs[2], As[1] * Bs[0] - Bs[1] * As[0]);
    rep.r2b_first = equiv_q(Bf[2], Af[1] * Bs[0] - Bf[1] * As[0]);
    rep.r2b_second = equiv_q(Bf[2], As[1] * Bf[0] - Bs[1] * Af[0]);
    rep.eps_relation = e1 == e0 + e2 + 3;

    const Int &a0 = n.left.num, &b0 = n.left.den;
    const Int &a1 = n.middle.num, &b1 = n.middle.den;
    const Int &a2 = n.right.num, &b2 = n.right.den;
    rep.markov_system = (b1 * b1 + b2 * b2 + b0 * b0 == 3 * b1 * b2 * b0) &&
                        (b0 == b1 * a2 - a1 * b2) && (b2 == b0 * a1 - a0 * b1);
    if (!rep.all())
        throw std::logic_error("q-Markov relation fails on triple (" + n.left.to_string() +
                               ", " + n.middle.to_string() + ", " + n.right.to_string() +
                               ") — falsifies Thm. qdeformedequations");
    return rep;
}

std::vector<Int> canonical_markov_cf(const Fraction& x) {
    if (x == kZero) return {Int(0)};
    if (x.is_infinity() || x.num <= 0 || !(x.num < x.den))
        throw std::invalid_argument("canonical_markov_cf: " + x.to_string() +
                                    " is not a Markov fraction");
    std::vector<Int> cf = continued_fraction_canonical(x);
    if (cf.size() > 1 && cf.back() == 1) {  // canonical floor CFs end >= 2; be safe
        cf.pop_back();
        cf.back() += 1;
    }
    if (evaluate_continued_fraction(cf) != x)
        throw std::logic_error("canonical_markov_cf does not evaluate back");
    if (x == Fraction(1, 2)) return cf;  // [0, 2], the special short expansion
    size_t n = cf.size() - 1;
    bool structure = n % 2 == 0 && cf[1] == 2 && cf[n] == 2;
    for (size_t i = 1; structure && i <= n; ++i)
        if (cf[i] != cf[n + 1 - i]) structure = false;
    if (!structure)
        throw std::invalid_argument("canonical_markov_cf: " + x.to_string() +
                                    " lacks the Markov palindromic structure");
    return cf;
}

std::vector<Int> markov_cf_concatenate(const std::vector<Int>& cf_left,
                                       const std::vector<Int>& cf_right) {
    if (cf_left.empty() || cf_right.empty() || cf_left[0] != 0 || cf_right[0] != 0)
        throw std::invalid_argument("markov_cf_concatenate expects [0, ...] expansions");
    std::vector<Int> out{Int(0)};
    out.insert(out.end(), cf_left.begin() + 1, cf_left.end());
    out.push_back(2);
    out.push_back(1);
    if (cf_right.size() > 1) {
        out.push_back(cf_right[1] - 1);
        out.insert(out.end(), cf_right.begin() + 2, cf_right.end());
    }
    while (out.size() > 1 && out.back() == 1) {
        out.pop_back();
        out.back() += 1;
    }
    return out;
}

FencePoset FencePoset::from_markov_cf(const std::vector<Int>& cf) {
    if (cf.empty() || cf[0] != 0)
        throw std::invalid_argument("fence poset expects a [0, ...] expansion");
    FencePoset p;
    if (cf.size() == 1) return p;  // 0/1: empty poset
    auto to_int = [](const Int& v) { return static_cast<int>(v.convert_to<long>()); };
    if (cf.size() == 2) {
        p.runs = {0, to_int(cf[1]) - 2};  // single entry is both first and last
        return p;
    }
    p.runs.push_back(0);
    p.runs.push_back(to_int(cf[1]) - 1);
    for (size_t i = 2; i + 1 < cf.size(); ++i) p.runs.push_back(to_int(cf[i]));
    p.runs.push_back(to_int(cf.back()) - 1);
    return p;
}

int FencePoset::vertex_count() const {
    if (runs.empty()) return 0;
    int s = 0;
    for (int r : runs) s += r;
    return s + 1;
}

std::vector<bool> FencePoset::edge_directions() const {
    std::vector<bool> up;
    for (size_t i = 0; i < runs.size(); ++i)
        up.insert(up.end(), static_cast<size_t>(runs[i]), i % 2 == 0);
    return up;
}

LaurentPoly fence_genfun(const FencePoset& p, FenceWeighting w) {
    int n = p.vertex_count();
    if (n == 0) return LaurentPoly(1);
    std::vector<bool> up = p.edge_directions();
    // state: generating polynomial by membership of the current vertex
    LaurentPoly out_state = LaurentPoly(1);                 // v_0 not in the ideal
    LaurentPoly in_state = LaurentPoly::monomial(1, 1);     // v_0 in the ideal
    for (int i = 0; i + 1 < n; ++i) {
        LaurentPoly next_out, next_in;
        // edge v_i -- v_{i+1}: up forbids (out, in); down forbids (in, out)
        if (up[static_cast<size_t>(i)]) {
            next_out = out_state + in_state;
            next_in = in_state.shifted(1);
        } else {
            next_out = out_state;
            next_in = (out_state + in_state).shifted(1);
        }
        out_state = next_out;
        in_state = next_in;
    }
    if (w == FenceWeighting::last_vertex_double) in_state = in_state.shifted(1);
    return out_state + in_state;
}

LaurentPoly fence_genfun_bruteforce(const FencePoset& p, FenceWeighting w) {
    int n = p.vertex_count();
    if (n > 24) throw std::invalid_argument("fence_genfun_bruteforce: poset too large");
    if (n == 0) return LaurentPoly(1);
    std::vector<bool> up = p.edge_directions();
    LaurentPoly total;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bool ok = true;
        for (int i = 0; ok && i + 1 < n; ++i) {
            bool a = (mask >> i) & 1, b = (mask >> (i + 1)) & 1;
            if (up[static_cast<size_t>(i)] ? (!a && b) : (a && !b)) ok = false;
        }
        if (!ok) continue;
        int weight = __builtin_popcountl(mask);
        if (w == FenceWeighting::last_vertex_double && ((mask >> (n - 1)) & 1)) ++weight;
        total += LaurentPoly::monomial(1, weight);
    }
    return total;
}

FenceRecursionReport check_fence_recursion(const MarkovNode& n) {
    const LaurentPoly three_q = LaurentPoly::from_terms({{0, 1}, {1, 1}, {2, 1}});
    const LaurentPoly &A0s = n.q_sharp[0].num, &B0s = n.q_sharp[0].den;
    const LaurentPoly &A1s = n.q_sharp[1].num, &B1s = n.q_sharp[1].den;
    const LaurentPoly &A2s = n.q_sharp[2].num, &B2s = n.q_sharp[2].den;
    QRational f0 = markov_flat(n.left);
    const QRational& f1 = n.q_flat[1];
    const QRational& f2 = n.q_flat[2];
    (void)A1s;
    FenceRecursionReport rep{};
    rep.sharp = B1s == three_q * B0s * B2s - B0s * A2s + (A0s * B2s).shifted(3);
    rep.flat_first = f1.den == three_q * B0s * f2.den - B0s * f2.num + (A0s * f2.den).shifted(3);
    rep.flat_second =
        f1.den == three_q * f0.den * B2s - f0.den * A2s + (f0.num * B2s).shifted(3);
    if (!rep.all())
        throw std::logic_error("fence recursion fails on triple (" + n.left.to_string() + ", " +
                               n.middle.to_string() + ", " + n.right.to_string() + ")");
    return rep;
}

Int companion_u(const Int& b, int k) {
    if (b < 1 || k < 0) throw std::invalid_argument("companion_u: b >= 1, k >= 0");
    Int um = 0, u = 1;  // u_0, u_1
    if (k == 0) return um;
    for (int i = 1; i < k; ++i) {
        Int next = 3 * b * u - um;
        um = u;
        u = next;
    }
    return u;
}

std::pair<Int, Int> companion_rep(const Fraction& x, int k, int sign) {
    if (k < 1) throw std::invalid_argument("companion: k >= 1");
    if (x.is_infinity()) throw std::invalid_argument("companion of infinity");
    Int uk = companion_u(x.den, k), ukm = companion_u(x.den, k - 1);
    return {x.num * uk + sign * x.den * ukm, x.den * uk};
}

Fraction companion(const Fraction& x, int k, int sign) {
    auto [n, d] = companion_rep(x, k, sign);
    return Fraction(n, d);
}

bool companion_springborn_check(const Fraction& x, int k, int l) {
    if (k == l)
        throw std::invalid_argument("companion_springborn_check: k == l is the 0/0 case");
    auto [an, ad] = companion_rep(x, k, +1);
    auto [bn, bd] = companion_rep(x, l, +1);
    // Springborn difference on the canonical representatives
    Fraction got(an * ad - bn * bd, ad * ad - bd * bd);
    return got == companion(x, k + l, +1);
}

}  // namespace qr
