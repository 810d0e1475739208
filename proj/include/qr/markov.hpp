#pragma once

#include "qr/springborn.hpp"

#include <vector>

namespace qr {

/// One triple of the rational Markov tree; middle = left (+S) right, reduced.
struct MarkovNode {
    Fraction left, middle, right;
    QRational q_sharp[3];  // left, middle, right
    QRational q_flat[3];
    int depth = 1;
    int left_child = -1;   // indices into MarkovTree::nodes
    int right_child = -1;
};

struct MarkovTree {
    std::vector<MarkovNode> nodes;  // breadth-first, root at 0
    int depth;
};

/// Iterates the Springborn sum from (0/1, 1/2). Every child pair is
/// re-checked inner regular. depth is capped at 8.
MarkovTree markov_tree(int depth);

/// epsilon with the 0/1 flat override (A0b = 1 - q^-1, B0b = 1 divides the
/// standard [0]b by q, shifting epsilon to -1). Identity elsewhere.
int markov_epsilon(const Fraction& x);

/// Quantization with the 0/1 override applied to the flat side.
QRational markov_flat(const Fraction& x);

struct QMarkovReport {
    bool r0, r1, r1b_first, r1b_second, r2, r2b_first, r2b_second;
    bool eps_relation;      // eps1 = eps0 + eps2 + 3
    bool markov_system;     // b1^2+b2^2+b0^2 = 3 b0 b1 b2 and the two bilinear relations
    bool all() const {
        return r0 && r1 && r1b_first && r1b_second && r2 && r2b_first && r2b_second &&
               eps_relation && markov_system;
    }
};
/// Verifies the five deformed Markov relations (r0 exactly, the others up to
/// a monomial), the epsilon relation and the classical Markov system.
/// Any failure throws: it would falsify Thm. qdeformedequations.
QMarkovReport check_q_markov(const MarkovNode& node);

/// Canonical expansion [0, a1, ..., an] of a Markov fraction (n even, all
/// entries >= 1, trailing 1 merged); [0] for 0/1 and [0, 2] for 1/2.
/// Validates endpoint and palindromicity structure for tree members.
std::vector<Int> canonical_markov_cf(const Fraction& x);

/// Concatenation rule for the middle of a triple:
/// [0, alpha..., 2, 1, beta1 - 1, beta...], canonicalized.
std::vector<Int> markov_cf_concatenate(const std::vector<Int>& cf_left,
                                       const std::vector<Int>& cf_right);

/// Zigzag poset F(alpha): alpha[i] covering relations per run, ascending runs
/// at even positions. Vertices = sum(alpha) + 1 (0 when alpha is empty).
struct FencePoset {
    std::vector<int> runs;

    static FencePoset from_markov_cf(const std::vector<Int>& cf);
    int vertex_count() const;
    /// Edge directions: up[i] == true means v_i < v_{i+1}.
    std::vector<bool> edge_directions() const;
};

enum class FenceWeighting { plain, last_vertex_double };

/// Order-ideal generating function by a rank-2 transfer recurrence along the
/// zigzag; exponential enumeration is only safe for small posets, see
/// fence_genfun_bruteforce.
LaurentPoly fence_genfun(const FencePoset& p, FenceWeighting w);
/// Independent oracle: explicit enumeration of all downward-closed subsets.
/// Limited to ~24 vertices.
LaurentPoly fence_genfun_bruteforce(const FencePoset& p, FenceWeighting w);

struct FenceRecursionReport {
    bool sharp;        // B1# = [3]_q B0# B2# - B0# A2# + q^3 A0# B2#
    bool flat_first;   // B1b via the sharp quantization of the left parent
    bool flat_second;  // B1b via the flat quantization (0/1 override)
    bool all() const { return sharp && flat_first && flat_second; }
};
FenceRecursionReport check_fence_recursion(const MarkovNode& node);

/// u_0 = 0, u_1 = 1, u_{k+1} = 3 b u_k - u_{k-1}.
Int companion_u(const Int& b, int k);

/// Canonical (possibly unreduced) representative a/b ± u_{k-1}/u_k.
std::pair<Int, Int> companion_rep(const Fraction& x, int k, int sign);
Fraction companion(const Fraction& x, int k, int sign);

/// c_k+ (-S) c_l+ = c_{k+l}+ evaluated on the canonical representatives
/// (the Springborn difference is representative-dependent). k != l.
bool companion_springborn_check(const Fraction& x, int k, int l);

}  // namespace qr
