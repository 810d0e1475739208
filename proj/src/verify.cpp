#include "qr/verify.hpp"

#include "qr/farey.hpp"
#include "qr/geom.hpp"
#include "qr/markov.hpp"
#include "qr/springborn.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

namespace qr {

using json = nlohmann::ordered_json;

std::vector<Fraction> enumerate_fractions(int max_num, int max_den, bool with_infinity) {
    std::vector<Fraction> out;
    if (with_infinity) out.push_back(Fraction::infinity());
    for (int b = 1; b <= max_den; ++b)
        for (int a = -max_num; a <= max_num; ++a)
            if (boost::multiprecision::gcd(Int(a < 0 ? -a : a), Int(b)) == 1)
                out.push_back(Fraction(a, b));
    return out;
}

std::vector<std::string> parallel_cases(long n, int threads,
                                        const std::function<std::string(long)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<long>(threads, std::max<long>(1, n));
    std::atomic<long> next{0};
    std::mutex mu;
    std::vector<std::pair<long, std::string>> failures;
    std::vector<std::string> errors;
    auto work = [&] {
        while (true) {
            long i = next.fetch_add(1);
            if (i >= n) return;
            std::string f;
            try {
                f = fn(i);
            } catch (const std::exception& e) {
                f = std::string("{\"exception\":\"") + e.what() + "\"}";
            }
            if (!f.empty()) {
                std::lock_guard lock(mu);
                failures.emplace_back(i, std::move(f));
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    std::sort(failures.begin(), failures.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> out;
    out.reserve(failures.size());
    for (auto& [i, s] : failures) out.push_back(std::move(s));
    return out;
}

namespace {

json frac_json(const Fraction& f) { return f.to_string(); }

std::string fail_case(const std::string& what, std::initializer_list<std::pair<std::string, json>> kv) {
    json j;
    j["violation"] = what;
    for (auto& [k, v] : kv) j[k] = v;
    return j.dump();
}

bool one_sign(const LaurentPoly& p) {
    bool pos = false, neg = false;
    for (const auto& [e, c] : p.coeffs()) (c > 0 ? pos : neg) = true;
    return !(pos && neg);
}

bool nonneg(const LaurentPoly& p) {
    for (const auto& [e, c] : p.coeffs())
        if (c < 0) return false;
    return true;
}

// g with parameter q^-1 applied to a rational function of q.
RatFun transition_map_qinv(const RatFun& r) {
    const LaurentPoly qi = LaurentPoly::monomial(1, -1);
    const LaurentPoly one_minus_qi = LaurentPoly::from_terms({{0, 1}, {-1, -1}});
    LaurentPoly num = qi * r.num + one_minus_qi * r.den;
    LaurentPoly den = -one_minus_qi * r.num + r.den;
    return reduce_fraction(std::move(num), std::move(den));
}

SuiteResult suite_duality(const SuiteOptions& opt) {
    SuiteResult r;
    r.name = "duality";
    auto fs = enumerate_fractions(opt.max_num, opt.max_den, true);
    r.cases = static_cast<long>(fs.size());
    r.failures = parallel_cases(r.cases, opt.threads, [&](long i) -> std::string {
        const Fraction& x = fs[static_cast<size_t>(i)];
        const QRational& s = quantize(x, Side::sharp);
        const QRational& f = quantize(x, Side::flat);
        RatFun flat_at_qinv = reduce_fraction(subst_qinv(f.num), subst_qinv(f.den));
        RatFun sharp_at_qinv = reduce_fraction(subst_qinv(s.num), subst_qinv(s.den));
        if (transition_map(s.fun()) != flat_at_qinv)
            return fail_case("transition map g_q([x]#) != [x]b(1/q)", {{"x", frac_json(x)}});
        if (transition_map(f.fun()) != sharp_at_qinv)
            return fail_case("transition map g_q([x]b) != [x]#(1/q)", {{"x", frac_json(x)}});
        if (transition_map(transition_map_qinv(s.fun())) != s.fun())
            return fail_case("g_q o g_{q^-1} != id", {{"x", frac_json(x)}});
        // equivariance (ii): [1/x]_q = 1/[x]_{1/q} and [-x]_q = -(1/q)[x]_{1/q}
        if (!x.is_infinity() && x.num != 0) {
            Fraction inv(x.den, x.num);
            for (Side side : {Side::sharp, Side::flat}) {
                const QRational& v = quantize(x, side);
                RatFun recip = reduce_fraction(subst_qinv(v.den), subst_qinv(v.num));
                if (quantize(inv, side).fun() != recip)
                    return fail_case("[1/x] != 1/[x](1/q)",
                                     {{"x", frac_json(x)}, {"side", side_name(side)}});
            }
        }
        if (!x.is_infinity()) {
            Fraction neg(-x.num, x.den);
            for (Side side : {Side::sharp, Side::flat}) {
                const QRational& v = quantize(x, side);
                RatFun scaled =
                    reduce_fraction(-subst_qinv(v.num), subst_qinv(v.den).shifted(1));
                if (quantize(neg, side).fun() != scaled)
                    return fail_case("[-x] != -(1/q)[x](1/q)",
                                     {{"x", frac_json(x)}, {"side", side_name(side)}});
            }
        }
        return {};
    });
    return r;
}

SuiteResult suite_positivity(const SuiteOptions& opt) {
    SuiteResult r;
    r.name = "positivity";
    auto fs = enumerate_fractions(opt.max_num, opt.max_den, true);
    const Fraction zero(0, 1), inf = Fraction::infinity();
    long n = static_cast<long>(fs.size());
    // part 1: coefficient signs of A#, Ab, B#, Bb
    auto part1 = parallel_cases(n, opt.threads, [&](long i) -> std::string {
        const Fraction& x = fs[static_cast<size_t>(i)];
        for (Side side : {Side::sharp, Side::flat}) {
            const QRational& v = quantize(x, side);
            bool num_exception = (x == zero && side == Side::flat);
            bool den_exception = (x == inf && side == Side::flat);
            if (!num_exception && !v.num.is_zero() && !one_sign(v.num))
                return fail_case("numerator has mixed signs",
                                 {{"x", frac_json(x)}, {"side", side_name(side)}});
            if (!den_exception && !v.den.is_zero() && !one_sign(v.den))
                return fail_case("denominator has mixed signs",
                                 {{"x", frac_json(x)}, {"side", side_name(side)}});
            // the positivity statement covers x in Q \ {0}
            if (!x.is_infinity() && zero < x && !(nonneg(v.num) && nonneg(v.den)))
                return fail_case("positive x with negative coefficients",
                                 {{"x", frac_json(x)}, {"side", side_name(side)}});
        }
        return {};
    });
    // part 2: dF^{kind} in N[q] for ordered pairs x > y
    std::vector<std::pair<Fraction, Fraction>> pairs;
    for (const auto& x : fs)
        for (const auto& y : fs)
            if (y < x) pairs.emplace_back(x, y);
    auto part2 = parallel_cases(static_cast<long>(pairs.size()), opt.threads,
                                [&](long i) -> std::string {
        const auto& [x, y] = pairs[static_cast<size_t>(i)];
        for (const char* kind : {"ss", "sf", "fs", "ff"}) {
            LaurentPoly d = q_farey_det(x, y, QFareyKind::parse(kind));
            if (!nonneg(d))
                return fail_case("q-Farey determinant not in N[q] for x > y",
                                 {{"x", frac_json(x)}, {"y", frac_json(y)}, {"kind", kind}});
        }
        // well-orderedness at q = 0.45
        auto [xs, xf] = numeric_values(x, 0.45);
        auto [ys, yf] = numeric_values(y, 0.45);
        if (!(yf < ys && ys < xf && xf < xs))
            return fail_case("well-orderedness [y]b < [y]# < [x]b < [x]# fails",
                             {{"x", frac_json(x)}, {"y", frac_json(y)}});
        return {};
    });
    r.cases = n + static_cast<long>(pairs.size());
    r.failures = std::move(part1);
    r.failures.insert(r.failures.end(), part2.begin(), part2.end());
    return r;
}

SuiteResult suite_qfarey_duality(const SuiteOptions& opt) {
    SuiteResult r;
    r.name = "qfarey-duality";
    auto fs = enumerate_fractions(opt.max_num, opt.max_den, true);
    std::vector<std::pair<Fraction, Fraction>> pairs;
    for (const auto& x : fs)
        for (const auto& y : fs)
            if (!(x == y)) pairs.emplace_back(x, y);
    r.cases = static_cast<long>(pairs.size());
    r.failures = parallel_cases(r.cases, opt.threads, [&](long i) -> std::string {
        const auto& [x, y] = pairs[static_cast<size_t>(i)];
        DualityReport rep = q_farey_det_duality_check(x, y);  // also asserts bb exactness
        if (!rep.all())
            return fail_case("q-Farey determinant duality fails",
                             {{"x", frac_json(x)},
                              {"y", frac_json(y)},
                              {"mixed", rep.mixed},
                              {"diagonal", rep.diagonal}});
        return {};
    });
    return r;
}

SuiteResult suite_qgcd(const SuiteOptions& opt) {
    SuiteResult r;
    r.name = "qgcd";
    auto fs = enumerate_fractions(opt.max_num, opt.max_den, true);
    std::vector<std::tuple<Fraction, Fraction, HomothetyMode>> cases;
    for (const auto& x : fs)
        for (const auto& y : fs) {
            if (x == y || !FractionKeyLess{}(x, y)) continue;
            RegularityReport reg = regularity(x, y);
            if (reg.inner) cases.emplace_back(x, y, HomothetyMode::inner);
            if (reg.outer) cases.emplace_back(x, y, HomothetyMode::outer);
        }
    r.cases = static_cast<long>(cases.size());
    r.failures = parallel_cases(r.cases, opt.threads, [&](long i) -> std::string {
        const auto& [x, y, mode] = cases[static_cast<size_t>(i)];
        bool inner = mode == HomothetyMode::inner;
        QgcdResult red = qgcd_reduce(x, y, mode);  // asserts gcd == d^{sf} / d^{ss}
        // three-term gcd of Thm. q-gcd, against both predicted determinants
        int e1 = epsilon(x), e2 = epsilon(y);
        const QRational &xs = quantize(x, Side::sharp), &xf = quantize(x, Side::flat);
        const QRational &ys = quantize(y, Side::sharp), &yf = quantize(y, Side::flat);
        LaurentPoly t3 = inner
            ? (xs.num * xf.num).shifted(e2) + (yf.num * ys.num).shifted(e1)
            : (xs.num * xf.num).shifted(e2) - (yf.num * ys.num).shifted(e1);
        LaurentPoly g3 = t3.is_zero() ? red.gcd : gcd_primitive(red.gcd, t3);
        LaurentPoly p1 = q_farey_det(x, y, QFareyKind::parse(inner ? "sf" : "ss"));
        LaurentPoly p2 = q_farey_det(x, y, QFareyKind::parse(inner ? "fs" : "ff"));
        if (!equiv_q_up_to_sign(g3, p1) || !equiv_q_up_to_sign(g3, p2))
            return fail_case("three-term gcd != predicted q-Farey determinants",
                             {{"x", frac_json(x)},
                              {"y", frac_json(y)},
                              {"mode", inner ? "inner" : "outer"},
                              {"gcd", g3.to_string()},
                              {"predicted_mixed", p1.to_string()},
                              {"predicted_other", p2.to_string()}});
        return {};
    });
    return r;
}

SuiteResult suite_main_theorem(const SuiteOptions& opt) {
    SuiteResult r;
    r.name = "main-theorem";
    auto fs = enumerate_fractions(opt.max_num, opt.max_den, true);
    std::vector<std::pair<Fraction, Fraction>> pairs;
    for (const auto& x : fs)
        for (const auto& y : fs)
            if (!(x == y) && FractionKeyLess{}(x, y)) pairs.emplace_back(x, y);
    r.cases = static_cast<long>(pairs.size());
    r.failures = parallel_cases(r.cases, opt.threads, [&](long i) -> std::string {
        const auto& [x, y] = pairs[static_cast<size_t>(i)];
        RegularityReport reg = regularity(x, y);
        MainTheoremReport rep = main_theorem_check(x, y);  // throws if a regular pair fails
        if (reg.inner && rep.inner != MainTheoremStatus::regular_verified)
            return fail_case("inner identity not verified on regular pair",
                             {{"x", frac_json(x)}, {"y", frac_json(y)}});
        if (reg.outer && rep.outer != MainTheoremStatus::regular_verified)
            return fail_case("outer identity not verified on regular pair",
                             {{"x", frac_json(x)}, {"y", frac_json(y)}});
        return {};
    });
    // the paper's exceptional pairs must reproduce
    MainTheoremReport e1 = main_theorem_check(Fraction(1, 3), Fraction(2, 9));
    if (e1.inner != MainTheoremStatus::exceptional_holds ||
        !(quantize(*e1.inner_result, Side::sharp) == quantize(Fraction(7, 30), Side::sharp)))
        r.failures.push_back(fail_case("exceptional pair (1/3, 2/9) does not give [7/30]#", {}));
    MainTheoremReport e2 = main_theorem_check(Fraction(2, 7), Fraction(3, 7));
    if (e2.outer != MainTheoremStatus::exceptional_holds || !e2.outer_result->is_infinity())
        r.failures.push_back(fail_case("exceptional pair (2/7, 3/7) does not give [inf]b", {}));
    r.cases += 2;
    return r;
}

SuiteResult suite_markov_q(const SuiteOptions& opt) {
    SuiteResult r;
    r.name = "markov-q";
    MarkovTree t = markov_tree(std::min(opt.depth, 8));
    r.cases = static_cast<long>(t.nodes.size());
    r.failures = parallel_cases(r.cases, opt.threads, [&](long i) -> std::string {
        const MarkovNode& n = t.nodes[static_cast<size_t>(i)];
        QMarkovReport rep = check_q_markov(n);  // throws on violation
        if (!rep.all())
            return fail_case("q-Markov relations fail", {{"middle", frac_json(n.middle)}});
        // continued-fraction concatenation and palindromic structure
        auto cf = canonical_markov_cf(n.middle);
        auto concat = markov_cf_concatenate(canonical_markov_cf(n.left),
                                            canonical_markov_cf(n.right));
        if (cf != concat)
            return fail_case("continued-fraction concatenation rule fails",
                             {{"middle", frac_json(n.middle)}});
        return {};
    });
    // the depth-3 figure labels
    if (opt.depth >= 3) {
        std::vector<Fraction> expected = {Fraction(2, 5),   Fraction(5, 13),  Fraction(12, 29),
                                          Fraction(13, 34), Fraction(75, 194), Fraction(179, 433),
                                          Fraction(70, 169)};
        std::vector<Fraction> seen;
        for (const auto& n : t.nodes)
            if (n.depth <= 3) seen.push_back(n.middle);
        for (const auto& e : expected)
            if (std::find(seen.begin(), seen.end(), e) == seen.end())
                r.failures.push_back(
                    fail_case("figure fraction missing from tree", {{"x", frac_json(e)}}));
        r.cases += static_cast<long>(expected.size());
    }
    return r;
}

SuiteResult suite_fence(const SuiteOptions& opt) {
    SuiteResult r;
    r.name = "fence";
    int depth = std::min(opt.depth, 3);
    MarkovTree t = markov_tree(depth);
    r.cases = static_cast<long>(t.nodes.size());
    r.failures = parallel_cases(r.cases, opt.threads, [&](long i) -> std::string {
        const MarkovNode& n = t.nodes[static_cast<size_t>(i)];
        for (const Fraction* f : {&n.left, &n.middle, &n.right}) {
            FencePoset p = FencePoset::from_markov_cf(canonical_markov_cf(*f));
            LaurentPoly plain = fence_genfun(p, FenceWeighting::plain);
            LaurentPoly doubled = fence_genfun(p, FenceWeighting::last_vertex_double);
            if (plain != quantize(*f, Side::sharp).den)
                return fail_case("fence plain genfun != B#", {{"x", frac_json(*f)}});
            // the 0/1 member compares against the overridden flat pair
            if (doubled != markov_flat(*f).den)
                return fail_case("fence doubled genfun != Bb", {{"x", frac_json(*f)}});
            if (p.vertex_count() <= 18) {
                if (fence_genfun_bruteforce(p, FenceWeighting::plain) != plain ||
                    fence_genfun_bruteforce(p, FenceWeighting::last_vertex_double) != doubled)
                    return fail_case("transfer recurrence disagrees with enumeration",
                                     {{"x", frac_json(*f)}});
            }
        }
        FenceRecursionReport rec = check_fence_recursion(n);
        if (!rec.all())
            return fail_case("fence recursion fails", {{"middle", frac_json(n.middle)}});
        return {};
    });
    return r;
}

SuiteResult suite_companions(const SuiteOptions& opt) {
    SuiteResult r;
    r.name = "companions";
    // paper's list for 0/1
    const Fraction zero(0, 1);
    std::vector<Fraction> expected = {Fraction(0, 1),   Fraction(1, 3),   Fraction(3, 8),
                                      Fraction(8, 21),  Fraction(21, 55), Fraction(55, 144),
                                      Fraction(144, 377)};
    for (int k = 1; k <= 7; ++k) {
        ++r.cases;
        if (!(companion(zero, k, +1) == expected[static_cast<size_t>(k - 1)]))
            r.failures.push_back(fail_case("companion list of 0/1 mismatch", {{"k", k}}));
    }
    std::vector<Fraction> markov5 = {zero, Fraction(1, 2), Fraction(2, 5), Fraction(5, 13),
                                     Fraction(12, 29)};
    for (const auto& x : markov5) {
        for (int k = 1; k <= 9; ++k)
            for (int l = 1; l <= 9; ++l) {
                if (k == l || k + l > 10) continue;
                ++r.cases;
                if (!companion_springborn_check(x, k, l))
                    r.failures.push_back(fail_case("c_k+ -S c_l+ != c_{k+l}+",
                                                   {{"x", frac_json(x)}, {"k", k}, {"l", l}}));
            }
        for (int k = 0; k <= 12; ++k)
            for (int l = 0; l <= k; ++l) {
                ++r.cases;
                Int uk = companion_u(x.den, k), ul = companion_u(x.den, l);
                if (uk * uk - ul * ul !=
                    companion_u(x.den, k - l) * companion_u(x.den, k + l))
                    r.failures.push_back(fail_case("u_k^2 - u_l^2 != u_{k-l} u_{k+l}",
                                                   {{"x", frac_json(x)}, {"k", k}, {"l", l}}));
            }
    }
    (void)opt;
    return r;
}

SuiteResult suite_geometry(const SuiteOptions& opt) {
    SuiteResult r;
    r.name = "geometry";
    const double q0 = 0.45;

    // disjointness: disks with den <= 25 over the window [-1, 2], consecutive gaps
    {
        std::vector<Fraction> fs;
        for (int b = 1; b <= 25; ++b)
            for (int a = -b; a <= 2 * b; ++a)
                if (boost::multiprecision::gcd(Int(a < 0 ? -a : a), Int(b)) == 1)
                    fs.push_back(Fraction(a, b));
        std::sort(fs.begin(), fs.end());
        r.cases += static_cast<long>(fs.size());
        std::vector<std::pair<double, double>> intervals(fs.size());
        auto fail1 = parallel_cases(static_cast<long>(fs.size()), opt.threads,
                                    [&](long i) -> std::string {
            Disk d = disk_of(fs[static_cast<size_t>(i)], q0);
            intervals[static_cast<size_t>(i)] = {d.left, d.right};
            return {};
        });
        r.failures.insert(r.failures.end(), fail1.begin(), fail1.end());
        for (size_t i = 0; i + 1 < fs.size(); ++i) {
            double gap = intervals[i + 1].first - intervals[i].second;
            if (!(gap > -1e-12))
                r.failures.push_back(fail_case("disks overlap",
                                               {{"x", frac_json(fs[i])},
                                                {"y", frac_json(fs[i + 1])},
                                                {"gap", gap}}));
        }
    }

    // numeric homothety centers vs symbolic reduction, regular pairs den <= 8
    {
        auto fs = enumerate_fractions(std::min(opt.max_num, 8), std::min(opt.max_den, 8), false);
        std::vector<std::tuple<Fraction, Fraction, HomothetyMode>> cases;
        for (const auto& x : fs)
            for (const auto& y : fs) {
                if (x == y || !FractionKeyLess{}(x, y)) continue;
                RegularityReport reg = regularity(x, y);
                if (reg.inner) cases.emplace_back(x, y, HomothetyMode::inner);
                if (reg.outer) cases.emplace_back(x, y, HomothetyMode::outer);
            }
        r.cases += static_cast<long>(cases.size());
        auto fail2 = parallel_cases(static_cast<long>(cases.size()), opt.threads,
                                    [&](long i) -> std::string {
            const auto& [x, y, mode] = cases[static_cast<size_t>(i)];
            QgcdResult red = qgcd_reduce(x, y, mode);
            for (double q : opt.q_samples) {
                Disk d1 = disk_of(x, q), d2 = disk_of(y, q);
                auto c = homothety_numeric(
                    d1, d2, mode == HomothetyMode::inner ? CenterMode::inner : CenterMode::outer);
                double sym = red.reduced.fun().eval(q);
                if (!c) {
                    if (std::isfinite(sym))
                        return fail_case("outer center infinite but symbolic value finite",
                                         {{"x", frac_json(x)}, {"y", frac_json(y)}, {"q", q}});
                    continue;
                }
                if (std::abs(*c - sym) > 1e-9)
                    return fail_case("numeric homothety center != symbolic value",
                                     {{"x", frac_json(x)},
                                      {"y", frac_json(y)},
                                      {"mode", mode == HomothetyMode::inner ? "inner" : "outer"},
                                      {"q", q},
                                      {"numeric", *c},
                                      {"symbolic", sym}});
            }
            return {};
        });
        r.failures.insert(r.failures.end(), fail2.begin(), fail2.end());
    }

    // modular surface closed forms
    {
        ++r.cases;
        auto [len1, area1] = modular_surface_stats(1.0);
        if (std::abs(area1 - M_PI / 3.0) > 1e-12 || std::abs(len1) > 1e-12)
            r.failures.push_back(fail_case("modular surface at q=1 != (0, pi/3)", {}));
        for (double q : opt.q_samples) {
            ++r.cases;
            auto [l1, a1] = modular_surface_stats(q);
            auto [l2, a2] = modular_surface_stats(1.0 / q);
            if (std::abs(l1 - l2) > 1e-12 || std::abs(a1 - a2) > 1e-12)
                r.failures.push_back(fail_case("stats(q) != stats(1/q)", {{"q", q}}));
        }
    }

    // fundamental domain: vertices on their circles, funnel orthogonality
    for (double q : opt.q_samples) {
        ++r.cases;
        FundamentalDomain fd = fundamental_domain(q);
        auto on_circle = [](double x, double y, const Circle& c) {
            double d2 = (x - c.cx) * (x - c.cx) + (y - c.cy) * (y - c.cy);
            return std::abs(d2 - c.r * c.r) < 1e-12;
        };
        bool ok = on_circle(fd.vertex_i_x, fd.vertex_i_y, fd.unit) &&
                  on_circle(fd.vertex_i_x, fd.vertex_i_y, fd.imag_axis) &&
                  on_circle(fd.vertex_sigma_x, fd.vertex_sigma_y, fd.unit) &&
                  on_circle(fd.vertex_sigma_x, fd.vertex_sigma_y, fd.critical) &&
                  on_circle(fd.p1, 0.0, fd.critical) && on_circle(fd.p2, 0.0, fd.imag_axis);
        // vertical funnel line through the common center of Im_q and C_{2,q}
        // meets both orthogonally: the circle tangents there are horizontal
        double ty1 = fd.funnel_x - fd.imag_axis.cx;   // horizontal offset at crossing
        double ty2 = fd.funnel_x - fd.critical.cx;
        ok = ok && std::abs(ty1) < 1e-10 && std::abs(ty2) < 1e-10;
        if (!ok)
            r.failures.push_back(fail_case("fundamental domain inconsistent", {{"q", q}}));
    }

    // Etingof gap partial sums on (1, inf)
    {
        ++r.cases;
        double target = q0 / (1.0 - q0);
        double prev = -1.0;
        bool mono = true;
        for (int d : {50, 100, 200, 400}) {
            double s = gap_partial_sum(Fraction(1, 1), Fraction::infinity(), q0, d);
            if (s < prev - 1e-15 || s > target + 1e-9) mono = false;
            prev = s;
        }
        if (!mono || std::abs(prev - target) > 1e-2)
            r.failures.push_back(fail_case("gap partial sum (1, inf) misses q/(1-q)",
                                           {{"sum", prev}, {"target", target}}));
    }

    // convergence demonstration along the sqrt(2) convergents
    {
        ++r.cases;
        std::vector<Fraction> conv;
        Int p0 = 1, q0i = 1, p1 = 3, q1 = 2;  // 1/1, 3/2, then p_{n+1} = p_n + 2 q_n ...
        conv.push_back(Fraction(p0, q0i));
        conv.push_back(Fraction(p1, q1));
        while (q1 < 3000) {
            Int p2 = p1 * 2 + p0, q2 = q1 * 2 + q0i;
            conv.push_back(Fraction(p2, q2));
            p0 = p1; q0i = q1; p1 = p2; q1 = q2;
        }
        double last_jump = numeric_jump(conv.back(), q0);
        bool shrinking = true;
        for (size_t i = 3; i < conv.size(); ++i)
            if (numeric_jump(conv[i], q0) >= numeric_jump(conv[i - 1], q0)) shrinking = false;
        if (!shrinking || last_jump > 1e-8)
            r.failures.push_back(fail_case("sqrt(2) convergents do not close to 1e-8",
                                           {{"last_jump", last_jump}}));
    }

    return r;
}

const std::map<std::string, SuiteResult (*)(const SuiteOptions&)>& registry() {
    static const std::map<std::string, SuiteResult (*)(const SuiteOptions&)> reg = {
        {"duality", suite_duality},
        {"positivity", suite_positivity},
        {"qfarey-duality", suite_qfarey_duality},
        {"qgcd", suite_qgcd},
        {"main-theorem", suite_main_theorem},
        {"markov-q", suite_markov_q},
        {"fence", suite_fence},
        {"companions", suite_companions},
        {"geometry", suite_geometry},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, fn] : registry()) v.push_back(k);
        return v;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    return it->second(opt);
}

}  // namespace qr
