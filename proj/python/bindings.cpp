#include "qr/farey.hpp"
#include "qr/geom.hpp"
#include "qr/markov.hpp"
#include "qr/springborn.hpp"
#include "qr/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qr;

namespace {

Fraction frac(const std::string& s) { return Fraction::parse(s); }

Side side_of(const std::string& s) {
    if (s == "sharp") return Side::sharp;
    if (s == "flat") return Side::flat;
    throw std::invalid_argument("side must be 'sharp' or 'flat'");
}

py::dict qrational_dict(const QRational& v) {
    py::dict d;
    d["num"] = v.num.to_string();
    d["den"] = v.den.to_string();
    d["side"] = side_name(v.side);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact q-deformed rationals, Farey determinants and Springborn operations";

    m.def("quantize", [](const std::string& x, const std::string& side) {
        return qrational_dict(quantize(frac(x), side_of(side)));
    }, py::arg("x"), py::arg("side") = "sharp",
       "Left/right q-deformation as polynomial strings");

    m.def("epsilon", [](const std::string& x) { return epsilon(frac(x)); },
          "The exponent in A#*Bb - Ab*B# = q^eps (1-q)");

    m.def("jump", [](const std::string& x) {
        JumpParts j = jump(frac(x));
        return py::make_tuple(j.num.to_string(), j.den.to_string());
    }, "Exact numerator/denominator of the jump l_q(x)");

    m.def("jump_at", [](const std::string& x, double q) { return numeric_jump(frac(x), q); },
          py::arg("x"), py::arg("q"), "Numeric jump l_q(x)");

    m.def("farey_det", [](const std::string& x, const std::string& y) {
        return farey_det(frac(x), frac(y)).convert_to<long long>();
    });

    m.def("q_farey_det", [](const std::string& x, const std::string& y, const std::string& kind) {
        return q_farey_det(frac(x), frac(y), QFareyKind::parse(kind)).to_string();
    }, py::arg("x"), py::arg("y"), py::arg("kind") = "ss");

    m.def("q_farey_add", [](const std::string& x, const std::string& y, const std::string& side,
                            const std::string& slots) {
        QFareyAddResult r = q_farey_add(frac(x), frac(y), side_of(side), QFareyKind::parse(slots));
        py::dict d;
        d["sum"] = qrational_dict(r.sum);
        d["alpha"] = r.alpha;
        d["beta"] = r.beta;
        d["solutions"] = r.solutions;
        return d;
    }, py::arg("x"), py::arg("y"), py::arg("side") = "sharp", py::arg("slots") = "ss");

    m.def("springborn_sum", [](const std::string& x, const std::string& y) {
        return reduce_pair(springborn_sum(frac(x), frac(y))).to_string();
    });
    m.def("springborn_diff", [](const std::string& x, const std::string& y) {
        return reduce_pair(springborn_diff(frac(x), frac(y))).to_string();
    });

    m.def("regularity", [](const std::string& x, const std::string& y) {
        RegularityReport r = regularity(frac(x), frac(y));
        py::dict d;
        d["inner"] = r.inner;
        d["outer"] = r.outer;
        d["d_F"] = r.d_f.convert_to<long long>();
        d["inner_gcd"] = r.inner_gcd.convert_to<long long>();
        d["outer_gcd"] = r.outer_gcd.convert_to<long long>();
        d["gaussian_check"] = r.gaussian_check;
        return d;
    });

    m.def("q_springborn", [](const std::string& x, const std::string& y, const std::string& mode) {
        auto [num, den] = homothety_symbolic(
            frac(x), frac(y), mode == "inner" ? HomothetyMode::inner : HomothetyMode::outer);
        RatFun red = reduce_fraction(num, den);
        return py::make_tuple(red.num.to_string(), red.den.to_string());
    }, py::arg("x"), py::arg("y"), py::arg("mode") = "inner",
       "Reduced q-deformed homothety center");

    m.def("q_midpoint", [](const std::string& x, const std::string& y) {
        return qrational_dict(q_midpoint(frac(x), frac(y)));
    });

    m.def("markov_tree", [](int depth) {
        MarkovTree t = markov_tree(depth);
        py::list out;
        for (const auto& n : t.nodes)
            out.append(py::make_tuple(n.depth, n.left.to_string(), n.middle.to_string(),
                                      n.right.to_string()));
        return out;
    }, py::arg("depth") = 3);

    m.def("check_q_markov_tree", [](int depth) {
        MarkovTree t = markov_tree(depth);
        for (const auto& n : t.nodes) check_q_markov(n);
        return true;
    }, py::arg("depth") = 3, "Throws if any deformed Markov relation fails");

    m.def("companions", [](const std::string& x, int count) {
        py::list out;
        for (int k = 1; k <= count; ++k) out.append(companion(frac(x), k, +1).to_string());
        return out;
    }, py::arg("x"), py::arg("count") = 7);

    m.def("disk", [](const std::string& x, double q) {
        Disk d = disk_of(frac(x), q);
        py::dict out;
        out["left"] = d.left;
        out["right"] = d.right;
        out["halfplane"] = d.halfplane;
        return out;
    }, py::arg("x"), py::arg("q") = 0.45);

    m.def("modular_surface_stats", [](double q) {
        auto [len, area] = modular_surface_stats(q);
        return py::make_tuple(len, area);
    });

    m.def("gap_partial_sum", [](const std::string& x, const std::string& y, double q, int max_den) {
        return gap_partial_sum(frac(x), frac(y), q, max_den);
    }, py::arg("x"), py::arg("y"), py::arg("q") = 0.45, py::arg("max_den") = 100);

    m.def("render_svg", [](double q, const std::string& lo, const std::string& hi, int max_den) {
        RenderConfig cfg;
        cfg.q = q;
        cfg.lo = frac(lo);
        cfg.hi = frac(hi);
        cfg.max_den = max_den;
        return render_svg(cfg);
    }, py::arg("q") = 0.45, py::arg("lo") = "-1", py::arg("hi") = "3", py::arg("max_den") = 20);

    m.def("verify", [](const std::string& suite, int max_den, int max_num, int depth) {
        SuiteOptions opt;
        if (max_den > 0) opt.max_den = max_den;
        if (max_num > 0) opt.max_num = max_num;
        if (depth > 0) opt.depth = depth;
        SuiteResult r = run_suite(suite, opt);
        py::dict d;
        d["suite"] = r.name;
        d["cases"] = r.cases;
        d["ok"] = r.ok();
        py::list fails;
        for (const auto& f : r.failures) fails.append(f);
        d["violations"] = fails;
        return d;
    }, py::arg("suite"), py::arg("max_den") = 0, py::arg("max_num") = 0, py::arg("depth") = 0);

    m.def("suite_names", [] { return suite_names(); });
}
