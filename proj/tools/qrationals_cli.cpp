#include "qr/farey.hpp"
#include "qr/geom.hpp"
#include "qr/markov.hpp"
#include "qr/springborn.hpp"
#include "qr/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

namespace {

using json = nlohmann::ordered_json;
using namespace qr;

json with_schema() {
    json j;
    j["schema"] = 1;
    return j;
}

json qrational_json(const QRational& v) {
    json j;
    j["num"] = v.num.to_string();
    j["den"] = v.den.to_string();
    j["side"] = side_name(v.side);
    return j;
}

int exit_code = 0;

struct QuantizeCmd {
    std::string x;
    std::string side = "sharp";
    bool as_json = false;
};

struct RangeSpec {
    Fraction lo, hi;
};

RangeSpec parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError("--range", "expected <lo>..<hi>");
    return RangeSpec{Fraction::parse(s.substr(0, pos)), Fraction::parse(s.substr(pos + 2))};
}

std::string mode_word(MainTheoremStatus s) {
    switch (s) {
        case MainTheoremStatus::regular_verified: return "regular-verified";
        case MainTheoremStatus::exceptional_holds: return "exceptional-holds";
        case MainTheoremStatus::fails: return "fails";
    }
    return "?";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for q-deformed rationals, Farey and Springborn operations"};
    app.require_subcommand(1);

    // quantize
    std::string qx, qside = "sharp";
    bool qjson = false;
    auto* quant = app.add_subcommand("quantize", "left/right q-deformation of a rational");
    quant->add_option("x", qx, "fraction a/b, integer, or inf")->required();
    quant->add_option("--side", qside, "sharp|flat")->check(CLI::IsMember({"sharp", "flat"}));
    quant->add_flag("--json", qjson);
    quant->callback([&] {
        Fraction x = Fraction::parse(qx);
        const QRational& v = quantize(x, qside == "flat" ? Side::flat : Side::sharp);
        if (qjson) {
            json j = with_schema();
            j["x"] = x.to_string();
            j["result"] = qrational_json(v);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "[" << x.to_string() << "]_" << qside << " = (" << v.num.to_string()
                      << ") / (" << v.den.to_string() << ")\n";
        }
    });

    // qfarey det | add
    auto* qf = app.add_subcommand("qfarey", "q-deformed Farey determinants and addition");
    qf->require_subcommand(1);
    std::string fx, fy, fkind = "ss", fside = "sharp", fslots = "ss";
    bool fjson = false;
    auto* det = qf->add_subcommand("det", "q-Farey determinant");
    det->add_option("x", fx)->required();
    det->add_option("y", fy)->required();
    det->add_option("--kind", fkind)->check(CLI::IsMember({"ss", "sf", "fs", "ff"}));
    det->add_flag("--json", fjson);
    det->callback([&] {
        Fraction x = Fraction::parse(fx), y = Fraction::parse(fy);
        LaurentPoly d = q_farey_det(x, y, QFareyKind::parse(fkind));
        if (fjson) {
            json j = with_schema();
            j["x"] = x.to_string();
            j["y"] = y.to_string();
            j["kind"] = fkind;
            j["det"] = d.to_string();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "dF^{" << fkind << "}(" << x.to_string() << ", " << y.to_string()
                      << ") = " << d.to_string() << "\n";
        }
    });
    auto* add = qf->add_subcommand("add", "quantized Farey sum with exponent search");
    add->add_option("x", fx)->required();
    add->add_option("y", fy)->required();
    add->add_option("--side", fside)->check(CLI::IsMember({"sharp", "flat"}));
    add->add_option("--slots", fslots)->check(CLI::IsMember({"ss", "sf", "fs", "ff"}));
    add->add_flag("--json", fjson);
    add->callback([&] {
        Fraction x = Fraction::parse(fx), y = Fraction::parse(fy);
        Side side = fside == "flat" ? Side::flat : Side::sharp;
        QFareyAddResult res = q_farey_add(x, y, side, QFareyKind::parse(fslots));
        if (fjson) {
            json j = with_schema();
            j["x"] = x.to_string();
            j["y"] = y.to_string();
            j["slots"] = fslots;
            j["alpha"] = res.alpha;
            j["beta"] = res.beta;
            j["solutions"] = res.solutions;
            j["sum"] = qrational_json(res.sum);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "[" << x.to_string() << " (+F) " << y.to_string() << "]_" << fside
                      << ": alpha = " << res.alpha << ", beta = " << res.beta
                      << " (solutions in window: " << res.solutions << ")\n"
                      << "  d * R = q^" << res.alpha << " A + q^" << res.beta << " C with R/S = ("
                      << res.sum.num.to_string() << ") / (" << res.sum.den.to_string() << ")\n";
        }
    });

    // springborn sum|diff|check
    auto* sb = app.add_subcommand("springborn", "Springborn operations and regularity");
    sb->require_subcommand(1);
    std::string sx, sy;
    bool sq = false, sjson = false;
    for (const char* name : {"sum", "diff"}) {
        auto* sub = sb->add_subcommand(name, std::string("Springborn ") + name);
        sub->add_option("x", sx)->required();
        sub->add_option("y", sy)->required();
        sub->add_flag("--q", sq, "also print the reduced q-deformed center");
        sub->add_flag("--json", sjson);
        bool is_sum = std::string(name) == "sum";
        sub->callback([&, is_sum] {
            Fraction x = Fraction::parse(sx), y = Fraction::parse(sy);
            auto raw = is_sum ? springborn_sum(x, y) : springborn_diff(x, y);
            Fraction red = reduce_pair(raw);
            json j = with_schema();
            j["x"] = x.to_string();
            j["y"] = y.to_string();
            j["raw"] = raw.first.str() + "/" + raw.second.str();
            j["reduced"] = red.to_string();
            if (sq) {
                auto mode = is_sum ? HomothetyMode::inner : HomothetyMode::outer;
                auto [num, den] = homothety_symbolic(x, y, mode);
                RatFun center = reduce_fraction(num, den);
                j["q_center_num"] = center.num.to_string();
                j["q_center_den"] = center.den.to_string();
            }
            if (sjson) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << x.to_string() << (is_sum ? " (+S) " : " (-S) ") << y.to_string()
                          << " = " << j["raw"].get<std::string>() << " = " << red.to_string()
                          << "\n";
                if (sq)
                    std::cout << "  q-center = (" << j["q_center_num"].get<std::string>()
                              << ") / (" << j["q_center_den"].get<std::string>() << ")\n";
            }
        });
    }
    auto* chk = sb->add_subcommand("check", "regularity report and main-theorem status");
    chk->add_option("x", sx)->required();
    chk->add_option("y", sy)->required();
    chk->add_flag("--json", sjson);
    chk->callback([&] {
        Fraction x = Fraction::parse(sx), y = Fraction::parse(sy);
        RegularityReport reg = regularity(x, y);
        MainTheoremReport rep = main_theorem_check(x, y);
        json j = with_schema();
        j["x"] = x.to_string();
        j["y"] = y.to_string();
        j["d_F"] = reg.d_f.str();
        j["inner"] = reg.inner;
        j["outer"] = reg.outer;
        j["inner_gcd"] = reg.inner_gcd.str();
        j["outer_gcd"] = reg.outer_gcd.str();
        j["gaussian_check"] = reg.gaussian_check;
        j["main_theorem_inner"] = mode_word(rep.inner);
        j["main_theorem_outer"] = mode_word(rep.outer);
        if (rep.inner_result) j["springborn_sum"] = rep.inner_result->to_string();
        if (rep.outer_result) j["springborn_diff"] = rep.outer_result->to_string();
        if (sjson) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "pair (" << x.to_string() << ", " << y.to_string()
                      << "): d_F = " << reg.d_f.str() << ", inner "
                      << (reg.inner ? "regular" : "irregular") << ", outer "
                      << (reg.outer ? "regular" : "irregular") << "\n"
                      << "  main theorem: inner " << mode_word(rep.inner) << ", outer "
                      << mode_word(rep.outer) << "\n";
        }
    });

    // markov tree | companions
    auto* mk = app.add_subcommand("markov", "rational Markov tree and companions");
    mk->require_subcommand(1);
    int mdepth = 3, mcount = 7;
    bool mcheckq = false, mjson = false, mverify = false;
    std::string mfrac;
    auto* tree = mk->add_subcommand("tree", "Markov tree by iterated Springborn sums");
    tree->add_option("--depth", mdepth)->check(CLI::Range(1, 8));
    tree->add_flag("--check-q", mcheckq, "verify the deformed Markov relations");
    tree->add_flag("--json", mjson);
    tree->callback([&] {
        MarkovTree t = markov_tree(mdepth);
        if (mcheckq)
            for (const auto& n : t.nodes) check_q_markov(n);  // throws on violation
        if (mjson) {
            json j = with_schema();
            j["depth"] = mdepth;
            j["checked_q_relations"] = mcheckq;
            json nodes = json::array();
            for (const auto& n : t.nodes) {
                json e;
                e["depth"] = n.depth;
                e["triple"] = {n.left.to_string(), n.middle.to_string(), n.right.to_string()};
                nodes.push_back(e);
            }
            j["nodes"] = nodes;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& n : t.nodes) {
                std::cout << std::string(static_cast<size_t>(2 * (n.depth - 1)), ' ') << "("
                          << n.left.to_string() << ", " << n.middle.to_string() << ", "
                          << n.right.to_string() << ")";
                if (mcheckq) std::cout << "  [q-relations ok]";
                std::cout << "\n";
            }
        }
    });
    auto* comp = mk->add_subcommand("companions", "companion fractions c_k+");
    comp->add_option("x", mfrac, "Markov fraction a/b")->required();
    comp->add_option("--count", mcount)->check(CLI::Range(1, 30));
    comp->add_flag("--verify", mverify, "check c_k+ (-S) c_l+ = c_{k+l}+ for k+l <= count");
    comp->add_flag("--json", mjson);
    comp->callback([&] {
        Fraction x = Fraction::parse(mfrac);
        json list = json::array();
        for (int k = 1; k <= mcount; ++k) list.push_back(companion(x, k, +1).to_string());
        bool verified = true;
        if (mverify)
            for (int k = 1; k <= mcount; ++k)
                for (int l = 1; l <= mcount; ++l)
                    if (k != l && k + l <= mcount && !companion_springborn_check(x, k, l))
                        verified = false;
        if (mjson) {
            json j = with_schema();
            j["x"] = x.to_string();
            j["companions"] = list;
            if (mverify) j["springborn_identity"] = verified;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "companions of " << x.to_string() << ":";
            for (auto& c : list) std::cout << " " << c.get<std::string>();
            std::cout << "\n";
            if (mverify)
                std::cout << "  Springborn identity: " << (verified ? "ok" : "VIOLATED") << "\n";
        }
        if (mverify && !verified) exit_code = 1;
    });

    // render disks
    auto* rd = app.add_subcommand("render", "SVG rendering");
    rd->require_subcommand(1);
    auto* disks = rd->add_subcommand("disks", "q-disks over a range");
    double rq = 0.45;
    std::string rrange = "-1..3", rout = "disks.svg";
    int rmaxden = 20;
    bool rdomain = false;
    std::vector<std::string> rtangents;
    disks->add_option("--q", rq)->check(CLI::Range(1e-9, 0.999999));
    disks->add_option("--range", rrange, "<lo>..<hi>");
    disks->add_option("--max-den", rmaxden)->check(CLI::Range(1, 500));
    disks->add_option("--tangents", rtangents, "pair of fractions")->expected(2);
    disks->add_flag("--domain", rdomain, "overlay the fundamental domain");
    disks->add_option("-o,--output", rout)->required();
    disks->callback([&] {
        RenderConfig cfg;
        cfg.q = rq;
        RangeSpec rs = parse_range(rrange);
        cfg.lo = rs.lo;
        cfg.hi = rs.hi;
        cfg.max_den = rmaxden;
        cfg.domain = rdomain;
        if (!rtangents.empty())
            cfg.tangents = {Fraction::parse(rtangents[0]), Fraction::parse(rtangents[1])};
        std::string svg = render_svg(cfg);
        std::ofstream out(rout, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file " + rout);
        out << svg;
        std::cout << "wrote " << rout << " (" << svg.size() << " bytes)\n";
    });

    // verify
    auto* ver = app.add_subcommand("verify", "run a named invariant suite");
    std::string suite;
    SuiteOptions vopt;
    bool vjson = false;
    ver->add_option("suite", suite, "one of: " + [] {
            std::string s;
            for (const auto& n : suite_names()) s += (s.empty() ? "" : " | ") + n;
            return s;
        }())
        ->required()
        ->check(CLI::IsMember(suite_names()));
    ver->add_option("--max-den", vopt.max_den)->check(CLI::Range(1, 64));
    ver->add_option("--max-num", vopt.max_num)->check(CLI::Range(1, 64));
    ver->add_option("--depth", vopt.depth)->check(CLI::Range(1, 8));
    ver->add_option("--threads", vopt.threads);
    ver->add_flag("--json", vjson);
    ver->callback([&] {
        SuiteResult res = run_suite(suite, vopt);
        if (vjson) {
            json j = with_schema();
            j["suite"] = res.name;
            j["cases"] = res.cases;
            j["violations"] = json::array();
            for (const auto& f : res.failures) j["violations"].push_back(json::parse(f));
            j["ok"] = res.ok();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "suite " << res.name << ": " << res.cases << " cases, "
                      << res.failures.size() << " violation(s)\n";
            if (!res.ok()) std::cout << "first counterexample: " << res.failures.front() << "\n";
        }
        if (!res.ok()) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2; --help exits 0
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
