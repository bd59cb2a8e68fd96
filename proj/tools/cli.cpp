#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "ribbonfusion/fusion.hpp"
#include "ribbonfusion/llt.hpp"
#include "ribbonfusion/sl2.hpp"
#include "ribbonfusion/theta.hpp"
#include "ribbonfusion/virasoro.hpp"

namespace ribbonfusion::cli {

namespace {

using nlohmann::ordered_json;

struct Request {
    std::string format = "text";
    std::string partition;
    std::string factors;
    std::string mu;
    std::string convention = "cospin";
    long long n = 0, l = 0, r = 0, N = 0, b = 0, a = 0, L = 0, g = 0, order = 0;
    bool q_level = false;
};

void add_format(CLI::App* cmd, Request& req) {
    cmd->add_option("--format", req.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

ordered_json poly_json(const LaurentPoly& p) { return ordered_json::parse(p.json_str()); }
ordered_json expansion_json(const SchurExpansion& e) { return ordered_json::parse(e.json_str()); }

void emit(std::ostream& out, const Request& req, const std::string& text, const ordered_json& j) {
    if (req.format == "json")
        out << j.dump() << "\n";
    else
        out << text << "\n";
}

std::string spin_str(long long spin2) { return HalfInt::halves(spin2).str(); }

TConvention parse_convention(const std::string& s) {
    return s == "spin" ? TConvention::Spin : TConvention::Cospin;
}

int dispatch(const CLI::App& app, Request& req, std::ostream& out) {
    if (app.got_subcommand("core")) {
        Partition res = r_core(Partition::parse(req.partition), static_cast<int>(req.r));
        emit(out, req, res.str(), ordered_json{{"core", res.str()}});
    } else if (app.got_subcommand("quotient")) {
        auto quot = r_quotient(Partition::parse(req.partition), static_cast<int>(req.r));
        ordered_json names = ordered_json::array();
        for (const auto& c : quot) names.push_back(c.str());
        emit(out, req, partition_tuple_str(quot), ordered_json{{"quotient", names}});
    } else if (app.got_subcommand("ribbon-tableaux")) {
        auto tabs = enumerate_ribbon_tableaux(Partition::parse(req.partition),
                                              static_cast<int>(req.r), static_cast<int>(req.n));
        std::string text = "count=" + std::to_string(tabs.size());
        ordered_json jt = ordered_json::array();
        for (const auto& t : tabs) {
            std::string w;
            for (std::size_t i = 0; i < t.weight.size(); ++i)
                w += (i ? "," : "") + std::to_string(t.weight[i]);
            std::vector<Partition> chain = t.chain;
            text += "\nweight=" + w + " spin=" + spin_str(t.spin2) + " chain=" + partition_tuple_str(chain);
            ordered_json jc = ordered_json::array();
            for (const auto& p : chain) jc.push_back(p.str());
            jt.push_back(ordered_json{{"weight", w}, {"spin", spin_str(t.spin2)}, {"chain", jc}});
        }
        emit(out, req, text,
             ordered_json{{"count", tabs.size()}, {"tableaux", jt}});
    } else if (app.got_subcommand("llt")) {
        SchurExpansion e = llt_cospin(Partition::parse(req.partition), static_cast<int>(req.r),
                                      static_cast<int>(req.n));
        emit(out, req, e.str(), expansion_json(e));
    } else if (app.got_subcommand("qlr")) {
        LaurentPoly p = q_lr_cospin(Partition::parse(req.partition),
                                    parse_partition_tuple(req.factors), static_cast<int>(req.n));
        emit(out, req, p.str(), poly_json(p));
    } else if (app.got_subcommand("reduce")) {
        long long L = req.L > 0 ? req.L : req.n + req.l;
        ReductionResult res = weyl_reduce(Partition::parse(req.partition), static_cast<int>(req.n), L);
        if (res.zero) {
            emit(out, req, "0", ordered_json{{"zero", true}});
        } else {
            std::string text = std::string("sign=") + (res.sign > 0 ? "+1" : "-1") +
                               " z=" + std::to_string(res.z) + " mu=" + res.mu.str();
            emit(out, req, text,
                 ordered_json{{"sign", res.sign}, {"z", res.z}, {"mu", res.mu.str()}});
        }
    } else if (app.got_subcommand("fusion")) {
        auto e = fusion_product_classical(parse_partition_tuple(req.factors),
                                          static_cast<int>(req.n), static_cast<int>(req.l));
        emit(out, req, e.str(), expansion_json(e));
    } else if (app.got_subcommand("qfusion")) {
        auto e = q_fusion_product(parse_partition_tuple(req.factors), static_cast<int>(req.n),
                                  static_cast<int>(req.l), parse_convention(req.convention));
        emit(out, req, e.str(), expansion_json(e));
    } else if (app.got_subcommand("rkostka")) {
        LaurentPoly p = restricted_kostka(Partition::parse(req.partition), Partition::parse(req.mu),
                                          static_cast<int>(req.n), static_cast<int>(req.l));
        emit(out, req, p.str(), poly_json(p));
    } else if (app.got_subcommand("kbar")) {
        LaurentPoly p = req.a > 0 ? kbar_skew_closed(req.N, req.b, req.a, req.L)
                                  : kbar_closed(req.N, req.b, req.L);
        emit(out, req, p.str(), poly_json(p));
    } else if (app.got_subcommand("virasoro")) {
        auto series = rocha_caridi(VirasoroLabel(req.L - 1, req.a + 1, req.b + 1), req.order);
        std::string text = series.terms.str() + "+O(q^" + std::to_string(series.order) + ")";
        emit(out, req, text,
             ordered_json{{"order", series.order}, {"series", poly_json(series.terms)}});
    } else if (app.got_subcommand("limit-check")) {
        LimitReport rep = virasoro_limit_check(req.a, req.b, req.L, req.N, req.order);
        if (rep.agree) {
            emit(out, req, "agree order=" + std::to_string(req.order), ordered_json{{"agree", true}});
        } else {
            emit(out, req, "disagree at q^" + std::to_string(rep.first_mismatch),
                 ordered_json{{"agree", false}, {"first_mismatch", rep.first_mismatch}});
            return 1;
        }
    } else if (app.got_subcommand("theta")) {
        if (req.q_level) {
            LaurentPoly p = theta_qdim(static_cast<int>(req.n), static_cast<int>(req.l),
                                       static_cast<int>(req.g));
            emit(out, req, p.str(), poly_json(p));
        } else {
            BigInt v = theta_dim(static_cast<int>(req.n), static_cast<int>(req.l),
                                 static_cast<int>(req.g));
            emit(out, req, v.str(), ordered_json{{"value", v.str()}});
        }
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with ribbon tableaux, LLT polynomials and WZW fusion rules"};
    app.require_subcommand(1);

    Request req;

    auto* core = app.add_subcommand("core", "r-core of a partition");
    core->add_option("--partition", req.partition)->required();
    core->add_option("--r", req.r)->required();

    auto* quotient = app.add_subcommand("quotient", "r-quotient of a partition");
    quotient->add_option("--partition", req.partition)->required();
    quotient->add_option("--r", req.r)->required();

    auto* rt = app.add_subcommand("ribbon-tableaux", "Enumerate semistandard r-ribbon tableaux");
    rt->add_option("--partition", req.partition)->required();
    rt->add_option("--r", req.r)->required();
    rt->add_option("--n", req.n, "Largest entry")->required();

    auto* llt = app.add_subcommand("llt", "Cospin LLT polynomial in the Schur basis");
    llt->add_option("--partition", req.partition)->required();
    llt->add_option("--r", req.r)->required();
    llt->add_option("--n", req.n, "Number of variables")->required();

    auto* qlr = app.add_subcommand("qlr", "Cospin q-analogue of a Littlewood-Richardson coefficient");
    qlr->add_option("--partition", req.partition, "Target partition nu")->required();
    qlr->add_option("--factors", req.factors)->required();
    qlr->add_option("--n", req.n)->required();

    auto* reduce = app.add_subcommand("reduce", "Affine Weyl reduction of a Schur label");
    reduce->add_option("--partition", req.partition)->required();
    reduce->add_option("--n", req.n)->required();
    auto* optL = reduce->add_option("--L", req.L, "Level modulus L = n + l");
    reduce->add_option("--l", req.l, "Level (alternative to --L)")->excludes(optL);

    auto* fusion = app.add_subcommand("fusion", "Classical fusion product");
    fusion->add_option("--factors", req.factors)->required();
    fusion->add_option("--n", req.n)->required();
    fusion->add_option("--l", req.l)->required();

    auto* qfusion = app.add_subcommand("qfusion", "q-analogue of the fusion product");
    qfusion->add_option("--factors", req.factors)->required();
    qfusion->add_option("--n", req.n)->required();
    qfusion->add_option("--l", req.l)->required();
    qfusion->add_option("--convention", req.convention)
        ->check(CLI::IsMember({"cospin", "spin"}))
        ->capture_default_str();

    auto* rk = app.add_subcommand("rkostka", "Restricted Kostka polynomial");
    rk->add_option("--partition", req.partition)->required();
    rk->add_option("--mu", req.mu, "Weight partition")->required();
    rk->add_option("--n", req.n)->required();
    rk->add_option("--l", req.l)->required();

    auto* kbar = app.add_subcommand("kbar", "Two-row restricted Kostka closed form");
    kbar->add_option("--N", req.N)->required();
    kbar->add_option("--b", req.b)->required();
    kbar->add_option("--L", req.L)->required();
    kbar->add_option("--a", req.a, "Inner row (skew version)")->capture_default_str();

    auto* vir = app.add_subcommand("virasoro", "Normalized minimal-model character (m,r,s) = (L-1,a+1,b+1)");
    vir->add_option("--L", req.L)->required();
    vir->add_option("--a", req.a)->required();
    vir->add_option("--b", req.b)->required();
    vir->add_option("--order", req.order)->required();

    auto* lim = app.add_subcommand("limit-check", "Finite-size character agreement report");
    lim->add_option("--L", req.L)->required();
    lim->add_option("--a", req.a)->required();
    lim->add_option("--b", req.b)->required();
    lim->add_option("--N", req.N)->required();
    lim->add_option("--order", req.order)->required();

    auto* theta = app.add_subcommand("theta", "Dimension of the space of nonabelian theta functions");
    theta->add_option("--n", req.n)->required();
    theta->add_option("--l", req.l)->required();
    theta->add_option("--g", req.g, "Genus")->required();
    theta->add_flag("--q", req.q_level, "q-analogue via cospin fusion coefficients");

    for (auto* cmd : {core, quotient, rt, llt, qlr, reduce, fusion, qfusion, rk, kbar, vir, lim, theta})
        add_format(cmd, req);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        return dispatch(app, req, out);
    } catch (const domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ribbonfusion::cli
