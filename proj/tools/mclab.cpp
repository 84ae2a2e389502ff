#include "mclab/hessdefs.hpp"
#include "mclab/mcfields.hpp"
#include "mclab/polybasis.hpp"
#include "mclab/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using json = nlohmann::json;
using namespace mclab;

namespace {

enum ExitCode { ok = 0, internal = 1, usage = 2, bad_input = 3, invariant = 4, check_failed = 5 };

struct CliError : std::runtime_error {
    CliError(std::string k, const std::string& m, int c) : std::runtime_error(m), kind(std::move(k)), code(c) {}
    std::string kind;
    int code;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        auto b = cur.find_first_not_of(" \t");
        auto e = cur.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    }
    return out;
}

std::vector<HessenbergSet> parse_hessenberg(const RootSystem& rs, const std::string& spec) {
    if (spec == "all") return enumerate_all(rs);
    if (spec == "full") return {full_set(rs)};
    if (spec.rfind("type-", 0) == 0) {
        std::string p = spec.substr(5);
        int v = p == "p" ? rs.max_height() - 1 : std::stoi(p);
        return {type_p_subset(rs, v)};
    }
    std::vector<std::size_t> R;
    if (!spec.empty() && spec != "none")
        for (auto& t : split(spec, ',')) R.push_back(rs.parse_root(t));
    return {validate(rs, R)};
}

CartanParam parse_H(const SplitLieAlgebra& alg, const std::string& spec) {
    CartanParam H;
    if (spec == "symbolic") {
        H.symbolic = true;
        return H;
    }
    if (spec.empty() || spec == "rho") {
        // delta_k(H) = 1 for every simple root: regular.
        H.h.assign(alg.rank(), Q(0));
        for (auto& w : alg.coweights())
            for (std::size_t k = 0; k < w.size(); ++k) H.h[k] += w[k];
        return H;
    }
    if (spec == "paper") {
        if (alg.name() != "sl4") throw std::invalid_argument("the named H 'paper' is defined for sl4 only");
        H.h = cartan_from_diagonal(alg, {Q(-1), Q(1, 2), Q(-1, 2), Q(1)});
        return H;
    }
    std::vector<Q> d;
    for (auto& t : split(spec, ',')) d.push_back(parse_rational(t));
    H.h = cartan_from_diagonal(alg, d);
    return H;
}

ChartKind chart_for(const SplitLieAlgebra& alg, const std::string& name) {
    return name.empty() ? default_chart_kind(alg) : parse_chart_kind(name);
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string r;
    for (std::size_t i = 0; i < cells.size(); ++i) r += (i ? "," : "") + csv_cell(cells[i]);
    return r + "\n";
}

std::string join(const json& arr, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? sep : "") + arr[i].get<std::string>();
    return s;
}

std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Indented key: value rendering of a JSON document.
void pretty(const json& j, std::ostream& os, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                os << pad << k << ":\n";
                pretty(v, os, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else if (j.is_array()) {
        bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
        if (flat) {
            os << pad;
            for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << scalar(j[i]);
            os << "\n";
        } else {
            for (auto& e : j) {
                os << pad << "-\n";
                pretty(e, os, indent + 2);
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

std::string csv_of(const std::string& cmd, const json& result) {
    std::string out;
    if (cmd == "rootsys") {
        out += csv_row({"id", "label", "height", "sigma"});
        const auto& d = result["omega_decomposition"];
        for (auto& r : result["positive_roots"]) {
            std::string lab = r["label"], sig;
            for (auto key : {"sigma1", "sigma_half", "sigma0"})
                for (auto& x : d[key])
                    if (x == lab) sig = key;
            out += csv_row({std::to_string(r["id"].get<int>()), lab, std::to_string(r["height"].get<int>()), sig});
        }
    } else if (cmd == "hess") {
        out += csv_row({"R", "C", "maximal_roots", "boundary_roots", "normalizer_support", "hypothesis_I",
                        "hypothesis_II", "dim_slice", "dim_q", "dim_q_mod_nC", "dim_conjecture"});
        for (auto& r : result)
            out += csv_row({join(r["R"]), join(r["C"]), join(r["maximal_roots"]), join(r["boundary_roots"]),
                            join(r["normalizer_support"]), scalar(r["hypothesis_I"]), scalar(r["hypothesis_II"]),
                            scalar(r["dims"]["slice"]), scalar(r["dims"]["q"]), scalar(r["dims"]["q_mod_nC"]),
                            scalar(r["dims"]["conjecture"])});
    } else if (cmd == "mc") {
        out += csv_row({"R", "field", "grade", "root", "coefficient"});
        for (auto& r : result)
            for (std::size_t i = 0; i < r["basis"].size(); ++i) {
                const auto& f = r["basis"][i];
                for (auto& [root, p] : f["components"].items())
                    out += csv_row({join(r["R"]), std::to_string(i), scalar(f["grade"]), root, p.get<std::string>()});
            }
    } else if (cmd == "polybasis") {
        out += csv_row({"label", "degree", "polynomial", "oracle_equal", "transported"});
        for (auto& g : result["generators"])
            out += csv_row({g["label"], scalar(g["degree"]), g["polynomial"], scalar(g["oracle_equal"]),
                            g.contains("transported") ? g["transported"].get<std::string>() : ""});
    } else if (cmd == "hessdefs") {
        out += csv_row({"kind", "root", "column", "value"});
        for (auto& r : result) {
            for (auto& e : r["equations"]) out += csv_row({"equation", e["root"], "", e["polynomial"]});
            if (r.contains("certificate")) {
                const auto& jac = r["certificate"]["jacobian"];
                auto vars = r["variables"];
                for (std::size_t i = 0; i < jac.size(); ++i)
                    for (std::size_t k = 0; k < jac[i].size(); ++k)
                        if (jac[i][k] != "0")
                            out += csv_row({"jacobian", r["equations"][i]["root"], vars[k], jac[i][k]});
                out += csv_row({"determinant", "", "", r["certificate"]["determinant"]});
            }
            if (r.contains("graph_map"))
                for (auto& g : r["graph_map"])
                    out += csv_row({"graph", g["root"], g["variable"],
                                    g.contains("value") ? g["value"].get<std::string>()
                                                        : "(" + g["numerator"].get<std::string>() + ")/(" +
                                                              g["denominator"].get<std::string>() + ")"});
        }
    } else if (cmd == "selftest") {
        out += csv_row({"check", "pass"});
        for (auto& c : result["checks"]) out += csv_row({c["name"], scalar(c["pass"])});
    }
    return out;
}

json run_rootsys(const RunConfig& c) {
    auto rs = RootSystem::build(c.family, c.rank);
    return json::parse(rootsys_json(rs));
}

json run_hess(const RunConfig& c) {
    auto rs = RootSystem::build(c.family, c.rank);
    json out = json::array();
    for (auto& hs : parse_hessenberg(rs, c.hessenberg)) out.push_back(json::parse(hess_json(hs, analyze(hs))));
    return out;
}

json run_mc(const RunConfig& c) {
    auto alg = SplitLieAlgebra::build(c.family, c.rank);
    Chart chart(alg, chart_for(alg, c.chart));
    const auto& rs = alg.root_system();
    json out = json::array();
    for (auto& hs : parse_hessenberg(rs, c.hessenberg)) {
        McSolution sol = solve_mc(hs, chart, c.degree_bound);
        McReport rep;
        rep.hs = &hs;
        rep.chart = &chart;
        rep.sol = &sol;
        rep.comparison = compare_with_normalizer(hs, chart, sol);
        rep.invariants = algebra_invariants(sol);
        out.push_back(json::parse(mc_json(rep)));
    }
    return out;
}

json run_polybasis(const RunConfig& c) {
    auto alg = SplitLieAlgebra::build(c.family, c.rank);
    Chart tf(alg, ChartKind::three_factor);
    OmegaComponentBasis basis = build_basis(tf);
    PolybasisReport rep;
    rep.chart = &tf;
    rep.basis = &basis;
    rep.checks = check_against_oracle(tf);
    ChartKind target = chart_for(alg, c.chart);
    std::optional<Chart> tc;
    if (target != ChartKind::three_factor) {
        tc.emplace(alg, target);
        rep.target = &*tc;
        for (auto& [b, p] : basis.generators) rep.transported.push_back(transport(p, tf, *tc));
    }
    return json::parse(polybasis_json(rep));
}

json run_hessdefs(const RunConfig& c) {
    auto alg = SplitLieAlgebra::build(c.family, c.rank);
    Chart chart(alg, chart_for(alg, c.chart));
    CartanParam H = parse_H(alg, c.H);
    json out = json::array();
    for (auto& hs : parse_hessenberg(alg.root_system(), c.hessenberg)) {
        auto eqs = defining_equations(chart, hs, H);
        auto cert = smoothness_certificate(eqs);
        auto graph = graph_map(eqs);
        HessdefsReport rep;
        rep.eqs = &eqs;
        rep.cert = &cert;
        rep.graph = &graph;
        rep.matrix_oracle = matrix_oracle_agrees(eqs);
        if (!H.symbolic) rep.pushforward = pushforward_frame(eqs, graph);
        out.push_back(json::parse(hessdefs_json(rep)));
    }
    return out;
}

// Quick internal consistency run; seed drives the random Jacobi samples.
json run_selftest(const RunConfig& c) {
    json checks = json::array();
    auto add = [&](const std::string& name, bool pass) { checks.push_back({{"name", name}, {"pass", pass}}); };
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<int> coef(-3, 3);

    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'C', 2}}) {
        auto alg = SplitLieAlgebra::build(f, r);
        bool jac = true;
        for (int trial = 0; trial < 20; ++trial) {
            QElem x(alg.dim()), y(alg.dim()), z(alg.dim());
            for (std::size_t b = 0; b < alg.dim(); ++b) {
                x[b] = coef(rng);
                y[b] = coef(rng);
                z[b] = coef(rng);
            }
            auto s = pe_add(pe_add(alg.constant(alg.bracket(x, alg.bracket(y, z)), 0),
                                   alg.constant(alg.bracket(y, alg.bracket(z, x)), 0)),
                            alg.constant(alg.bracket(z, alg.bracket(x, y)), 0));
            jac = jac && pe_is_zero(s);
        }
        add(alg.name() + " jacobi (random)", jac);
        Chart tf(alg, ChartKind::three_factor);
        auto res = check_against_oracle(tf);
        add(alg.name() + " closed forms equal oracle",
            std::all_of(res.begin(), res.end(), [](const OracleCheck& o) { return o.equal && o.graded; }));
    }
    {
        auto alg = SplitLieAlgebra::build('A', 2);
        Chart ch(alg, ChartKind::matrix_inverse);
        auto hs = full_set(alg.root_system());
        add("sl3 multicontact dimension 8", solve_mc(hs, ch).dimension == 8);
    }
    {
        auto alg = SplitLieAlgebra::build('A', 3);
        Chart ch(alg, ChartKind::matrix_inverse);
        auto hs = type_p_subset(alg.root_system(), 2);
        add("sl4 type-2 dimension 9", solve_mc(hs, ch).dimension == 9);
        bool det = true;
        CartanParam S;
        S.symbolic = true;
        for (auto& s : enumerate_all(alg.root_system())) det = det && smoothness_certificate(defining_equations(ch, s, S)).identity_holds;
        add("sl4 determinant identity", det);
    }
    {
        auto alg = SplitLieAlgebra::build('C', 2);
        Chart ch(alg, ChartKind::sp2_paper);
        const auto& rs = alg.root_system();
        auto hs = validate(rs, {0, 1, 2});
        add("sp2 {a,b,a+b} dimension 8", solve_mc(hs, ch).dimension == 8);
    }
    bool all = std::all_of(checks.begin(), checks.end(), [](const json& x) { return x["pass"].get<bool>(); });
    return json{{"checks", checks}, {"all_pass", all}};
}

void emit(const RunConfig& c, const json& result, const std::string& out_file) {
    std::string text;
    if (c.format == "json") {
        json doc{{"command", c.command}, {"config", json::parse(config_to_json(c))}, {"result", result}};
        text = doc.dump(2) + "\n";
    } else if (c.format == "csv") {
        text = csv_of(c.command, result);
    } else {
        std::ostringstream os;
        os << "command: " << c.command << "\n";
        pretty(result, os);
        text = os.str();
    }
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw CliError("io", "cannot write " + out_file, bad_input);
        f << text;
    }
}

int run(RunConfig c, const std::string& out_file) {
    if (c.family != 'A' && c.family != 'C' && c.command != "rootsys")
        throw CliError("invalid_argument", std::string("family ") + c.family + " has no split algebra here (A or C)",
                       bad_input);
    json result;
    if (c.command == "rootsys") result = run_rootsys(c);
    else if (c.command == "hess") result = run_hess(c);
    else if (c.command == "mc") result = run_mc(c);
    else if (c.command == "polybasis") result = run_polybasis(c);
    else if (c.command == "hessdefs") result = run_hessdefs(c);
    else if (c.command == "selftest") result = run_selftest(c);
    else throw CliError("invalid_argument", "unknown command " + c.command, usage);
    emit(c, result, out_file);
    if (c.command == "selftest" && !result["all_pass"].get<bool>()) return check_failed;
    return ok;
}

void fail(const std::string& kind, const std::string& msg, const std::string& out_file) {
    std::string text = error_json(kind, msg);
    std::cerr << "mclab: " << msg << "\n";
    if (!out_file.empty()) {
        std::ofstream f(out_file, std::ios::binary);
        f << text;
    }
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mclab: multicontact fields on Hessenberg slices of split flag manifolds"};
    app.require_subcommand(0, 1);
    RunConfig cfg;
    std::string family = "A", out_file, config_file;
    int rank = 0;

    app.fallthrough();
    app.add_option("--config", config_file, "Read the run configuration from a JSON file");

    auto add_common = [&](CLI::App* sub, bool needs_rank) {
        auto* f = sub->add_option("family", family, "Root system family (A or C)");
        auto* r = sub->add_option("rank", rank, "Rank")->check(CLI::Range(1, 12));
        if (needs_rank) {
            f->required();
            r->required();
        }
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--out", out_file, "Write output to FILE");
        sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
    };
    auto* s_root = app.add_subcommand("rootsys", "Positive roots, heights, omega decomposition");
    add_common(s_root, true);
    auto* s_hess = app.add_subcommand("hess", "Hessenberg set analysis");
    add_common(s_hess, true);
    auto* s_mc = app.add_subcommand("mc", "Solve the multicontact system on a Hessenberg slice");
    add_common(s_mc, true);
    auto* s_pb = app.add_subcommand("polybasis", "Closed-form omega components in the three-factor chart");
    add_common(s_pb, true);
    auto* s_hd = app.add_subcommand("hessdefs", "Defining equations, smoothness certificate, graph map");
    add_common(s_hd, true);
    auto* s_self = app.add_subcommand("selftest", "Quick internal consistency checks");
    add_common(s_self, false);
    for (auto* s : {s_hess, s_mc, s_hd})
        s->add_option("--hessenberg", cfg.hessenberg, "Root list (a,b,a+b or 110,...), type-<p>, full, all");
    for (auto* s : {s_mc, s_pb, s_hd}) s->add_option("--chart", cfg.chart, "Chart kind");
    s_mc->add_option("--degree-bound", cfg.degree_bound, "Highest grade of the ansatz (default 2 ht(omega))");
    s_hd->add_option("--H", cfg.H, "Diagonal entries, 'symbolic', 'rho' or 'paper'");
    s_hess->callback([&] { if (s_hess->count("--hessenberg") == 0) cfg.hessenberg = "all"; });
    s_mc->callback([&] { if (s_mc->count("--hessenberg") == 0) cfg.hessenberg = "full"; });
    s_hd->callback([&] { if (s_hd->count("--hessenberg") == 0) cfg.hessenberg = "type-p"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        fail("usage", e.what(), "");
        return usage;
    }

    try {
        for (auto* s : app.get_subcommands()) cfg.command = s->get_name();
        if (config_file.empty() && cfg.command.empty())
            throw CliError("usage", "a subcommand or --config FILE is required", usage);
        if (!config_file.empty() && !cfg.command.empty())
            throw CliError("usage", "--config replaces the subcommand; give one or the other", usage);
        if (!config_file.empty()) {
            std::ifstream f(config_file);
            if (!f) throw CliError("io", "cannot read " + config_file, bad_input);
            std::stringstream ss;
            ss << f.rdbuf();
            cfg = config_from_json(ss.str());
        } else {
            if (family.size() != 1) throw CliError("invalid_argument", "family must be a single letter", bad_input);
            cfg.family = static_cast<char>(std::toupper(static_cast<unsigned char>(family[0])));
            cfg.rank = cfg.command == "selftest" ? 1 : rank;
        }
        return run(cfg, out_file);
    } catch (const CliError& e) {
        fail(e.kind, e.what(), out_file);
        return e.code;
    } catch (const HessenbergError& e) {
        fail("not_hessenberg", e.what(), out_file);
        return bad_input;
    } catch (const NotRegularError& e) {
        fail("not_regular", e.what(), out_file);
        return bad_input;
    } catch (const std::domain_error& e) {
        fail("invariant_violation", e.what(), out_file);
        return invariant;
    } catch (const std::invalid_argument& e) {
        fail("invalid_argument", e.what(), out_file);
        return bad_input;
    } catch (const nlohmann::json::exception& e) {
        fail("invalid_config", e.what(), out_file);
        return bad_input;
    } catch (const std::exception& e) {
        fail("internal", e.what(), out_file);
        return internal;
    }
}
