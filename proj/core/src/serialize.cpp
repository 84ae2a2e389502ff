#include "mclab/serialize.hpp"

#include <json.hpp>

namespace mclab {

using json = nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json labels(const RootSystem& rs, const std::vector<std::size_t>& ids) { return root_labels(rs, ids); }

json field_json(const PolyVectorField& v, const RootSystem& rs, const std::vector<std::string>& names) {
    json comps = json::object();
    for (std::size_t g = 0; g < v.comp.size(); ++g)
        if (!v.comp[g].is_zero()) comps[rs.label(g)] = v.comp[g].to_string(names);
    return comps;
}

}  // namespace

std::vector<std::string> root_labels(const RootSystem& rs, const std::vector<std::size_t>& ids) {
    std::vector<std::string> out;
    for (auto i : ids) out.push_back(rs.label(i));
    return out;
}

std::string config_to_json(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["family"] = std::string(1, c.family);
    j["rank"] = c.rank;
    j["hessenberg"] = c.hessenberg;
    j["H"] = c.H;
    j["chart"] = c.chart;
    j["degree_bound"] = c.degree_bound;
    j["format"] = c.format;
    j["seed"] = c.seed;
    return dump(j);
}

RunConfig config_from_json(const std::string& text) {
    json j = json::parse(text);
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    auto fam = j.at("family").get<std::string>();
    if (fam.size() != 1) throw std::invalid_argument("family must be one letter");
    c.family = fam[0];
    c.rank = j.at("rank").get<int>();
    c.hessenberg = j.value("hessenberg", c.hessenberg);
    c.H = j.value("H", c.H);
    c.chart = j.value("chart", c.chart);
    c.degree_bound = j.value("degree_bound", c.degree_bound);
    c.format = j.value("format", c.format);
    c.seed = j.value("seed", c.seed);
    return c;
}

std::string rootsys_json(const RootSystem& rs) {
    json j;
    j["name"] = rs.name();
    j["family"] = std::string(1, rs.family());
    j["rank"] = rs.rank();
    j["cartan_matrix"] = rs.cartan_matrix();
    json roots = json::array();
    for (const auto& r : rs.positive_roots())
        roots.push_back({{"id", r.id}, {"label", rs.label(r.id)}, {"coeffs", r.coeffs}, {"height", r.height}});
    j["positive_roots"] = roots;
    j["num_positive"] = rs.num_positive();
    j["highest_root"] = rs.label(rs.highest_root());
    auto d = omega_decompose(rs);
    j["omega_decomposition"] = {{"sigma1", labels(rs, d.sigma1)},
                                {"sigma_half", labels(rs, d.sigma_half)},
                                {"sigma0", labels(rs, d.sigma0)}};
    return dump(j);
}

std::string hess_json(const HessenbergSet& hs, const HessenbergReport& rep) {
    const RootSystem& rs = *hs.rs;
    json j;
    j["algebra"] = rs.name();
    j["R"] = labels(rs, hs.R);
    j["C"] = labels(rs, hs.C);
    j["maximal_roots"] = labels(rs, rep.maximal_roots);
    json sh = json::object();
    for (auto& [m, s] : rep.shadows) sh[rs.label(m)] = labels(rs, s);
    j["shadows"] = sh;
    json zones = json::array();
    for (auto& z : rep.dark_zones) zones.push_back(labels(rs, z));
    j["dark_zones"] = zones;
    j["boundary_roots"] = labels(rs, rep.boundary_roots);
    j["normalizer_support"] = labels(rs, rep.normalizer_support);
    j["intersection"] = labels(rs, rep.intersection);
    j["hypothesis_I"] = rep.hypothesis_I;
    j["hypothesis_II"] = rep.hypothesis_II;
    j["dims"] = {{"slice", rep.dims.slice},
                 {"q", rep.dims.q},
                 {"q_mod_nC", rep.dims.q_mod_nC},
                 {"conjecture", rep.dims.conjecture}};
    return dump(j);
}

std::string mc_json(const McReport& r) {
    const RootSystem& rs = *r.hs->rs;
    const auto& names = r.chart->names();
    const McSolution& s = *r.sol;
    json j;
    j["algebra"] = r.chart->algebra().name();
    j["chart"] = r.chart->name();
    j["variables"] = names;
    j["R"] = labels(rs, r.hs->R);
    j["degree_bound"] = s.degree_bound;
    j["dimension"] = s.dimension;
    j["stabilized"] = s.stabilized;
    j["next_grade_nullity"] = s.next_grade_nullity;
    j["closed"] = s.closed;
    j["warnings"] = s.warnings;
    json basis = json::array();
    for (std::size_t i = 0; i < s.basis.size(); ++i) {
        json f{{"grade", s.grades[i]}, {"components", field_json(s.basis[i], rs, names)}};
        if (i < r.omega_components.size()) f["omega_component"] = r.omega_components[i].to_string(names);
        basis.push_back(f);
    }
    j["basis"] = basis;
    if (r.comparison) {
        const auto& c = *r.comparison;
        j["normalizer"] = {{"dim_q", c.dim_q},
                           {"dim_q_mod_nC", c.dim_q_mod_nC},
                           {"rank_nu", c.rank_nu},
                           {"dim_solution", c.dim_solution},
                           {"dim_conjecture", c.dim_conjecture},
                           {"inclusion", c.inclusion},
                           {"kernel_is_nC", c.kernel_is_nC},
                           {"hypothesis_I", c.hypothesis_I},
                           {"hypothesis_II", c.hypothesis_II},
                           {"equality", c.equality},
                           {"conjecture_match", c.conjecture_match}};
    }
    if (r.invariants) {
        const auto& v = *r.invariants;
        j["invariants"] = {{"dimension", v.dimension},
                           {"derived_series", v.derived_series},
                           {"killing_rank", v.killing_rank},
                           {"killing_positive", v.killing_positive},
                           {"killing_negative", v.killing_negative}};
    }
    return dump(j);
}

std::string polybasis_json(const PolybasisReport& r) {
    const Chart& ch = *r.chart;
    const auto& alg = ch.algebra();
    json j;
    j["algebra"] = alg.name();
    j["chart"] = ch.name();
    j["variables"] = ch.names();
    j["representatives"] = labels(alg.root_system(), r.basis->representatives);
    j["convention"] = "p^E = E_omega coefficient of Ad(n^-1)E";
    json gens = json::array();
    for (auto& [b, p] : r.basis->generators) {
        json g{{"label", alg.basis_label(b)}, {"polynomial", p.to_string(ch.names())}, {"degree", expected_degree(alg, b)}};
        for (auto& c : r.checks)
            if (c.basis_index == b) {
                g["oracle_equal"] = c.equal;
                g["graded"] = c.graded;
            }
        if (r.target && b < r.transported.size()) g["transported"] = r.transported[b].to_string(r.target->names());
        gens.push_back(g);
    }
    j["generators"] = gens;
    if (r.target) {
        j["target_chart"] = r.target->name();
        j["target_variables"] = r.target->names();
    }
    return dump(j);
}

std::string hessdefs_json(const HessdefsReport& r) {
    const HessenbergEquations& e = *r.eqs;
    const RootSystem& rs = e.chart->root_system();
    json j;
    j["algebra"] = e.chart->algebra().name();
    j["chart"] = e.chart->name();
    j["variables"] = e.names;
    j["R"] = labels(rs, e.hs->R);
    j["C"] = labels(rs, e.C);
    json H{{"symbolic", e.H.symbolic}};
    if (!e.H.symbolic) {
        std::vector<std::string> h;
        for (auto& q : e.H.h) h.push_back(to_string(q));
        H["cartan"] = h;
    }
    j["H"] = H;
    json eqs = json::array();
    auto entries = r.matrix_oracle ? matrix_entries(e) : std::map<std::size_t, Poly>{};
    for (auto a : e.C) {
        json q{{"root", rs.label(a)},
               {"alpha_H", e.alpha_of_H.at(a).to_string(e.names)},
               {"polynomial", e.p.at(a).to_string(e.names)}};
        if (entries.count(a)) q["matrix_entry"] = entries.at(a).to_string(e.names);
        eqs.push_back(q);
    }
    j["equations"] = eqs;
    j["matrix_oracle_agrees"] = r.matrix_oracle;
    if (r.cert) {
        const auto& c = *r.cert;
        json jac = json::array();
        for (auto& row : c.jacobian) {
            json jr = json::array();
            for (auto& p : row) jr.push_back(p.to_string(e.names));
            jac.push_back(jr);
        }
        j["certificate"] = {{"determinant", c.determinant.to_string(e.names)},
                            {"product_alpha_H", c.product_alpha_H.to_string(e.names)},
                            {"identity_holds", c.identity_holds},
                            {"lower_triangular", c.lower_triangular},
                            {"diagonal_is_alpha_H", c.diagonal_is_alpha_H},
                            {"jacobian_rank", c.rank_at_origin},
                            {"dim_hess", c.dim_hess},
                            {"jacobian", jac}};
    }
    if (r.graph) {
        json g = json::array();
        for (auto a : e.C) {
            const auto& ge = r.graph->entries.at(a);
            json x{{"root", rs.label(a)},
                   {"variable", e.names[a]},
                   {"numerator", ge.numerator.to_string(e.names)},
                   {"denominator", denominator_poly(e, ge).to_string(e.names)}};
            if (r.graph->values.count(a)) x["value"] = r.graph->values.at(a).to_string(e.names);
            g.push_back(x);
        }
        j["graph_map"] = g;
    }
    if (!r.pushforward.empty()) {
        json pf = json::object();
        for (auto b : e.hs->R) pf[rs.label(b)] = field_json(r.pushforward[b], rs, e.names);
        j["pushforward"] = pf;
    }
    return dump(j);
}

std::string error_json(const std::string& kind, const std::string& message) {
    json j;
    j["error"] = {{"kind", kind}, {"message", message}};
    return dump(j);
}

}  // namespace mclab
