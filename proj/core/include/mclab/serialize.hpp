#pragma once

#include "mclab/hessdefs.hpp"
#include "mclab/hessenberg.hpp"
#include "mclab/mcfields.hpp"
#include "mclab/polybasis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mclab {

// Canonical JSON documents (sorted keys, two-space indent, trailing newline).

struct RunConfig {
    std::string command;           // rootsys | hess | mc | polybasis | hessdefs | selftest
    char family = 'A';
    int rank = 1;
    std::string hessenberg = "all"; // root list ("a,b,a+b"), "type-p" / "type-<p>", "all", "full"
    std::string H;                  // comma separated diagonal entries, "symbolic", or empty for the default
    std::string chart;              // chart kind name, empty for the default
    int degree_bound = -1;
    std::string format = "json";
    unsigned long seed = 1;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};
std::string config_to_json(const RunConfig& c);
RunConfig config_from_json(const std::string& text);

std::string rootsys_json(const RootSystem& rs);
std::string hess_json(const HessenbergSet& hs, const HessenbergReport& rep);

struct McReport {
    const HessenbergSet* hs = nullptr;
    const Chart* chart = nullptr;
    const McSolution* sol = nullptr;
    std::optional<NormalizerComparison> comparison;
    std::optional<AlgebraInvariants> invariants;
    std::vector<Poly> omega_components;  // omega component of each basis field, if omega in R
};
std::string mc_json(const McReport& r);

struct PolybasisReport {
    const Chart* chart = nullptr;        // three_factor
    const OmegaComponentBasis* basis = nullptr;
    std::vector<OracleCheck> checks;
    const Chart* target = nullptr;       // optional transport target
    std::vector<Poly> transported;       // per basis index, in target coordinates
};
std::string polybasis_json(const PolybasisReport& r);

struct HessdefsReport {
    const HessenbergEquations* eqs = nullptr;
    const SmoothnessCertificate* cert = nullptr;
    const GraphMap* graph = nullptr;
    std::vector<PolyVectorField> pushforward;  // numeric H only
    bool matrix_oracle = false;
};
std::string hessdefs_json(const HessdefsReport& r);

std::string error_json(const std::string& kind, const std::string& message);

// Root labels in contract notation ("110", "-011").
std::vector<std::string> root_labels(const RootSystem& rs, const std::vector<std::size_t>& ids);

}  // namespace mclab
