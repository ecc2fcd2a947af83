#pragma once

#include <string>

#include "json.hpp"
#include "orbi/euler.hpp"
#include "orbi/series.hpp"

namespace orbi {

using json = nlohmann::ordered_json;

GroupSpec parse_group_spec(const json& j);
GammaSpec parse_gamma_spec(const json& j);
FinGSet parse_gset(const json& j, const FiniteGroup& g);
CoeffTable parse_coeff_table(const json& j);

json gamma_to_json(const GammaSpec& gamma);

// Built-in fixtures: a group name (trivial, z2, z3, z4, s3, s4), a Gamma name
// (z, z2, z3, free1, free2, free3), or a G-set name (point, regular). Strings
// that are not fixture names are treated as paths to JSON files.
GroupSpec load_group_spec(const std::string& name_or_path);
GammaSpec load_gamma_spec(const std::string& name_or_path);
FinGSet load_gset(const std::string& name_or_path, const FiniteGroup& g);
CoeffTable load_coeff_table(const std::string& path);

// One verification record; `identity` is the stable tag of the identity the
// record checks.
struct CheckRecord {
    std::string name;
    std::string identity;
    json inputs;
    json lhs;
    json rhs;
    bool pass = false;
};

struct VerifyReport {
    std::string command;
    std::vector<CheckRecord> checks;
    double wall_ms = 0;

    bool pass() const {
        for (const CheckRecord& c : checks)
            if (!c.pass) return false;
        return true;
    }
    // wall_ms is left out of the JSON unless asked for, so identical
    // invocations stay byte-identical
    json to_json(bool with_timing = false) const;
    std::string to_table() const;
};

}  // namespace orbi
