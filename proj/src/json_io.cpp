#include "orbi/json_io.hpp"

#include <fstream>
#include <sstream>

namespace orbi {

GroupSpec parse_group_spec(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw input_error("group spec needs a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();
    GroupSpec s;
    if (kind == "trivial") {
        s.kind = GroupSpec::Kind::trivial;
    } else if (kind == "cyclic") {
        s.kind = GroupSpec::Kind::cyclic;
        s.n = j.at("n").get<long long>();
    } else if (kind == "symmetric") {
        s.kind = GroupSpec::Kind::symmetric;
        s.n = j.at("n").get<long long>();
    } else if (kind == "cayley") {
        s.kind = GroupSpec::Kind::cayley;
        s.cayley_table = j.at("table").get<std::vector<std::vector<Elem>>>();
        if (j.contains("order") &&
            j.at("order").get<long long>() != (long long)s.cayley_table.size())
            throw input_error("cayley order does not match the table");
    } else if (kind == "perm") {
        s.kind = GroupSpec::Kind::perm;
        s.degree = j.at("degree").get<long long>();
        s.perm_generators = j.at("generators").get<std::vector<std::vector<int>>>();
    } else if (kind == "product") {
        s.kind = GroupSpec::Kind::product;
        for (const json& f : j.at("factors")) s.factors.push_back(parse_group_spec(f));
    } else if (kind == "wreath") {
        s.kind = GroupSpec::Kind::wreath;
        s.n = j.at("n").get<long long>();
        s.wreath_base = std::make_unique<GroupSpec>(parse_group_spec(j.at("base")));
    } else {
        throw input_error("unknown group kind: " + kind);
    }
    return s;
}

GammaSpec parse_gamma_spec(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw input_error("gamma spec needs a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "free-abelian") return GammaSpec::free_abelian(j.at("rank").get<int>());
    if (kind == "free") return GammaSpec::free(j.at("rank").get<int>());
    if (kind == "presented") {
        std::vector<Word> relators;
        for (const json& r : j.at("relators")) relators.push_back(Word{r.get<std::vector<int>>()});
        return GammaSpec::presented(j.at("rank").get<int>(), std::move(relators));
    }
    throw input_error("unknown gamma kind: " + kind);
}

json gamma_to_json(const GammaSpec& gamma) {
    json j;
    switch (gamma.kind) {
        case GammaSpec::Kind::free_abelian:
            j["kind"] = "free-abelian";
            break;
        case GammaSpec::Kind::free:
            j["kind"] = "free";
            break;
        case GammaSpec::Kind::presented:
            j["kind"] = "presented";
            break;
    }
    j["rank"] = gamma.rank;
    if (gamma.kind == GammaSpec::Kind::presented) {
        json rel = json::array();
        for (const Word& w : gamma.relators) rel.push_back(w.letters);
        j["relators"] = rel;
    }
    return j;
}

FinGSet parse_gset(const json& j, const FiniteGroup& g) {
    if (!j.is_object() || !j.contains("action"))
        throw input_error("g-set spec needs an \"action\" field");
    auto table = j.at("action").get<std::vector<std::vector<long long>>>();
    if (j.contains("size")) {
        long long size = j.at("size").get<long long>();
        for (const auto& row : table)
            if ((long long)row.size() != size)
                throw input_error("g-set size does not match the action rows");
    }
    return FinGSet(g, std::move(table));
}

CoeffTable parse_coeff_table(const json& j) {
    CoeffTable c;
    if (!j.is_object() || !j.contains("window"))
        throw input_error("coefficient table needs a \"window\" field");
    c.m_max = j.at("window").at("m_max").get<long long>();
    c.k_abs = j.at("window").at("k_abs").get<long long>();
    if (c.m_max < 0 || c.k_abs < 0) throw input_error("coefficient window must be >= 0");
    for (const json& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3)
            throw input_error("coefficient entries must be [m, k, c] triples");
        c.set(e[0].get<long long>(), e[1].get<long long>(), e[2].get<long long>());
    }
    return c;
}

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

GroupSpec load_group_spec(const std::string& arg) {
    GroupSpec s;
    if (arg == "trivial") return s;
    if (arg == "z2" || arg == "z3" || arg == "z4" || arg == "z5" || arg == "z6") {
        s.kind = GroupSpec::Kind::cyclic;
        s.n = arg[1] - '0';
        return s;
    }
    if (arg == "s3" || arg == "s4" || arg == "s5") {
        s.kind = GroupSpec::Kind::symmetric;
        s.n = arg[1] - '0';
        return s;
    }
    return parse_group_spec(read_json_file(arg));
}

GammaSpec load_gamma_spec(const std::string& arg) {
    if (arg == "z") return GammaSpec::free_abelian(1);
    if (arg == "z2") return GammaSpec::free_abelian(2);
    if (arg == "z3") return GammaSpec::free_abelian(3);
    if (arg == "free1") return GammaSpec::free(1);
    if (arg == "free2") return GammaSpec::free(2);
    if (arg == "free3") return GammaSpec::free(3);
    if (arg.rfind("free-abelian-", 0) == 0)
        return GammaSpec::free_abelian(std::stoi(arg.substr(13)));
    if (arg.rfind("free-", 0) == 0) return GammaSpec::free(std::stoi(arg.substr(5)));
    return parse_gamma_spec(read_json_file(arg));
}

FinGSet load_gset(const std::string& arg, const FiniteGroup& g) {
    if (arg == "point") return FinGSet::point(g);
    if (arg == "regular") return FinGSet::regular(g);
    return parse_gset(read_json_file(arg), g);
}

CoeffTable load_coeff_table(const std::string& path) {
    return parse_coeff_table(read_json_file(path));
}

json VerifyReport::to_json(bool with_timing) const {
    json j;
    j["command"] = command;
    json checks_j = json::array();
    for (const CheckRecord& c : checks) {
        json cj;
        cj["name"] = c.name;
        cj["identity"] = c.identity;
        cj["inputs"] = c.inputs;
        cj["lhs"] = c.lhs;
        cj["rhs"] = c.rhs;
        cj["pass"] = c.pass;
        checks_j.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks_j);
    j["pass"] = pass();
    if (with_timing) j["wall_ms"] = wall_ms;
    return j;
}

std::string VerifyReport::to_table() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    size_t width = 4;
    for (const CheckRecord& c : checks) width = std::max(width, c.name.size());
    for (const CheckRecord& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
           << std::string(width - c.name.size() + 2, ' ') << c.identity;
        if (!c.pass) os << "  lhs=" << c.lhs.dump() << " rhs=" << c.rhs.dump();
        os << "\n";
    }
    os << (pass() ? "PASS" : "FAIL") << " (" << checks.size() << " checks, " << wall_ms
       << " ms)\n";
    return os.str();
}

}  // namespace orbi
