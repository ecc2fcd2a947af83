#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "orbi/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = orbi::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hecke-lattice verification through the cli") {
    CliRun r = run({"verify", "hecke-lattice", "--m", "2", "--n", "2"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["checks"][0]["lhs"] == 9);
    CHECK(j["checks"][0]["rhs"] == 9);
    CHECK(j["checks"][0]["identity"] == "lattice-hecke-identity");
}

TEST_CASE("subgroup enumeration through the cli") {
    CliRun r = run({"subgroups", "--gamma", "z2", "--index", "4"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 7);
    for (const json& cls : j["classes"]) CHECK(cls["deck_order"] == 4);

    CliRun f = run({"subgroups", "--gamma", "free2", "--index", "2"});
    json jf = json::parse(f.out);
    CHECK(jf["count"] == 3);
}

TEST_CASE("euler characteristics through the cli") {
    CliRun r = run({"euler", "--gamma", "z", "--group", "s3", "--gset", "point"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["chi"] == 3);
    CHECK(j["chi_burnside"] == 3);

    CliRun h = run({"euler", "--gamma", "z2", "--group", "trivial", "--gset", "point",
                    "--hecke", "6"});
    CHECK(h.code == 0);
    CHECK(json::parse(h.out)["hecke_chi"] == 12);  // sigma1(6)
}

TEST_CASE("hom classification through the cli") {
    CliRun r = run({"homs", "--gamma", "z2", "--group", "s3"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["hom_count"] == 18);
    CHECK(j["class_count"] == 8);
}

TEST_CASE("usage errors exit with code 1") {
    CliRun r = run({"verify", "hecke-lattice", "--bogus", "1"});
    CHECK(r.code == 1);
    CHECK(!r.err.empty());
    CliRun r2 = run({"subgroups", "--gamma", "no-such-file.json", "--index", "2"});
    CHECK(r2.code == 1);
}

TEST_CASE("malformed json input exits with code 1 and a location") {
    std::string path = "/tmp/orbi_bad_input.json";
    {
        std::ofstream f(path);
        f << "{\"kind\": \"cyclic\", ";
    }
    CliRun r = run({"subgroups", "--gamma", path, "--index", "2"});
    CHECK(r.code == 1);
    CHECK(r.err.find(path) != std::string::npos);

    // well-formed json of the wrong shape is an input error too
    std::string shape = "/tmp/orbi_bad_shape.json";
    {
        std::ofstream f(shape);
        f << "{\"kind\": \"free\"}";  // missing rank
    }
    CliRun r2 = run({"subgroups", "--gamma", shape, "--index", "2"});
    CHECK(r2.code == 1);
}

TEST_CASE("identical invocations produce identical bytes") {
    std::vector<std::string> args{"verify", "dmvv", "--p", "3", "--q", "2",
                                  "--y", "1", "--tables", "3"};
    CliRun a = run(args);
    CliRun b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("theorem-c verification through the cli") {
    CliRun r = run({"verify", "theorem-c", "--group", "z2", "--gset", "point",
                    "--gamma", "z", "--max-degree", "3"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == 4);
}

TEST_CASE("table output renders pass lines") {
    CliRun r = run({"--table", "verify", "hecke-lattice", "--m", "3", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
}

TEST_CASE("hecke-functor and centralizer subcommands") {
    CliRun r = run({"verify", "hecke-functor", "--m", "2", "--n", "2", "--group",
                    "trivial", "--gset", "point"});
    CHECK(r.code == 0);
    CliRun c = run({"verify", "centralizer", "--gamma", "z", "--group", "z2",
                    "--n", "2"});
    CHECK(c.code == 0);
}

TEST_CASE("coefficient table file round trip through the cli") {
    std::string path = "/tmp/orbi_coeffs.json";
    {
        std::ofstream f(path);
        f << R"({"window":{"m_max":6,"k_abs":1},"entries":[[0,0,1],[1,1,-2],[2,0,3]]})";
    }
    CliRun r = run({"verify", "dmvv", "--coeffs", path, "--p", "2", "--q", "3",
                    "--y", "1"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
}

TEST_CASE("g-set json files load through the cli") {
    std::string path = "/tmp/orbi_gset.json";
    {
        std::ofstream f(path);
        // the regular action of Z_2, spelled out
        f << R"({"size":2,"action":[[0,1],[1,0]]})";
    }
    CliRun r = run({"euler", "--gamma", "z", "--group", "z2", "--gset", path});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["chi"] == 1);
}

TEST_CASE("budget exhaustion exits with code 3") {
    setenv("ORBICOUNT_BUDGET_SECS", "0.0001", 1);
    CliRun r = run({"subgroups", "--gamma", "free3", "--index", "6"});
    unsetenv("ORBICOUNT_BUDGET_SECS");
    CHECK(r.code == 3);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("series subcommand emits terms") {
    std::string path = "/tmp/orbi_coeffs2.json";
    {
        std::ofstream f(path);
        f << R"({"window":{"m_max":8,"k_abs":0},"entries":[[0,0,1]]})";
    }
    CliRun r = run({"series", "--coeffs", path, "--p", "4", "--q", "2", "--y", "0",
                    "--op", "product"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    bool found = false;
    for (const json& t : j["terms"])
        if (t["p"] == 4 && t["q"] == 0 && t["y"] == 0) {
            CHECK(t["c"] == "5");  // p(4)
            found = true;
        }
    CHECK(found);

    // both routes print the same expansion
    CliRun e = run({"series", "--coeffs", path, "--p", "4", "--q", "2", "--y", "0",
                    "--op", "exp"});
    CHECK(e.code == 0);
    CHECK(json::parse(e.out)["terms"] == j["terms"]);
}
