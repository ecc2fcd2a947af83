#include "orbi/cli.hpp"

#include <chrono>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "orbi/acceptance.hpp"
#include "orbi/lattice.hpp"
#include "orbi/wreath_bundle.hpp"

namespace orbi {

namespace {

json pqy_to_json(const PQYSeries& s) {
    json terms = json::array();
    for (int p = 0; p <= s.P; ++p)
        for (int q = 0; q <= s.Q; ++q)
            for (int y = -s.Y; y <= s.Y; ++y) {
                const Rational& v = s.at(p, q, y);
                if (v.is_zero()) continue;
                json t;
                t["p"] = p;
                t["q"] = q;
                t["y"] = y;
                t["c"] = v.to_string();
                terms.push_back(std::move(t));
            }
    return terms;
}

json images_to_json(const Hom& h) {
    json a = json::array();
    for (Elem x : h.images) a.push_back(x);
    return a;
}

json subgroup_to_json(const SubgroupClass& h, long long deck_order) {
    json j;
    j["index"] = h.degree;
    if (h.hnf) {
        json rows = json::array();
        for (int i = 0; i < h.hnf->dim; ++i) {
            json row = json::array();
            for (int c = 0; c < h.hnf->dim; ++c) row.push_back(h.hnf->basis[i][c]);
            rows.push_back(std::move(row));
        }
        j["hnf"] = std::move(rows);
    }
    json act = json::array();
    for (const auto& row : h.action) act.push_back(row);
    j["action"] = std::move(act);
    j["deck_order"] = deck_order;
    return j;
}

struct Output {
    bool table = false;
    bool timings = false;
    int emit(const VerifyReport& rep, std::ostream& out) {
        if (table)
            out << rep.to_table();
        else
            out << rep.to_json(timings).dump(2) << "\n";
        return rep.pass() ? 0 : 2;
    }
    void emit_value(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         t0)
            .count();
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"orbicount: finite-scale verifier for wreath-product centralizers, "
                 "orbifold Euler characteristic generating functions, and Hecke "
                 "operator identities"};
    app.require_subcommand(1);
    Output output;
    app.add_flag("--table", output.table, "aligned text output instead of JSON");
    bool json_flag = false;
    app.add_flag("--json", json_flag, "JSON output (the default)");
    app.add_flag("--timings", output.timings, "include wall-clock times in JSON output");

    std::string gamma_arg, group_arg, gset_arg = "point", coeffs_arg;
    long long index_arg = 1, n_arg = 1, m_arg = 1, samples = 100;
    long long max_degree = 3;
    int p_arg = 4, q_arg = 3, y_arg = 2;
    long long tables = 20;
    unsigned long long seed = 0;
    bool exhaustive_flag = false;
    long long subgroup_index = 0;
    long long hecke_r = 0;
    long long max_group_order = 1'000'000;
    std::string op = "product";
    app.add_option("--max-group-order", max_group_order,
                   "cap on constructed group orders (default 10^6)");

    CLI::App* subgroups = app.add_subcommand("subgroups", "enumerate subgroup classes");
    subgroups->add_option("--gamma", gamma_arg, "Gamma (name or JSON file)")->required();
    subgroups->add_option("--index", index_arg, "subgroup index")->required();

    CLI::App* homs = app.add_subcommand("homs", "enumerate hom classes");
    homs->add_option("--gamma", gamma_arg)->required();
    homs->add_option("--group", group_arg)->required();
    homs->add_option("--subgroup-index", subgroup_index,
                     "classify Hom(H,G) over the subgroup classes of this index");

    long long euler_hecke = 0;
    CLI::App* euler = app.add_subcommand("euler", "orbifold Euler characteristics");
    euler->add_option("--gamma", gamma_arg)->required();
    euler->add_option("--group", group_arg)->required();
    euler->add_option("--gset", gset_arg);
    euler->add_option("--hecke", euler_hecke,
                      "also evaluate the index-n Hecke operator on chi");

    CLI::App* series = app.add_subcommand("series", "series evaluations for a table");
    series->add_option("--coeffs", coeffs_arg)->required();
    series->add_option("--p", p_arg);
    series->add_option("--q", q_arg);
    series->add_option("--y", y_arg);
    series->add_option("--op", op, "product | exp");
    series->add_option("--hecke", hecke_r, "apply T(r) instead");

    CLI::App* verify = app.add_subcommand("verify", "run identity checks");
    verify->require_subcommand(1);

    CLI::App* v_thc = verify->add_subcommand("theorem-c", "generating-function identity");
    v_thc->add_option("--group", group_arg)->required();
    v_thc->add_option("--gset", gset_arg);
    v_thc->add_option("--gamma", gamma_arg)->required();
    v_thc->add_option("--max-degree", max_degree);

    CLI::App* v_cent = verify->add_subcommand("centralizer", "wreath centralizer structure");
    v_cent->add_option("--gamma", gamma_arg)->required();
    v_cent->add_option("--group", group_arg)->required();
    v_cent->add_option("--n", n_arg)->required();
    v_cent->add_flag("--exhaustive", exhaustive_flag);
    CLI::Option* opt_samples = v_cent->add_option("--samples", samples);
    v_cent->add_option("--seed", seed);

    CLI::App* v_hl = verify->add_subcommand("hecke-lattice", "classical lattice identity");
    v_hl->add_option("--m", m_arg)->required();
    v_hl->add_option("--n", n_arg)->required();

    CLI::App* v_hf = verify->add_subcommand("hecke-functor", "counting-functor identity");
    v_hf->add_option("--m", m_arg)->required();
    v_hf->add_option("--n", n_arg)->required();
    v_hf->add_option("--group", group_arg)->required();
    v_hf->add_option("--gset", gset_arg);

    CLI::App* v_dmvv = verify->add_subcommand("dmvv", "product vs Hecke exponential");
    v_dmvv->add_option("--coeffs", coeffs_arg);
    v_dmvv->add_option("--p", p_arg);
    v_dmvv->add_option("--q", q_arg);
    v_dmvv->add_option("--y", y_arg);
    v_dmvv->add_option("--tables", tables);
    v_dmvv->add_option("--seed", seed);

    CLI::App* v_all = verify->add_subcommand("all", "the full acceptance suite");

    std::vector<std::string> argv_storage = args;
    std::vector<char*> argv;
    std::string prog = "orbicount";
    argv.push_back(prog.data());
    for (std::string& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n" << app.help();
        return 1;
    }

    Budget budget = Budget::from_env(300.0);
    GroupConfig cfg;
    cfg.max_order = max_group_order;

    try {
        Timer timer;
        if (subgroups->parsed()) {
            GammaSpec gamma = load_gamma_spec(gamma_arg);
            json list = json::array();
            for_each_subgroup_class(gamma, (int)index_arg, budget,
                                    [&](SubgroupClass&& h, long long deck) {
                                        list.push_back(subgroup_to_json(h, deck));
                                    });
            json j;
            j["command"] = "subgroups";
            j["gamma"] = gamma_to_json(gamma);
            j["index"] = index_arg;
            j["count"] = list.size();
            j["classes"] = std::move(list);
            output.emit_value(j, out);
            return 0;
        }
        if (homs->parsed()) {
            GammaSpec gamma = load_gamma_spec(gamma_arg);
            FiniteGroup g = build_group(load_group_spec(group_arg), cfg);
            json j;
            j["command"] = "homs";
            j["gamma"] = gamma_to_json(gamma);
            j["group_order"] = g.order();
            if (subgroup_index > 0) {
                json per_class = json::array();
                for (const SubgroupClass& h :
                     enumerate_subgroup_classes(gamma, (int)subgroup_index, budget)) {
                    json hj = subgroup_to_json(h, deck_group(h).order());
                    json rc = json::array();
                    for (const RhoClass& r : enumerate_rho_classes(h, g, budget)) {
                        json rj;
                        rj["rho"] = images_to_json(r.rep);
                        rj["orbit_size"] = r.orbit_size;
                        rj["centralizer_order"] = r.cg_rho_order;
                        rj["normalizer_isotropy_index"] = r.n_rho_index;
                        rj["aut_order"] = r.aut_order;
                        rc.push_back(std::move(rj));
                    }
                    hj["rho_classes"] = std::move(rc);
                    per_class.push_back(std::move(hj));
                }
                j["subgroup_index"] = subgroup_index;
                j["subgroups"] = std::move(per_class);
            } else {
                std::vector<Hom> hs = enumerate_homs(gamma, g, budget);
                json cls = json::array();
                for (const HomClass& hc : hom_classes(hs, g)) {
                    json cj;
                    cj["rep"] = images_to_json(hc.rep);
                    cj["class_size"] = hc.class_size;
                    cj["centralizer_order"] = (long long)hc.centralizer.size();
                    cls.push_back(std::move(cj));
                }
                j["hom_count"] = hs.size();
                j["class_count"] = cls.size();
                j["classes"] = std::move(cls);
            }
            output.emit_value(j, out);
            return 0;
        }
        if (euler->parsed()) {
            GammaSpec gamma = load_gamma_spec(gamma_arg);
            FiniteGroup g = build_group(load_group_spec(group_arg), cfg);
            FinGSet m = load_gset(gset_arg, g);
            json j;
            j["command"] = "euler";
            j["gamma"] = gamma_to_json(gamma);
            j["group_order"] = g.order();
            j["gset_size"] = m.size();
            j["chi"] = chi_gamma(m, gamma, budget);
            j["chi_burnside"] = chi_gamma_burnside(m, gamma, budget);
            if (euler_hecke > 0) {
                j["hecke_n"] = euler_hecke;
                j["hecke_chi"] = hecke_chi(m, gamma, (int)euler_hecke, budget);
            }
            output.emit_value(j, out);
            return 0;
        }
        if (series->parsed()) {
            CoeffTable c = load_coeff_table(coeffs_arg);
            json j;
            j["command"] = "series";
            if (hecke_r > 0) {
                j["op"] = "hecke";
                j["r"] = hecke_r;
                j["terms"] = pqy_to_json(jacobi_hecke(c, hecke_r, q_arg, y_arg));
            } else if (op == "product") {
                j["op"] = "product";
                j["terms"] = pqy_to_json(dmvv_product(c, p_arg, q_arg, y_arg));
            } else if (op == "exp") {
                j["op"] = "exp";
                j["terms"] = pqy_to_json(dmvv_exp(c, p_arg, q_arg, y_arg));
            } else {
                err << "unknown --op: " << op << "\n";
                return 1;
            }
            output.emit_value(j, out);
            return 0;
        }
        if (v_thc->parsed()) {
            GammaSpec gamma = load_gamma_spec(gamma_arg);
            FiniteGroup g = build_group(load_group_spec(group_arg), cfg);
            FinGSet m = load_gset(gset_arg, g);
            EulerReport er = verify_theorem_c(m, gamma, (int)max_degree, budget, cfg);
            VerifyReport rep;
            rep.command = "verify theorem-c";
            for (int n = 0; n <= er.max_degree; ++n) {
                CheckRecord r;
                r.name = "degree-" + std::to_string(n);
                r.identity = "symmetric-orbifold-generating-function";
                r.inputs = {{"group", group_arg}, {"gset", gset_arg}, {"gamma", gamma_arg}};
                r.lhs = er.lhs[n];
                r.rhs = er.rhs[n].to_string();
                r.pass = BigInt(er.lhs[n]) == er.rhs[n];
                rep.checks.push_back(std::move(r));
            }
            rep.wall_ms = timer.ms();
            return output.emit(rep, out);
        }
        if (v_cent->parsed()) {
            GammaSpec gamma = load_gamma_spec(gamma_arg);
            FiniteGroup g = build_group(load_group_spec(group_arg), cfg);
            CentralizerPolicy policy;
            policy.exhaustive = exhaustive_flag || opt_samples->count() == 0;
            policy.samples = samples;
            policy.seed = seed;
            CentralizerReport cr = verify_centralizer(gamma, g, n_arg, policy, budget, cfg);
            VerifyReport rep;
            rep.command = "verify centralizer";
            CheckRecord r;
            r.name = "centralizer-orders";
            r.identity = "wreath-centralizer-structure";
            r.inputs = {{"gamma", gamma_arg}, {"group", group_arg}, {"n", n_arg},
                        {"checked", cr.checked}};
            r.lhs = cr.checked - cr.failed;
            r.rhs = cr.checked;
            r.pass = cr.pass();
            rep.checks.push_back(std::move(r));
            for (const std::string& f : cr.failures) {
                CheckRecord fr;
                fr.name = "failure";
                fr.identity = "wreath-centralizer-structure";
                fr.inputs = f;
                fr.pass = false;
                rep.checks.push_back(std::move(fr));
            }
            rep.wall_ms = timer.ms();
            return output.emit(rep, out);
        }
        if (v_hl->parsed()) {
            LatticeHeckeReport lr = verify_lattice_hecke(m_arg, n_arg);
            VerifyReport rep;
            rep.command = "verify hecke-lattice";
            CheckRecord r;
            r.name = "multiset-equality";
            r.identity = "lattice-hecke-identity";
            r.inputs = {{"m", m_arg}, {"n", n_arg}};
            r.lhs = lr.lhs.total();
            r.rhs = lr.rhs.total();
            r.pass = lr.pass;
            rep.checks.push_back(std::move(r));
            rep.wall_ms = timer.ms();
            return output.emit(rep, out);
        }
        if (v_hf->parsed()) {
            FiniteGroup g = build_group(load_group_spec(group_arg), cfg);
            FinGSet m = load_gset(gset_arg, g);
            FunctorHeckeReport fr = verify_functor_hecke(m, m_arg, n_arg, budget);
            VerifyReport rep;
            rep.command = "verify hecke-functor";
            CheckRecord r;
            r.name = "cardinality-equality";
            r.identity = "functor-hecke-identity";
            r.inputs = {{"m", m_arg}, {"n", n_arg}, {"group", group_arg}, {"gset", gset_arg}};
            r.lhs = fr.lhs;
            r.rhs = fr.rhs;
            r.pass = fr.pass;
            rep.checks.push_back(std::move(r));
            rep.wall_ms = timer.ms();
            return output.emit(rep, out);
        }
        if (v_dmvv->parsed()) {
            VerifyReport rep;
            rep.command = "verify dmvv";
            auto one_check = [&](const CoeffTable& c, const std::string& label) {
                PQYSeries prod = dmvv_product(c, p_arg, q_arg, y_arg);
                PQYSeries expo = dmvv_exp(c, p_arg, q_arg, y_arg);
                CheckRecord r;
                r.name = label;
                r.identity = "dmvv-product-exp-equivalence";
                r.inputs = {{"p", p_arg}, {"q", q_arg}, {"y", y_arg}};
                r.pass = prod == expo && prod.integral();
                r.lhs = pqy_to_json(prod);
                r.rhs = pqy_to_json(expo);
                rep.checks.push_back(std::move(r));
            };
            if (!coeffs_arg.empty()) {
                one_check(load_coeff_table(coeffs_arg), "table");
            } else {
                std::mt19937_64 rng(seed);
                for (long long t = 0; t < tables; ++t) {
                    CoeffTable c;
                    c.m_max = (long long)p_arg * q_arg;
                    c.k_abs = y_arg;
                    for (long long m = 0; m <= c.m_max; ++m)
                        for (long long k = -c.k_abs; k <= c.k_abs; ++k) {
                            long long v = (long long)(rng() % 7) - 3;
                            if (v != 0) c.set(m, k, v);
                        }
                    one_check(c, "seeded-table-" + std::to_string(t));
                }
            }
            rep.wall_ms = timer.ms();
            return output.emit(rep, out);
        }
        if (v_all->parsed()) {
            AcceptanceResult res = run_acceptance(output.table ? &out : nullptr, budget);
            VerifyReport rep = acceptance_report(res);
            if (output.table)
                out << (res.pass() ? "PASS" : "FAIL") << " (" << res.criteria.size()
                    << " criteria)\n";
            else
                output.emit_value(rep.to_json(output.timings), out);
            return res.pass() ? 0 : 2;
        }
    } catch (const budget_error& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // json shape errors and the like
        err << "input error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand executed\n";
    return 1;
}

}  // namespace orbi
