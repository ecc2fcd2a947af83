#include "orbi/wreath_bundle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace orbi {

namespace {

struct RhoCacheEntry {
    SubgroupClass subgroup;
    RhoOrbits orbits;
};

using RhoCache = std::map<std::string, RhoCacheEntry>;

std::string form_key(const std::vector<int>& form) {
    std::ostringstream os;
    for (int v : form) os << v << ",";
    return os.str();
}

long long hom_orbit_id(const RhoOrbits& ro, const Hom& rho) {
    auto it = std::lower_bound(ro.homs.begin(), ro.homs.end(), rho);
    if (it == ro.homs.end() || !(*it == rho))
        throw internal_error("extracted cocycle is not a homomorphism into G");
    return ro.orbit_of[it - ro.homs.begin()];
}

BundleDecomposition decompose_with_cache(const GammaSpec& gamma, const Hom& theta,
                                         const FiniteGroup& gn, const Budget& budget,
                                         RhoCache& cache) {
    if (!gn.is_wreath()) throw input_error("decomposition needs a wreath-mode group");
    if ((int)theta.images.size() != gamma.rank)
        throw input_error("theta image count does not match the rank of Gamma");
    if (gamma.kind == GammaSpec::Kind::presented)
        throw unsupported_error("bundle decomposition is not supported for presented groups");
    const FiniteGroup& g = gn.wreath_base();
    const int n = (int)gn.wreath_copies();
    const int k = gamma.rank;

    std::vector<WreathElement> wels;
    for (Elem im : theta.images) wels.push_back(gn.decode(im));
    std::vector<std::vector<int>> fwd(k), inv(k);
    for (int gi = 0; gi < k; ++gi) {
        fwd[gi] = wels[gi].perm;
        inv[gi] = perm_inverse(wels[gi].perm);
    }

    auto theta_of_word = [&](const Word& w) {
        return gn.decode(evaluate_word(w, theta.images, gn));
    };

    // Gamma-orbits on the n points
    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int p = 0; p < n; ++p) {
        if (orbit_of[p] >= 0) continue;
        int id = (int)orbits.size();
        std::vector<int> queue{p};
        orbit_of[p] = id;
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int gi = 0; gi < k; ++gi)
                for (int q : {fwd[gi][queue[qi]], inv[gi][queue[qi]]})
                    if (orbit_of[q] < 0) {
                        orbit_of[q] = id;
                        queue.push_back(q);
                    }
        std::sort(queue.begin(), queue.end());
        orbits.push_back(std::move(queue));
    }

    // per orbit: subgroup key, basepoint, and the cocycle rho
    std::map<std::pair<std::string, long long>, BundleSummand> merged;
    for (const std::vector<int>& pts : orbits) {
        budget.check("bundle decomposition");
        const int s = (int)pts.size();
        std::vector<int> local(n, -1);
        for (int i = 0; i < s; ++i) local[pts[i]] = i;
        std::vector<std::vector<int>> lf(k, std::vector<int>(s)), li(k, std::vector<int>(s));
        for (int gi = 0; gi < k; ++gi)
            for (int i = 0; i < s; ++i) {
                lf[gi][i] = local[fwd[gi][pts[i]]];
                li[gi][i] = local[inv[gi][pts[i]]];
            }

        std::string key;
        int base_orig = -1;  // basepoint as a point of {0..n-1}
        SubgroupClass subgroup;
        if (gamma.kind == GammaSpec::Kind::free_abelian) {
            // stabilizer lattice from cycle relations of the commuting action
            std::vector<std::array<long long, 3>> labels(s, {0, 0, 0});
            std::vector<char> seen(s, 0);
            seen[0] = 1;
            std::vector<int> queue{0};
            std::vector<std::array<long long, 3>> relations;
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int p = queue[qi];
                for (int gi = 0; gi < k; ++gi) {
                    int q = lf[gi][p];
                    std::array<long long, 3> cand = labels[p];
                    cand[gi] += 1;
                    if (!seen[q]) {
                        seen[q] = 1;
                        labels[q] = cand;
                        queue.push_back(q);
                    } else {
                        std::array<long long, 3> rel{};
                        for (int t = 0; t < k; ++t) rel[t] = cand[t] - labels[q][t];
                        relations.push_back(rel);
                    }
                }
            }
            SublatticeHNF hn = hnf_normalize(k, std::move(relations));
            if (hn.index() != s)
                throw internal_error("stabilizer lattice index does not match orbit size");
            subgroup = SubgroupClass::from_hnf(gamma, hn);
            key = "A" + hn.to_string();
            base_orig = pts[0];
        } else {
            std::vector<int> best;
            int best_i = 0;
            for (int i = 0; i < s; ++i) {
                std::vector<int> f = action_canonical_form(k, s, lf, li, i);
                if (best.empty() || f < best) {
                    best = std::move(f);
                    best_i = i;
                }
            }
            subgroup = SubgroupClass::from_action(gamma, lf, best_i);
            key = "F" + form_key(best);
            base_orig = pts[best_i];
        }

        auto it = cache.find(key);
        if (it == cache.end()) {
            RhoCacheEntry entry;
            entry.orbits = enumerate_rho_orbits(subgroup, g, budget);
            entry.subgroup = std::move(subgroup);
            it = cache.emplace(key, std::move(entry)).first;
        }
        const RhoCacheEntry& entry = it->second;

        // cocycle: the G-component at the basepoint of theta on each
        // stabilizer word
        Hom rho;
        for (const Word& w : schreier_generators(entry.subgroup)) {
            WreathElement we = theta_of_word(w);
            if (we.perm[base_orig] != base_orig)
                throw internal_error("stabilizer word does not fix the basepoint");
            rho.images.push_back(we.base[base_orig]);
        }
        long long oid = hom_orbit_id(entry.orbits, rho);

        auto mk = std::make_pair(key, oid);
        auto mit = merged.find(mk);
        if (mit == merged.end()) {
            BundleSummand sm;
            sm.subgroup = entry.subgroup;
            sm.rho = entry.orbits.classes[oid].rep;
            sm.multiplicity = 1;
            merged.emplace(mk, std::move(sm));
        } else {
            mit->second.multiplicity += 1;
        }
    }

    BundleDecomposition dec;
    dec.degree = n;
    long long degree_sum = 0;
    for (auto& [mk, sm] : merged) {
        degree_sum += sm.multiplicity * sm.subgroup.degree;
        dec.summands.push_back(std::move(sm));
    }
    if (degree_sum != n)
        throw internal_error("summand degrees do not add up to the wreath degree");
    return dec;
}

long long formula_with_cache(const BundleDecomposition& dec, const FiniteGroup& gn,
                             const Budget& budget, RhoCache& cache) {
    const FiniteGroup& g = gn.wreath_base();
    long long out = 1;
    for (const BundleSummand& sm : dec.summands) {
        std::string key;
        if (sm.subgroup.hnf)
            key = "A" + sm.subgroup.hnf->to_string();
        else
            key = "F" + form_key(sm.subgroup.pointed_canonical(0));
        auto it = cache.find(key);
        if (it == cache.end()) {
            RhoCacheEntry entry;
            entry.orbits = enumerate_rho_orbits(sm.subgroup, g, budget);
            entry.subgroup = sm.subgroup;
            it = cache.emplace(key, std::move(entry)).first;
        }
        long long oid = hom_orbit_id(it->second.orbits, sm.rho);
        long long aut = it->second.orbits.classes[oid].aut_order;
        for (long long t = 0; t < sm.multiplicity; ++t) out *= aut;
        for (long long t = 2; t <= sm.multiplicity; ++t) out *= t;
    }
    return out;
}

}  // namespace

BundleDecomposition decompose_theta(const GammaSpec& gamma, const Hom& theta,
                                    const FiniteGroup& gn, const Budget& budget) {
    RhoCache cache;
    return decompose_with_cache(gamma, theta, gn, budget, cache);
}

long long centralizer_order_formula(const BundleDecomposition& dec, const FiniteGroup& gn,
                                    const Budget& budget) {
    RhoCache cache;
    return formula_with_cache(dec, gn, budget, cache);
}

CentralizerReport verify_centralizer(const GammaSpec& gamma, const FiniteGroup& base,
                                     long long n, const CentralizerPolicy& policy,
                                     const Budget& budget, const GroupConfig& cfg) {
    FiniteGroup gn = wreath_product(base, n, cfg);
    RhoCache cache;
    CentralizerReport rep;

    auto run_one = [&](const Hom& theta, long long brute) {
        ++rep.checked;
        long long formula = 0;
        std::string note;
        try {
            BundleDecomposition dec = decompose_with_cache(gamma, theta, gn, budget, cache);
            formula = formula_with_cache(dec, gn, budget, cache);
        } catch (const internal_error& e) {
            note = e.what();
        }
        if (formula != brute || !note.empty()) {
            ++rep.failed;
            if (rep.failures.size() < 10) {
                std::ostringstream os;
                os << "theta=(";
                for (size_t i = 0; i < theta.images.size(); ++i) {
                    if (i) os << ",";
                    os << theta.images[i];
                }
                os << ") brute=" << brute << " formula=" << formula;
                if (!note.empty()) os << " [" << note << "]";
                rep.failures.push_back(os.str());
            }
        }
    };

    if (gamma.is_z()) {
        if (policy.exhaustive) {
            ConjClassTable t = conjugacy_classes(gn);
            for (Elem repx : t.representatives) {
                budget.check("centralizer verification");
                Hom theta{{repx}};
                run_one(theta, centralizer_order(gn, theta.images));
            }
        } else {
            std::mt19937_64 rng(policy.seed);
            for (long long i = 0; i < policy.samples; ++i) {
                Hom theta{{(Elem)(rng() % gn.order())}};
                run_one(theta, centralizer_order(gn, theta.images));
            }
        }
        return rep;
    }
    if (gamma.kind == GammaSpec::Kind::free_abelian && gamma.rank == 2) {
        if (policy.exhaustive) {
            for (Elem a = 0; a < gn.order(); ++a) {
                budget.check("centralizer verification");
                std::vector<Elem> ca = centralizer(gn, std::vector<Elem>{a});
                for (Elem b : ca) {
                    long long brute = 0;
                    for (Elem x : ca)
                        if (gn.commutes(x, b)) ++brute;
                    run_one(Hom{{a, b}}, brute);
                }
            }
        } else {
            std::mt19937_64 rng(policy.seed);
            for (long long i = 0; i < policy.samples; ++i) {
                Elem a = (Elem)(rng() % gn.order());
                std::vector<Elem> ca = centralizer(gn, std::vector<Elem>{a});
                Elem b = ca[rng() % ca.size()];
                long long brute = 0;
                for (Elem x : ca)
                    if (gn.commutes(x, b)) ++brute;
                run_one(Hom{{a, b}}, brute);
            }
        }
        return rep;
    }
    if (gamma.kind == GammaSpec::Kind::free) {
        std::vector<Hom> homs;
        if (policy.exhaustive) {
            homs = enumerate_homs(gamma, gn, budget);
        } else {
            std::mt19937_64 rng(policy.seed);
            for (long long i = 0; i < policy.samples; ++i) {
                Hom h;
                for (int j = 0; j < gamma.rank; ++j)
                    h.images.push_back((Elem)(rng() % gn.order()));
                homs.push_back(std::move(h));
            }
        }
        for (const Hom& theta : homs) {
            budget.check("centralizer verification");
            run_one(theta, centralizer_order(gn, theta.images));
        }
        return rep;
    }
    throw unsupported_error("centralizer verification needs free or free abelian Gamma");
}

}  // namespace orbi
