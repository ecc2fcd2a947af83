#include "orbi/homspace.hpp"

#include <algorithm>
#include <functional>

namespace orbi {

namespace {

// All tuples (images of `rank` generators) satisfying `admit`, lexicographic.
std::vector<Hom> enumerate_tuples(int rank, const FiniteGroup& g,
                                  const std::function<bool(std::span<const Elem>)>& admit,
                                  const Budget& budget) {
    std::vector<Hom> out;
    std::vector<Elem> cur(rank, 0);
    long long steps = 0;
    std::function<void(int)> rec = [&](int i) {
        budget.check_every(++steps, 1 << 16, "hom enumeration");
        if (i == rank) {
            if (admit(cur)) out.push_back(Hom{cur});
            return;
        }
        for (Elem x = 0; x < g.order(); ++x) {
            cur[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// Commuting tuples, walking centralizer chains instead of the full product.
std::vector<Hom> enumerate_commuting_tuples(int rank, const FiniteGroup& g,
                                            const Budget& budget) {
    std::vector<Hom> out;
    std::vector<Elem> cur(rank);
    long long steps = 0;
    std::function<void(int, const std::vector<Elem>&)> rec = [&](int i,
                                                                 const std::vector<Elem>& pool) {
        budget.check_every(++steps, 1 << 12, "hom enumeration");
        if (i == rank) {
            out.push_back(Hom{cur});
            return;
        }
        for (Elem x : pool) {
            cur[i] = x;
            if (i + 1 == rank) {
                out.push_back(Hom{cur});
            } else {
                std::vector<Elem> next;
                next.reserve(pool.size());
                for (Elem y : pool)
                    if (g.commutes(x, y)) next.push_back(y);
                rec(i + 1, next);
            }
        }
    };
    std::vector<Elem> all(g.order());
    for (Elem x = 0; x < g.order(); ++x) all[x] = x;
    if (rank == 0) return {Hom{}};
    rec(0, all);
    std::sort(out.begin(), out.end());
    return out;
}

double pow_ll(long long base, int e) {
    double v = 1;
    for (int i = 0; i < e; ++i) v *= (double)base;
    return v;
}

}  // namespace

std::vector<Hom> enumerate_homs(const GammaSpec& gamma, const FiniteGroup& g,
                                const Budget& budget) {
    if (pow_ll(g.order(), gamma.rank) > 4e9)
        throw budget_error("hom enumeration (search space too large)");
    switch (gamma.kind) {
        case GammaSpec::Kind::free: {
            if (gamma.rank == 1) {
                std::vector<Hom> out;
                for (Elem x = 0; x < g.order(); ++x) out.push_back(Hom{{x}});
                return out;
            }
            return enumerate_tuples(gamma.rank, g,
                                    [](std::span<const Elem>) { return true; }, budget);
        }
        case GammaSpec::Kind::free_abelian:
            if (gamma.rank == 1) {
                std::vector<Hom> out;
                for (Elem x = 0; x < g.order(); ++x) out.push_back(Hom{{x}});
                return out;
            }
            return enumerate_commuting_tuples(gamma.rank, g, budget);
        case GammaSpec::Kind::presented:
            return enumerate_tuples(
                gamma.rank, g,
                [&](std::span<const Elem> images) { return is_hom(images, gamma, g); },
                budget);
    }
    throw input_error("unknown gamma kind");
}

std::vector<HomClass> hom_classes(const std::vector<Hom>& homs, const FiniteGroup& g) {
    std::vector<Hom> sorted = homs;
    std::sort(sorted.begin(), sorted.end());
    auto index_of = [&](const Hom& h) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), h);
        if (it == sorted.end() || !(*it == h))
            throw input_error("hom list is not closed under conjugation");
        return (long long)(it - sorted.begin());
    };
    std::vector<int> cls(sorted.size(), -1);
    std::vector<HomClass> out;
    std::vector<long long> queue;
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (cls[i] >= 0) continue;
        int k = (int)out.size();
        queue.clear();
        queue.push_back((long long)i);
        cls[i] = k;
        long long size = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            const Hom& cur = sorted[queue[qi]];
            for (Elem a : g.generators()) {
                Hom moved = apply_conj(a, cur, g);
                long long j = index_of(moved);
                if (cls[j] < 0) {
                    cls[j] = k;
                    ++size;
                    queue.push_back(j);
                }
            }
        }
        HomClass hc;
        hc.rep = sorted[i];
        hc.class_size = size;
        hc.centralizer = centralizer_of_hom(g, sorted[i]);
        out.push_back(std::move(hc));
    }
    for (const HomClass& hc : out)
        if (hc.class_size * (long long)hc.centralizer.size() != g.order())
            throw internal_error("orbit-stabilizer mismatch in hom classes");
    return out;
}

std::vector<Hom> enumerate_subgroup_homs(const SubgroupClass& h, const FiniteGroup& g,
                                         const Budget& budget) {
    GammaSpec sub_gamma;
    int rank;
    switch (h.gamma.kind) {
        case GammaSpec::Kind::free_abelian:
            rank = h.gamma.rank;
            sub_gamma = GammaSpec::free_abelian(rank);
            break;
        case GammaSpec::Kind::free:
            rank = 1 + h.degree * (h.gamma.rank - 1);
            sub_gamma = GammaSpec::free(rank);
            break;
        case GammaSpec::Kind::presented:
            throw unsupported_error(
                "subgroup hom spaces are not supported for presented groups");
        default:
            throw input_error("unknown gamma kind");
    }
    return enumerate_homs(sub_gamma, g, budget);
}

DeckRewrites deck_rewrites(const SubgroupClass& h) {
    DeckRewrites dr;
    dr.deck = deck_group(h);
    dr.schreier = schreier_generators(h);
    dr.rewritten.resize(dr.deck.points.size());
    for (size_t u = 0; u < dr.deck.points.size(); ++u) {
        const Word& rep = h.coset_reps[dr.deck.points[u]];
        for (const Word& s : dr.schreier)
            dr.rewritten[u].push_back(conjugate_into_generators(h, rep, s));
    }
    return dr;
}

namespace {

Elem evaluate_schreier_word(const Word& w, const Hom& rho, const FiniteGroup& g) {
    Elem acc = g.identity();
    for (int x : w.letters) {
        int idx = std::abs(x) - 1;
        Elem im = x > 0 ? rho.images[idx] : g.inv(rho.images[idx]);
        acc = g.mult(acc, im);
    }
    return acc;
}

}  // namespace

Hom apply_deck(const DeckRewrites& dr, int deck_index, const Hom& rho, const FiniteGroup& g) {
    Hom out;
    out.images.reserve(rho.images.size());
    for (const Word& w : dr.rewritten[deck_index])
        out.images.push_back(evaluate_schreier_word(w, rho, g));
    return out;
}

Hom apply_conj(Elem x, const Hom& rho, const FiniteGroup& g) {
    Hom out;
    out.images.reserve(rho.images.size());
    Elem xi = g.inv(x);
    for (Elem im : rho.images) out.images.push_back(g.mult(g.mult(x, im), xi));
    return out;
}

std::vector<Elem> centralizer_of_hom(const FiniteGroup& g, const Hom& rho) {
    return centralizer(g, rho.images);
}

RhoOrbits enumerate_rho_orbits(const SubgroupClass& h, const FiniteGroup& g,
                               const Budget& budget) {
    RhoOrbits ro;
    ro.homs = enumerate_subgroup_homs(h, g, budget);
    DeckRewrites dr = deck_rewrites(h);
    const bool abelian = h.gamma.kind == GammaSpec::Kind::free_abelian;

    auto index_of = [&](const Hom& x) {
        auto it = std::lower_bound(ro.homs.begin(), ro.homs.end(), x);
        if (it == ro.homs.end() || !(*it == x))
            throw internal_error("orbit move left the hom list");
        return (long long)(it - ro.homs.begin());
    };

    ro.orbit_of.assign(ro.homs.size(), -1);
    std::vector<long long> queue;
    for (size_t i = 0; i < ro.homs.size(); ++i) {
        if (ro.orbit_of[i] >= 0) continue;
        int k = (int)ro.classes.size();
        queue.clear();
        queue.push_back((long long)i);
        ro.orbit_of[i] = k;
        long long size = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            budget.check_every((long long)qi, 1 << 14, "rho orbit closure");
            const Hom cur = ro.homs[queue[qi]];
            for (size_t u = 0; u < dr.deck.points.size(); ++u) {
                Hom moved = apply_deck(dr, (int)u, cur, g);
                if (abelian && !(moved == cur))
                    throw internal_error(
                        "deck action over abelian Gamma must fix every hom");
                long long j = index_of(moved);
                if (ro.orbit_of[j] < 0) {
                    ro.orbit_of[j] = k;
                    ++size;
                    queue.push_back(j);
                }
            }
            for (Elem a : g.generators()) {
                long long j = index_of(apply_conj(a, cur, g));
                if (ro.orbit_of[j] < 0) {
                    ro.orbit_of[j] = k;
                    ++size;
                    queue.push_back(j);
                }
            }
        }
        RhoClass rc;
        rc.rep = ro.homs[i];
        rc.orbit_size = size;
        rc.cg_rho_order = (long long)centralizer(g, rc.rep.images).size();
        // G-orbit of the representative, for the isotropy count below
        std::vector<char> in_g_orbit(ro.homs.size(), 0);
        std::vector<long long> gq{(long long)i};
        in_g_orbit[i] = 1;
        for (size_t qi = 0; qi < gq.size(); ++qi) {
            for (Elem a : g.generators()) {
                long long j = index_of(apply_conj(a, ro.homs[gq[qi]], g));
                if (!in_g_orbit[j]) {
                    in_g_orbit[j] = 1;
                    gq.push_back(j);
                }
            }
        }
        rc.n_rho_index = 0;
        for (size_t u = 0; u < dr.deck.points.size(); ++u)
            if (in_g_orbit[index_of(apply_deck(dr, (int)u, rc.rep, g))]) ++rc.n_rho_index;
        rc.aut_order = rc.cg_rho_order * rc.n_rho_index;
        ro.classes.push_back(std::move(rc));
    }

    long long total = 0;
    for (const RhoClass& rc : ro.classes) total += rc.orbit_size;
    if (total != (long long)ro.homs.size())
        throw internal_error("rho orbit sizes do not sum to |Hom(H,G)|");
    return ro;
}

std::vector<RhoClass> enumerate_rho_classes(const SubgroupClass& h, const FiniteGroup& g,
                                            const Budget& budget) {
    return enumerate_rho_orbits(h, g, budget).classes;
}

std::vector<Elem> pi_g_of_t_rho(const DeckRewrites& dr, const Hom& rho,
                                const FiniteGroup& g) {
    std::vector<char> keep(g.order(), 0);
    std::vector<Elem> queue;
    for (size_t u = 0; u < dr.deck.points.size(); ++u) {
        Hom moved = apply_deck(dr, (int)u, rho, g);
        for (Elem x = 0; x < g.order(); ++x) {
            if (keep[x]) continue;
            if (apply_conj(x, moved, g) == rho) {
                keep[x] = 1;
                queue.push_back(x);
            }
        }
    }
    // modifying u inside its H-coset multiplies the solutions by rho-images
    // on the right; close under that
    for (size_t qi = 0; qi < queue.size(); ++qi)
        for (Elem im : rho.images) {
            Elem y = g.mult(queue[qi], im);
            if (!keep[y]) {
                keep[y] = 1;
                queue.push_back(y);
            }
        }
    std::vector<Elem> out;
    for (Elem x = 0; x < g.order(); ++x)
        if (keep[x]) out.push_back(x);
    return out;
}

std::vector<Elem> pi_g_of_t_rho(const SubgroupClass& h, const Hom& rho,
                                const FiniteGroup& g) {
    DeckRewrites dr = deck_rewrites(h);
    return pi_g_of_t_rho(dr, rho, g);
}

}  // namespace orbi
