#include "orbi/euler.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "orbi/series.hpp"

namespace orbi {

FinGSet::FinGSet(const FiniteGroup& g, std::vector<std::vector<long long>> table)
    : GSetAction(g, table.empty() ? 0 : (long long)table[0].size()),
      table_(std::move(table)) {
    if ((long long)table_.size() != g.order())
        throw input_error("action table needs one row per group element");
    const long long m = size();
    for (const auto& row : table_) {
        if ((long long)row.size() != m) throw input_error("ragged action table");
        for (long long x : row)
            if (x < 0 || x >= m) throw input_error("action image out of range");
    }
    for (long long x = 0; x < m; ++x)
        if (table_[g.identity()][x] != x)
            throw input_error("identity must act as the identity map");
    // action axiom, checked exhaustively
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b) {
            Elem ab = g.mult(a, b);
            for (long long x = 0; x < m; ++x)
                if (table_[ab][x] != table_[a][table_[b][x]])
                    throw input_error("action is not compatible with the group law");
        }
}

FinGSet FinGSet::point(const FiniteGroup& g) {
    std::vector<std::vector<long long>> t(g.order(), std::vector<long long>{0});
    return FinGSet(g, std::move(t));
}

FinGSet FinGSet::regular(const FiniteGroup& g) {
    std::vector<std::vector<long long>> t(g.order(), std::vector<long long>(g.order()));
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem x = 0; x < g.order(); ++x) t[a][x] = g.mult(a, x);
    return FinGSet(g, std::move(t));
}

FinGSet FinGSet::disjoint_union(const FinGSet& a, const FinGSet& b) {
    if (&a.group() != &b.group())
        throw input_error("disjoint union needs actions of the same group");
    long long na = a.size();
    std::vector<std::vector<long long>> t(a.group().order());
    for (Elem g = 0; g < a.group().order(); ++g) {
        t[g].resize(na + b.size());
        for (long long x = 0; x < na; ++x) t[g][x] = a.act(g, x);
        for (long long x = 0; x < b.size(); ++x) t[g][na + x] = na + b.act(g, x);
    }
    return FinGSet(a.group(), std::move(t));
}

namespace {

long long power_size(long long base, long long e) {
    long long v = 1;
    for (long long i = 0; i < e; ++i) v *= base;
    return v;
}

}  // namespace

PowerAction::PowerAction(const FiniteGroup& wreath, const FinGSet& base)
    : GSetAction(wreath, wreath.is_wreath()
                             ? power_size(base.size(), wreath.wreath_copies())
                             : 1),
      base_(&base) {
    if (!wreath.is_wreath() && wreath.order() != 1)
        throw input_error("power action needs a wreath-mode group (or the trivial group)");
}

long long PowerAction::act(Elem w, long long x) const {
    if (!group().is_wreath()) return x;
    return wreath_action(group(), w, x, base_->size(), base_->table());
}

std::vector<long long> fixed_set(const GSetAction& m, std::span<const Elem> elements) {
    std::vector<long long> out;
    for (long long x = 0; x < m.size(); ++x) {
        bool ok = true;
        for (Elem g : elements)
            if (m.act(g, x) != x) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return out;
}

long long orbit_count_on(const GSetAction& m, const std::vector<long long>& subset,
                         std::span<const Elem> elements) {
    std::vector<long long> parent(subset.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long long(long long)> find = [&](long long i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    auto index_of = [&](long long x) {
        auto it = std::lower_bound(subset.begin(), subset.end(), x);
        if (it == subset.end() || *it != x)
            throw internal_error("orbit move left the invariant subset");
        return (long long)(it - subset.begin());
    };
    long long orbits = (long long)subset.size();
    for (size_t i = 0; i < subset.size(); ++i)
        for (Elem g : elements) {
            long long j = index_of(m.act(g, subset[i]));
            long long ri = find((long long)i), rj = find(j);
            if (ri != rj) {
                parent[ri] = rj;
                --orbits;
            }
        }
    return orbits;
}

long long orbit_count(const GSetAction& m, std::span<const Elem> elements) {
    std::vector<long long> all(m.size());
    std::iota(all.begin(), all.end(), 0);
    return orbit_count_on(m, all, elements);
}

namespace {

// chi contribution of one hom class: the orbit count of its centralizer on
// the fixed set of its image.
long long class_contribution(const GSetAction& m, const std::vector<Elem>& images,
                             const std::vector<Elem>& cent) {
    if (m.size() == 1) return 1;
    std::vector<long long> fixed = fixed_set(m, images);
    if (fixed.empty()) return 0;
    return orbit_count_on(m, fixed, cent);
}

// Conjugacy classes of the subgroup given by `elems` (sorted element list),
// as representatives; conjugation within the subgroup.
std::vector<Elem> subgroup_class_reps(const FiniteGroup& g, const std::vector<Elem>& elems) {
    std::vector<char> done(elems.size(), 0);
    std::vector<Elem> reps;
    auto index_of = [&](Elem x) {
        auto it = std::lower_bound(elems.begin(), elems.end(), x);
        if (it == elems.end() || *it != x)
            throw internal_error("conjugation left the subgroup");
        return (long long)(it - elems.begin());
    };
    for (size_t i = 0; i < elems.size(); ++i) {
        if (done[i]) continue;
        reps.push_back(elems[i]);
        // orbit of elems[i] under conjugation by the whole subgroup
        std::vector<long long> queue{(long long)i};
        done[i] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            Elem x = elems[queue[qi]];
            for (Elem a : elems) {
                long long j = index_of(g.conj(a, x));
                if (!done[j]) {
                    done[j] = 1;
                    queue.push_back(j);
                }
            }
        }
    }
    return reps;
}

}  // namespace

long long chi_gamma(const GSetAction& m, const GammaSpec& gamma, const Budget& budget) {
    const FiniteGroup& g = m.group();
    // rank-1 Gamma: hom classes are exactly conjugacy classes, which stay
    // cheap even for the large structural groups
    if (gamma.is_z()) {
        ConjClassTable t = conjugacy_classes(g);
        if (m.size() == 1) return (long long)t.representatives.size();
        long long total = 0;
        for (Elem rep : t.representatives) {
            std::vector<Elem> one{rep};
            std::vector<Elem> cent = centralizer(g, one);
            total += class_contribution(m, one, cent);
        }
        return total;
    }
    if (gamma.kind == GammaSpec::Kind::free_abelian && gamma.rank == 2) {
        // commuting-pair walk: classes of pairs (a, b) stratify over classes
        // of a, with b ranging over classes of the centralizer of a
        ConjClassTable t = conjugacy_classes(g);
        long long total = 0;
        for (Elem a : t.representatives) {
            budget.check("chi enumeration");
            std::vector<Elem> ca = centralizer(g, std::vector<Elem>{a});
            for (Elem b : subgroup_class_reps(g, ca)) {
                std::vector<Elem> images{a, b};
                if (m.size() == 1) {
                    ++total;
                    continue;
                }
                std::vector<Elem> cab;
                for (Elem x : ca)
                    if (g.commutes(x, b)) cab.push_back(x);
                total += class_contribution(m, images, cab);
            }
        }
        return total;
    }
    std::vector<Hom> homs = enumerate_homs(gamma, g, budget);
    long long total = 0;
    for (const HomClass& hc : hom_classes(homs, g))
        total += class_contribution(m, hc.rep.images, hc.centralizer);
    return total;
}

namespace {

long long fixed_count_with(const GSetAction& m, std::vector<Elem>& images, Elem extra) {
    images.push_back(extra);
    long long n = (long long)fixed_set(m, images).size();
    images.pop_back();
    return n;
}

}  // namespace

long long chi_gamma_burnside(const GSetAction& m, const GammaSpec& gamma,
                             const Budget& budget) {
    const FiniteGroup& g = m.group();
    ConjClassTable t = conjugacy_classes(g);
    if (gamma.is_z() && m.size() == 1 && g.is_wreath() && !g.has_table()) {
        // single pass over the group: count, per class representative, the
        // elements commuting with it, decoding each element only once
        std::vector<WreathElement> reps;
        for (Elem r : t.representatives) reps.push_back(g.decode(r));
        std::vector<long long> cent(reps.size(), 0);
        for (Elem x = 0; x < g.order(); ++x) {
            budget.check_every(x, 1 << 18, "burnside enumeration");
            WreathElement xd = g.decode(x);
            for (size_t i = 0; i < reps.size(); ++i) {
                WreathElement ab = g.wreath_compose(reps[i], xd);
                WreathElement ba = g.wreath_compose(xd, reps[i]);
                if (ab.base == ba.base && ab.perm == ba.perm) ++cent[i];
            }
        }
        long long total = 0;
        for (size_t i = 0; i < reps.size(); ++i) total += t.class_sizes[i] * cent[i];
        if (total % g.order() != 0)
            throw internal_error("Burnside average is not an integer");
        return total / g.order();
    }
    // sum over g of the number of (theta, x) fixed by g; the summand is a
    // class function, so sum over class representatives with multiplicity
    long long total = 0;
    for (size_t ci = 0; ci < t.representatives.size(); ++ci) {
        budget.check("burnside enumeration");
        Elem a = t.representatives[ci];
        long long f = 0;
        std::vector<Elem> ca = centralizer(g, std::vector<Elem>{a});
        switch (gamma.kind) {
            case GammaSpec::Kind::free:
            case GammaSpec::Kind::free_abelian: {
                // theta is fixed by a iff every image commutes with a; walk
                // tuples inside C(a), requiring commutation for abelian Gamma
                std::vector<Elem> images;
                std::function<void(int)> rec = [&](int i) {
                    if (i == gamma.rank) {
                        if (m.size() == 1)
                            ++f;
                        else
                            f += fixed_count_with(m, images, a);
                        return;
                    }
                    for (Elem x : ca) {
                        bool ok = true;
                        if (gamma.kind == GammaSpec::Kind::free_abelian)
                            for (Elem y : images)
                                if (!g.commutes(x, y)) {
                                    ok = false;
                                    break;
                                }
                        if (!ok) continue;
                        images.push_back(x);
                        rec(i + 1);
                        images.pop_back();
                    }
                };
                rec(0);
                break;
            }
            case GammaSpec::Kind::presented: {
                for (const Hom& h : enumerate_homs(gamma, g, budget)) {
                    bool inside = true;
                    for (Elem x : h.images)
                        if (!g.commutes(x, a)) {
                            inside = false;
                            break;
                        }
                    if (!inside) continue;
                    if (m.size() == 1)
                        ++f;
                    else {
                        std::vector<Elem> images = h.images;
                        f += fixed_count_with(m, images, a);
                    }
                }
                break;
            }
        }
        total += t.class_sizes[ci] * f;
    }
    if (total % g.order() != 0)
        throw internal_error("Burnside average is not an integer");
    return total / g.order();
}

long long chi_gamma_set(const GSetAction& m, const SubgroupClass& h, const Budget& budget) {
    const FiniteGroup& g = m.group();
    RhoOrbits ro = enumerate_rho_orbits(h, g, budget);
    DeckRewrites dr = deck_rewrites(h);

    // first presentation: per rho-class, orbits of pi_G(T_rho) on the fixed set
    long long via_classes = 0;
    for (const RhoClass& rc : ro.classes) {
        if (m.size() == 1) {
            ++via_classes;
            continue;
        }
        std::vector<long long> fixed = fixed_set(m, rc.rep.images);
        if (fixed.empty()) continue;
        std::vector<Elem> pig = pi_g_of_t_rho(dr, rc.rep, g);
        via_classes += orbit_count_on(m, fixed, pig);
    }

    // second presentation: orbits of the (deck x G)-action on pairs (rho, x)
    std::vector<std::pair<long long, long long>> pairs;  // (hom index, point)
    for (size_t i = 0; i < ro.homs.size(); ++i)
        for (long long x : fixed_set(m, ro.homs[i].images)) pairs.push_back({(long long)i, x});
    auto hom_index = [&](const Hom& x) {
        auto it = std::lower_bound(ro.homs.begin(), ro.homs.end(), x);
        if (it == ro.homs.end() || !(*it == x))
            throw internal_error("pair move left the hom list");
        return (long long)(it - ro.homs.begin());
    };
    auto pair_index = [&](std::pair<long long, long long> pr) {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), pr);
        if (it == pairs.end() || *it != pr) throw internal_error("pair move left the pair set");
        return (long long)(it - pairs.begin());
    };
    std::vector<char> seen(pairs.size(), 0);
    long long via_pairs = 0;
    std::vector<long long> queue;
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (seen[i]) continue;
        ++via_pairs;
        queue.clear();
        queue.push_back((long long)i);
        seen[i] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            auto [hi, x] = pairs[queue[qi]];
            for (Elem a : g.generators()) {
                long long j = pair_index({hom_index(apply_conj(a, ro.homs[hi], g)),
                                          m.act(a, x)});
                if (!seen[j]) {
                    seen[j] = 1;
                    queue.push_back(j);
                }
            }
            for (size_t u = 0; u < dr.deck.points.size(); ++u) {
                long long j = pair_index({hom_index(apply_deck(dr, (int)u, ro.homs[hi], g)), x});
                if (!seen[j]) {
                    seen[j] = 1;
                    queue.push_back(j);
                }
            }
        }
    }

    if (via_classes != via_pairs)
        throw internal_error("the two chi_gamma_set presentations disagree: " +
                             std::to_string(via_classes) + " vs " +
                             std::to_string(via_pairs));
    return via_classes;
}

long long hecke_chi(const GSetAction& m, const GammaSpec& gamma, int n,
                    const Budget& budget) {
    long long total = 0;
    for_each_subgroup_class(gamma, n, budget, [&](SubgroupClass&& h, long long) {
        total += chi_gamma_set(m, h, budget);
    });
    return total;
}

EulerReport verify_theorem_c(const FinGSet& m, const GammaSpec& gamma, int max_degree,
                             const Budget& budget, const GroupConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    EulerReport rep;
    rep.max_degree = max_degree;

    rep.lhs.push_back(1);  // degree 0: the one-point mapping space
    for (int n = 1; n <= max_degree; ++n) {
        budget.check("theorem-c left side");
        FiniteGroup gn = wreath_product(m.group(), n, cfg);
        PowerAction pa(gn, m);
        rep.lhs.push_back(chi_gamma(pa, gamma, budget));
    }

    PSeries product = PSeries::one(max_degree);
    for (int r = 1; r <= max_degree; ++r) {
        budget.check("theorem-c right side");
        for_each_subgroup_class(gamma, r, budget, [&](SubgroupClass&& h, long long) {
            long long chi = chi_gamma_set(m, h, budget);
            product = ps_geom_power(std::move(product), r, chi);
        });
    }
    for (int n = 0; n <= max_degree; ++n) {
        if (!product.c[n].is_integer())
            throw internal_error("theorem-c product expansion must be integral");
        rep.rhs.push_back(product.c[n].num());
    }

    rep.pass = true;
    for (int n = 0; n <= max_degree; ++n)
        if (BigInt(rep.lhs[n]) != rep.rhs[n]) rep.pass = false;
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

}  // namespace orbi
