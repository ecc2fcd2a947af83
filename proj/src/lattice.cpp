#include "orbi/lattice.hpp"

#include <numeric>

namespace orbi {

void LatticeSum::add(const SublatticeHNF& l, long long mult) {
    if (mult == 0) return;
    long long& v = terms[l];
    v += mult;
    if (v == 0) terms.erase(l);
    if (v < 0) throw input_error("lattice multiplicities must stay nonnegative");
}

long long LatticeSum::total() const {
    long long t = 0;
    for (const auto& [l, m] : terms) t += m;
    return t;
}

LatticeSum lattice_unit() {
    SublatticeHNF z2;
    z2.dim = 2;
    z2.basis[0][0] = 1;
    z2.basis[1][1] = 1;
    LatticeSum s;
    s.add(z2, 1);
    return s;
}

std::vector<SublatticeHNF> sublattices_of(const SublatticeHNF& l, long long n) {
    if (l.dim != 2) throw input_error("sublattice pushforward implemented for dim 2");
    std::vector<SublatticeHNF> out;
    for (const SublatticeHNF& s : enumerate_sublattices(2, n)) {
        // rows of s are coordinates in l's basis; push to ambient coordinates
        std::vector<std::array<long long, 3>> rows(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                rows[i][j] = s.basis[i][0] * l.basis[0][j] + s.basis[i][1] * l.basis[1][j];
        out.push_back(hnf_normalize(2, std::move(rows)));
    }
    return out;
}

LatticeSum hecke_T(long long n, const LatticeSum& s) {
    if (n < 1) throw input_error("Hecke operator index must be >= 1");
    LatticeSum out;
    for (const auto& [l, mult] : s.terms)
        for (const SublatticeHNF& sub : sublattices_of(l, n)) out.add(sub, mult);
    return out;
}

SublatticeHNF scale_lattice(long long d, const SublatticeHNF& l) {
    if (d < 1) throw input_error("scale factor must be >= 1");
    std::vector<std::array<long long, 3>> rows(l.dim);
    for (int i = 0; i < l.dim; ++i)
        for (int j = 0; j < l.dim; ++j) rows[i][j] = d * l.basis[i][j];
    return hnf_normalize(l.dim, std::move(rows));
}

LatticeSum scale_R(long long d, const LatticeSum& s) {
    LatticeSum out;
    for (const auto& [l, mult] : s.terms) out.add(scale_lattice(d, l), mult);
    return out;
}

LatticeSum sum_add(const LatticeSum& a, const LatticeSum& b) {
    LatticeSum out = a;
    for (const auto& [l, m] : b.terms) out.add(l, m);
    return out;
}

LatticeSum sum_scale(long long c, const LatticeSum& s) {
    LatticeSum out;
    for (const auto& [l, m] : s.terms) out.add(l, c * m);
    return out;
}

LatticeHeckeReport verify_lattice_hecke(long long m, long long n) {
    LatticeHeckeReport rep;
    rep.m = m;
    rep.n = n;
    rep.lhs = hecke_T(m, hecke_T(n, lattice_unit()));
    LatticeSum rhs;
    long long g = std::gcd(m, n);
    for (long long d = 1; d <= g; ++d) {
        if (g % d) continue;
        LatticeSum part = scale_R(d, hecke_T((m * n) / (d * d), lattice_unit()));
        rhs = sum_add(rhs, sum_scale(d, part));
    }
    rep.rhs = std::move(rhs);
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

namespace {

long long chi_of_sublattice(const FinGSet& m, const SublatticeHNF& l, const Budget& budget) {
    SubgroupClass h = SubgroupClass::from_hnf(GammaSpec::free_abelian(2), l);
    return chi_gamma_set(m, h, budget);
}

}  // namespace

long long functor_hecke_eval(const FinGSet& m, long long n, const Budget& budget) {
    long long total = 0;
    for (const SublatticeHNF& l : enumerate_sublattices(2, n)) {
        budget.check("functor Hecke evaluation");
        total += chi_of_sublattice(m, l, budget);
    }
    return total;
}

FunctorHeckeReport verify_functor_hecke(const FinGSet& mset, long long m, long long n,
                                        const Budget& budget) {
    FunctorHeckeReport rep;
    rep.m = m;
    rep.n = n;
    // nested composition: inner coverings enumerated inside each outer one
    long long lhs = 0;
    for (const SublatticeHNF& h : enumerate_sublattices(2, m))
        for (const SublatticeHNF& k : sublattices_of(h, n)) {
            budget.check("functor Hecke composition");
            lhs += chi_of_sublattice(mset, k, budget);
        }
    // divisor form: d copies of the evaluation at d-scaled index-(mn/d^2)
    // sublattices
    long long rhs = 0;
    long long g = std::gcd(m, n);
    for (long long d = 1; d <= g; ++d) {
        if (g % d) continue;
        for (const SublatticeHNF& l : enumerate_sublattices(2, (m * n) / (d * d))) {
            budget.check("functor Hecke divisor sum");
            rhs += d * chi_of_sublattice(mset, scale_lattice(d, l), budget);
        }
    }
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.pass = lhs == rhs;
    return rep;
}

}  // namespace orbi
