#pragma once

#include <map>

#include "orbi/euler.hpp"

namespace orbi {

// Finite formal sum of rank-2 sublattices of the ambient Z^2, each in normal
// form, with nonnegative integer multiplicities.
struct LatticeSum {
    std::map<SublatticeHNF, long long> terms;

    void add(const SublatticeHNF& l, long long mult);
    long long total() const;  // sum of multiplicities
    friend bool operator==(const LatticeSum& a, const LatticeSum& b) {
        return a.terms == b.terms;
    }
};

// Z^2 itself with multiplicity 1.
LatticeSum lattice_unit();

// Index-n sublattices of a lattice, enumerated in its own coordinates and
// pushed back to ambient normal form.
std::vector<SublatticeHNF> sublattices_of(const SublatticeHNF& l, long long n);

// T(n): replace each lattice by the sum of its index-n sublattices.
LatticeSum hecke_T(long long n, const LatticeSum& s);

// R(d): L -> dL (index multiplies by d^2).
SublatticeHNF scale_lattice(long long d, const SublatticeHNF& l);
LatticeSum scale_R(long long d, const LatticeSum& s);

LatticeSum sum_add(const LatticeSum& a, const LatticeSum& b);
LatticeSum sum_scale(long long c, const LatticeSum& s);

struct LatticeHeckeReport {
    long long m = 0, n = 0;
    LatticeSum lhs, rhs;
    bool pass = false;
};

// T(m)T(n) = sum over d | (m,n) of d * R(d) T(mn/d^2), as an exact multiset
// identity applied to Z^2.
LatticeHeckeReport verify_lattice_hecke(long long m, long long n);

// Counting-functor value of the n-th geometric Hecke operator on the torus
// with fundamental group Z^2: the sum over index-n sublattices H of the
// cardinality of C_H(M/G) divided by the (elementwise trivial) deck action.
long long functor_hecke_eval(const FinGSet& m, long long n, const Budget& budget = {});

struct FunctorHeckeReport {
    long long m = 0, n = 0;
    long long lhs = 0, rhs = 0;
    bool pass = false;
};

// Cardinality form of the composition identity: the nested evaluation over
// chains K subset H equals the divisor sum over scaled lattices.
FunctorHeckeReport verify_functor_hecke(const FinGSet& mset, long long m, long long n,
                                        const Budget& budget = {});

}  // namespace orbi
