#include <numeric>

#include "doctest.h"
#include "orbi/acceptance.hpp"
#include "orbi/lattice.hpp"

using namespace orbi;

namespace {

SublatticeHNF lat2(long long a, long long c, long long d) {
    SublatticeHNF l;
    l.dim = 2;
    l.basis[0][0] = a;
    l.basis[1][0] = c;
    l.basis[1][1] = d;
    return l;
}

// chi-weighted evaluation of a lattice sum under the counting functor
long long weighted_eval(const FinGSet& m, const LatticeSum& s) {
    long long total = 0;
    for (const auto& [l, mult] : s.terms) {
        SubgroupClass h = SubgroupClass::from_hnf(GammaSpec::free_abelian(2), l);
        total += mult * chi_gamma_set(m, h);
    }
    return total;
}

}  // namespace

TEST_CASE("hecke operator on lattices") {
    CHECK(hecke_T(1, lattice_unit()) == lattice_unit());

    LatticeSum t2 = hecke_T(2, lattice_unit());
    CHECK(t2.total() == 3);
    CHECK(t2.terms.count(lat2(1, 0, 2)));
    CHECK(t2.terms.count(lat2(2, 0, 1)));
    CHECK(t2.terms.count(lat2(2, 1, 1)));

    LatticeSum t2t2 = hecke_T(2, t2);
    CHECK(t2t2.total() == 9);
    CHECK((long long)t2t2.terms.size() == 7);
    CHECK(t2t2.terms.at(lat2(2, 0, 2)) == 3);  // 2Z^2 appears with multiplicity 3

    for (long long n = 1; n <= 50; ++n)
        CHECK(hecke_T(n, lattice_unit()).total() == sigma1(n));
}

TEST_CASE("scaling commutes with the hecke operator") {
    CHECK(scale_R(1, lattice_unit()) == lattice_unit());
    LatticeSum two = scale_R(2, lattice_unit());
    REQUIRE(two.total() == 1);
    CHECK(two.terms.count(lat2(2, 0, 2)));
    for (long long d = 1; d <= 6; ++d)
        for (long long n = 1; n <= 6; ++n)
            CHECK(scale_R(d, hecke_T(n, lattice_unit())) ==
                  hecke_T(n, scale_R(d, lattice_unit())));
}

TEST_CASE("classical hecke identity on lattices") {
    LatticeHeckeReport coprime = verify_lattice_hecke(2, 3);
    CHECK(coprime.pass);
    CHECK(coprime.lhs.total() == sigma1(2) * sigma1(3));
    CHECK(coprime.lhs.total() == sigma1(6));

    LatticeHeckeReport square = verify_lattice_hecke(2, 2);
    CHECK(square.pass);
    CHECK(square.lhs.total() == 9);

    CHECK(verify_lattice_hecke(4, 2).pass);
    for (long long m = 1; m <= 6; ++m)
        for (long long n = 1; n <= 6; ++n) CHECK(verify_lattice_hecke(m, n).pass);
}

TEST_CASE("counting functor evaluations") {
    FiniteGroup triv = FiniteGroup::trivial();
    FinGSet pt_triv = FinGSet::point(triv);
    for (long long n = 1; n <= 8; ++n)
        CHECK(functor_hecke_eval(pt_triv, n) == sigma1(n));

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    FinGSet pt = FinGSet::point(s3);
    CHECK(functor_hecke_eval(pt, 1) == 8);
    CHECK(functor_hecke_eval(pt, 2) == 24);  // 3 sublattices x 8 classes
}

TEST_CASE("composition identity for the counting functor") {
    FiniteGroup triv = FiniteGroup::trivial();
    FinGSet pt_triv = FinGSet::point(triv);
    for (long long m = 1; m <= 3; ++m)
        for (long long n = 1; n <= 3; ++n) {
            FunctorHeckeReport rep = verify_functor_hecke(pt_triv, m, n);
            CHECK(rep.pass);
            long long oracle = 0;
            long long g = std::gcd(m, n);
            for (long long d = 1; d <= g; ++d)
                if (g % d == 0) oracle += d * sigma1(m * n / (d * d));
            CHECK(rep.lhs == oracle);
        }

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    FinGSet pt = FinGSet::point(s3);
    CHECK(verify_functor_hecke(pt, 2, 2).pass);

    FiniteGroup z2 = FiniteGroup::cyclic(2);
    FinGSet reg = FinGSet::regular(z2);
    CHECK(verify_functor_hecke(reg, 2, 3).pass);
}

TEST_CASE("multiplicativity shadow of the functor evaluations") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    FinGSet pt = FinGSet::point(s3);

    // coprime product relation through the multiset composition
    for (auto [m, n] : {std::pair<long long, long long>{2, 3}, {3, 4}}) {
        LatticeSum composed = hecke_T(m, hecke_T(n, lattice_unit()));
        CHECK(weighted_eval(pt, composed) ==
              weighted_eval(pt, hecke_T(m * n, lattice_unit())));
    }

    // prime-power recursion for p in {2, 3}, r <= 2
    for (long long p : {2LL, 3LL})
        for (long long r = 1; r <= 2; ++r) {
            long long pr = 1;
            for (long long i = 0; i < r; ++i) pr *= p;
            LatticeSum lhs = hecke_T(pr, hecke_T(p, lattice_unit()));
            LatticeSum rhs = hecke_T(pr * p, lattice_unit());
            LatticeSum scaled = sum_scale(p, scale_R(p, hecke_T(pr / p, lattice_unit())));
            CHECK(weighted_eval(pt, lhs) ==
                  weighted_eval(pt, rhs) + weighted_eval(pt, scaled));
        }
}

TEST_CASE("functor evaluation agrees with the chi-level Hecke operator") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    GammaSpec z2 = GammaSpec::free_abelian(2);
    for (const FinGSet& m : {FinGSet::point(s3), FinGSet::regular(s3)})
        for (long long n = 1; n <= 4; ++n)
            CHECK(functor_hecke_eval(m, n) == hecke_chi(m, z2, (int)n));
}

TEST_CASE("lattice sums reject negative multiplicities") {
    LatticeSum s;
    CHECK_THROWS_AS(s.add(lat2(1, 0, 1), -1), input_error);
}
