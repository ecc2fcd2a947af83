#pragma once

#include <string>

#include "orbi/homspace.hpp"

namespace orbi {

// One irreducible summand of a hom into G wr S_n: a subgroup class H (the
// basepoint stabilizer of one Gamma-orbit on the n points), the cocycle rho
// on its Schreier generators, and how many isomorphic copies occur.
struct BundleSummand {
    SubgroupClass subgroup;
    Hom rho;
    long long multiplicity = 0;
};

struct BundleDecomposition {
    long long degree = 0;  // the n of G wr S_n
    std::vector<BundleSummand> summands;
};

// Split theta: Gamma -> G wr S_n into irreducible summands. Summands whose
// (subgroup, rho) agree up to the (N_Gamma(H) x G)-action are merged; the
// degree count  sum multiplicity * |Gamma/H| = n  is asserted.
BundleDecomposition decompose_theta(const GammaSpec& gamma, const Hom& theta,
                                    const FiniteGroup& gn, const Budget& budget = {});

// |C(theta)| predicted from the decomposition: the product over summands of
// aut(H, rho)^multiplicity * multiplicity!.
long long centralizer_order_formula(const BundleDecomposition& dec, const FiniteGroup& gn,
                                    const Budget& budget = {});

struct CentralizerPolicy {
    bool exhaustive = true;
    long long samples = 100;
    unsigned long long seed = 0;
};

struct CentralizerReport {
    long long checked = 0;
    long long failed = 0;
    std::vector<std::string> failures;  // first few, for diagnostics
    bool pass() const { return checked > 0 && failed == 0; }
};

// For each theta in Hom(Gamma, G wr S_n) (all of them, one per conjugacy
// class when Gamma has rank 1, or a seeded sample), compare the brute-force
// centralizer order in G wr S_n with the formula value.
CentralizerReport verify_centralizer(const GammaSpec& gamma, const FiniteGroup& base,
                                     long long n, const CentralizerPolicy& policy = {},
                                     const Budget& budget = {},
                                     const GroupConfig& cfg = {});

}  // namespace orbi
