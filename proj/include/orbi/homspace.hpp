#pragma once

#include <vector>

#include "orbi/budget.hpp"
#include "orbi/subgroups.hpp"

namespace orbi {

// A homomorphism into G, stored as the images of the generators (of Gamma or
// of a finite-index subgroup's Schreier generating set).
struct Hom {
    std::vector<Elem> images;
    friend bool operator==(const Hom& a, const Hom& b) { return a.images == b.images; }
    friend bool operator<(const Hom& a, const Hom& b) { return a.images < b.images; }
};

// All of Hom(Gamma, G) in lexicographic image order.
std::vector<Hom> enumerate_homs(const GammaSpec& gamma, const FiniteGroup& g,
                                const Budget& budget = {});

struct HomClass {
    Hom rep;                        // least member of the class
    std::vector<Elem> centralizer;  // C_G(theta)
    long long class_size = 0;
};

std::vector<Elem> centralizer_of_hom(const FiniteGroup& g, const Hom& rho);

// G-conjugation classes of a hom list (the list must be closed under
// conjugation, which enumerate_homs guarantees).
std::vector<HomClass> hom_classes(const std::vector<Hom>& homs, const FiniteGroup& g);

// Hom(H, G) over the Schreier generating set of H: all tuples for free Gamma,
// pairwise-commuting tuples for free abelian Gamma.
std::vector<Hom> enumerate_subgroup_homs(const SubgroupClass& h, const FiniteGroup& g,
                                         const Budget& budget = {});

// Precomputed deck moves on subgroup homs: for deck element u and Schreier
// generator s, rewritten[u][s] is u^{-1} s u over the Schreier alphabet, so
// the deck action rho -> rho^{u^{-1}} is evaluation of those words.
struct DeckRewrites {
    DeckGroup deck;
    std::vector<Word> schreier;                   // ambient words of the generators
    std::vector<std::vector<Word>> rewritten;     // [deck element][generator]
};

DeckRewrites deck_rewrites(const SubgroupClass& h);

Hom apply_deck(const DeckRewrites& dr, int deck_index, const Hom& rho, const FiniteGroup& g);
Hom apply_conj(Elem x, const Hom& rho, const FiniteGroup& g);

// Orbit decomposition of Hom(H,G) under N_Gamma(H) x G, with the stabilizer
// shadows each orbit carries.
struct RhoClass {
    Hom rep;                    // least member of the orbit
    long long orbit_size = 0;
    long long cg_rho_order = 0; // |C_G(rho)|
    long long n_rho_index = 0;  // |N_Gamma^rho(H) / H|
    long long aut_order = 0;    // = cg_rho_order * n_rho_index
};

// The full orbit structure: `orbit_of[i]` is the class index of homs[i].
struct RhoOrbits {
    std::vector<Hom> homs;      // sorted
    std::vector<int> orbit_of;
    std::vector<RhoClass> classes;
};

RhoOrbits enumerate_rho_orbits(const SubgroupClass& h, const FiniteGroup& g,
                               const Budget& budget = {});

std::vector<RhoClass> enumerate_rho_classes(const SubgroupClass& h, const FiniteGroup& g,
                                            const Budget& budget = {});

// Image of the isotropy group T_rho in G. Over the deck representatives the
// solutions of x rho^{u^{-1}} x^{-1} = rho only cover T_rho up to the
// H-direction, whose image is the subgroup generated by the rho-images; the
// result is saturated by it. Contains C_G(rho); always a subgroup.
std::vector<Elem> pi_g_of_t_rho(const SubgroupClass& h, const Hom& rho,
                                const FiniteGroup& g);
std::vector<Elem> pi_g_of_t_rho(const DeckRewrites& dr, const Hom& rho,
                                const FiniteGroup& g);

}  // namespace orbi
