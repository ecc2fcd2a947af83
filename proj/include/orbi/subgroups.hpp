#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "orbi/budget.hpp"
#include "orbi/presentation.hpp"

namespace orbi {

// Finite-index sublattice of Z^d in row Hermite normal form: lower-triangular
// basis rows, positive diagonal, and 0 <= entry(i,j) < entry(j,j) for j < i.
// The normal form is the unique canonical basis of the sublattice, and the
// index equals the product of the diagonal.
struct SublatticeHNF {
    int dim = 0;
    std::array<std::array<long long, 3>, 3> basis{};

    long long index() const;
    friend bool operator==(const SublatticeHNF& a, const SublatticeHNF& b);
    friend bool operator<(const SublatticeHNF& a, const SublatticeHNF& b);
    std::string to_string() const;
};

// Row-reduce integer basis rows (spanning a finite-index sublattice) to HNF.
SublatticeHNF hnf_normalize(int dim, std::vector<std::array<long long, 3>> rows);

// All index-n sublattices of Z^d, each in normal form, sorted.
std::vector<SublatticeHNF> enumerate_sublattices(int d, long long n);

// A finite-index subgroup H of Gamma, represented as the pointed transitive
// action of Gamma on the cosets Gamma/H. Points are 0..degree-1 with
// basepoint 0; H is the stabilizer of the basepoint. The stored action is in
// canonical (first-appearance BFS) labeling, so equal subgroups have equal
// tables.
struct SubgroupClass {
    GammaSpec gamma;
    int degree = 0;
    std::vector<std::vector<int>> action;      // per generator, images of points
    std::vector<std::vector<int>> action_inv;  // per generator, inverse images
    std::optional<SublatticeHNF> hnf;          // set when gamma is free abelian
    std::vector<Word> coset_reps;              // word carrying basepoint to each point

    int apply_letter(int letter, int point) const;
    int trace(const Word& w, int from) const;
    // flattened action table after relabeling with basepoint `b`
    std::vector<int> pointed_canonical(int b) const;
    std::vector<int> class_canonical() const;

    // The stored action is relabeled so `basepoint` becomes 0 in canonical
    // first-appearance order.
    static SubgroupClass from_action(GammaSpec gamma, std::vector<std::vector<int>> action,
                                     int basepoint = 0);
    static SubgroupClass from_hnf(GammaSpec gamma, const SublatticeHNF& h);
};

// Canonical flattened forward table of a transitive action seen from a
// basepoint; equal forms mean equal basepoint stabilizers.
std::vector<int> action_canonical_form(int rank, int degree,
                                       const std::vector<std::vector<int>>& fwd,
                                       const std::vector<std::vector<int>>& inv,
                                       int basepoint);

// One representative per conjugacy class of index-n subgroups, sorted by
// canonical table (free/presented) or by HNF (free abelian, where classes
// and subgroups coincide).
std::vector<SubgroupClass> enumerate_subgroup_classes(const GammaSpec& gamma, int n,
                                                      const Budget& budget = {});

// Streaming variant: one call per class with the class representative and its
// deck-group order, without retaining the whole list. Classes are produced in
// enumeration order, not sorted.
void for_each_subgroup_class(const GammaSpec& gamma, int n, const Budget& budget,
                             const std::function<void(SubgroupClass&&, long long)>& fn);

// The deck group of the covering attached to H: the points whose stabilizer
// equals the basepoint stabilizer, with the covering-translation law. Trivial
// whenever H has no normalizing translations beyond itself.
struct DeckGroup {
    std::vector<int> points;              // deck points, points[0] == 0
    std::vector<std::vector<int>> law;    // law[i][j] in deck-point indices

    long long order() const { return (long long)points.size(); }
};

DeckGroup deck_group(const SubgroupClass& h);

// Free generating set of H as words in the ambient generators: Schreier
// generators from the BFS spanning tree for free Gamma, the HNF basis rows
// for free abelian Gamma. Errors for presented Gamma.
std::vector<Word> schreier_generators(const SubgroupClass& h);

// Rewrite an ambient word lying in H as a word over the Schreier alphabet
// (letters index schreier_generators(h), 1-based signed).
Word rewrite_in_schreier(const SubgroupClass& h, const Word& ambient);

// The word u^{-1} h u over the Schreier alphabet, for u normalizing H.
Word conjugate_into_generators(const SubgroupClass& h, const Word& u, const Word& h_word);

}  // namespace orbi
