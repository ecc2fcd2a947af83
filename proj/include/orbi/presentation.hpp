#pragma once

#include <span>
#include <string>
#include <vector>

#include "orbi/group.hpp"

namespace orbi {

// Word over the generators of a finitely generated group: letter +i means
// generator i, letter -i its inverse; generators are numbered from 1.
struct Word {
    std::vector<int> letters;

    bool empty() const { return letters.empty(); }
    Word inverse() const;
    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    std::string to_string() const;
};

Word free_reduce(const Word& w);

// The domain group Gamma: free abelian Z^d, free F_k, or finitely presented.
struct GammaSpec {
    enum class Kind { free_abelian, free, presented };
    Kind kind = Kind::free_abelian;
    int rank = 1;
    std::vector<Word> relators;  // presented only, stored freely reduced

    bool is_abelian() const { return kind == Kind::free_abelian; }
    bool is_z() const { return rank == 1 && kind != Kind::presented; }

    static GammaSpec free_abelian(int d);
    static GammaSpec free(int k);
    static GammaSpec presented(int k, std::vector<Word> relators);
};

// Product of the images (or their inverses) along w; empty word -> identity.
Elem evaluate_word(const Word& w, std::span<const Elem> images, const FiniteGroup& g);

// Whether the generator images define a homomorphism Gamma -> G.
bool is_hom(std::span<const Elem> images, const GammaSpec& gamma, const FiniteGroup& g);

}  // namespace orbi
