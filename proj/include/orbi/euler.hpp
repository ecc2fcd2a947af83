#pragma once

#include <memory>

#include "orbi/bigint.hpp"
#include "orbi/homspace.hpp"

namespace orbi {

// Finite left G-set on points 0..size-1. The group is held by reference and
// must outlive the action.
class GSetAction {
  public:
    GSetAction(const FiniteGroup& g, long long size) : group_(&g), size_(size) {}
    virtual ~GSetAction() = default;
    const FiniteGroup& group() const { return *group_; }
    long long size() const { return size_; }
    virtual long long act(Elem g, long long x) const = 0;

  private:
    const FiniteGroup* group_;
    long long size_;
};

// Explicit action table; the action axioms are checked exhaustively on
// construction.
class FinGSet final : public GSetAction {
  public:
    FinGSet(const FiniteGroup& g, std::vector<std::vector<long long>> table);
    long long act(Elem g, long long x) const override { return table_[g][x]; }
    const std::vector<std::vector<long long>>& table() const { return table_; }

    static FinGSet point(const FiniteGroup& g);
    static FinGSet regular(const FiniteGroup& g);  // G acting on itself on the left
    static FinGSet disjoint_union(const FinGSet& a, const FinGSet& b);

  private:
    std::vector<std::vector<long long>> table_;
};

// M^n with G wr S_n acting; points are little-endian radix-|M| tuples.
// For n = 0 this is the one-point set under the trivial group.
class PowerAction final : public GSetAction {
  public:
    PowerAction(const FiniteGroup& wreath, const FinGSet& base);
    long long act(Elem w, long long x) const override;

  private:
    const FinGSet* base_;
};

// Points fixed by every listed element; an empty list fixes everything.
std::vector<long long> fixed_set(const GSetAction& m, std::span<const Elem> elements);

// Orbit count of the subgroup generated by `elements` on all of M.
long long orbit_count(const GSetAction& m, std::span<const Elem> elements);

// Orbit count of the generated subgroup on a subset (which it must preserve).
long long orbit_count_on(const GSetAction& m, const std::vector<long long>& subset,
                         std::span<const Elem> elements);

// Orbifold Euler characteristic: the number of G-orbits of pairs (theta, x)
// with theta in Hom(Gamma, G) and x fixed by the image of theta, computed as
// a sum of centralizer orbit counts over conjugacy classes of homs.
long long chi_gamma(const GSetAction& m, const GammaSpec& gamma, const Budget& budget = {});

// The same count through the averaging formula (1/|G|) sum over g of the
// number of g-fixed pairs. Must equal chi_gamma.
long long chi_gamma_burnside(const GSetAction& m, const GammaSpec& gamma,
                             const Budget& budget = {});

// Euler characteristic attached to the coset Gamma-set Gamma/H: computed both
// as a sum over rho-classes of pi_G(T_rho)-orbit counts on fixed sets and as
// the orbit count of the (deck x G)-action on pairs (rho, x); the two must
// agree.
long long chi_gamma_set(const GSetAction& m, const SubgroupClass& h,
                        const Budget& budget = {});

// Sum of chi_gamma_set over all conjugacy classes of index-n subgroups.
long long hecke_chi(const GSetAction& m, const GammaSpec& gamma, int n,
                    const Budget& budget = {});

struct EulerReport {
    int max_degree = 0;
    std::vector<long long> lhs;  // chi of M^n under G wr S_n, degree by degree
    std::vector<BigInt> rhs;     // product over subgroup classes, expanded
    bool pass = false;
    double wall_ms = 0;
};

// Degreewise comparison of the generating function of wreath-power chis with
// the product over finite-index subgroup classes of (1 - p^{|Gamma/H|})^{-chi}.
EulerReport verify_theorem_c(const FinGSet& m, const GammaSpec& gamma, int max_degree,
                             const Budget& budget = {}, const GroupConfig& cfg = {});

}  // namespace orbi
