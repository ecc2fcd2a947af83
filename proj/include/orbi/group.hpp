#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbi/error.hpp"

namespace orbi {

// Element of a FiniteGroup, always an index in 0..order-1.
using Elem = long long;

struct GroupConfig {
    long long max_order = 1'000'000;  // hard cap on any constructed group
    long long table_threshold = 4096; // dense multiplication table at or below
};

// How to build a group. `kind` mirrors the GroupSpec JSON schema.
struct GroupSpec {
    enum class Kind { trivial, cyclic, symmetric, cayley, perm, product, wreath };
    Kind kind = Kind::trivial;
    long long n = 0;                              // cyclic/symmetric/wreath copies
    std::vector<std::vector<Elem>> cayley_table;  // cayley
    long long degree = 0;                         // perm
    std::vector<std::vector<int>> perm_generators;
    std::vector<GroupSpec> factors;               // product
    std::unique_ptr<GroupSpec> wreath_base;       // wreath

    GroupSpec() = default;
    GroupSpec(const GroupSpec& o) { *this = o; }
    GroupSpec& operator=(const GroupSpec& o);
    GroupSpec(GroupSpec&&) = default;
    GroupSpec& operator=(GroupSpec&&) = default;
};

// Element of a wreath product G ≀ S_n: a base tuple (g_0..g_{n-1}) and a
// permutation sigma of {0..n-1}. Product law:
//   ((g), sigma) ((h), tau) = ((g_i · h_{sigma^{-1}(i)}), sigma tau)
// with permutations composing as (sigma tau)(i) = sigma(tau(i)).
struct WreathElement {
    std::vector<Elem> base;
    std::vector<int> perm;
};

struct ConjClassTable;

// A finite group with elements indexed 0..order-1. Three storage modes share
// one interface:
//   table:  dense multiplication table (small groups),
//   wreath: structural G ≀ S_n arithmetic on a mixed-radix element encoding,
//   perm:   elements stored as permutations, indexed by sorted image rows.
// Values are immutable after construction; all methods are const and
// thread-safe.
class FiniteGroup {
  public:
    long long order() const { return order_; }
    Elem identity() const { return identity_; }
    const std::vector<Elem>& generators() const { return generators_; }

    Elem mult(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    // a x a^{-1}
    Elem conj(Elem a, Elem x) const { return mult(mult(a, x), inv(a)); }
    bool commutes(Elem a, Elem b) const;

    std::string label(Elem a) const;

    bool is_wreath() const { return mode_ == Mode::wreath; }
    bool has_table() const { return !table_.empty(); }
    const FiniteGroup& wreath_base() const;
    long long wreath_copies() const;
    WreathElement decode(Elem a) const;
    Elem encode(const WreathElement& w) const;
    WreathElement wreath_compose(const WreathElement& a, const WreathElement& b) const;

    // Spec law checks: unit and inverse on all elements, associativity on all
    // triples up to order 512 and on 10^5 seeded random triples above.
    void validate_laws() const;

    static FiniteGroup trivial();
    static FiniteGroup cyclic(long long n, const GroupConfig& cfg = {});
    static FiniteGroup symmetric(long long n, const GroupConfig& cfg = {});
    static FiniteGroup from_cayley(const std::vector<std::vector<Elem>>& table,
                                   const GroupConfig& cfg = {});
    static FiniteGroup from_perm_generators(long long degree,
                                            const std::vector<std::vector<int>>& gens,
                                            const GroupConfig& cfg = {});
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                      const GroupConfig& cfg = {});

    friend FiniteGroup wreath_product(const FiniteGroup& base, long long n,
                                      const GroupConfig& cfg);
    friend FiniteGroup build_group(const GroupSpec& spec, const GroupConfig& cfg);
    friend ConjClassTable conjugacy_classes(const FiniteGroup& g);

  private:
    enum class Mode { table, wreath, perm };

    Elem mult_structural(Elem a, Elem b) const;
    void build_table_from_structural(const GroupConfig& cfg);
    void finish_construction();
    WreathElement wreath_mult(const WreathElement& a, const WreathElement& b) const;
    WreathElement wreath_inv(const WreathElement& w) const;
    Elem perm_lookup(const std::vector<uint8_t>& images) const;

    Mode mode_ = Mode::table;
    long long order_ = 1;
    Elem identity_ = 0;
    std::vector<Elem> generators_;
    std::vector<std::string> labels_;  // optional, may be empty

    // table mode (also used as an accelerator for small wreath groups)
    std::vector<int32_t> table_;
    std::vector<int32_t> inv_table_;

    // wreath mode
    std::shared_ptr<const FiniteGroup> base_;
    long long copies_ = 0;
    std::vector<long long> base_radix_;  // |B|^i for i = 0..n
    std::vector<long long> fact_;        // i! for i = 0..n

    // perm mode: row i = images of element i, rows sorted lexicographically
    long long degree_ = 0;
    std::vector<uint8_t> perm_rows_;
};

FiniteGroup build_group(const GroupSpec& spec, const GroupConfig& cfg = {});
FiniteGroup wreath_product(const FiniteGroup& base, long long n,
                           const GroupConfig& cfg = {});

// Conjugacy classes, computed as orbits of conjugation by the generators.
struct ConjClassTable {
    std::vector<int> class_of;            // element -> class index
    std::vector<Elem> representatives;    // least element of each class
    std::vector<long long> class_sizes;
};

ConjClassTable conjugacy_classes(const FiniteGroup& g);

// All x with xs = sx for every s in `fixed`; sorted, contains the identity.
std::vector<Elem> centralizer(const FiniteGroup& g, std::span<const Elem> fixed);

long long centralizer_order(const FiniteGroup& g, std::span<const Elem> fixed);

// Apply a wreath element to a point of M^n given the base action; points of
// M^n are tuples encoded little-endian in radix |M|. (w·x)_i = g_i · x_{sigma^{-1}(i)}.
long long wreath_action(const FiniteGroup& wreath, Elem w, long long point,
                        long long m_size,
                        const std::vector<std::vector<long long>>& base_action);

// Lehmer rank/unrank for permutations of {0..n-1}; rank of identity is 0.
long long perm_rank(const std::vector<int>& p);
std::vector<int> perm_unrank(long long r, int n);
std::vector<int> perm_inverse(const std::vector<int>& p);
std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace orbi
