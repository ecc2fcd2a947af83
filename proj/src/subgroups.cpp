#include "orbi/subgroups.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace orbi {

long long SublatticeHNF::index() const {
    long long p = 1;
    for (int i = 0; i < dim; ++i) p *= basis[i][i];
    return p;
}

bool operator==(const SublatticeHNF& a, const SublatticeHNF& b) {
    if (a.dim != b.dim) return false;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (a.basis[i][j] != b.basis[i][j]) return false;
    return true;
}

bool operator<(const SublatticeHNF& a, const SublatticeHNF& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (a.basis[i][j] != b.basis[i][j]) return a.basis[i][j] < b.basis[i][j];
    return false;
}

std::string SublatticeHNF::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < dim; ++i) {
        if (i) os << ",";
        os << "[";
        for (int j = 0; j < dim; ++j) {
            if (j) os << ",";
            os << basis[i][j];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

SublatticeHNF hnf_normalize(int dim, std::vector<std::array<long long, 3>> rows) {
    if (dim < 1 || dim > 3) throw input_error("lattice dimension must be 1..3");
    // clear columns right to left with unimodular row operations
    std::vector<char> used(rows.size(), 0);
    std::array<int, 3> pivot{-1, -1, -1};
    for (int col = dim - 1; col >= 0; --col) {
        // gcd elimination among active rows in this column
        while (true) {
            int nonzero = -1, second = -1;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (used[r] || rows[r][col] == 0) continue;
                if (nonzero < 0)
                    nonzero = (int)r;
                else {
                    second = (int)r;
                    break;
                }
            }
            if (second < 0) {
                if (nonzero < 0)
                    throw input_error("rows do not span a finite-index sublattice");
                pivot[col] = nonzero;
                used[nonzero] = 1;
                if (rows[nonzero][col] < 0)
                    for (int j = 0; j < dim; ++j) rows[nonzero][j] = -rows[nonzero][j];
                break;
            }
            // reduce the larger entry modulo the smaller
            int a = nonzero, b = second;
            if (std::abs(rows[a][col]) < std::abs(rows[b][col])) std::swap(a, b);
            long long q = rows[a][col] / rows[b][col];
            for (int j = 0; j < dim; ++j) rows[a][j] -= q * rows[b][j];
        }
    }
    SublatticeHNF h;
    h.dim = dim;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) h.basis[i][j] = rows[pivot[i]][j];
    // sanity: lower triangular by construction
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (h.basis[i][j] != 0) throw internal_error("hnf not lower triangular");
    // reduce off-diagonal entries into [0, diagonal)
    for (int i = 1; i < dim; ++i)
        for (int j = i - 1; j >= 0; --j) {
            long long d = h.basis[j][j];
            long long q = h.basis[i][j] / d;
            if (h.basis[i][j] - q * d < 0) --q;
            for (int t = 0; t <= j; ++t) h.basis[i][t] -= q * h.basis[j][t];
        }
    return h;
}

std::vector<SublatticeHNF> enumerate_sublattices(int d, long long n) {
    if (d < 1 || d > 3) throw input_error("lattice dimension must be 1..3");
    if (n < 1) throw input_error("sublattice index must be >= 1");
    std::vector<SublatticeHNF> out;
    std::array<long long, 3> diag{1, 1, 1};
    std::function<void(int, long long)> pick_diag = [&](int i, long long rest) {
        if (i == d) {
            if (rest != 1) return;
            // free choice of each entry (r,c), c < r, in [0, diag[c])
            SublatticeHNF h;
            h.dim = d;
            for (int r = 0; r < d; ++r) h.basis[r][r] = diag[r];
            std::function<void(int, int)> pick_off = [&](int r, int c) {
                if (r == d) {
                    out.push_back(h);
                    return;
                }
                if (c == r) {
                    pick_off(r + 1, 0);
                    return;
                }
                for (long long v = 0; v < diag[c]; ++v) {
                    h.basis[r][c] = v;
                    pick_off(r, c + 1);
                }
                h.basis[r][c] = 0;
            };
            pick_off(0, 0);
            return;
        }
        for (long long v = 1; v <= rest; ++v)
            if (rest % v == 0) {
                diag[i] = v;
                pick_diag(i + 1, rest / v);
            }
        diag[i] = 1;
    };
    pick_diag(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

// First-appearance BFS relabeling of a transitive action from basepoint b;
// scan order per point is generator forward image then inverse image.
// Returns the flattened forward table under the new labels.
std::vector<int> action_canonical_form(int k, int n, const std::vector<std::vector<int>>& fwd,
                                       const std::vector<std::vector<int>>& inv, int b) {
    std::vector<int> old2new(n, -1), new2old(n, -1);
    old2new[b] = 0;
    new2old[0] = b;
    int next = 1;
    for (int np = 0; np < n; ++np) {
        int op = new2old[np];
        if (op < 0) throw internal_error("action not transitive");
        for (int g = 0; g < k; ++g) {
            int q = fwd[g][op];
            if (old2new[q] < 0) {
                old2new[q] = next;
                new2old[next++] = q;
            }
            q = inv[g][op];
            if (old2new[q] < 0) {
                old2new[q] = next;
                new2old[next++] = q;
            }
        }
    }
    std::vector<int> flat(k * n);
    for (int g = 0; g < k; ++g)
        for (int np = 0; np < n; ++np) flat[g * n + np] = old2new[fwd[g][new2old[np]]];
    return flat;
}

int SubgroupClass::apply_letter(int letter, int point) const {
    int g = std::abs(letter) - 1;
    if (g < 0 || g >= gamma.rank) throw input_error("letter out of range");
    return letter > 0 ? action[g][point] : action_inv[g][point];
}

int SubgroupClass::trace(const Word& w, int from) const {
    int p = from;
    for (int x : w.letters) p = apply_letter(x, p);
    return p;
}

std::vector<int> SubgroupClass::pointed_canonical(int b) const {
    return action_canonical_form(gamma.rank, degree, action, action_inv, b);
}

std::vector<int> SubgroupClass::class_canonical() const {
    std::vector<int> best = pointed_canonical(0);
    for (int b = 1; b < degree; ++b) {
        std::vector<int> f = pointed_canonical(b);
        if (f < best) best = f;
    }
    return best;
}

SubgroupClass SubgroupClass::from_action(GammaSpec gamma, std::vector<std::vector<int>> action,
                                         int basepoint) {
    const int k = gamma.rank;
    if ((int)action.size() != k) throw input_error("one permutation per generator required");
    const int n = action.empty() ? 0 : (int)action[0].size();
    if (n < 1) throw input_error("empty action");
    if (basepoint < 0 || basepoint >= n) throw input_error("basepoint out of range");
    SubgroupClass h;
    h.gamma = std::move(gamma);
    h.degree = n;
    h.action = std::move(action);
    h.action_inv.assign(k, std::vector<int>(n, -1));
    for (int g = 0; g < k; ++g) {
        if ((int)h.action[g].size() != n) throw input_error("ragged action");
        std::vector<char> hit(n, 0);
        for (int p = 0; p < n; ++p) {
            int q = h.action[g][p];
            if (q < 0 || q >= n || hit[q]) throw input_error("action row is not a permutation");
            hit[q] = 1;
            h.action_inv[g][q] = p;
        }
    }
    if (h.gamma.kind == GammaSpec::Kind::presented) {
        for (const Word& r : h.gamma.relators)
            for (int p = 0; p < n; ++p)
                if (h.trace(r, p) != p)
                    throw input_error("action does not respect a relator");
    }
    if (h.gamma.kind == GammaSpec::Kind::free_abelian) {
        for (int g = 0; g < k; ++g)
            for (int g2 = g + 1; g2 < k; ++g2)
                for (int p = 0; p < n; ++p)
                    if (h.action[g][h.action[g2][p]] != h.action[g2][h.action[g][p]])
                        throw input_error("action of a free abelian group must commute");
    }
    // relabel into canonical pointed form, then rebuild inverse and tree data
    std::vector<int> flat = h.pointed_canonical(basepoint);
    std::vector<std::vector<int>> canon(k, std::vector<int>(n));
    for (int g = 0; g < k; ++g)
        for (int p = 0; p < n; ++p) canon[g][p] = flat[g * n + p];
    h.action = std::move(canon);
    for (int g = 0; g < k; ++g)
        for (int p = 0; p < n; ++p) h.action_inv[g][h.action[g][p]] = p;
    // BFS tree from the basepoint in scan order: coset representative words
    h.coset_reps.assign(n, Word{});
    std::vector<char> found(n, 0);
    found[0] = 1;
    int discovered = 1;
    for (int p = 0; p < n && discovered < n; ++p) {
        if (!found[p]) throw input_error("action is not transitive");
        for (int g = 0; g < k; ++g) {
            int q = h.action[g][p];
            if (!found[q]) {
                found[q] = 1;
                ++discovered;
                h.coset_reps[q] = h.coset_reps[p];
                h.coset_reps[q].letters.push_back(g + 1);
            }
            q = h.action_inv[g][p];
            if (!found[q]) {
                found[q] = 1;
                ++discovered;
                h.coset_reps[q] = h.coset_reps[p];
                h.coset_reps[q].letters.push_back(-(g + 1));
            }
        }
    }
    if (discovered != n) throw input_error("action is not transitive");
    return h;
}

SubgroupClass SubgroupClass::from_hnf(GammaSpec gamma, const SublatticeHNF& hn) {
    if (gamma.kind != GammaSpec::Kind::free_abelian || gamma.rank != hn.dim)
        throw input_error("hnf subgroup requires a matching free abelian Gamma");
    const int d = hn.dim;
    const long long n = hn.index();
    if (n > 1'000'000) throw input_error("sublattice index too large to materialize");
    // coset representatives: vectors with 0 <= x_i < diagonal_i, mixed-radix labels
    std::array<long long, 3> radix{1, 1, 1};
    for (int i = 1; i < d; ++i) radix[i] = radix[i - 1] * hn.basis[i - 1][i - 1];
    auto reduce = [&](std::array<long long, 3>& v) {
        for (int i = d - 1; i >= 0; --i) {
            long long diag = hn.basis[i][i];
            long long q = v[i] / diag;
            if (v[i] - q * diag < 0) --q;
            for (int j = 0; j <= i; ++j) v[j] -= q * hn.basis[i][j];
        }
    };
    auto label_of = [&](const std::array<long long, 3>& v) {
        long long lab = 0;
        for (int i = 0; i < d; ++i) lab += v[i] * radix[i];
        return (int)lab;
    };
    std::vector<std::vector<int>> action(d, std::vector<int>((size_t)n));
    std::array<long long, 3> v{0, 0, 0};
    std::function<void(int)> walk = [&](int i) {
        if (i == d) {
            int from = label_of(v);
            for (int g = 0; g < d; ++g) {
                std::array<long long, 3> w = v;
                w[g] += 1;
                reduce(w);
                action[g][from] = label_of(w);
            }
            return;
        }
        for (v[i] = 0; v[i] < hn.basis[i][i]; ++v[i]) walk(i + 1);
        v[i] = 0;
    };
    walk(0);
    SubgroupClass h = from_action(std::move(gamma), std::move(action));
    h.hnf = hn;
    return h;
}

namespace {

// Backtracking enumeration of all index-n subgroups of a free or presented
// group as coset tables in first-appearance standard labeling, pointed at 0.
// Each subgroup is produced exactly once; `leaf` filters classes.
class TransitiveActionSearch {
  public:
    TransitiveActionSearch(const GammaSpec& gamma, int n, const Budget& budget,
                           const std::function<void(SubgroupClass&&, long long)>& emit)
        : gamma_(gamma), n_(n), budget_(budget), emit_(emit), k_(gamma.rank) {
        act_.assign(2 * k_, std::vector<int>(n_, -1));
        n_used_ = 1;
        nodes_ = 0;
        recurse(0);
    }

  private:
    int rev(int c) const { return c < k_ ? c + k_ : c - k_; }

    bool relators_consistent() const {
        for (const Word& r : gamma_.relators)
            for (int p = 0; p < n_used_; ++p) {
                int q = p;
                bool complete = true;
                for (int x : r.letters) {
                    int c = x > 0 ? x - 1 : k_ + (-x) - 1;
                    q = act_[c][q];
                    if (q < 0) {
                        complete = false;
                        break;
                    }
                }
                if (complete && q != p) return false;
            }
        return true;
    }

    void recurse(int cell_cursor) {
        budget_.check_every(++nodes_, 1 << 14, "subgroup enumeration");
        // next undefined cell in scan order
        int cell = -1;
        for (int c = cell_cursor; c < 2 * k_ * n_used_; ++c) {
            if (act_[c % (2 * k_)][c / (2 * k_)] < 0) {
                cell = c;
                break;
            }
        }
        if (cell < 0) {
            if (n_used_ == n_) leaf();
            return;
        }
        const int p = cell / (2 * k_), c = cell % (2 * k_);
        const int rc = rev(c);
        int limit = n_used_ < n_ ? n_used_ + 1 : n_used_;
        for (int q = 0; q < limit; ++q) {
            if (act_[rc][q] >= 0) continue;
            bool fresh = q == n_used_;
            act_[c][p] = q;
            act_[rc][q] = p;
            if (fresh) ++n_used_;
            if (gamma_.relators.empty() || relators_consistent()) recurse(cell + 1);
            if (fresh) --n_used_;
            act_[c][p] = -1;
            act_[rc][q] = -1;
        }
    }

    void leaf() {
        // keep one subgroup per conjugacy class: the one whose own pointed
        // table is the least among all basepoint choices
        std::vector<std::vector<int>> fwd(act_.begin(), act_.begin() + k_);
        std::vector<std::vector<int>> inv(act_.begin() + k_, act_.end());
        std::vector<int> self = action_canonical_form(k_, n_, fwd, inv, 0);
        long long deck = 1;
        for (int b = 1; b < n_; ++b) {
            std::vector<int> f = action_canonical_form(k_, n_, fwd, inv, b);
            if (f < self) return;  // a conjugate with a smaller table exists
            if (f == self) ++deck;
        }
        emit_(SubgroupClass::from_action(gamma_, std::move(fwd)), deck);
    }

    const GammaSpec& gamma_;
    const int n_;
    const Budget& budget_;
    const std::function<void(SubgroupClass&&, long long)>& emit_;
    const int k_;
    std::vector<std::vector<int>> act_;
    int n_used_;
    long long nodes_;
};

}  // namespace

void for_each_subgroup_class(const GammaSpec& gamma, int n, const Budget& budget,
                             const std::function<void(SubgroupClass&&, long long)>& fn) {
    if (n < 1) throw input_error("subgroup index must be >= 1");
    if (gamma.kind == GammaSpec::Kind::free_abelian) {
        // abelian: classes are exactly the sublattices, deck group is the
        // whole fiber
        for (const SublatticeHNF& hn : enumerate_sublattices(gamma.rank, n))
            fn(SubgroupClass::from_hnf(gamma, hn), n);
        return;
    }
    TransitiveActionSearch(gamma, n, budget, fn);
}

std::vector<SubgroupClass> enumerate_subgroup_classes(const GammaSpec& gamma, int n,
                                                      const Budget& budget) {
    std::vector<SubgroupClass> out;
    for_each_subgroup_class(gamma, n, budget,
                            [&](SubgroupClass&& h, long long) { out.push_back(std::move(h)); });
    if (gamma.kind != GammaSpec::Kind::free_abelian) {
        std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
            return a.pointed_canonical(0) < b.pointed_canonical(0);
        });
    }
    return out;
}

DeckGroup deck_group(const SubgroupClass& h) {
    DeckGroup d;
    std::vector<int> base = h.pointed_canonical(0);
    std::vector<int> deck_index(h.degree, -1);
    for (int j = 0; j < h.degree; ++j) {
        if (h.pointed_canonical(j) == base) {
            deck_index[j] = (int)d.points.size();
            d.points.push_back(j);
        }
    }
    if (h.degree % d.points.size() != 0)
        throw internal_error("deck group order does not divide the degree");
    const int m = (int)d.points.size();
    d.law.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int q = h.trace(h.coset_reps[d.points[j]], d.points[i]);
            if (deck_index[q] < 0)
                throw internal_error("deck translation left the deck point set");
            d.law[i][j] = deck_index[q];
        }
    // the law must be a latin square: the translations act freely
    for (int i = 0; i < m; ++i) {
        std::vector<char> seen(m, 0);
        for (int j = 0; j < m; ++j) {
            if (seen[d.law[i][j]]) throw internal_error("deck law is not free");
            seen[d.law[i][j]] = 1;
        }
    }
    return d;
}

namespace {

// Non-tree forward cells of the coset graph in scan order; these carry the
// Schreier generators. Tree cells are those used by from_action's BFS.
struct SchreierIndex {
    std::vector<int> cell_to_gen;  // (p * k + g) -> 1-based schreier index, 0 if tree
    std::vector<std::pair<int, int>> gen_cells;
};

SchreierIndex schreier_index(const SubgroupClass& h) {
    const int n = h.degree, k = h.gamma.rank;
    // reconstruct the BFS tree exactly as from_action built coset_reps
    std::vector<char> found(n, 0);
    std::vector<char> tree(n * k, 0);
    found[0] = 1;
    int discovered = 1;
    for (int p = 0; p < n && discovered < n; ++p) {
        for (int g = 0; g < k; ++g) {
            int q = h.action[g][p];
            if (!found[q]) {
                found[q] = 1;
                ++discovered;
                tree[p * k + g] = 1;
            }
            q = h.action_inv[g][p];
            if (!found[q]) {
                found[q] = 1;
                ++discovered;
                tree[q * k + g] = 1;  // forward cell (q,g) -> p is the tree edge
            }
        }
    }
    SchreierIndex si;
    si.cell_to_gen.assign(n * k, 0);
    for (int p = 0; p < n; ++p)
        for (int g = 0; g < k; ++g)
            if (!tree[p * k + g]) {
                si.gen_cells.push_back({p, g});
                si.cell_to_gen[p * k + g] = (int)si.gen_cells.size();
            }
    return si;
}

}  // namespace

std::vector<Word> schreier_generators(const SubgroupClass& h) {
    switch (h.gamma.kind) {
        case GammaSpec::Kind::free_abelian: {
            if (!h.hnf) throw internal_error("free abelian subgroup without hnf");
            std::vector<Word> out;
            for (int i = 0; i < h.hnf->dim; ++i) {
                Word w;
                for (int j = 0; j < h.hnf->dim; ++j) {
                    long long e = h.hnf->basis[i][j];
                    for (long long t = 0; t < std::abs(e); ++t)
                        w.letters.push_back(e > 0 ? j + 1 : -(j + 1));
                }
                out.push_back(std::move(w));
            }
            return out;
        }
        case GammaSpec::Kind::free: {
            SchreierIndex si = schreier_index(h);
            std::vector<Word> out;
            for (auto [p, g] : si.gen_cells) {
                Word w = h.coset_reps[p];
                w.letters.push_back(g + 1);
                Word t_q_inv = h.coset_reps[h.action[g][p]].inverse();
                w.letters.insert(w.letters.end(), t_q_inv.letters.begin(),
                                 t_q_inv.letters.end());
                out.push_back(free_reduce(w));
            }
            return out;
        }
        case GammaSpec::Kind::presented:
            throw unsupported_error(
                "schreier generators are not supported for presented groups");
    }
    throw input_error("unknown gamma kind");
}

Word rewrite_in_schreier(const SubgroupClass& h, const Word& ambient) {
    if (h.gamma.kind == GammaSpec::Kind::presented)
        throw unsupported_error("subgroup rewriting is not supported for presented groups");
    if (h.gamma.kind == GammaSpec::Kind::free_abelian) {
        if (!h.hnf) throw internal_error("free abelian subgroup without hnf");
        const int d = h.hnf->dim;
        std::array<long long, 3> e{0, 0, 0};
        for (int x : ambient.letters) {
            int g = std::abs(x) - 1;
            if (g >= d) throw input_error("letter out of range");
            e[g] += x > 0 ? 1 : -1;
        }
        Word out;
        for (int i = d - 1; i >= 0; --i) {
            long long diag = h.hnf->basis[i][i];
            if (e[i] % diag != 0) throw input_error("word is not in the subgroup");
            long long x = e[i] / diag;
            for (int j = 0; j <= i; ++j) e[j] -= x * h.hnf->basis[i][j];
            for (long long t = 0; t < std::abs(x); ++t)
                out.letters.insert(out.letters.begin(), x > 0 ? i + 1 : -(i + 1));
        }
        return out;
    }
    // free: trace and emit the schreier letter of every non-tree edge crossed
    SchreierIndex si = schreier_index(h);
    const int k = h.gamma.rank;
    Word out;
    int p = 0;
    for (int x : ambient.letters) {
        int g = std::abs(x) - 1;
        if (x > 0) {
            int idx = si.cell_to_gen[p * k + g];
            if (idx) out.letters.push_back(idx);
            p = h.action[g][p];
        } else {
            int q = h.action_inv[g][p];  // crossing edge (q,g) backwards
            int idx = si.cell_to_gen[q * k + g];
            if (idx) out.letters.push_back(-idx);
            p = q;
        }
    }
    if (p != 0) throw input_error("word is not in the subgroup");
    return free_reduce(out);
}

Word conjugate_into_generators(const SubgroupClass& h, const Word& u, const Word& h_word) {
    int j = h.trace(u, 0);
    if (h.pointed_canonical(j) != h.pointed_canonical(0))
        throw input_error("u does not normalize the subgroup");
    Word w = u.inverse() * h_word * u;
    return rewrite_in_schreier(h, w);
}

}  // namespace orbi
