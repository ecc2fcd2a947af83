#include "orbi/group.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <random>
#include <sstream>

namespace orbi {

GroupSpec& GroupSpec::operator=(const GroupSpec& o) {
    if (this == &o) return *this;
    kind = o.kind;
    n = o.n;
    cayley_table = o.cayley_table;
    degree = o.degree;
    perm_generators = o.perm_generators;
    factors = o.factors;
    wreath_base = o.wreath_base ? std::make_unique<GroupSpec>(*o.wreath_base) : nullptr;
    return *this;
}

long long perm_rank(const std::vector<int>& p) {
    const int n = (int)p.size();
    long long rank = 0;
    uint64_t seen = 0;  // degree <= 63 always holds here
    long long fact = 1;
    for (int i = 1; i <= n; ++i) fact *= i;
    for (int i = 0; i < n; ++i) {
        fact /= (n - i);
        uint64_t below = seen & ((1ULL << p[i]) - 1);
        rank += (long long)(p[i] - __builtin_popcountll(below)) * fact;
        seen |= 1ULL << p[i];
    }
    return rank;
}

std::vector<int> perm_unrank(long long r, int n) {
    std::vector<int> avail(n);
    for (int i = 0; i < n; ++i) avail[i] = i;
    long long fact = 1;
    for (int i = 1; i < n; ++i) fact *= i;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) {
        long long idx = fact ? r / fact : 0;
        r -= idx * fact;
        p[i] = avail[idx];
        avail.erase(avail.begin() + idx);
        if (n - 1 - i > 0) fact /= (n - 1 - i);
    }
    return p;
}

std::vector<int> perm_inverse(const std::vector<int>& p) {
    std::vector<int> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = (int)i;
    return q;
}

std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

Elem FiniteGroup::mult(Elem a, Elem b) const {
    if (!table_.empty()) return table_[a * order_ + b];
    return mult_structural(a, b);
}

Elem FiniteGroup::mult_structural(Elem a, Elem b) const {
    if (mode_ == Mode::wreath) return encode(wreath_mult(decode(a), decode(b)));
    if (mode_ == Mode::perm) {
        const uint8_t* pa = &perm_rows_[a * degree_];
        const uint8_t* pb = &perm_rows_[b * degree_];
        std::vector<uint8_t> c(degree_);
        for (long long i = 0; i < degree_; ++i) c[i] = pa[pb[i]];
        return perm_lookup(c);
    }
    throw internal_error("table mode group without table");
}

Elem FiniteGroup::inv(Elem a) const {
    if (!inv_table_.empty()) return inv_table_[a];
    if (mode_ == Mode::wreath) return encode(wreath_inv(decode(a)));
    if (mode_ == Mode::perm) {
        const uint8_t* pa = &perm_rows_[a * degree_];
        std::vector<uint8_t> c(degree_);
        for (long long i = 0; i < degree_; ++i) c[pa[i]] = (uint8_t)i;
        return perm_lookup(c);
    }
    throw internal_error("no inverse table");
}

bool FiniteGroup::commutes(Elem a, Elem b) const {
    if (!table_.empty()) return table_[a * order_ + b] == table_[b * order_ + a];
    if (mode_ == Mode::wreath) {
        WreathElement wa = decode(a), wb = decode(b);
        WreathElement ab = wreath_mult(wa, wb), ba = wreath_mult(wb, wa);
        return ab.base == ba.base && ab.perm == ba.perm;
    }
    return mult(a, b) == mult(b, a);
}

const FiniteGroup& FiniteGroup::wreath_base() const {
    if (mode_ != Mode::wreath) throw input_error("not a wreath-mode group");
    return *base_;
}

long long FiniteGroup::wreath_copies() const {
    if (mode_ != Mode::wreath) throw input_error("not a wreath-mode group");
    return copies_;
}

WreathElement FiniteGroup::decode(Elem a) const {
    if (mode_ != Mode::wreath) throw input_error("not a wreath-mode group");
    WreathElement w;
    long long base_part = a % base_radix_[copies_];
    long long sigma_rank = a / base_radix_[copies_];
    w.base.resize(copies_);
    const long long b = base_->order();
    for (long long i = 0; i < copies_; ++i) {
        w.base[i] = base_part % b;
        base_part /= b;
    }
    w.perm = perm_unrank(sigma_rank, (int)copies_);
    return w;
}

Elem FiniteGroup::encode(const WreathElement& w) const {
    if (mode_ != Mode::wreath) throw input_error("not a wreath-mode group");
    long long base_part = 0;
    for (long long i = copies_; i-- > 0;) base_part = base_part * base_->order() + w.base[i];
    return perm_rank(w.perm) * base_radix_[copies_] + base_part;
}

WreathElement FiniteGroup::wreath_compose(const WreathElement& a, const WreathElement& b) const {
    if (mode_ != Mode::wreath) throw input_error("not a wreath-mode group");
    return wreath_mult(a, b);
}

WreathElement FiniteGroup::wreath_mult(const WreathElement& a, const WreathElement& b) const {
    WreathElement c;
    c.perm = perm_compose(a.perm, b.perm);
    c.base.resize(copies_);
    std::vector<int> ainv = perm_inverse(a.perm);
    for (long long i = 0; i < copies_; ++i)
        c.base[i] = base_->mult(a.base[i], b.base[ainv[i]]);
    return c;
}

WreathElement FiniteGroup::wreath_inv(const WreathElement& w) const {
    WreathElement r;
    r.perm = perm_inverse(w.perm);
    r.base.resize(copies_);
    for (long long j = 0; j < copies_; ++j)
        r.base[j] = base_->inv(w.base[w.perm[j]]);
    return r;
}

Elem FiniteGroup::perm_lookup(const std::vector<uint8_t>& images) const {
    long long lo = 0, hi = order_;
    while (lo < hi) {
        long long mid = (lo + hi) / 2;
        int c = std::memcmp(&perm_rows_[mid * degree_], images.data(), degree_);
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == order_ ||
        std::memcmp(&perm_rows_[lo * degree_], images.data(), degree_) != 0)
        throw internal_error("permutation not in group");
    return lo;
}

std::string FiniteGroup::label(Elem a) const {
    if (!labels_.empty()) return labels_[a];
    if (mode_ == Mode::wreath) {
        WreathElement w = decode(a);
        std::ostringstream os;
        os << "(";
        for (long long i = 0; i < copies_; ++i) {
            if (i) os << ",";
            os << w.base[i];
        }
        os << ";";
        for (long long i = 0; i < copies_; ++i) {
            if (i) os << " ";
            os << w.perm[i];
        }
        os << ")";
        return os.str();
    }
    return "g" + std::to_string(a);
}

void FiniteGroup::validate_laws() const {
    auto check_elem = [&](Elem a) {
        if (mult(identity_, a) != a || mult(a, identity_) != a)
            throw input_error("identity is not a two-sided unit");
        Elem ai = inv(a);
        if (mult(a, ai) != identity_ || mult(ai, a) != identity_)
            throw input_error("inverse law fails at element " + std::to_string(a));
    };
    auto check_triple = [&](Elem a, Elem b, Elem c) {
        if (mult(mult(a, b), c) != mult(a, mult(b, c)))
            throw input_error("multiplication is not associative");
    };
    // full checks up to order 512, seeded samples above
    if (order_ <= 512) {
        for (Elem a = 0; a < order_; ++a) check_elem(a);
        for (Elem a = 0; a < order_; ++a)
            for (Elem b = 0; b < order_; ++b)
                for (Elem c = 0; c < order_; ++c) check_triple(a, b, c);
    } else {
        std::mt19937_64 rng(0);
        for (int t = 0; t < 100000; ++t) {
            Elem a = (Elem)(rng() % order_), b = (Elem)(rng() % order_),
                 c = (Elem)(rng() % order_);
            check_elem(a);
            check_triple(a, b, c);
        }
        check_elem(identity_);
        for (Elem g : generators_) check_elem(g);
    }
    // generators generate: closure must reach every index. Above the table
    // threshold this is the one full-order pass we keep; it also certifies
    // that the element indexing is a bijection onto the closure.
    if (!generators_.empty()) {
        std::vector<char> seen(order_, 0);
        std::vector<Elem> queue{identity_};
        seen[identity_] = 1;
        long long reached = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            for (Elem g : generators_) {
                Elem y = mult(queue[qi], g);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    queue.push_back(y);
                }
            }
        }
        if (reached != order_) throw input_error("generators do not generate the group");
    }
}

void FiniteGroup::build_table_from_structural(const GroupConfig& cfg) {
    if (order_ > cfg.table_threshold) return;
    table_.assign(order_ * order_, 0);
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = 0; b < order_; ++b) table_[a * order_ + b] = (int32_t)mult_structural(a, b);
    finish_construction();
}

void FiniteGroup::finish_construction() {
    if (!table_.empty() && inv_table_.empty()) {
        inv_table_.assign(order_, -1);
        for (Elem a = 0; a < order_; ++a)
            for (Elem b = 0; b < order_; ++b)
                if (table_[a * order_ + b] == identity_) {
                    inv_table_[a] = (int32_t)b;
                    break;
                }
        for (Elem a = 0; a < order_; ++a)
            if (inv_table_[a] < 0) throw input_error("element without inverse");
    }
}

FiniteGroup FiniteGroup::trivial() {
    FiniteGroup g;
    g.mode_ = Mode::table;
    g.order_ = 1;
    g.identity_ = 0;
    g.table_ = {0};
    g.inv_table_ = {0};
    g.labels_ = {"e"};
    return g;
}

FiniteGroup FiniteGroup::cyclic(long long n, const GroupConfig& cfg) {
    if (n < 1) throw input_error("cyclic group needs n >= 1");
    if (n > cfg.table_threshold)
        throw input_error("cyclic order exceeds table threshold " +
                          std::to_string(cfg.table_threshold));
    FiniteGroup g;
    g.order_ = n;
    g.identity_ = 0;
    g.table_.assign(n * n, 0);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) g.table_[a * n + b] = (int32_t)((a + b) % n);
    if (n > 1) g.generators_ = {1};
    g.labels_.resize(n);
    for (Elem a = 0; a < n; ++a) g.labels_[a] = std::to_string(a);
    g.finish_construction();
    g.validate_laws();
    return g;
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<Elem>>& table,
                                     const GroupConfig& cfg) {
    long long n = (long long)table.size();
    if (n == 0) throw input_error("empty cayley table");
    if (n > cfg.table_threshold)
        throw input_error("cayley order exceeds table threshold");
    FiniteGroup g;
    g.order_ = n;
    g.table_.assign(n * n, 0);
    for (long long i = 0; i < n; ++i) {
        if ((long long)table[i].size() != n) throw input_error("ragged cayley table");
        for (long long j = 0; j < n; ++j) {
            if (table[i][j] < 0 || table[i][j] >= n)
                throw input_error("cayley entry out of range");
            g.table_[i * n + j] = (int32_t)table[i][j];
        }
    }
    // locate the identity
    g.identity_ = -1;
    for (Elem e = 0; e < n; ++e) {
        bool ok = true;
        for (Elem a = 0; a < n && ok; ++a)
            ok = g.table_[e * n + a] == a && g.table_[a * n + e] == a;
        if (ok) {
            g.identity_ = e;
            break;
        }
    }
    if (g.identity_ < 0) throw input_error("cayley table has no identity");
    g.finish_construction();
    // greedy generating set: extend by the least element outside the closure
    std::vector<char> closed(n, 0);
    closed[g.identity_] = 1;
    long long reached = 1;
    std::vector<Elem> queue{g.identity_};
    while (reached < n) {
        Elem fresh = -1;
        for (Elem e = 0; e < n; ++e)
            if (!closed[e]) {
                fresh = e;
                break;
            }
        g.generators_.push_back(fresh);
        closed[fresh] = 1;
        ++reached;
        queue.push_back(fresh);
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (Elem gen : g.generators_) {
                Elem y = g.mult(queue[qi], gen);
                if (!closed[y]) {
                    closed[y] = 1;
                    ++reached;
                    queue.push_back(y);
                }
            }
    }
    g.validate_laws();
    return g;
}

FiniteGroup FiniteGroup::from_perm_generators(long long degree,
                                              const std::vector<std::vector<int>>& gens,
                                              const GroupConfig& cfg) {
    if (degree < 1 || degree > 255) throw input_error("permutation degree out of range");
    for (const auto& p : gens) {
        if ((long long)p.size() != degree) throw input_error("generator degree mismatch");
        std::vector<char> hit(degree, 0);
        for (int v : p) {
            if (v < 0 || v >= degree || hit[v]) throw input_error("not a permutation");
            hit[v] = 1;
        }
    }
    // closure under products, elements kept as image rows
    std::map<std::vector<uint8_t>, int> index_of;
    std::vector<std::vector<uint8_t>> rows;
    std::vector<uint8_t> id(degree);
    for (long long i = 0; i < degree; ++i) id[i] = (uint8_t)i;
    rows.push_back(id);
    index_of[id] = 0;
    std::vector<std::vector<uint8_t>> gen_rows;
    for (const auto& p : gens) {
        std::vector<uint8_t> r(degree);
        for (long long i = 0; i < degree; ++i) r[i] = (uint8_t)p[i];
        gen_rows.push_back(r);
        if (!index_of.count(r)) {
            index_of[r] = (int)rows.size();
            rows.push_back(r);
        }
    }
    for (size_t qi = 0; qi < rows.size(); ++qi) {
        std::vector<uint8_t> cur = rows[qi];
        for (const auto& gr : gen_rows) {
            std::vector<uint8_t> nxt(degree);
            for (long long i = 0; i < degree; ++i) nxt[i] = cur[gr[i]];
            if (!index_of.count(nxt)) {
                if ((long long)rows.size() >= cfg.max_order)
                    throw input_error("permutation closure exceeds max order " +
                                      std::to_string(cfg.max_order));
                index_of[nxt] = (int)rows.size();
                rows.push_back(nxt);
            }
        }
    }
    FiniteGroup g;
    g.order_ = (long long)rows.size();
    g.degree_ = degree;
    std::sort(rows.begin(), rows.end());
    g.perm_rows_.resize(g.order_ * degree);
    for (long long i = 0; i < g.order_; ++i)
        std::memcpy(&g.perm_rows_[i * degree], rows[i].data(), degree);
    g.mode_ = Mode::perm;
    g.identity_ = g.perm_lookup(id);
    for (const auto& gr : gen_rows) g.generators_.push_back(g.perm_lookup(gr));
    g.build_table_from_structural(cfg);
    g.validate_laws();
    return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                        const GroupConfig& cfg) {
    long long n = a.order() * b.order();
    if (n > cfg.table_threshold)
        throw input_error("direct product exceeds table threshold");
    FiniteGroup g;
    g.order_ = n;
    g.table_.assign(n * n, 0);
    auto pack = [&](Elem x, Elem y) { return x * b.order() + y; };
    for (Elem x1 = 0; x1 < a.order(); ++x1)
        for (Elem y1 = 0; y1 < b.order(); ++y1)
            for (Elem x2 = 0; x2 < a.order(); ++x2)
                for (Elem y2 = 0; y2 < b.order(); ++y2)
                    g.table_[pack(x1, y1) * n + pack(x2, y2)] =
                        (int32_t)pack(a.mult(x1, x2), b.mult(y1, y2));
    g.identity_ = pack(a.identity(), b.identity());
    for (Elem ga : a.generators()) g.generators_.push_back(pack(ga, b.identity()));
    for (Elem gb : b.generators()) g.generators_.push_back(pack(a.identity(), gb));
    g.finish_construction();
    g.validate_laws();
    return g;
}

FiniteGroup wreath_product(const FiniteGroup& base, long long n, const GroupConfig& cfg) {
    if (n < 0) throw input_error("wreath copies must be >= 0");
    if (n == 0) return FiniteGroup::trivial();
    long long order = 1;
    for (long long i = 0; i < n; ++i) {
        order *= base.order();
        if (order > cfg.max_order) throw input_error("wreath product exceeds max order");
    }
    for (long long i = 2; i <= n; ++i) {
        order *= i;
        if (order > cfg.max_order) throw input_error("wreath product exceeds max order");
    }
    FiniteGroup g;
    g.mode_ = FiniteGroup::Mode::wreath;
    g.order_ = order;
    g.copies_ = n;
    g.base_ = std::make_shared<FiniteGroup>(base);
    g.base_radix_.resize(n + 1);
    g.base_radix_[0] = 1;
    for (long long i = 0; i < n; ++i) g.base_radix_[i + 1] = g.base_radix_[i] * base.order();
    g.fact_.resize(n + 1);
    g.fact_[0] = 1;
    for (long long i = 1; i <= n; ++i) g.fact_[i] = g.fact_[i - 1] * i;

    WreathElement id;
    id.base.assign(n, base.identity());
    id.perm.resize(n);
    for (long long i = 0; i < n; ++i) id.perm[i] = (int)i;
    g.identity_ = g.encode(id);

    // generators: base generators in coordinate 0, plus S_n generators
    for (Elem bg : base.generators()) {
        WreathElement w = id;
        w.base[0] = bg;
        g.generators_.push_back(g.encode(w));
    }
    if (n >= 2) {
        WreathElement sw = id;
        std::swap(sw.perm[0], sw.perm[1]);
        g.generators_.push_back(g.encode(sw));
        if (n >= 3) {
            WreathElement cyc = id;
            for (long long i = 0; i < n; ++i) cyc.perm[i] = (int)((i + 1) % n);
            g.generators_.push_back(g.encode(cyc));
        }
    }
    g.build_table_from_structural(cfg);
    g.validate_laws();
    return g;
}

FiniteGroup FiniteGroup::symmetric(long long n, const GroupConfig& cfg) {
    return wreath_product(trivial(), n, cfg);
}

FiniteGroup build_group(const GroupSpec& spec, const GroupConfig& cfg) {
    switch (spec.kind) {
        case GroupSpec::Kind::trivial:
            return FiniteGroup::trivial();
        case GroupSpec::Kind::cyclic:
            return FiniteGroup::cyclic(spec.n, cfg);
        case GroupSpec::Kind::symmetric:
            return FiniteGroup::symmetric(spec.n, cfg);
        case GroupSpec::Kind::cayley:
            return FiniteGroup::from_cayley(spec.cayley_table, cfg);
        case GroupSpec::Kind::perm:
            return FiniteGroup::from_perm_generators(spec.degree, spec.perm_generators, cfg);
        case GroupSpec::Kind::product: {
            if (spec.factors.empty()) return FiniteGroup::trivial();
            FiniteGroup acc = build_group(spec.factors[0], cfg);
            for (size_t i = 1; i < spec.factors.size(); ++i)
                acc = FiniteGroup::direct_product(acc, build_group(spec.factors[i], cfg), cfg);
            return acc;
        }
        case GroupSpec::Kind::wreath: {
            if (!spec.wreath_base) throw input_error("wreath spec without base");
            return wreath_product(build_group(*spec.wreath_base, cfg), spec.n, cfg);
        }
    }
    throw input_error("unknown group spec kind");
}

ConjClassTable conjugacy_classes(const FiniteGroup& g) {
    ConjClassTable t;
    t.class_of.assign(g.order(), -1);
    // structural fast path for table-free wreath groups: one decode and one
    // encode per conjugation instead of two full multiplications
    const bool structural = g.mode_ == FiniteGroup::Mode::wreath && g.table_.empty();
    std::vector<WreathElement> gen_dec, gen_inv_dec;
    std::vector<Elem> gen_inv;
    for (Elem a : g.generators()) {
        gen_inv.push_back(g.inv(a));
        if (structural) {
            gen_dec.push_back(g.decode(a));
            gen_inv_dec.push_back(g.decode(gen_inv.back()));
        }
    }
    std::vector<Elem> queue;
    for (Elem e = 0; e < g.order(); ++e) {
        if (t.class_of[e] >= 0) continue;
        int k = (int)t.representatives.size();
        t.representatives.push_back(e);
        queue.clear();
        queue.push_back(e);
        t.class_of[e] = k;
        long long size = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            Elem x = queue[qi];
            for (size_t ai = 0; ai < g.generators().size(); ++ai) {
                Elem y;
                if (structural) {
                    WreathElement xd = g.decode(x);
                    y = g.encode(g.wreath_mult(g.wreath_mult(gen_dec[ai], xd),
                                               gen_inv_dec[ai]));
                } else {
                    y = g.mult(g.mult(g.generators()[ai], x), gen_inv[ai]);
                }
                if (t.class_of[y] < 0) {
                    t.class_of[y] = k;
                    ++size;
                    queue.push_back(y);
                }
            }
        }
        t.class_sizes.push_back(size);
    }
    return t;
}

std::vector<Elem> centralizer(const FiniteGroup& g, std::span<const Elem> fixed) {
    std::vector<Elem> out;
    for (Elem x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (Elem s : fixed)
            if (!g.commutes(x, s)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return out;
}

long long centralizer_order(const FiniteGroup& g, std::span<const Elem> fixed) {
    long long count = 0;
    for (Elem x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (Elem s : fixed)
            if (!g.commutes(x, s)) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return count;
}

long long wreath_action(const FiniteGroup& wreath, Elem w, long long point,
                        long long m_size,
                        const std::vector<std::vector<long long>>& base_action) {
    WreathElement we = wreath.decode(w);
    long long n = wreath.wreath_copies();
    std::vector<int> sigma_inv = perm_inverse(we.perm);
    std::vector<long long> digits(n);
    for (long long i = 0; i < n; ++i) {
        digits[i] = point % m_size;
        point /= m_size;
    }
    long long out = 0;
    for (long long i = n; i-- > 0;) {
        long long xi = base_action[we.base[i]][digits[sigma_inv[i]]];
        out = out * m_size + xi;
    }
    return out;
}

}  // namespace orbi
