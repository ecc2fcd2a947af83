#pragma once

#include <map>
#include <utility>
#include <vector>

#include "orbi/bigint.hpp"
#include "orbi/error.hpp"

namespace orbi {

// Truncated formal power series in one variable with exact rational
// coefficients; every operation is exact through the truncation degree.
struct PSeries {
    int trunc = 0;
    std::vector<Rational> c;

    static PSeries zero(int n);
    static PSeries one(int n);
    Rational& operator[](int i) { return c[i]; }
    const Rational& operator[](int i) const { return c[i]; }
    bool integral() const;
    friend bool operator==(const PSeries& a, const PSeries& b) {
        return a.trunc == b.trunc && a.c == b.c;
    }
};

PSeries ps_mul(const PSeries& a, const PSeries& b);
PSeries ps_add(const PSeries& a, const PSeries& b);
PSeries ps_exp(const PSeries& a);  // requires zero constant term
PSeries ps_log(const PSeries& a);  // requires constant term 1
// Multiply by (1 - p^r)^{-expo}; expo may be negative.
PSeries ps_geom_power(PSeries s, int r, long long expo);
// Sum over n of |SP^n(X)| p^n for |X| = set_size, i.e. (1 - p)^{-set_size}.
PSeries symmetric_product_series(long long set_size, int trunc);

// Integer coefficient table c(m, k). The k-window bounds the entire support
// (the underlying series is Laurent-finite in y); the m-window is a
// truncation horizon; values at m > m_max are unknown, and any operation
// that would need them raises window_error rather than assuming zero.
struct CoeffTable {
    long long m_max = 0;
    long long k_abs = 0;
    std::map<std::pair<long long, long long>, long long> entries;

    void set(long long m, long long k, long long v);
    long long at(long long m, long long k) const;
};

// Dense truncated series in (p, q, y): p-degree 0..P, q-degree 0..Q,
// y-exponent -Y..Y, exact rational coefficients.
struct PQYSeries {
    int P = 0, Q = 0, Y = 0;
    std::vector<Rational> a;

    static PQYSeries zero(int P, int Q, int Y);
    static PQYSeries one(int P, int Q, int Y);
    size_t idx(int p, int q, int y) const {
        return ((size_t)p * (Q + 1) + q) * (2 * Y + 1) + (y + Y);
    }
    Rational& at(int p, int q, int y) { return a[idx(p, q, y)]; }
    const Rational& at(int p, int q, int y) const { return a[idx(p, q, y)]; }
    bool integral() const;
    PQYSeries slice(int P2, int Q2, int Y2) const;
    friend bool operator==(const PQYSeries& x, const PQYSeries& y) {
        return x.P == y.P && x.Q == y.Q && x.Y == y.Y && x.a == y.a;
    }
};

PQYSeries pqy_mul(const PQYSeries& a, const PQYSeries& b);
// In-place multiply by (1 - p^n q^m y^k)^{-expo}; n >= 1, expo may be negative.
void pqy_mul_geom(PQYSeries& s, int n, int m, int k, long long expo);
// exp/log terminate because every nonzero monomial of the argument (minus the
// constant for log) must carry p-degree >= 1.
PQYSeries pqy_exp(const PQYSeries& a);
PQYSeries pqy_log(const PQYSeries& a);

// The weight-0 Jacobi Hecke operator on the (q,y)-series of c, truncated to
// (Q, Y): coefficient of q^{am} y^{ak} gains c(m d, k)/a for every
// factorization a d = r. Output is a PQYSeries with P = 0.
PQYSeries jacobi_hecke(const CoeffTable& c, long long r, int Q, int Y);

// The infinite product over n >= 1, m >= 0, k of (1 - p^n q^m y^k)^{-c(mn,k)},
// exact through (P, Q, Y). Requires m_max >= P*Q.
PQYSeries dmvv_product(const CoeffTable& c, int P, int Q, int Y);

// exp(sum over r of p^r T(r)[c]), exact through (P, Q, Y); coefficients are
// checked to be integers. Requires m_max >= P*Q.
PQYSeries dmvv_exp(const CoeffTable& c, int P, int Q, int Y);

}  // namespace orbi
