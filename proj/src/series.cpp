#include "orbi/series.hpp"

#include <algorithm>
#include <string>

namespace orbi {

PSeries PSeries::zero(int n) {
    PSeries s;
    s.trunc = n;
    s.c.assign(n + 1, Rational(0));
    return s;
}

PSeries PSeries::one(int n) {
    PSeries s = zero(n);
    s.c[0] = Rational(1);
    return s;
}

bool PSeries::integral() const {
    for (const Rational& x : c)
        if (!x.is_integer()) return false;
    return true;
}

PSeries ps_mul(const PSeries& a, const PSeries& b) {
    if (a.trunc != b.trunc) throw input_error("series truncation mismatch");
    PSeries out = PSeries::zero(a.trunc);
    for (int i = 0; i <= a.trunc; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; i + j <= a.trunc; ++j) {
            if (b.c[j].is_zero()) continue;
            out.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return out;
}

PSeries ps_add(const PSeries& a, const PSeries& b) {
    if (a.trunc != b.trunc) throw input_error("series truncation mismatch");
    PSeries out = a;
    for (int i = 0; i <= a.trunc; ++i) out.c[i] += b.c[i];
    return out;
}

PSeries ps_exp(const PSeries& a) {
    if (!a.c[0].is_zero()) throw input_error("exp needs zero constant term");
    PSeries out = PSeries::one(a.trunc);
    PSeries term = PSeries::one(a.trunc);
    for (int j = 1; j <= a.trunc; ++j) {
        term = ps_mul(term, a);
        for (Rational& x : term.c) x /= Rational(j);
        out = ps_add(out, term);
    }
    return out;
}

PSeries ps_log(const PSeries& a) {
    if (a.c[0] != Rational(1)) throw input_error("log needs constant term 1");
    PSeries b = a;
    b.c[0] = Rational(0);
    PSeries out = PSeries::zero(a.trunc);
    PSeries pw = PSeries::one(a.trunc);
    for (int j = 1; j <= a.trunc; ++j) {
        pw = ps_mul(pw, b);
        Rational coef = Rational(j % 2 == 1 ? 1 : -1) / Rational(j);
        for (int i = 0; i <= a.trunc; ++i) out.c[i] += coef * pw.c[i];
    }
    return out;
}

PSeries ps_geom_power(PSeries s, int r, long long expo) {
    if (r < 1) throw input_error("geometric factor needs exponent >= 1");
    if (expo >= 0) {
        for (long long t = 0; t < expo; ++t)
            for (int i = r; i <= s.trunc; ++i) s.c[i] += s.c[i - r];
    } else {
        for (long long t = 0; t < -expo; ++t)
            for (int i = s.trunc; i >= r; --i) s.c[i] -= s.c[i - r];
    }
    return s;
}

PSeries symmetric_product_series(long long set_size, int trunc) {
    if (set_size < 0) throw input_error("set size must be >= 0");
    return ps_geom_power(PSeries::one(trunc), 1, set_size);
}

void CoeffTable::set(long long m, long long k, long long v) {
    if (m < 0) throw input_error("coefficient table index m must be >= 0");
    if (m > m_max || std::abs(k) > k_abs)
        throw input_error("coefficient entry outside the declared window");
    if (v == 0)
        entries.erase({m, k});
    else
        entries[{m, k}] = v;
}

long long CoeffTable::at(long long m, long long k) const {
    if (m < 0) return 0;
    if (m > m_max)
        throw window_error("coefficient table truncated at m = " + std::to_string(m_max) +
                           ", needs m = " + std::to_string(m));
    if (std::abs(k) > k_abs) return 0;  // the k-window bounds the full support
    auto it = entries.find({m, k});
    return it == entries.end() ? 0 : it->second;
}

PQYSeries PQYSeries::zero(int P, int Q, int Y) {
    PQYSeries s;
    s.P = P;
    s.Q = Q;
    s.Y = Y;
    s.a.assign((size_t)(P + 1) * (Q + 1) * (2 * Y + 1), Rational(0));
    return s;
}

PQYSeries PQYSeries::one(int P, int Q, int Y) {
    PQYSeries s = zero(P, Q, Y);
    s.at(0, 0, 0) = Rational(1);
    return s;
}

bool PQYSeries::integral() const {
    for (const Rational& x : a)
        if (!x.is_integer()) return false;
    return true;
}

PQYSeries PQYSeries::slice(int P2, int Q2, int Y2) const {
    PQYSeries out = zero(P2, Q2, Y2);
    for (int p = 0; p <= std::min(P, P2); ++p)
        for (int q = 0; q <= std::min(Q, Q2); ++q)
            for (int y = -std::min(Y, Y2); y <= std::min(Y, Y2); ++y)
                out.at(p, q, y) = at(p, q, y);
    return out;
}

PQYSeries pqy_mul(const PQYSeries& a, const PQYSeries& b) {
    if (a.P != b.P || a.Q != b.Q || a.Y != b.Y)
        throw input_error("series window mismatch");
    PQYSeries out = PQYSeries::zero(a.P, a.Q, a.Y);
    for (int p1 = 0; p1 <= a.P; ++p1)
        for (int q1 = 0; q1 <= a.Q; ++q1)
            for (int y1 = -a.Y; y1 <= a.Y; ++y1) {
                const Rational& x = a.at(p1, q1, y1);
                if (x.is_zero()) continue;
                for (int p2 = 0; p1 + p2 <= a.P; ++p2)
                    for (int q2 = 0; q1 + q2 <= a.Q; ++q2)
                        for (int y2 = std::max(-a.Y, -a.Y - y1);
                             y2 <= std::min(a.Y, a.Y - y1); ++y2) {
                            const Rational& z = b.at(p2, q2, y2);
                            if (z.is_zero()) continue;
                            out.at(p1 + p2, q1 + q2, y1 + y2) += x * z;
                        }
            }
    return out;
}

void pqy_mul_geom(PQYSeries& s, int n, int m, int k, long long expo) {
    if (n < 1) throw input_error("geometric factor needs p-degree >= 1");
    if (expo >= 0) {
        // (1 - M)^{-1} applied expo times: ascending in p so each source cell
        // is already final
        for (long long t = 0; t < expo; ++t)
            for (int p = n; p <= s.P; ++p)
                for (int q = m; q <= s.Q; ++q)
                    for (int y = -s.Y; y <= s.Y; ++y) {
                        int ys = y - k;
                        if (ys < -s.Y || ys > s.Y) continue;
                        s.at(p, q, y) += s.at(p - n, q - m, ys);
                    }
    } else {
        for (long long t = 0; t < -expo; ++t)
            for (int p = s.P; p >= n; --p)
                for (int q = s.Q; q >= m; --q)
                    for (int y = -s.Y; y <= s.Y; ++y) {
                        int ys = y - k;
                        if (ys < -s.Y || ys > s.Y) continue;
                        s.at(p, q, y) -= s.at(p - n, q - m, ys);
                    }
    }
}

namespace {

void require_positive_p_degree(const PQYSeries& a, const char* who) {
    for (int q = 0; q <= a.Q; ++q)
        for (int y = -a.Y; y <= a.Y; ++y)
            if (!a.at(0, q, y).is_zero())
                throw input_error(std::string(who) +
                                  " needs every monomial to carry p-degree >= 1");
}

}  // namespace

PQYSeries pqy_exp(const PQYSeries& a) {
    require_positive_p_degree(a, "exp");
    PQYSeries out = PQYSeries::one(a.P, a.Q, a.Y);
    PQYSeries term = PQYSeries::one(a.P, a.Q, a.Y);
    for (int j = 1; j <= a.P; ++j) {
        term = pqy_mul(term, a);
        for (Rational& x : term.a) x /= Rational(j);
        for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += term.a[i];
    }
    return out;
}

PQYSeries pqy_log(const PQYSeries& a) {
    if (a.at(0, 0, 0) != Rational(1)) throw input_error("log needs constant term 1");
    PQYSeries b = a;
    b.at(0, 0, 0) = Rational(0);
    require_positive_p_degree(b, "log");
    PQYSeries out = PQYSeries::zero(a.P, a.Q, a.Y);
    PQYSeries pw = PQYSeries::one(a.P, a.Q, a.Y);
    for (int j = 1; j <= a.P; ++j) {
        pw = pqy_mul(pw, b);
        Rational coef = Rational(j % 2 == 1 ? 1 : -1) / Rational(j);
        for (size_t i = 0; i < out.a.size(); ++i) out.a[i] += coef * pw.a[i];
    }
    return out;
}

PQYSeries jacobi_hecke(const CoeffTable& c, long long r, int Q, int Y) {
    if (r < 1) throw input_error("Hecke operator index must be >= 1");
    // window check: the coefficient of q^{am} needs c at m-index up to
    // d * floor(Q/a) for every factorization a d = r
    for (long long a = 1; a <= r; ++a) {
        if (r % a) continue;
        long long d = r / a;
        long long need = d * (Q / a);
        if (need > c.m_max)
            throw window_error("T(" + std::to_string(r) + ") through q^" +
                               std::to_string(Q) + " needs the coefficient window m <= " +
                               std::to_string(need) + ", table has m_max = " +
                               std::to_string(c.m_max));
    }
    PQYSeries out = PQYSeries::zero(0, Q, Y);
    for (long long a = 1; a <= r; ++a) {
        if (r % a) continue;
        long long d = r / a;
        for (long long m = 0; a * m <= Q; ++m)
            for (long long k = -c.k_abs; k <= c.k_abs; ++k) {
                if (std::abs(a * k) > Y) continue;
                long long v = c.at(m * d, k);
                if (v == 0) continue;
                out.at(0, (int)(a * m), (int)(a * k)) +=
                    Rational(BigInt(v), BigInt(a));
            }
    }
    return out;
}

namespace {

void require_product_window(const CoeffTable& c, int P, int Q) {
    long long need = (long long)P * Q;
    if (need > c.m_max)
        throw window_error("window (P,Q) = (" + std::to_string(P) + "," +
                           std::to_string(Q) + ") needs the coefficient window m <= " +
                           std::to_string(need) + ", table has m_max = " +
                           std::to_string(c.m_max));
}

}  // namespace

PQYSeries dmvv_product(const CoeffTable& c, int P, int Q, int Y) {
    require_product_window(c, P, Q);
    // work with the y-window wide enough that powers of every supported
    // factor stay representable: |y| of any contributing monomial is at most
    // k_abs * P
    int yw = std::max<long long>(Y, c.k_abs * P);
    PQYSeries out = PQYSeries::one(P, Q, yw);
    for (int n = 1; n <= P; ++n)
        for (int m = 0; m <= Q; ++m)
            for (long long k = -c.k_abs; k <= c.k_abs; ++k) {
                long long e = c.at((long long)m * n, k);
                if (e != 0) pqy_mul_geom(out, n, m, (int)k, e);
            }
    return out.slice(P, Q, Y);
}

PQYSeries dmvv_exp(const CoeffTable& c, int P, int Q, int Y) {
    require_product_window(c, P, Q);
    int yw = std::max<long long>(Y, c.k_abs * P);
    PQYSeries arg = PQYSeries::zero(P, Q, yw);
    for (int r = 1; r <= P; ++r) {
        PQYSeries slice = jacobi_hecke(c, r, Q, yw);
        for (int q = 0; q <= Q; ++q)
            for (int y = -yw; y <= yw; ++y) arg.at(r, q, y) = slice.at(0, q, y);
    }
    PQYSeries out = pqy_exp(arg);
    if (!out.integral())
        throw internal_error("Hecke exponential of an integer table must be integral");
    return out.slice(P, Q, Y);
}

}  // namespace orbi
