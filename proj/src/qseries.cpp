#include "sporadic/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "sporadic/sequences.hpp"

namespace sporadic {

long QSeries::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return offset_ + static_cast<long>(i);
    return trunc_;
}

Rational QSeries::coeff(long n) const {
    if (n >= trunc_) throw std::out_of_range("QSeries::coeff beyond truncation");
    if (n < offset_) return Rational(0);
    return coeffs_[static_cast<size_t>(n - offset_)];
}

void QSeries::set_coeff(long n, const Rational& v) {
    if (n < offset_ || n >= trunc_) throw std::out_of_range("QSeries::set_coeff out of range");
    coeffs_[static_cast<size_t>(n - offset_)] = v;
}

QSeries QSeries::truncated(long new_trunc) const {
    if (new_trunc > trunc_) throw std::invalid_argument("QSeries::truncated cannot extend");
    QSeries r(new_trunc, std::min(offset_, new_trunc));
    for (long n = r.offset_; n < new_trunc; ++n) r.set_coeff(n, coeff(n));
    return r;
}

QSeries constant_series(const Rational& c, long trunc) {
    QSeries r(trunc, 0);
    if (trunc > 0) r.set_coeff(0, c);
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    long trunc = std::min(a.trunc(), b.trunc());
    long offset = std::min(a.offset(), b.offset());
    QSeries r(trunc, std::min(offset, trunc));
    for (long n = r.offset(); n < trunc; ++n) r.set_coeff(n, a.coeff(n) + b.coeff(n));
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    return a + Rational(-1) * b;
}

QSeries operator*(const Rational& c, const QSeries& a) {
    QSeries r(a.trunc(), a.offset());
    for (long n = a.offset(); n < a.trunc(); ++n) r.set_coeff(n, c * a.coeff(n));
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    long va = a.valuation(), vb = b.valuation();
    long trunc = std::min(a.trunc() + vb, b.trunc() + va);
    QSeries r(trunc, std::min(va + vb, trunc));
    for (long i = va; i < a.trunc(); ++i) {
        Rational ai = a.coeff(i);
        if (ai == 0) continue;
        long jmax = std::min(b.trunc(), trunc - i);
        for (long j = vb; j < jmax; ++j) {
            Rational bj = b.coeff(j);
            if (bj == 0) continue;
            r.set_coeff(i + j, r.coeff(i + j) + ai * bj);
        }
    }
    return r;
}

QSeries theta_w(const QSeries& a) {
    QSeries r(a.trunc(), a.offset());
    for (long n = a.offset(); n < a.trunc(); ++n) r.set_coeff(n, Rational(n) * a.coeff(n));
    return r;
}

QSeries shift(const QSeries& a, long k) {
    QSeries r(a.trunc() + k, a.offset() + k);
    for (long n = a.offset(); n < a.trunc(); ++n) r.set_coeff(n + k, a.coeff(n));
    return r;
}

QSeries inflate(const QSeries& a, long k) {
    if (k < 1) throw std::invalid_argument("inflate: k must be positive");
    QSeries r(a.trunc() * k, a.offset() * k);
    for (long n = a.offset(); n < a.trunc(); ++n) r.set_coeff(n * k, a.coeff(n));
    return r;
}

QSeries div(const QSeries& a, const QSeries& b) {
    long vb = b.valuation();
    if (vb == b.trunc()) throw std::domain_error("div: division by zero series");
    long len = b.trunc() - vb;
    // Invert the unit part of b.
    QSeries inv(len, 0);
    Rational lead = b.coeff(vb);
    inv.set_coeff(0, 1 / lead);
    for (long k = 1; k < len; ++k) {
        Rational s(0);
        for (long j = 1; j <= k; ++j) s += b.coeff(vb + j) * inv.coeff(k - j);
        inv.set_coeff(k, -s / lead);
    }
    return shift(a, -vb) * inv;
}

QSeries sqrt_series(const QSeries& a) {
    long v = a.valuation();
    if (v == a.trunc()) throw std::domain_error("sqrt_series of zero series");
    if (v % 2 != 0) throw std::domain_error("sqrt_series: odd valuation");
    Rational lead = a.coeff(v);
    Int num = lead.get_num(), den = lead.get_den();
    if (lead < 0 || !mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        throw std::domain_error("sqrt_series: leading coefficient not a rational square");
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r0(rn, rd);

    long len = a.trunc() - v;
    std::vector<Rational> s(static_cast<size_t>(len));
    s[0] = r0;
    for (long k = 1; k < len; ++k) {
        Rational acc = a.coeff(v + k);
        for (long j = 1; j < k; ++j) acc -= s[j] * s[k - j];
        s[k] = acc / (2 * r0);
        s[k].canonicalize();
    }
    QSeries out(v / 2 + len, v / 2);
    for (long k = 0; k < len; ++k) out.set_coeff(v / 2 + k, s[static_cast<size_t>(k)]);
    return out;
}

QSeries poly_at(const std::vector<Rational>& c, const QSeries& x, long trunc) {
    QSeries acc = constant_series(0, trunc);
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = (acc * x + constant_series(*it, trunc)).truncated(trunc);
    return acc;
}

// --------------------------------------------------------------------------
// Eta quotients (integer arithmetic at q-level).
// --------------------------------------------------------------------------

const EtaQuotientSpec kTSpec = {{2, 1}, {6, 5}, {1, -5}, {3, -1}};

long eta_leading_w_exponent(const EtaQuotientSpec& spec) {
    long s = 0;
    for (auto [m, e] : spec) {
        if (m < 1) throw std::invalid_argument("eta quotient: multiplier must be positive");
        s += m * e;
    }
    if (s % 12 != 0 || s < 0)
        throw std::domain_error("eta quotient: fractional or negative leading exponent");
    return s / 12;
}

namespace {

// In-place multiply by (1 - q^k), indices < M.
void mul_binomial(std::vector<Int>& u, long k) {
    for (long i = static_cast<long>(u.size()) - 1; i >= k; --i) u[i] -= u[i - k];
}

// In-place divide by (1 - q^k).
void div_binomial(std::vector<Int>& u, long k) {
    for (long i = k; i < static_cast<long>(u.size()); ++i) u[i] += u[i - k];
}

// Unit part prod_m prod_n (1 - q^{mn})^{e_m} to M q-terms.
std::vector<Int> eta_unit_q(const EtaQuotientSpec& spec, long M) {
    std::vector<Int> u(static_cast<size_t>(std::max(M, 0L)));
    if (M <= 0) return u;
    u[0] = 1;
    for (auto [m, e] : spec)
        for (long n = 1; m * n < M; ++n)
            for (long rep = 0; rep < std::abs(e); ++rep)
                (e > 0 ? mul_binomial : div_binomial)(u, m * n);
    return u;
}

long q_terms_for(long N, long lead_w) { return std::max(0L, (N - lead_w + 1) / 2); }

}  // namespace

QSeries eta_quotient(const EtaQuotientSpec& spec, long N) {
    long lead = eta_leading_w_exponent(spec);
    long M = q_terms_for(N, lead);
    auto u = eta_unit_q(spec, M);
    QSeries out(N, std::min(lead, N));
    for (long i = 0; i < M && lead + 2 * i < N; ++i)
        out.set_coeff(lead + 2 * i, Rational(u[static_cast<size_t>(i)]));
    return out;
}

QSeries t_series(long N) { return eta_quotient(kTSpec, N); }

QSeries s_series(long N) {
    // s = w * sqrt(unit of t in q); work at q-level to keep the convolution short.
    long M = q_terms_for(N, 1);
    auto u = eta_unit_q(kTSpec, M);
    std::vector<Rational> s(static_cast<size_t>(std::max(M, 0L)));
    if (M > 0) {
        s[0] = 1;
        for (long k = 1; k < M; ++k) {
            Rational acc(u[static_cast<size_t>(k)]);
            for (long j = 1; j < k; ++j) acc -= s[j] * s[k - j];
            s[k] = acc / 2;
            s[k].canonicalize();
        }
    }
    QSeries out(N, std::min(1L, N));
    for (long i = 0; i < M && 1 + 2 * i < N; ++i) out.set_coeff(1 + 2 * i, s[static_cast<size_t>(i)]);
    return out;
}

QSeries p_series(long N) {
    long M = q_terms_for(N, 0);
    // t as integer q-series: t = q * unit.
    auto unit = eta_unit_q(kTSpec, M);
    auto F = f_sequence(static_cast<unsigned long>(std::max(M, 1L)));
    // Accumulate sum a_n t^n with a_n = (-1)^n F(n); t^n has q-valuation n.
    std::vector<Int> acc(static_cast<size_t>(std::max(M, 0L)));
    std::vector<Int> tpow(static_cast<size_t>(std::max(M, 0L)));
    if (M > 0) tpow[0] = 1;
    for (long n = 0; n < M; ++n) {
        const Int& an = F[static_cast<unsigned long>(n)];
        for (long i = n; i < M; ++i) {
            if (n % 2 == 0)
                mpz_addmul(acc[i].get_mpz_t(), an.get_mpz_t(), tpow[i].get_mpz_t());
            else
                mpz_submul(acc[i].get_mpz_t(), an.get_mpz_t(), tpow[i].get_mpz_t());
        }
        if (n + 1 >= M) break;
        // tpow <- tpow * q * unit, valuation n+1
        std::vector<Int> next(static_cast<size_t>(M));
        for (long i = n; i < M - 1; ++i) {
            if (tpow[i] == 0) continue;
            for (long j = 0; i + 1 + j < M; ++j)
                mpz_addmul(next[i + 1 + j].get_mpz_t(), tpow[i].get_mpz_t(),
                           unit[static_cast<size_t>(j)].get_mpz_t());
        }
        tpow.swap(next);
    }
    QSeries out(2 * M > N ? 2 * M : N, 0);
    for (long i = 0; i < M; ++i) out.set_coeff(2 * i, Rational(acc[static_cast<size_t>(i)]));
    return out;
}

QSeries g_series(long N) {
    return (p_series(N) * theta_w(s_series(N))).truncated(N);
}

QSeries j_series(long N) {
    long M = N / 2 + 3;  // q-terms
    QSeries e4(M, 0);
    e4.set_coeff(0, 1);
    for (long n = 1; n < M; ++n) {
        Int s3 = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) s3 += Int(d) * d * d;
        e4.set_coeff(n, Rational(240 * s3));
    }
    auto du = eta_unit_q({{1, 24}}, M);
    QSeries delta(M + 1, 1);
    for (long i = 0; i < M; ++i) delta.set_coeff(1 + i, Rational(du[static_cast<size_t>(i)]));
    QSeries jq = div((e4 * e4 * e4).truncated(M), delta);
    return inflate(jq, 2).truncated(N);
}

// --------------------------------------------------------------------------
// Picard-Fuchs residuals (series in t).
// --------------------------------------------------------------------------

PicardFuchsResidual verify_picard_fuchs(long N) {
    if (N < 3) throw std::invalid_argument("verify_picard_fuchs: need N >= 3");
    auto F = f_sequence(static_cast<unsigned long>(N));
    QSeries P(N, 0);
    for (long n = 0; n < N; ++n) {
        Rational a(F[static_cast<unsigned long>(n)]);
        P.set_coeff(n, n % 2 == 0 ? a : -a);
    }
    QSeries A(N, 0), B(N, 0), C(N, 0);
    A.set_coeff(0, 1); A.set_coeff(1, 17); if (N > 2) A.set_coeff(2, 72);   // (8t+1)(9t+1)
    B.set_coeff(1, 17); if (N > 2) B.set_coeff(2, 144);                     // t(144t+17)
    C.set_coeff(1, 6); if (N > 2) C.set_coeff(2, 72);                       // 6t(12t+1)

    PicardFuchsResidual out;
    // theta = t d/dt reading
    QSeries tP = theta_w(P), ttP = theta_w(tP);
    out.theta_reading = ((A * ttP) + (B * tP) + (C * P)).truncated(N);

    // ordinary d/dt reading
    auto ddt = [](const QSeries& x) {
        QSeries r(x.trunc() - 1, 0);
        for (long n = 1; n < x.trunc(); ++n) r.set_coeff(n - 1, Rational(n) * x.coeff(n));
        return r;
    };
    QSeries P1 = ddt(P), P2 = ddt(P1);
    out.ordinary_reading = ((A * P2) + (B * P1) + (C * P)).truncated(N - 2);
    return out;
}

// --------------------------------------------------------------------------
// s-j relation.
// --------------------------------------------------------------------------

QSeries printed_sj_relation_residual(long N) {
    QSeries s = s_series(N), j = j_series(N);
    QSeries s2 = (s * s).truncated(N);
    auto pow_t = [N](const QSeries& x, long e) {
        QSeries r = constant_series(1, N);
        for (long i = 0; i < e; ++i) r = (r * x).truncated(N);
        return r;
    };
    QSeries a = pow_t(s2 - constant_series(Rational(1, 6), N), 3);
    QSeries bpoly = poly_at({Rational(-1, 24), Rational(3, 4), Rational(-7, 2), Rational(1)},
                            s2, N);
    QSeries b = pow_t(bpoly, 3);
    QSeries c = Rational(1, 72) *
                (pow_t(s2 - constant_series(Rational(1, 9), N), 2) * pow_t(s, 12) *
                 pow_t(s2 - constant_series(Rational(1, 8), N), 3));
    return (a * b + c * j).truncated(N - 2);
}

SjRelation derive_sj_relation(long deg_s, long deg_j, long N) {
    SjRelation rel;
    rel.deg_s = deg_s;
    rel.deg_j = deg_j;

    QSeries s = s_series(N), j = j_series(N);
    const long U = (deg_s + 1) * (deg_j + 1);

    std::vector<QSeries> mono;
    mono.reserve(static_cast<size_t>(U));
    QSeries jl = constant_series(1, N);
    for (long l = 0; l <= deg_j; ++l) {
        QSeries m = jl;
        for (long k = 0; k <= deg_s; ++k) {
            mono.push_back(m);
            if (k < deg_s) m = m * s;
        }
        if (l < deg_j) jl = jl * j;
    }

    long lo = 0, hi = N;
    for (const auto& m : mono) {
        lo = std::min(lo, m.offset());
        hi = std::min(hi, m.trunc());
    }
    const long R = hi - lo;
    if (R < U + 1) {
        long needed = U + 1 + 2 * deg_j + 2;  // rows available grow ~N
        throw std::invalid_argument("derive_sj_relation: truncation too small, need N >= " +
                                    std::to_string(needed));
    }

    // Row-reduce the R x U matrix of w-expansion coefficients.
    std::vector<std::vector<Rational>> mat(static_cast<size_t>(R),
                                           std::vector<Rational>(static_cast<size_t>(U)));
    for (long r = 0; r < R; ++r)
        for (long u = 0; u < U; ++u)
            mat[static_cast<size_t>(r)][static_cast<size_t>(u)] = mono[static_cast<size_t>(u)].coeff(lo + r);

    std::vector<long> pivot_of_col(static_cast<size_t>(U), -1);
    long rank = 0;
    for (long col = 0; col < U && rank < R; ++col) {
        long piv = -1;
        for (long r = rank; r < R; ++r)
            if (mat[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(mat[static_cast<size_t>(rank)], mat[static_cast<size_t>(piv)]);
        Rational inv = 1 / mat[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (long u = col; u < U; ++u) mat[static_cast<size_t>(rank)][static_cast<size_t>(u)] *= inv;
        for (long r = 0; r < R; ++r) {
            if (r == rank) continue;
            Rational f = mat[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (long u = col; u < U; ++u)
                mat[static_cast<size_t>(r)][static_cast<size_t>(u)] -=
                    f * mat[static_cast<size_t>(rank)][static_cast<size_t>(u)];
        }
        pivot_of_col[static_cast<size_t>(col)] = rank;
        ++rank;
    }

    rel.printed_residual = printed_sj_relation_residual(N);
    if (rank == U) return rel;  // no relation in bounds

    // Kernel vector for the first free column: lowest-degree relation under
    // the (j-degree, s-degree) column ordering.
    long free_col = -1;
    for (long u = 0; u < U; ++u)
        if (pivot_of_col[static_cast<size_t>(u)] < 0) { free_col = u; break; }
    std::vector<Rational> v(static_cast<size_t>(U));
    v[static_cast<size_t>(free_col)] = 1;
    for (long u = 0; u < free_col; ++u) {
        long pr = pivot_of_col[static_cast<size_t>(u)];
        if (pr >= 0) v[static_cast<size_t>(u)] = -mat[static_cast<size_t>(pr)][static_cast<size_t>(free_col)];
    }

    // Clear denominators, divide by content, make leading coefficient positive.
    Int lcm_den = 1;
    for (const auto& x : v)
        if (x != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
    Int content = 0;
    for (auto& x : v) {
        x *= Rational(lcm_den);
        x.canonicalize();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num().get_mpz_t());
    }
    int sign = 1;
    for (const auto& x : v)
        if (x != 0) { sign = x < 0 ? -1 : 1; break; }
    for (auto& x : v) {
        x /= Rational(sign * content);
        x.canonicalize();
    }

    rel.found = true;
    rel.coeffs.assign(static_cast<size_t>(deg_j + 1),
                      std::vector<Rational>(static_cast<size_t>(deg_s + 1)));
    QSeries check = constant_series(0, hi);
    for (long l = 0; l <= deg_j; ++l)
        for (long k = 0; k <= deg_s; ++k) {
            const Rational& c = v[static_cast<size_t>(l * (deg_s + 1) + k)];
            rel.coeffs[static_cast<size_t>(l)][static_cast<size_t>(k)] = c;
            if (c != 0)
                check = check + c * mono[static_cast<size_t>(l * (deg_s + 1) + k)];
        }
    if (!check.is_zero())
        throw std::logic_error("derive_sj_relation: kernel vector fails to vanish");
    rel.verified_order = check.trunc();
    return rel;
}

}  // namespace sporadic
