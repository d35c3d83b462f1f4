#include "sporadic/sequences.hpp"

#include <omp.h>

#include <algorithm>

namespace sporadic {

namespace {

Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

Int franel(unsigned long k) {
    Int s = 0;
    for (unsigned long j = 0; j <= k; ++j) {
        Int b = binom(k, j);
        s += b * b * b;
    }
    return s;
}

Int f_closed(unsigned long n) {
    Int s = 0;
    Int pow8;
    for (unsigned long k = 0; k <= n; ++k) {
        mpz_ui_pow_ui(pow8.get_mpz_t(), 8, n - k);
        Int term = pow8 * binom(n, k) * franel(k);
        if (k % 2) s -= term; else s += term;
    }
    return s;
}

std::vector<Int> f_sequence(unsigned long count) {
    std::vector<Int> f;
    f.reserve(count);
    if (count == 0) return f;
    f.emplace_back(1);
    for (unsigned long n = 0; n + 1 < count; ++n) {
        // (n+1)^2 F(n+1) = (17n^2+17n+6) F(n) - 72 n^2 F(n-1)
        Int num = Int(17 * n * n + 17 * n + 6) * f[n];
        if (n > 0) num -= Int(72 * n * n) * f[n - 1];
        Int next;
        mpz_divexact_ui(next.get_mpz_t(), num.get_mpz_t(), (n + 1) * (n + 1));
        f.push_back(next);
    }
    return f;
}

Int apery_b(unsigned long n) {
    Int s = 0;
    for (unsigned long k = 0; k <= n; ++k) {
        Int b = binom(n, k);
        s += b * b * binom(n + k, k);
    }
    return s;
}

Int apery_a(unsigned long n) {
    Int s = 0;
    for (unsigned long k = 0; k <= n; ++k) {
        Int b = binom(n, k), c = binom(n + k, k);
        s += b * b * c * c;
    }
    return s;
}

SequencePrefix zagier_u(const RecurrenceTriple& t, unsigned long N) {
    SequencePrefix out;
    out.triple = t;
    out.values.reserve(N + 1);
    out.values.emplace_back(1);
    Rational prev(0), cur(1);
    for (unsigned long n = 0; n < N; ++n) {
        Int nn(static_cast<unsigned long>(n));
        Rational next = (Rational(t.A) * nn * nn + Rational(t.A) * nn + Rational(t.B)) * cur
                        - Rational(t.C) * nn * nn * prev;
        next /= Rational((nn + 1) * (nn + 1));
        next.canonicalize();
        out.values.push_back(next);
        prev = cur;
        cur = next;
    }
    out.integral = true;
    for (const auto& v : out.values)
        if (v.get_den() != 1) { out.integral = false; break; }
    return out;
}

bool integral_to_depth(const RecurrenceTriple& t, unsigned long N) {
    Rational prev(0), cur(1);
    for (unsigned long n = 0; n < N; ++n) {
        Int nn(static_cast<unsigned long>(n));
        Rational next = (Rational(t.A) * nn * nn + Rational(t.A) * nn + Rational(t.B)) * cur
                        - Rational(t.C) * nn * nn * prev;
        next /= Rational((nn + 1) * (nn + 1));
        next.canonicalize();
        if (next.get_den() != 1) return false;
        prev = cur;
        cur = next;
    }
    return true;
}

std::vector<SearchHit> search_integral_serial(const SearchBox& box, unsigned long N) {
    std::vector<SearchHit> hits;
    for (long A = box.a_min; A <= box.a_max; ++A)
        for (long B = box.b_min; B <= box.b_max; ++B)
            for (long C = box.c_min; C <= box.c_max; ++C) {
                RecurrenceTriple t{A, B, C};
                if (integral_to_depth(t, N)) hits.push_back({t, t.nondegenerate()});
            }
    return hits;
}

std::vector<SearchHit> search_integral(const SearchBox& box, unsigned long N) {
    if (box.a_min > box.a_max || box.b_min > box.b_max || box.c_min > box.c_max) return {};
    const long na = box.a_max - box.a_min + 1;
    const long nb = box.b_max - box.b_min + 1;
    const long nc = box.c_max - box.c_min + 1;
    const long total = na * nb * nc;
    std::vector<std::vector<SearchHit>> per_thread(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < total; ++i) {
        long A = box.a_min + i / (nb * nc);
        long B = box.b_min + (i / nc) % nb;
        long C = box.c_min + i % nc;
        RecurrenceTriple t{A, B, C};
        if (integral_to_depth(t, N))
            per_thread[omp_get_thread_num()].push_back({t, t.nondegenerate()});
    }
    std::vector<SearchHit> hits;
    for (auto& v : per_thread) hits.insert(hits.end(), v.begin(), v.end());
    std::sort(hits.begin(), hits.end(),
              [](const SearchHit& x, const SearchHit& y) { return x.triple < y.triple; });
    return hits;
}

}  // namespace sporadic
