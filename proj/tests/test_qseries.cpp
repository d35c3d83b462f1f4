#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sporadic/qseries.hpp"
#include "sporadic/sequences.hpp"

using namespace sporadic;

namespace {

// Naive eta(m tau)/w^(m/24)-style unit via the Euler product done term by
// term directly from the pentagonal-free definition prod (1 - q^(mk)).
QSeries naive_eta_quotient(const EtaQuotientSpec& spec, long N) {
    long lead = eta_leading_w_exponent(spec);
    QSeries r = shift(constant_series(1, N), lead);
    for (auto [m, e] : spec) {
        for (long k = 1; 2 * m * k <= N; ++k) {
            // factor (1 - w^(2mk)) to the power e
            QSeries f(N);
            f.set_coeff(0, 1);
            if (2 * m * k < N) f.set_coeff(2 * m * k, -1);
            for (long i = 0; i < (e > 0 ? e : -e); ++i) r = (e > 0) ? r * f : div(r, f);
        }
    }
    return r;
}

}  // namespace

TEST_CASE("eta quotient matches a naive product oracle") {
    for (const EtaQuotientSpec& s :
         {EtaQuotientSpec{{1, 24}}, EtaQuotientSpec{{2, 12}}, kTSpec}) {
        auto fast = eta_quotient(s, 80);
        auto slow = naive_eta_quotient(s, 80);
        for (long n = fast.valuation(); n < 80; ++n) CHECK(fast.coeff(n) == slow.coeff(n));
    }
}

TEST_CASE("t-series basics") {
    auto t = t_series(40);
    CHECK(t.valuation() == 2);
    CHECK(t.coeff(2) == 1);
    for (long n = 2; n < 40; n += 2) CHECK(t.coeff(n).get_den() == 1);
    for (long n = 3; n < 40; n += 2) CHECK(t.coeff(n) == 0);
}

TEST_CASE("s = sqrt(t) squares back to t and has leading +w") {
    auto t = t_series(60);
    auto s = s_series(60);
    CHECK(s.valuation() == 1);
    CHECK(s.coeff(1) == 1);
    auto s2 = s * s;
    for (long n = 2; n < std::min(s2.trunc(), t.trunc()); ++n)
        CHECK(s2.coeff(n) == t.coeff(n));
    // s has only odd exponents
    for (long n = 2; n < 60; n += 2) CHECK(s.coeff(n) == 0);
}

TEST_CASE("sqrt_series validates its input") {
    QSeries a(10);
    a.set_coeff(1, 1);  // odd valuation
    CHECK_THROWS_AS(sqrt_series(a), std::domain_error);
    QSeries b(10);
    b.set_coeff(2, 2);  // leading coefficient not a square
    CHECK_THROWS_AS(sqrt_series(b), std::domain_error);
}

TEST_CASE("g-series matches listed coefficients and parity/denominator facts") {
    auto g = g_series(400);
    CHECK(g.coeff(1) == 1);
    CHECK(g.coeff(3) == Rational(3, 2));
    CHECK(g.coeff(5) == Rational(-9, 8));
    CHECK(g.coeff(7) == Rational(-85, 16));
    CHECK(g.coeff(9) == Rational(-981, 128));
    bool denominators_grow = false;
    for (long n = 1; n < 400; ++n) {
        if (n % 2 == 0) {
            CHECK(g.coeff(n) == 0);  // even coefficients vanish
        } else {
            // denominators are powers of two
            Int d = g.coeff(n).get_den();
            CHECK(padic_valuation(d, Int(2)) ==
                  mpz_sizeinbase(d.get_mpz_t(), 2) - 1);
            if (padic_valuation(d, Int(2)) > 40) denominators_grow = true;
        }
    }
    CHECK(denominators_grow);  // unbounded denominators (noncongruence witness)
}

TEST_CASE("g equals P times theta of s") {
    long N = 120;
    auto g = g_series(N);
    auto h = p_series(N) * theta_w(s_series(N));
    for (long n = 1; n < g.trunc(); ++n) CHECK(g.coeff(n) == h.coeff(n));
}

TEST_CASE("Picard-Fuchs residual vanishes under the theta reading only") {
    auto pf = verify_picard_fuchs(160);
    CHECK(pf.theta_reading.is_zero());
    CHECK(!pf.ordinary_reading.is_zero());
    CHECK(pf.ordinary_reading.valuation() == 0);
    CHECK(pf.ordinary_reading.coeff(0) == 84);  // 2 * u_2 = 2 * 42
}

TEST_CASE("j-series has the classical constants") {
    auto j = j_series(40);
    CHECK(j.valuation() == -2);
    CHECK(j.coeff(-2) == 1);
    CHECK(j.coeff(-1) == 0);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(2) == 196884);
    for (long n = -1; n < 40; n += 2) CHECK(j.coeff(n) == 0);  // even exponents only
}

TEST_CASE("series algebra: div and inflate round trips") {
    auto t = t_series(50);
    auto s = s_series(50);
    auto q = div(t, s);
    for (long n = q.valuation(); n < q.trunc(); ++n) CHECK(q.coeff(n) == s.coeff(n));
    auto infl = inflate(constant_series(3, 10), 2);
    CHECK(infl.coeff(0) == 3);
    auto sh = shift(s, -1);
    CHECK(sh.valuation() == 0);
    CHECK(sh.coeff(0) == 1);
}

TEST_CASE("printed s-j relation has the expected nonzero residual") {
    auto res = printed_sj_relation_residual(200);
    CHECK(!res.is_zero());
    CHECK(res.valuation() == 0);
    CHECK(res.coeff(0) == Rational(1, 2985984));  // 1/12^6
}

TEST_CASE("a genuine s-j relation exists in bounds and vanishes") {
    auto rel = derive_sj_relation(24, 1, 320);
    CHECK(rel.found);
    CHECK(rel.verified_order >= 300);
    // integral, content-one coefficients
    Int content = 0;
    bool nonzero = false;
    for (const auto& row : rel.coeffs)
        for (const auto& c : row) {
            CHECK(c.get_den() == 1);
            if (c != 0) nonzero = true;
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
        }
    CHECK(nonzero);
    CHECK(content == 1);
    // the j-degree really is 1: some coefficient in the l = 1 block is nonzero
    bool uses_j = false;
    for (const auto& c : rel.coeffs.at(1))
        if (c != 0) uses_j = true;
    CHECK(uses_j);
}

TEST_CASE("insufficient truncation for the relation search is loud") {
    CHECK_THROWS_AS(derive_sj_relation(24, 1, 30), std::invalid_argument);
}

TEST_CASE("coefficient access beyond the truncation is loud") {
    auto t = t_series(10);
    CHECK_THROWS_AS(t.coeff(10), std::out_of_range);
    CHECK(t.coeff(-5) == 0);  // below offset: identically zero
}
