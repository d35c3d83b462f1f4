#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "sporadic/arith.hpp"
#include "sporadic/pointcount.hpp"
#include "sporadic/sequences.hpp"

using namespace sporadic;

TEST_CASE("fast fiber counts equal brute-force plane scans (both fields)") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        PrimeField f(p);
        for (std::uint64_t c = 0; c < p; ++c) {
            if (c == 0 || c == f.from_int(-1) || c == f.from_int(8)) continue;
            CHECK(count_fiber(f, c) == count_fiber_bruteforce(f, c));
        }
        QuadField f2(p);
        // a sample of extension-field parameters, including non-base ones
        for (std::uint64_t i = 1; i < f2.size(); i += 7) {
            auto c = f2.element(i);
            if (f2.is_zero(c) || c == f2.from_int(-1) || c == f2.from_int(8)) continue;
            CHECK(count_fiber(f2, c) == count_fiber_bruteforce(f2, c));
        }
    }
}

TEST_CASE("smooth fiber counts satisfy the Hasse bound") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        PrimeField f(p);
        for (std::uint64_t c = 0; c < p; ++c) {
            if (c == 0 || c == f.from_int(-1) || c == f.from_int(8)) continue;
            auto n = count_fiber(f, c);
            double d = std::fabs(static_cast<double>(p) + 1 - static_cast<double>(n));
            CHECK(d <= 2 * std::sqrt(static_cast<double>(p)));
        }
    }
}

TEST_CASE("singular fibers are exactly c in {0,-1,8} plus the s0=0 fiber") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        PrimeField f(p);
        for (std::uint64_t c = 0; c < p; ++c) {
            auto sing = singular_points_scan(f, c);
            bool special = (c == 0 || c == f.from_int(-1) || c == f.from_int(8));
            // c = -1 has two conjugate nodes, rational only when -3 is a square
            bool rational_sing =
                special && !(c == f.from_int(-1) && !f.is_square(f.from_int(-3)));
            CHECK(sing.empty() == !rational_sing);
            if (c == f.from_int(-1) && f.is_square(f.from_int(-3))) CHECK(sing.size() == 2);
        }
    }
}

TEST_CASE("classification agrees with the gradient-scan oracle") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        PrimeField f(p);
        // c = 8: irreducible nodal cubic; node must be the unique scanned
        // singular point, and the count identity q+1-#C = +-1 must hold.
        {
            auto cls = classify_fiber(f, f.from_int(8));
            auto n = count_fiber_bruteforce(f, f.from_int(8));
            if (cls.kind == FiberKind::MultiplicativeSplit) CHECK(n == p);
            if (cls.kind == FiberKind::MultiplicativeNonsplit) CHECK(n == p + 2);
            CHECK(cls.local_trace == static_cast<long>(p) + 1 - static_cast<long>(n));
        }
        // c = -1: line plus conic; trace +1 iff -3 is a square.
        {
            auto cls = classify_fiber(f, f.from_int(-1));
            bool split = f.is_square(f.from_int(-3));
            CHECK(cls.local_trace == (split ? 1 : -1));
            CHECK(cls.kind == (split ? FiberKind::MultiplicativeSplit
                                     : FiberKind::MultiplicativeNonsplit));
        }
        // c = 0 and the s0 = 0 fiber: split, trace 1.
        CHECK(classify_fiber(f, f.zero()).local_trace == 1);
        CHECK(classify_fiber(f, f.zero(), true).local_trace == 1);
        // smooth c rejected
        for (std::uint64_t c = 1; c < p; ++c) {
            if (c == f.from_int(-1) || c == f.from_int(8)) continue;
            CHECK_THROWS_AS(classify_fiber(f, c), std::invalid_argument);
        }
    }
}

TEST_CASE("node of the c=8 fiber over F_7 is (1:1:1)") {
    PrimeField f(7);
    auto sing = singular_points_scan(f, f.from_int(8));
    REQUIRE(sing.size() == 1);
    // normalize last nonzero coordinate to 1
    auto pt = sing[0];
    CHECK(pt[0] == pt[1]);
    CHECK(pt[1] == pt[2]);
}

TEST_CASE("calibration traces") {
    CHECK(surface_trace(7, 2).A == 10);
    CHECK(surface_trace(5, 2).A == 2);
    CHECK(rho_det(7) == 49);
    CHECK(rho_det(5) == 25);
}

TEST_CASE("rho_det matches the character invariant for 5 <= p <= 37") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        long expect = kronecker_symbol(-24, static_cast<long>(p)) * static_cast<long>(p * p);
        CHECK(rho_det(p) == expect);
    }
}

TEST_CASE("parallel and serial traces agree, with identical per-fiber data") {
    for (std::uint64_t p : {13ull, 29ull}) {
        for (int cover : {2, 3}) {
            auto a = surface_trace(p, cover);
            auto b = surface_trace_serial(p, cover);
            CHECK(a.A == b.A);
            REQUIRE(a.per_fiber.size() == b.per_fiber.size());
            CHECK(a.per_fiber.size() == p + 1);
            for (size_t i = 0; i < a.per_fiber.size(); ++i) {
                CHECK(a.per_fiber[i].at_infinity == b.per_fiber[i].at_infinity);
                CHECK(a.per_fiber[i].param_index == b.per_fiber[i].param_index);
                CHECK(a.per_fiber[i].cls.local_trace == b.per_fiber[i].cls.local_trace);
            }
        }
    }
}

TEST_CASE("trace is symmetric under s0 -> -s0 on the double cover") {
    auto res = surface_trace(17, 2);
    PrimeField f(17);
    std::vector<long> tr(17, 0);
    for (const auto& rec : res.per_fiber)
        if (!rec.at_infinity) tr[rec.param_index] = rec.cls.local_trace;
    for (std::uint64_t s = 1; s < 17; ++s) CHECK(tr[s] == tr[f.neg(s)]);
}

TEST_CASE("surface_trace validates its arguments") {
    CHECK_THROWS_AS(surface_trace(9, 2), std::invalid_argument);   // not prime-to-6 prime
    CHECK_THROWS_AS(surface_trace(7, 4), std::invalid_argument);   // bad cover
    CHECK_THROWS_AS(surface_trace(3, 2), std::invalid_argument);   // p | 6
}

TEST_CASE("twisted three-cover trace matches F((p-1)/3) for p = 1 mod 3") {
    for (std::uint64_t p : {7ull, 13ull, 19ull, 31ull, 37ull, 43ull}) {
        auto f = f_sequence(static_cast<unsigned long>((p - 1) / 3 + 1));
        Int target = f[(p - 1) / 3] % static_cast<long>(p);
        CHECK(target == static_cast<long>(three_cover_twisted_trace(p)));
    }
    CHECK_THROWS_AS(three_cover_twisted_trace(11), std::invalid_argument);
}
