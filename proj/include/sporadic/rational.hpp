#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace sporadic {

using Int = mpz_class;
using Rational = mpq_class;

// Sentinel for v_p(0).
inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

// p-adic valuation of a nonzero integer.
inline long padic_valuation(const Int& x, const Int& p) {
    if (x == 0) return kValuationInfinity;
    Int t = x;
    long v = 0;
    while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

// v_p(num) - v_p(den); kValuationInfinity for x = 0.
inline long padic_valuation(const Rational& x, const Int& p) {
    if (x == 0) return kValuationInfinity;
    return padic_valuation(Int(x.get_num()), p) - padic_valuation(Int(x.get_den()), p);
}

// Reduce x mod m for a rational x with denominator invertible mod m.
// Result is in [0, m).
inline Int rational_mod(const Rational& x, const Int& m) {
    Int den = x.get_den();
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("rational_mod: denominator not invertible");
    Int r = (x.get_num() % m) * inv % m;
    if (r < 0) r += m;
    return r;
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace sporadic
