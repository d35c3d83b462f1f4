#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sporadic/arith.hpp"
#include "sporadic/qseries.hpp"
#include "sporadic/report.hpp"

namespace sporadic {

bool is_prime(std::uint64_t n);

// --------------------------------------------------------------------------
// gamma(p): p-th coefficient of the weight-3 CM newform, recovered from
// several independent sources.
// --------------------------------------------------------------------------
struct GammaValue {
    long p = 0;
    long value = 0;
};

// Unique integer with |gamma| <= 2p and gamma = (-1|p) c_p (mod p^2).
// Throws std::invalid_argument when the series is too short and
// std::runtime_error when no integer lies in the band.
GammaValue gamma_extract(long p, const QSeries& g);

// CM formula: 2(a^2-6b^2) when p = a^2+6b^2; 0 when (-6|p) = -1; nullopt
// when the formula does not determine the value.
std::optional<long> gamma_cm(long p);

// --------------------------------------------------------------------------
// Three-term checkers. coeffs[n] is the n-th coefficient (index 0 unused);
// coefficients at negative or fractional indices are zero.
// --------------------------------------------------------------------------
using ExponentRule = std::function<long(long r)>;

CongruenceReport check_three_term(const std::vector<Rational>& coeffs, long p, const Int& A,
                                  const Int& B, long m_max, long r_max,
                                  const ExponentRule& exponent_rule, const std::string& family,
                                  bool odd_m_only = false);

std::vector<Rational> series_coeffs(const QSeries& s);

// Three-term grid for g at p: A = (-1|p) gamma(p), B = (-6|p) p^2,
// modulus exponent 2r.
CongruenceReport asd_grid(const QSeries& g, long p, long m_max, long r_max);

// Beukers-transfer grid: the sequence b_{2n+1} = (-1)^n F(n), b_even = 0,
// with the same A and modulus exponent r.
CongruenceReport beukers_grid(const QSeries& g, long p, long m_max, long r_max);

// --------------------------------------------------------------------------
// Headline checks.
// --------------------------------------------------------------------------

// F((p-1)/2) = gamma(p) (mod p) for odd primes p <= p_max.
CongruenceReport verify_theorem1(long p_max, const QSeries& g);

// Stienstra-Beukers congruence for Apery's b_n, 5 <= p <= p_max.
CongruenceReport verify_stienstra_beukers(long p_max);

// Character coverage and trace/det agreement on Frob_p, 31 <= p <= 73.
CongruenceReport serre_faltings_table(const QSeries& g);

struct TwistWitness {
    QuadraticCharacter chi;
    bool self_twist = false;
    bool found = false;  // witness located (meaningless for self_twist)
    long p = 0;
    long m = 0, r = 0;
};
std::vector<TwistWitness> twist_elimination(const QSeries& g, long p_search_max);

// F((p-1)/3) = A_p (mod p) for p = 1 (mod 3), p <= p_max, via the 3-cover.
CongruenceReport verify_three_cover(long p_max);

// dim S_k for odd k: (k-1)(g-1) + (k-2)r1/2 + (k-1)r2/2 + sum (e-1)/(2e).
Rational dim_cusp_forms(long k, long genus, long r1, long r2,
                        const std::vector<long>& elliptic_orders);

// x^3 + 3x - 2 irreducible mod p (no root suffices for a cubic).
bool cubic_irreducible_mod(long p);
bool cubic_inert_check();  // at p = 7

}  // namespace sporadic
