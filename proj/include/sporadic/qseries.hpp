#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sporadic/rational.hpp"

namespace sporadic {

// Truncated Laurent series in w = e^{pi i tau} with exact rational
// coefficients. Coefficients are stored densely on [offset, trunc);
// exponents below offset are identically zero, exponents at or above
// trunc are unknown.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(long trunc, long offset = 0)
        : offset_(offset), trunc_(trunc),
          coeffs_(trunc > offset ? static_cast<size_t>(trunc - offset) : 0) {}

    long trunc() const { return trunc_; }
    long offset() const { return offset_; }

    // First exponent with a nonzero coefficient; trunc() when none.
    long valuation() const;

    Rational coeff(long n) const;
    void set_coeff(long n, const Rational& v);

    bool is_zero() const { return valuation() == trunc_; }

    QSeries truncated(long new_trunc) const;

private:
    long offset_ = 0;
    long trunc_ = 0;
    std::vector<Rational> coeffs_;
};

QSeries constant_series(const Rational& c, long trunc);

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, const QSeries& a);

// w * d/dw
QSeries theta_w(const QSeries& a);

// a / b; b must be nonzero. Tracks the valuation shift of b explicitly.
QSeries div(const QSeries& a, const QSeries& b);

// Square root with positive leading coefficient. Requires even valuation
// and a leading coefficient that is a square in Q.
QSeries sqrt_series(const QSeries& a);

// Substitute w -> w^k (k >= 1); embeds a q-series into w via k = 2.
QSeries inflate(const QSeries& a, long k);

// Multiply by w^k (k may be negative).
QSeries shift(const QSeries& a, long k);

// Polynomial sum c_0 + c_1 x + ... evaluated at a series x.
QSeries poly_at(const std::vector<Rational>& c, const QSeries& x, long trunc);

// --------------------------------------------------------------------------
// Eta quotients. A spec is a list of (multiplier m, exponent e) meaning
// prod_m eta(m tau)^e; the leading w-exponent sum(m e)/12 must be a
// nonnegative integer.
// --------------------------------------------------------------------------
using EtaQuotientSpec = std::vector<std::pair<long, long>>;

// sum(m e)/12, validated.
long eta_leading_w_exponent(const EtaQuotientSpec& spec);

// w-series of the eta quotient to order N.
QSeries eta_quotient(const EtaQuotientSpec& spec, long N);

// The hauptmodul t = eta(2)eta(6)^5 / (eta(1)^5 eta(3)), as a w-series
// (even exponents only, valuation 2).
extern const EtaQuotientSpec kTSpec;
QSeries t_series(long N);

// s = sqrt(t), valuation 1, leading coefficient +1.
QSeries s_series(long N);

// P = sum (-1)^n F(n) t^n composed with t(w), even exponents, constant 1.
QSeries p_series(long N);

// g = P * theta_w(s); odd exponents only.
QSeries g_series(long N);

// Classical j = E4^3 / Delta as a w-series (pole w^-2).
QSeries j_series(long N);

// --------------------------------------------------------------------------
// Picard-Fuchs operator (8t+1)(9t+1)P'' + t(144t+17)P' + 6t(12t+1)P applied
// to P(t) = sum (-1)^n F(n) t^n, under both readings of the primes.
// --------------------------------------------------------------------------
struct PicardFuchsResidual {
    QSeries theta_reading;     // primes read as t d/dt; contract: zero
    QSeries ordinary_reading;  // primes read as d/dt; nonzero at t^0
};
PicardFuchsResidual verify_picard_fuchs(long N);

// --------------------------------------------------------------------------
// Algebraic relation between s and j found by exact nullspace computation.
// --------------------------------------------------------------------------
struct SjRelation {
    bool found = false;
    long deg_s = 0, deg_j = 0;
    // coeffs[l][k] multiplies s^k j^l; integral with content 1 when found.
    std::vector<std::vector<Rational>> coeffs;
    long verified_order = 0;    // relation's w-expansion vanishes below this
    QSeries printed_residual;   // residual of the classically printed relation
};
SjRelation derive_sj_relation(long deg_s, long deg_j, long N);

// The classically printed s-j relation, evaluated at the computed series;
// its residual is expected to be nonzero (constant term 1/12^6).
QSeries printed_sj_relation_residual(long N);

}  // namespace sporadic
