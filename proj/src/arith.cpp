#include "sporadic/arith.hpp"

#include <cmath>
#include <utility>

namespace sporadic {

namespace {
constexpr std::uint64_t kSquareTableLimit = 1u << 21;
}

int kronecker_symbol(const Int& a, const Int& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw std::invalid_argument("kronecker_symbol: n must be odd and positive");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker_symbol(long a, long n) {
    return kronecker_symbol(Int(a), Int(n));
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), nonresidue_(0) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("PrimeField: modulus must be an odd prime");
    if (p <= kSquareTableLimit) {
        square_table_.assign(p, false);
        for (std::uint64_t x = 0; x < p; ++x) square_table_[mul(x, x)] = true;
        for (std::uint64_t x = 2; x < p; ++x)
            if (!square_table_[x]) { nonresidue_ = x; break; }
    } else {
        for (std::uint64_t x = 2; x < p; ++x)
            if (pow(x, (p - 1) / 2) == p - 1) { nonresidue_ = x; break; }
    }
}

PrimeField::Elem PrimeField::from_int(long x) const {
    long r = x % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::pow(Elem x, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

PrimeField::Elem PrimeField::inv(Elem x) const {
    if (x == 0) throw std::domain_error("PrimeField::inv of zero");
    return pow(x, p_ - 2);
}

bool PrimeField::is_square(Elem x) const {
    if (x == 0) return true;
    if (!square_table_.empty()) return square_table_[x];
    return pow(x, (p_ - 1) / 2) == 1;
}

std::optional<PrimeField::Elem> PrimeField::sqrt(Elem x) const {
    if (x == 0) return Elem{0};
    if (!is_square(x)) return std::nullopt;
    // Tonelli-Shanks with the smallest nonresidue as generator.
    std::uint64_t s = 0, q = p_ - 1;
    while (q % 2 == 0) { q /= 2; ++s; }
    if (s == 1) return pow(x, (p_ + 1) / 4);
    Elem z = pow(nonresidue_, q);
    Elem m = s, c = z, t = pow(x, q), r = pow(x, (q + 1) / 2);
    while (t != 1) {
        std::uint64_t i = 0;
        Elem t2 = t;
        while (t2 != 1) { t2 = mul(t2, t2); ++i; }
        Elem b = c;
        for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

QuadField::QuadField(std::uint64_t p) : fp_(p), d_(fp_.smallest_nonresidue()), q_(p * p) {
    if (p >= kSquareTableLimit) throw std::invalid_argument("QuadField: p too large");
    square_table_.assign(q_, false);
    for (std::uint64_t i = 0; i < q_; ++i) {
        Elem x = element(i);
        square_table_[index(mul(x, x))] = true;
    }
}

QuadField::Elem QuadField::pow(Elem x, std::uint64_t e) const {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

QuadField::Elem QuadField::inv(Elem x) const {
    if (is_zero(x)) throw std::domain_error("QuadField::inv of zero");
    // 1/(a+bw) = (a-bw)/N(a+bw)
    auto ninv = fp_.inv(norm(x));
    return {fp_.mul(x.a, ninv), fp_.mul(fp_.neg(x.b), ninv)};
}

bool QuadField::is_square(Elem x) const {
    if (is_zero(x)) return true;
    return square_table_[index(x)];
}

std::optional<QuadField::Elem> QuadField::sqrt(Elem x) const {
    if (is_zero(x)) return zero();
    if (!is_square(x)) return std::nullopt;
    const auto& fp = fp_;
    if (x.b == 0) {
        // Either a is a square in F_p, or a/d is.
        if (auto r = fp.sqrt(x.a)) return Elem{*r, 0};
        auto r = fp.sqrt(fp.mul(x.a, fp.inv(d_)));
        return Elem{0, *r};  // (r w)^2 = r^2 d = a
    }
    // (u + v w)^2 = u^2 + v^2 d + 2uv w: u^2 is a root of
    // z^2 - a z + (a^2 - d b^2)/4, i.e. u^2 = (a +- n)/2 with n = sqrt(N(x)).
    auto n = fp.sqrt(norm(x));
    if (!n) return std::nullopt;  // cannot happen for a square x
    auto half = fp.inv(2);
    for (auto cand : {fp.mul(fp.add(x.a, *n), half), fp.mul(fp.sub(x.a, *n), half)}) {
        if (auto u = fp.sqrt(cand)) {
            if (*u == 0) continue;
            auto v = fp.mul(x.b, fp.inv(fp.mul(2, *u)));
            Elem y{*u, v};
            if (mul(y, y) == x) return y;
        }
    }
    return std::nullopt;
}

int char_value(const QuadraticCharacter& chi, long p) {
    if (p == 2 || p == 3) throw std::invalid_argument("char_value: p must be coprime to 6");
    int v = 1;
    if (chi.eps[0]) v *= kronecker_symbol(-1, p);
    if (chi.eps[1]) v *= kronecker_symbol(2, p);
    if (chi.eps[2]) v *= kronecker_symbol(3, p);
    return v;
}

std::optional<QuadFormRepresentation> cornacchia(std::uint64_t p, std::uint64_t D) {
    if (p < 3 || D == 0 || D % p == 0)
        throw std::invalid_argument("cornacchia: need odd prime p with p not dividing D");
    PrimeField fp(p);
    auto r0 = fp.sqrt(fp.from_int(-static_cast<long>(D % p)));
    if (!r0) return std::nullopt;
    std::uint64_t r = *r0;
    if (2 * r < p) r = p - r;
    std::uint64_t a = p, b = r;
    while (b * b >= p) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    std::uint64_t rem = p - b * b;
    if (rem % D != 0) return std::nullopt;
    std::uint64_t c2 = rem / D;
    std::uint64_t c = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(c2)));
    while (c * c < c2) ++c;
    while (c > 0 && c * c > c2) --c;
    if (c * c != c2) return std::nullopt;
    QuadFormRepresentation rep{b, c, D, p};
    if (D == 1 && rep.a % 2 == 0) std::swap(rep.a, rep.b);
    return rep;
}

}  // namespace sporadic
