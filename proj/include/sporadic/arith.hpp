#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sporadic/rational.hpp"

namespace sporadic {

// Jacobi/Kronecker symbol (a|n) for odd positive n.
int kronecker_symbol(const Int& a, const Int& n);
int kronecker_symbol(long a, long n);

// --------------------------------------------------------------------------
// F_p, p an odd prime. Elements are residues in [0, p).
// --------------------------------------------------------------------------
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    std::uint64_t size() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long x) const;
    Elem element(std::uint64_t index) const { return index; }

    bool is_zero(Elem x) const { return x == 0; }

    Elem add(Elem x, Elem y) const { std::uint64_t s = x + y; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem x, Elem y) const { return x >= y ? x - y : x + p_ - y; }
    Elem neg(Elem x) const { return x == 0 ? 0 : p_ - x; }
    Elem mul(Elem x, Elem y) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(x) * y) % p_);
    }
    Elem pow(Elem x, std::uint64_t e) const;
    Elem inv(Elem x) const;

    bool is_square(Elem x) const;               // 0 counts as a square
    std::optional<Elem> sqrt(Elem x) const;     // Tonelli-Shanks, deterministic
    Elem smallest_nonresidue() const { return nonresidue_; }

private:
    std::uint64_t p_;
    Elem nonresidue_;
    std::vector<bool> square_table_;  // built for small p; Euler criterion otherwise
};

// --------------------------------------------------------------------------
// F_{p^2} = F_p[w] with w^2 = d, d the smallest nonresidue mod p.
// --------------------------------------------------------------------------
class QuadField {
public:
    struct Elem {
        std::uint64_t a = 0, b = 0;  // a + b*w
        bool operator==(const Elem&) const = default;
    };

    explicit QuadField(std::uint64_t p);

    const PrimeField& base() const { return fp_; }
    std::uint64_t nonresidue() const { return d_; }
    std::uint64_t size() const { return q_; }

    Elem zero() const { return {0, 0}; }
    Elem one() const { return {1, 0}; }
    Elem from_int(long x) const { return {fp_.from_int(x), 0}; }
    Elem embed(PrimeField::Elem x) const { return {x, 0}; }
    Elem element(std::uint64_t index) const { return {index % fp_.modulus(), index / fp_.modulus()}; }
    std::uint64_t index(Elem x) const { return x.a + x.b * fp_.modulus(); }

    bool is_zero(Elem x) const { return x.a == 0 && x.b == 0; }

    Elem add(Elem x, Elem y) const { return {fp_.add(x.a, y.a), fp_.add(x.b, y.b)}; }
    Elem sub(Elem x, Elem y) const { return {fp_.sub(x.a, y.a), fp_.sub(x.b, y.b)}; }
    Elem neg(Elem x) const { return {fp_.neg(x.a), fp_.neg(x.b)}; }
    Elem mul(Elem x, Elem y) const {
        // (a1 + b1 w)(a2 + b2 w) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) w
        return {fp_.add(fp_.mul(x.a, y.a), fp_.mul(d_, fp_.mul(x.b, y.b))),
                fp_.add(fp_.mul(x.a, y.b), fp_.mul(x.b, y.a))};
    }
    Elem pow(Elem x, std::uint64_t e) const;
    Elem inv(Elem x) const;
    Elem frobenius(Elem x) const { return {x.a, fp_.neg(x.b)}; }  // x^p
    PrimeField::Elem norm(Elem x) const {
        return fp_.sub(fp_.mul(x.a, x.a), fp_.mul(d_, fp_.mul(x.b, x.b)));
    }

    bool is_square(Elem x) const;
    std::optional<Elem> sqrt(Elem x) const;

private:
    PrimeField fp_;
    std::uint64_t d_;
    std::uint64_t q_;
    std::vector<bool> square_table_;
};

// --------------------------------------------------------------------------
// Quadratic characters over the basis ((-1|.), (2|.), (3|.)).
// --------------------------------------------------------------------------
struct QuadraticCharacter {
    std::array<int, 3> eps{0, 0, 0};

    bool trivial() const { return eps == std::array<int, 3>{0, 0, 0}; }
    QuadraticCharacter operator*(const QuadraticCharacter& o) const {
        return {{(eps[0] + o.eps[0]) % 2, (eps[1] + o.eps[1]) % 2, (eps[2] + o.eps[2]) % 2}};
    }
};

// Value of the character at a prime p coprime to 6; throws for p in {2,3}.
int char_value(const QuadraticCharacter& chi, long p);

// --------------------------------------------------------------------------
// p = a^2 + D b^2
// --------------------------------------------------------------------------
struct QuadFormRepresentation {
    std::uint64_t a = 0, b = 0;
    std::uint64_t D = 1;
    std::uint64_t p = 0;
};

// Cornacchia's algorithm; nullopt when p is not of the form a^2 + D b^2.
// For D = 1 the representative with a odd is returned.
std::optional<QuadFormRepresentation> cornacchia(std::uint64_t p, std::uint64_t D);

// --------------------------------------------------------------------------
// Root counting for a x^2 + b x + c over a finite field of odd characteristic.
// --------------------------------------------------------------------------
struct RootCount {
    std::uint64_t count = 0;
    bool degenerate = false;  // identically zero: every x is a root
};

template <class Field>
RootCount count_quadratic_roots(const Field& f, typename Field::Elem a,
                                typename Field::Elem b, typename Field::Elem c) {
    if (f.is_zero(a)) {
        if (!f.is_zero(b)) return {1, false};
        if (!f.is_zero(c)) return {0, false};
        return {f.size(), true};
    }
    // disc = b^2 - 4ac
    auto disc = f.sub(f.mul(b, b), f.mul(f.from_int(4), f.mul(a, c)));
    if (f.is_zero(disc)) return {1, false};
    return {f.is_square(disc) ? 2u : 0u, false};
}

}  // namespace sporadic
