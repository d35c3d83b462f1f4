#pragma once

#include <vector>

#include "sporadic/rational.hpp"

namespace sporadic {

// Franel numbers f_k = sum_j C(k,j)^3.
Int franel(unsigned long k);

// F(n) = sum_k (-1)^k 8^(n-k) C(n,k) f_k.
Int f_closed(unsigned long n);

// F(0), ..., F(count-1) via the (17,6,72) recurrence.
std::vector<Int> f_sequence(unsigned long count);

// Apery numbers.
Int apery_b(unsigned long n);  // sum C(n,k)^2 C(n+k,k)
Int apery_a(unsigned long n);  // sum C(n,k)^2 C(n+k,k)^2

struct RecurrenceTriple {
    long A = 0, B = 0, C = 0;

    bool nondegenerate() const { return C * (A * A - 4 * C) != 0; }
    bool operator==(const RecurrenceTriple&) const = default;
    auto operator<=>(const RecurrenceTriple&) const = default;
};

struct SequencePrefix {
    std::vector<Rational> values;  // u_0 .. u_N
    bool integral = false;
    RecurrenceTriple triple;
};

// (n+1)^2 u_{n+1} = (A n^2 + A n + B) u_n - C n^2 u_{n-1}, u_{-1} = 0, u_0 = 1.
SequencePrefix zagier_u(const RecurrenceTriple& t, unsigned long N);

// True iff u_0..u_N are all integers; aborts at the first non-integral term.
bool integral_to_depth(const RecurrenceTriple& t, unsigned long N);

struct SearchHit {
    RecurrenceTriple triple;
    bool nondegenerate = false;
};

struct SearchBox {
    long a_min, a_max;
    long b_min, b_max;
    long c_min, c_max;
};

// All triples in the box with integral u_0..u_N, in lexicographic order.
std::vector<SearchHit> search_integral(const SearchBox& box, unsigned long N);
std::vector<SearchHit> search_integral_serial(const SearchBox& box, unsigned long N);

}  // namespace sporadic
