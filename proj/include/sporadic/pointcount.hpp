#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sporadic/arith.hpp"

namespace sporadic {

enum class FiberKind { Smooth, MultiplicativeSplit, MultiplicativeNonsplit, Additive };

struct FiberClassification {
    FiberKind kind = FiberKind::Smooth;
    std::uint64_t point_count = 0;  // projective points, smooth fibers only
    long local_trace = 0;      // q+1-#E for smooth; {1,-1,0} for singular
};

struct FiberRecord {
    bool at_infinity = false;
    std::uint64_t param_index = 0;  // index of the parameter value in the field
    FiberClassification cls;
};

struct TraceResult {
    std::uint64_t q = 0;
    int cover = 2;
    long A = 0;  // trace(Frob_q | W) = -sum of local traces
    std::vector<FiberRecord> per_fiber;
};

// --------------------------------------------------------------------------
// The fiber cubic (x+y)(x+z)(y+z) = c * xyz in P^2.
// Smooth iff c is not in {0, -1, 8}; the parameter-(s0 = 0) fiber xyz = 0
// is handled separately.
// --------------------------------------------------------------------------

// Projective point count of the cubic; requires a smooth c.
template <class Field>
std::uint64_t count_fiber(const Field& f, typename Field::Elem c);

// O(q^2) full scan of P^2; oracle for tests.
template <class Field>
std::uint64_t count_fiber_bruteforce(const Field& f, typename Field::Elem c);

// Classification of a singular fiber. `zero_parameter` selects the s0 = 0
// fiber xyz = 0 (where c is meaningless).
template <class Field>
FiberClassification classify_fiber(const Field& f, typename Field::Elem c,
                                   bool zero_parameter = false);

// Locates singular points by scanning all charts for vanishing gradients;
// oracle for tests.
template <class Field>
std::vector<std::array<typename Field::Elem, 3>> singular_points_scan(const Field& f,
                                                                      typename Field::Elem c);

// --------------------------------------------------------------------------
// Frobenius traces of the fibration over the parameter line. `cover` = 2
// iterates s0 with t = s0^2 (the K3 double cover); `cover` = 3 iterates u
// with t = u^3.
// --------------------------------------------------------------------------
template <class Field>
TraceResult surface_trace_field(const Field& f, int cover);
template <class Field>
TraceResult surface_trace_field_serial(const Field& f, int cover);

// Traces over F_p and over F_{p^2}.
TraceResult surface_trace(std::uint64_t p, int cover);
TraceResult surface_trace_serial(std::uint64_t p, int cover);
TraceResult surface_trace_squared(std::uint64_t p, int cover);

// det(rho(Frob_p)) = (A_p^2 - A_{p^2}) / 2.
long rho_det(std::uint64_t p);

// Trace sum twisted by the cubic residue character, reduced mod p:
// -sum over t in F_p^* of a(t) t^{2(p-1)/3}, where a(t) is the local trace
// of the fiber at t. Requires p = 1 (mod 3). This is the eigenvalue piece
// of the 3-cover representation that the F((p-1)/3) congruence sees; the
// untwisted integer trace is surface_trace(p, 3).A.
std::uint64_t three_cover_twisted_trace(std::uint64_t p);

}  // namespace sporadic
