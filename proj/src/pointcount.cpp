#include "sporadic/pointcount.hpp"

#include <omp.h>

#include <array>
#include <stdexcept>

namespace sporadic {

namespace {

// Gradient of F = (x+y)(x+z)(y+z) - c xyz.
template <class Field>
std::array<typename Field::Elem, 3> gradient(const Field& f, typename Field::Elem c,
                                             typename Field::Elem x, typename Field::Elem y,
                                             typename Field::Elem z) {
    auto two = f.from_int(2);
    auto fx = f.sub(f.mul(f.add(y, z), f.add(f.mul(two, x), f.add(y, z))), f.mul(c, f.mul(y, z)));
    auto fy = f.sub(f.mul(f.add(x, z), f.add(f.mul(two, y), f.add(x, z))), f.mul(c, f.mul(x, z)));
    auto fz = f.sub(f.mul(f.add(x, y), f.add(f.mul(two, z), f.add(x, y))), f.mul(c, f.mul(x, y)));
    return {fx, fy, fz};
}

template <class Field>
typename Field::Elem eval_cubic(const Field& f, typename Field::Elem c, typename Field::Elem x,
                                typename Field::Elem y, typename Field::Elem z) {
    auto lhs = f.mul(f.mul(f.add(x, y), f.add(x, z)), f.add(y, z));
    return f.sub(lhs, f.mul(c, f.mul(x, f.mul(y, z))));
}

}  // namespace

template <class Field>
std::uint64_t count_fiber(const Field& f, typename Field::Elem c) {
    if (f.is_zero(c) || c == f.from_int(-1) || c == f.from_int(8))
        throw std::invalid_argument("count_fiber: singular fiber");
    // Chart z = 1: quadratic in x with coefficients
    //   (y+1) x^2 + ((y+1)^2 - c y) x + y(y+1).
    std::uint64_t total = 3;  // the three points on z = 0
    const std::uint64_t n = f.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        auto y = f.element(i);
        auto y1 = f.add(y, f.one());
        auto a = y1;
        auto b = f.sub(f.mul(y1, y1), f.mul(c, y));
        auto c0 = f.mul(y, y1);
        total += count_quadratic_roots(f, a, b, c0).count;
    }
    return total;
}

template <class Field>
std::uint64_t count_fiber_bruteforce(const Field& f, typename Field::Elem c) {
    std::uint64_t total = 0;
    const std::uint64_t n = f.size();
    // (1 : y : z)
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j)
            if (f.is_zero(eval_cubic(f, c, f.one(), f.element(i), f.element(j)))) ++total;
    // (0 : 1 : z)
    for (std::uint64_t j = 0; j < n; ++j)
        if (f.is_zero(eval_cubic(f, c, f.zero(), f.one(), f.element(j)))) ++total;
    // (0 : 0 : 1)
    if (f.is_zero(eval_cubic(f, c, f.zero(), f.zero(), f.one()))) ++total;
    return total;
}

template <class Field>
std::vector<std::array<typename Field::Elem, 3>> singular_points_scan(const Field& f,
                                                                      typename Field::Elem c) {
    std::vector<std::array<typename Field::Elem, 3>> out;
    auto consider = [&](typename Field::Elem x, typename Field::Elem y, typename Field::Elem z) {
        if (!f.is_zero(eval_cubic(f, c, x, y, z))) return;
        auto g = gradient(f, c, x, y, z);
        if (f.is_zero(g[0]) && f.is_zero(g[1]) && f.is_zero(g[2])) out.push_back({x, y, z});
    };
    const std::uint64_t n = f.size();
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j) consider(f.one(), f.element(i), f.element(j));
    for (std::uint64_t j = 0; j < n; ++j) consider(f.zero(), f.one(), f.element(j));
    consider(f.zero(), f.zero(), f.one());
    return out;
}

template <class Field>
FiberClassification classify_fiber(const Field& f, typename Field::Elem c, bool zero_parameter) {
    FiberClassification out;
    if (zero_parameter || f.is_zero(c)) {
        // xyz = 0 resp. (x+y)(x+z)(y+z) = 0: three lines, all defined over the
        // prime field, so the reduction is split multiplicative.
        out.kind = FiberKind::MultiplicativeSplit;
        out.local_trace = 1;
        return out;
    }
    if (!(c == f.from_int(-1) || c == f.from_int(8)))
        throw std::invalid_argument("classify_fiber: fiber is smooth");

    if (c == f.from_int(-1)) {
        // (x+y)(x+z)(y+z) + xyz = (x+y+z)(xy+yz+zx): a rational line and a
        // rational conic meeting in the two points where x^2+xy+y^2 = 0 on
        // x+y+z = 0. Both intersection points are rational iff -3 is a
        // square, and that decides split vs nonsplit.
        if (f.is_square(f.from_int(-3))) {
            out.kind = FiberKind::MultiplicativeSplit;
            out.local_trace = 1;
        } else {
            out.kind = FiberKind::MultiplicativeNonsplit;
            out.local_trace = -1;
        }
        return out;
    }

    // Irreducible nodal cubic. The node lies in the chart z = 1 (the three
    // points on z = 0 have nonvanishing gradient when c != 0); f_x is linear
    // in x for fixed y, so locate it in O(q).
    const std::uint64_t n = f.size();
    bool have_node = false;
    typename Field::Elem nx{}, ny{};
    for (std::uint64_t i = 0; i < n; ++i) {
        auto y = f.element(i);
        auto y1 = f.add(y, f.one());
        if (f.is_zero(y1)) continue;  // f_x = c != 0 there
        // f_x = (y+1)(2x+y+1) - c y = 0
        auto x = f.mul(f.sub(f.mul(c, f.mul(y, f.inv(y1))), y1), f.inv(f.from_int(2)));
        if (!f.is_zero(eval_cubic(f, c, x, y, f.one()))) continue;
        auto g = gradient(f, c, x, y, f.one());
        if (!f.is_zero(g[1])) continue;
        if (have_node) throw std::runtime_error("classify_fiber: multiple singular points");
        have_node = true;
        nx = x;
        ny = y;
    }
    if (!have_node) throw std::runtime_error("classify_fiber: node not found");

    // Tangent cone at the node: disc = f_xy^2 - f_xx f_yy with
    // f_xx = 2(y+1), f_yy = 2(x+1), f_xy = 2x + 2y + 2 - c.
    auto two = f.from_int(2);
    auto fxx = f.mul(two, f.add(ny, f.one()));
    auto fyy = f.mul(two, f.add(nx, f.one()));
    auto fxy = f.sub(f.add(f.mul(two, nx), f.add(f.mul(two, ny), two)), c);
    auto disc = f.sub(f.mul(fxy, fxy), f.mul(fxx, fyy));
    if (f.is_zero(disc)) {
        out.kind = FiberKind::Additive;
        out.local_trace = 0;
    } else if (f.is_square(disc)) {
        out.kind = FiberKind::MultiplicativeSplit;
        out.local_trace = 1;
    } else {
        out.kind = FiberKind::MultiplicativeNonsplit;
        out.local_trace = -1;
    }
    return out;
}

namespace {

template <class Field>
FiberRecord fiber_at(const Field& f, int cover, bool at_infinity, std::uint64_t index) {
    FiberRecord rec;
    rec.at_infinity = at_infinity;
    rec.param_index = index;
    const std::uint64_t q = f.size();
    if (at_infinity) {
        rec.cls = classify_fiber(f, f.from_int(8));
        return rec;
    }
    auto v = f.element(index);
    if (f.is_zero(v)) {
        rec.cls = classify_fiber(f, f.zero(), /*zero_parameter=*/true);
        return rec;
    }
    auto t = v;
    for (int i = 1; i < cover; ++i) t = f.mul(t, v);
    auto c = f.add(f.from_int(8), f.inv(t));
    if (f.is_zero(c) || c == f.from_int(-1)) {
        rec.cls = classify_fiber(f, c);
    } else {
        rec.cls.kind = FiberKind::Smooth;
        rec.cls.point_count = count_fiber(f, c);
        rec.cls.local_trace = static_cast<long>(q) + 1 -
                              static_cast<long>(rec.cls.point_count);
    }
    return rec;
}

}  // namespace

template <class Field>
TraceResult surface_trace_field(const Field& f, int cover) {
    if (cover != 2 && cover != 3) throw std::invalid_argument("surface_trace: cover must be 2 or 3");
    TraceResult res;
    res.q = f.size();
    res.cover = cover;
    const long n = static_cast<long>(f.size());
    res.per_fiber.resize(static_cast<size_t>(n) + 1);
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i <= n; ++i)
        res.per_fiber[static_cast<size_t>(i)] =
            fiber_at(f, cover, i == n, i == n ? 0 : static_cast<std::uint64_t>(i));
    long sum = 0;
    for (const auto& rec : res.per_fiber) sum += rec.cls.local_trace;
    res.A = -sum;
    return res;
}

template <class Field>
TraceResult surface_trace_field_serial(const Field& f, int cover) {
    if (cover != 2 && cover != 3) throw std::invalid_argument("surface_trace: cover must be 2 or 3");
    TraceResult res;
    res.q = f.size();
    res.cover = cover;
    const std::uint64_t n = f.size();
    long sum = 0;
    for (std::uint64_t i = 0; i <= n; ++i) {
        res.per_fiber.push_back(fiber_at(f, cover, i == n, i == n ? 0 : i));
        sum += res.per_fiber.back().cls.local_trace;
    }
    res.A = -sum;
    return res;
}

TraceResult surface_trace(std::uint64_t p, int cover) {
    if (p < 5 || p % 2 == 0 || p % 3 == 0)
        throw std::invalid_argument("surface_trace: p must be a prime coprime to 6");
    PrimeField f(p);
    return surface_trace_field(f, cover);
}

TraceResult surface_trace_serial(std::uint64_t p, int cover) {
    PrimeField f(p);
    return surface_trace_field_serial(f, cover);
}

TraceResult surface_trace_squared(std::uint64_t p, int cover) {
    if (p < 5 || p % 2 == 0 || p % 3 == 0)
        throw std::invalid_argument("surface_trace_squared: p must be a prime coprime to 6");
    QuadField f(p);
    return surface_trace_field(f, cover);
}

long rho_det(std::uint64_t p) {
    long ap = surface_trace(p, 2).A;
    long ap2 = surface_trace_squared(p, 2).A;
    return (ap * ap - ap2) / 2;
}

std::uint64_t three_cover_twisted_trace(std::uint64_t p) {
    if (p < 7 || p % 3 != 1 || p % 2 == 0)
        throw std::invalid_argument("three_cover_twisted_trace: need p = 1 (mod 3), p coprime to 6");
    PrimeField f(p);
    const std::uint64_t e = 2 * (p - 1) / 3;
    std::uint64_t sum = 0;
    for (std::uint64_t t = 1; t < p; ++t) {
        auto c = f.add(f.from_int(8), f.inv(t));
        long a;
        if (f.is_zero(c) || c == f.from_int(-1) || c == f.from_int(8))
            a = classify_fiber(f, c, false).local_trace;
        else
            a = static_cast<long>(p) + 1 - static_cast<long>(count_fiber(f, c));
        // accumulate -a(t) * t^e mod p
        std::uint64_t am = a >= 0 ? f.sub(0, static_cast<std::uint64_t>(a) % p)
                                  : static_cast<std::uint64_t>(-a) % p;
        sum = f.add(sum, f.mul(am, f.pow(t, e)));
    }
    return sum;
}

// Explicit instantiations for the two fields in use.
template std::uint64_t count_fiber<PrimeField>(const PrimeField&, PrimeField::Elem);
template std::uint64_t count_fiber<QuadField>(const QuadField&, QuadField::Elem);
template std::uint64_t count_fiber_bruteforce<PrimeField>(const PrimeField&, PrimeField::Elem);
template std::uint64_t count_fiber_bruteforce<QuadField>(const QuadField&, QuadField::Elem);
template FiberClassification classify_fiber<PrimeField>(const PrimeField&, PrimeField::Elem, bool);
template FiberClassification classify_fiber<QuadField>(const QuadField&, QuadField::Elem, bool);
template std::vector<std::array<PrimeField::Elem, 3>> singular_points_scan<PrimeField>(
    const PrimeField&, PrimeField::Elem);
template std::vector<std::array<QuadField::Elem, 3>> singular_points_scan<QuadField>(
    const QuadField&, QuadField::Elem);
template TraceResult surface_trace_field<PrimeField>(const PrimeField&, int);
template TraceResult surface_trace_field<QuadField>(const QuadField&, int);
template TraceResult surface_trace_field_serial<PrimeField>(const PrimeField&, int);
template TraceResult surface_trace_field_serial<QuadField>(const QuadField&, int);

}  // namespace sporadic
