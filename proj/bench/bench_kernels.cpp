// Benchmarks the OpenMP kernels against their serial reference
// implementations and checks that they agree.
#include <chrono>
#include <cstdio>

#include "sporadic/pointcount.hpp"
#include "sporadic/sequences.hpp"

using namespace sporadic;

namespace {

template <class Fn>
double seconds(Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
    int mismatches = 0;

    std::printf("%-28s %10s %10s %8s\n", "kernel", "parallel", "serial", "speedup");

    for (std::uint64_t p : {101, 211, 401}) {
        TraceResult par, ser;
        double tp = seconds([&] { par = surface_trace(p, 2); });
        double ts = seconds([&] { ser = surface_trace_serial(p, 2); });
        bool same = par.A == ser.A && par.per_fiber.size() == ser.per_fiber.size();
        for (size_t i = 0; same && i < par.per_fiber.size(); ++i)
            same = par.per_fiber[i].cls.local_trace == ser.per_fiber[i].cls.local_trace;
        if (!same) ++mismatches;
        char label[64];
        std::snprintf(label, sizeof label, "surface_trace p=%llu",
                      static_cast<unsigned long long>(p));
        std::printf("%-28s %9.3fs %9.3fs %7.2fx%s\n", label, tp, ts, ts / tp,
                    same ? "" : "  MISMATCH");
    }

    {
        SearchBox box{-10, 25, -5, 12, -40, 90};
        std::vector<SearchHit> par, ser;
        double tp = seconds([&] { par = search_integral(box, 40); });
        double ts = seconds([&] { ser = search_integral_serial(box, 40); });
        bool same = par.size() == ser.size();
        for (size_t i = 0; same && i < par.size(); ++i) same = par[i].triple == ser[i].triple;
        if (!same) ++mismatches;
        std::printf("%-28s %9.3fs %9.3fs %7.2fx%s\n", "search_integral depth=40", tp, ts,
                    ts / tp, same ? "" : "  MISMATCH");
    }

    if (mismatches) {
        std::printf("%d kernel(s) disagree with the serial reference\n", mismatches);
        return 1;
    }
    std::printf("parallel and serial kernels agree\n");
    return 0;
}
