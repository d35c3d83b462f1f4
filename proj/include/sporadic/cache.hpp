#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sporadic/pointcount.hpp"
#include "sporadic/qseries.hpp"

namespace sporadic {

inline constexpr int kCacheVersion = 1;

struct CacheEntryInfo {
    std::string kind;  // "series" or "counts"
    std::string key;
    int version = 0;
    std::uintmax_t bytes = 0;
    bool valid = false;
};

class Cache {
public:
    explicit Cache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    // Series payloads: header "name N version", then one line
    // "n numerator denominator" per exponent, contiguous from the offset to
    // N-1 (so truncated payloads are detectable). Returns nullopt when the
    // entry is missing, corrupt, version-mismatched, or shorter than n_min.
    std::optional<QSeries> load_series(const std::string& name, long n_min) const;
    void store_series(const std::string& name, const QSeries& s) const;

    // Count payloads: "s0 localtrace" per fiber (s0 = "inf" for the fiber at
    // infinity), then a summary line "A <value>".
    std::optional<TraceResult> load_counts(std::uint64_t q, int cover) const;
    void store_counts(const TraceResult& res) const;

    std::vector<CacheEntryInfo> status() const;
    void clear() const;

private:
    std::filesystem::path dir_;
};

}  // namespace sporadic
