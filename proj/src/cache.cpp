#include "sporadic/cache.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>
#include <tuple>

namespace sporadic {

namespace fs = std::filesystem;

namespace {

fs::path series_path(const fs::path& dir, const std::string& name) {
    return dir / ("series_" + name + ".txt");
}

fs::path counts_path(const fs::path& dir, std::uint64_t q, int cover) {
    return dir / ("counts_" + std::to_string(q) + "_" + std::to_string(cover) + ".txt");
}

void atomic_write(const fs::path& target, const std::string& payload) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw std::runtime_error("cache: cannot write " + tmp.string());
        os << payload;
        if (!os) throw std::runtime_error("cache: short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_))
        throw std::runtime_error("cache: cannot create directory " + dir_.string());
}

std::optional<QSeries> Cache::load_series(const std::string& name, long n_min) const {
    std::ifstream is(series_path(dir_, name));
    if (!is) return std::nullopt;
    std::string header_name;
    long N = 0;
    int version = 0;
    if (!(is >> header_name >> N >> version)) return std::nullopt;
    if (header_name != name || version != kCacheVersion || N < n_min) return std::nullopt;

    bool first = true;
    long offset = 0, last_n = std::numeric_limits<long>::min();
    std::vector<std::pair<long, Rational>> entries;
    std::string num, den;
    long n;
    while (is >> n >> num >> den) {
        // exponents must be contiguous so a hand-truncated payload is detected
        if ((!first && n != last_n + 1) || n >= N) return std::nullopt;
        first = false;
        last_n = n;
        try {
            Int nz(num), dz(den);
            if (dz <= 0) return std::nullopt;
            Rational v(nz, dz);
            v.canonicalize();
            entries.emplace_back(n, v);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
        offset = std::min(offset, n);
    }
    if (!is.eof()) return std::nullopt;  // trailing garbage or truncated line
    if (first || last_n != N - 1) return std::nullopt;  // short payload
    QSeries s(N, offset);
    for (const auto& [e, v] : entries) s.set_coeff(e, v);
    return s;
}

void Cache::store_series(const std::string& name, const QSeries& s) const {
    std::ostringstream os;
    os << name << " " << s.trunc() << " " << kCacheVersion << "\n";
    for (long n = s.offset(); n < s.trunc(); ++n) {
        Rational c = s.coeff(n);
        os << n << " " << c.get_num().get_str() << " " << c.get_den().get_str() << "\n";
    }
    atomic_write(series_path(dir_, name), os.str());
}

std::optional<TraceResult> Cache::load_counts(std::uint64_t q, int cover) const {
    std::ifstream is(counts_path(dir_, q, cover));
    if (!is) return std::nullopt;
    TraceResult res;
    res.q = q;
    res.cover = cover;
    bool have_sum = false;
    long sum = 0;
    std::string tok;
    while (is >> tok) {
        if (tok == "A") {
            if (!(is >> res.A)) return std::nullopt;
            have_sum = true;
            break;
        }
        FiberRecord rec;
        if (tok == "inf") {
            rec.at_infinity = true;
        } else {
            try {
                rec.param_index = std::stoull(tok);
            } catch (...) {
                return std::nullopt;
            }
        }
        if (!(is >> rec.cls.local_trace)) return std::nullopt;
        sum += rec.cls.local_trace;
        res.per_fiber.push_back(rec);
    }
    if (!have_sum) return std::nullopt;
    if (res.per_fiber.size() != q + 1 || res.A != -sum) return std::nullopt;
    return res;
}

void Cache::store_counts(const TraceResult& res) const {
    std::ostringstream os;
    for (const auto& rec : res.per_fiber) {
        if (rec.at_infinity)
            os << "inf";
        else
            os << rec.param_index;
        os << " " << rec.cls.local_trace << "\n";
    }
    os << "A " << res.A << "\n";
    atomic_write(counts_path(dir_, res.q, res.cover), os.str());
}

std::vector<CacheEntryInfo> Cache::status() const {
    std::vector<CacheEntryInfo> out;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (!entry.is_regular_file()) continue;
        std::string fn = entry.path().filename().string();
        CacheEntryInfo info;
        info.bytes = entry.file_size();
        if (fn.starts_with("series_") && fn.ends_with(".txt")) {
            info.kind = "series";
            info.key = fn.substr(7, fn.size() - 11);
            std::ifstream is(entry.path());
            std::string name;
            long N;
            if (is >> name >> N >> info.version) info.valid = (info.version == kCacheVersion);
        } else if (fn.starts_with("counts_") && fn.ends_with(".txt")) {
            info.kind = "counts";
            info.key = fn.substr(7, fn.size() - 11);
            info.version = kCacheVersion;
            std::istringstream key(info.key);
            std::uint64_t q;
            int cover;
            char sep;
            if (key >> q) {
                key >> sep >> cover;
                info.valid = load_counts(q, cover).has_value();
            }
        } else {
            continue;
        }
        out.push_back(info);
    }
    std::sort(out.begin(), out.end(), [](const CacheEntryInfo& a, const CacheEntryInfo& b) {
        return std::tie(a.kind, a.key) < std::tie(b.kind, b.key);
    });
    return out;
}

void Cache::clear() const {
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (!entry.is_regular_file()) continue;
        std::string fn = entry.path().filename().string();
        if ((fn.starts_with("series_") || fn.starts_with("counts_")) && fn.ends_with(".txt"))
            fs::remove(entry.path());
    }
}

}  // namespace sporadic
