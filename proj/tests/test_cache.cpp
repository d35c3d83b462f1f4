#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sporadic/cache.hpp"
#include "sporadic/pointcount.hpp"
#include "sporadic/qseries.hpp"

using namespace sporadic;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("sporadic-cache-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter = 0;
};

}  // namespace

TEST_CASE("series round trip preserves every coefficient") {
    TempDir tmp;
    Cache cache(tmp.path);
    auto t = t_series(60);
    cache.store_series("t", t);
    auto back = cache.load_series("t", 60);
    REQUIRE(back.has_value());
    CHECK(back->trunc() == t.trunc());
    for (long n = t.offset(); n < t.trunc(); ++n) CHECK(back->coeff(n) == t.coeff(n));
    // Laurent series with negative offset round trip too
    auto j = j_series(30);
    cache.store_series("j", j);
    auto jb = cache.load_series("j", 30);
    REQUIRE(jb.has_value());
    CHECK(jb->offset() <= -2);
    for (long n = -2; n < 30; ++n) CHECK(jb->coeff(n) == j.coeff(n));
}

TEST_CASE("shorter cached series is rejected when more terms are required") {
    TempDir tmp;
    Cache cache(tmp.path);
    cache.store_series("t", t_series(40));
    CHECK(cache.load_series("t", 40).has_value());
    CHECK(!cache.load_series("t", 41).has_value());
}

TEST_CASE("hand-truncated payload is detected as corrupt") {
    TempDir tmp;
    Cache cache(tmp.path);
    cache.store_series("t", t_series(40));
    fs::path file = tmp.path / "series_t.txt";
    // chop the file mid-line
    std::ifstream in(file);
    std::stringstream all;
    all << in.rdbuf();
    in.close();
    std::string payload = all.str();
    std::ofstream out(file, std::ios::trunc);
    out << payload.substr(0, payload.size() * 2 / 3 + 1);
    out.close();
    CHECK(!cache.load_series("t", 10).has_value());
}

TEST_CASE("version or name mismatch is rejected") {
    TempDir tmp;
    Cache cache(tmp.path);
    cache.store_series("t", t_series(20));
    CHECK(!cache.load_series("s", 10).has_value());  // missing entry
    // rewrite header with a wrong version
    fs::path file = tmp.path / "series_t.txt";
    std::ifstream in(file);
    std::string header, rest;
    std::getline(in, header);
    std::stringstream body;
    body << in.rdbuf();
    in.close();
    std::ofstream out(file, std::ios::trunc);
    out << "t 20 " << (kCacheVersion + 1) << "\n" << body.str();
    out.close();
    CHECK(!cache.load_series("t", 10).has_value());
}

TEST_CASE("garbage coefficients are rejected") {
    TempDir tmp;
    Cache cache(tmp.path);
    std::ofstream out(tmp.path / "series_x.txt");
    out << "x 10 " << kCacheVersion << "\n1 1 1\n2 banana 3\n";
    out.close();
    CHECK(!cache.load_series("x", 5).has_value());
    std::ofstream out2(tmp.path / "series_y.txt", std::ios::trunc);
    out2 << "y 10 " << kCacheVersion << "\n3 1 1\n1 2 1\n";  // decreasing n
    out2.close();
    CHECK(!cache.load_series("y", 5).has_value());
    std::ofstream out3(tmp.path / "series_z.txt", std::ios::trunc);
    out3 << "z 10 " << kCacheVersion << "\n1 1 0\n";  // zero denominator
    out3.close();
    CHECK(!cache.load_series("z", 5).has_value());
}

TEST_CASE("counts round trip and consistency checks") {
    TempDir tmp;
    Cache cache(tmp.path);
    auto res = surface_trace(13, 2);
    cache.store_counts(res);
    auto back = cache.load_counts(13, 2);
    REQUIRE(back.has_value());
    CHECK(back->A == res.A);
    REQUIRE(back->per_fiber.size() == res.per_fiber.size());
    for (size_t i = 0; i < res.per_fiber.size(); ++i) {
        CHECK(back->per_fiber[i].at_infinity == res.per_fiber[i].at_infinity);
        CHECK(back->per_fiber[i].cls.local_trace == res.per_fiber[i].cls.local_trace);
    }
    // wrong cover key is a miss
    CHECK(!cache.load_counts(13, 3).has_value());
    // tampering with the summary is detected
    fs::path file = tmp.path / "counts_13_2.txt";
    std::ifstream in(file);
    std::stringstream body;
    body << in.rdbuf();
    in.close();
    std::string payload = body.str();
    auto pos = payload.rfind("A ");
    payload.replace(pos, payload.size() - pos, "A 99999\n");
    std::ofstream out(file, std::ios::trunc);
    out << payload;
    out.close();
    CHECK(!cache.load_counts(13, 2).has_value());
}

TEST_CASE("status lists entries deterministically and clear removes them") {
    TempDir tmp;
    Cache cache(tmp.path);
    cache.store_series("t", t_series(20));
    cache.store_series("g", g_series(20));
    cache.store_counts(surface_trace(7, 2));
    auto st = cache.status();
    REQUIRE(st.size() == 3);
    CHECK(st[0].kind == "counts");
    CHECK(st[0].key == "7_2");
    CHECK(st[1].kind == "series");
    CHECK(st[1].key == "g");
    CHECK(st[2].key == "t");
    for (const auto& e : st) CHECK(e.valid);
    cache.clear();
    CHECK(cache.status().empty());
}
