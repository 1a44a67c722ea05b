#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "cwilf/cache.hpp"
#include "cwilf/qseries.hpp"

using namespace cwilf;

namespace {
const ParallelContext par = ParallelContext::hardware();

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("cwilf-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(reinterpret_cast<uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};
} // namespace

TEST_CASE("cache stores and retrieves payloads by key") {
    TempDir dir;
    Cache cache(dir.path);
    nlohmann::json payload;
    payload["value"] = 42;
    cache.put("some|key", payload);
    auto hit = cache.try_get("some|key");
    REQUIRE(hit.has_value());
    CHECK((*hit)["value"] == 42);
    CHECK_FALSE(cache.try_get("other|key").has_value());
}

TEST_CASE("corrupted cache entries are ignored, not trusted") {
    TempDir dir;
    Cache cache(dir.path);
    nlohmann::json payload;
    payload["numbers"] = {1, 2, 3};
    cache.put("k", payload);
    REQUIRE(cache.try_get("k").has_value());

    // flip bytes in every stored file
    for (const auto& entry : std::filesystem::directory_iterator(dir.path)) {
        std::ifstream in(entry.path());
        std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        auto pos = body.find("[1,2,3]");
        REQUIRE(pos != std::string::npos);
        body.replace(pos, 7, "[1,2,9]");
        std::ofstream out(entry.path(), std::ios::trunc);
        out << body;
    }
    CHECK_FALSE(cache.try_get("k").has_value());
}

TEST_CASE("warm series cache returns byte-identical coefficients") {
    TempDir dir;
    Cache cache(dir.path);
    PatternBag g = PatternBag::parse("1324");
    QSeries cold = brute_inm(g, 5, par, &cache);
    QSeries warm = brute_inm(g, 5, par, &cache);
    REQUIRE(cold.order() == warm.order());
    for (int n = 0; n <= 5; ++n) {
        CHECK(cold.at(n) == warm.at(n));
        CHECK(cold.at(n).to_json().dump() == warm.at(n).to_json().dump());
    }

    // a corrupted entry falls back to recomputation with correct results
    for (const auto& entry : std::filesystem::directory_iterator(dir.path)) {
        std::ofstream out(entry.path(), std::ios::trunc);
        out << "{not json";
    }
    QSeries recovered = brute_inm(g, 5, par, &cache);
    for (int n = 0; n <= 5; ++n) CHECK(recovered.at(n) == cold.at(n));
}
