#include "doctest.h"

#include <numeric>

#include "cwilf/parallel.hpp"
#include "cwilf/permutation.hpp"

#include "oracles.hpp"

using namespace cwilf;
namespace t = cwilf::testing;

TEST_CASE("reduce matches the worked examples") {
    CHECK(reduce(std::span<const int>(parse_word("53962"))).str() == "32541");
    CHECK(reduce(std::span<const int>(parse_word("123"))).str() == "123");
    CHECK(reduce(std::span<const int>(parse_word("9 15 11 16 13"))).str() == "14253");
    CHECK(reduce(std::span<const int>{}).size() == 0);
}

TEST_CASE("reduce rejects duplicates and is idempotent") {
    CHECK_THROWS_AS(reduce(std::span<const int>(parse_word("121"))), invalid_input);
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> len(0, 10), val(1, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> word;
        const int want = len(rng);
        while (static_cast<int>(word.size()) < want) {
            int v = val(rng);
            if (std::find(word.begin(), word.end(), v) == word.end()) word.push_back(v);
        }
        Permutation once = reduce(std::span<const int>(word));
        CHECK(reduce(once.span()) == once);
        CHECK(once.size() == static_cast<int>(word.size()));
    }
}

TEST_CASE("statistics ground truth") {
    auto b = stats(Permutation::parse("938471625"));
    CHECK(b.lrmin == 3);

    auto c = stats(Permutation::parse("15432"));
    CHECK(c.des == 3);
    CHECK(c.inv == 6);

    for (int n = 1; n <= 6; ++n) {
        auto id = stats(Permutation::identity(n));
        CHECK(id.des == 0);
        CHECK(id.inv == 0);
        CHECK(id.lrmin == 1);
    }

    auto e = stats(Permutation());
    CHECK(e.des == 0);
    CHECK(e.inv == 0);
    CHECK(e.coinv == 0);
    CHECK(e.lrmin == 0);
    CHECK(e.des_set.empty());
}

TEST_CASE("stat identities over small symmetric groups") {
    for (int n = 0; n <= 6; ++n) {
        for_each_in_sn(n, [&](std::span<const int> w) {
            auto b = stats(Permutation(std::vector<int>(w.begin(), w.end())));
            CHECK(b.des == static_cast<int>(b.des_set.size()));
            CHECK(b.inv + b.coinv == static_cast<long long>(n) * (n - 1) / 2);
            if (n >= 1) {
                CHECK(b.lrmin >= 1);
                CHECK(b.lrmin <= n);
                std::vector<int> rev(w.rbegin(), w.rend());
                CHECK(b.des + des_of(rev) == n - 1);
            }
            CHECK(b.des == t::dumb_des(w));
            CHECK(b.inv == t::dumb_inv(w));
            CHECK(b.lrmin == t::dumb_lrmin(w));
        });
    }
}

TEST_CASE("match positions against the definition") {
    PatternSet g123(Permutation::parse("123"));
    CHECK(match_positions(Permutation::parse("1234"), g123) == std::vector<int>{1, 2});

    Permutation tau = Permutation::parse("15342");
    CHECK(match_positions(tau, PatternSet(tau)) == std::vector<int>{1});

    CHECK(match_positions(Permutation::parse("938471625"), PatternSet(Permutation::parse("132"))) ==
          std::vector<int>{2, 6});

    // windows longer than sigma match nothing
    CHECK(match_positions(Permutation::parse("12"), g123).empty());
}

TEST_CASE("match positions agree with the naive oracle on random input") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        Permutation sigma = t::random_permutation(rng, 8);
        for (const char* pat : {"132", "321", "2143", "1234"}) {
            PatternSet g(Permutation::parse(pat));
            CHECK(match_positions(sigma, g) ==
                  t::dumb_match_positions(sigma.span(), {Permutation::parse(pat).entries()}));
        }
    }
}

TEST_CASE("pattern set semantics") {
    CHECK_THROWS_AS(PatternSet(std::vector<Permutation>{Permutation::parse("123"),
                                                        Permutation::parse("1234")}),
                    invalid_input);
    PatternSet g = PatternSet::parse("132, 213");
    CHECK(g.count() == 2);
    CHECK(g.length() == 3);
    CHECK(g.contains(Permutation::parse("132")));
    CHECK_FALSE(g.contains(Permutation::parse("321")));

    // de-duplication
    CHECK(PatternSet::parse("132,132").count() == 1);

    // match count over a set equals the sum over its members
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Permutation sigma = t::random_permutation(rng, 7);
        int total = count_matches(sigma.span(), g);
        int parts = count_matches(sigma.span(), PatternSet(Permutation::parse("132"))) +
                    count_matches(sigma.span(), PatternSet(Permutation::parse("213")));
        CHECK(total == parts);
    }
}

TEST_CASE("pattern bag groups mixed lengths") {
    PatternBag bag = PatternBag::parse("1324,123,1423");
    CHECK(bag.count() == 3);
    CHECK(bag.groups().size() == 2);
    CHECK(bag.min_length() == 3);
    CHECK(bag.str() == "123,1324,1423");
    Permutation sigma = Permutation::parse("51234");
    // 123-matches at 2 and 3; no length-4 matches
    CHECK(count_matches(sigma.span(), bag) == 2);
}

TEST_CASE("occurs covers subsequences, not just windows") {
    CHECK(occurs(Permutation::parse("132"), PatternSet(Permutation::parse("132"))));
    CHECK_FALSE(occurs(Permutation::parse("123"), PatternSet(Permutation::parse("321"))));
    CHECK(occurs(Permutation::parse("156792348"), PatternSet(Permutation::parse("213"))));
    // 2413 occurs in 25314 (take 2,5,1,4) but never consecutively
    Permutation sigma = Permutation::parse("25314");
    PatternSet g(Permutation::parse("2413"));
    CHECK(occurs(sigma, g));
    CHECK(match_positions(sigma, g).empty());
}

TEST_CASE("parsing accepts both serialized forms") {
    CHECK(Permutation::parse("15342").entries() == std::vector<int>{1, 5, 3, 4, 2});
    CHECK(Permutation::parse("9 15 11 16 13 10 12 14 1 2 3 4 5 6 7 8 17").size() == 17);
    CHECK(Permutation::parse("15342").str() == "15342");
    Permutation big = Permutation::parse("10 9 8 7 6 5 4 3 2 1");
    CHECK(big.str() == "10 9 8 7 6 5 4 3 2 1");
    CHECK(Permutation::parse(big.str()) == big);
    CHECK_THROWS_AS(Permutation::parse("1x3"), invalid_input);
    CHECK_THROWS_AS(Permutation::parse("122"), invalid_input);
    CHECK_THROWS_AS(Permutation::parse("130"), invalid_input);
}

TEST_CASE("rank and unrank are inverse and ordered") {
    const int n = 5;
    std::vector<int> prev;
    for (uint64_t r = 0; r < 120; ++r) {
        auto w = perm_unrank(n, r);
        CHECK(perm_rank(w) == r);
        if (!prev.empty())
            CHECK(std::lexicographical_compare(prev.begin(), prev.end(), w.begin(), w.end()));
        prev = w;
    }
}

TEST_CASE("rank-range enumeration partitions S_n") {
    const int n = 6;
    long long count = 0;
    for (uint64_t lo : {0ull, 100ull, 500ull}) {
        uint64_t hi = lo + 73;
        for_each_in_sn(n, lo, hi, [&](std::span<const int>) { ++count; });
    }
    CHECK(count == 3 * 73);

    // chunked map-reduce sees each permutation exactly once for any thread count
    for (int threads : {1, 2, 5}) {
        ParallelContext par{threads};
        struct Acc {
            long long n = 0;
            long long inv = 0;
        };
        auto acc = sn_map_reduce<Acc>(
            n, par,
            [](Acc& a, std::span<const int> w) {
                ++a.n;
                a.inv += inv_of(w);
            },
            [](Acc& into, const Acc& from) {
                into.n += from.n;
                into.inv += from.inv;
            });
        CHECK(acc.n == 720);
        CHECK(acc.inv == 720 * 15 / 2); // average inv over S_n is n(n-1)/4
    }
}

TEST_CASE("empty permutation participates in enumeration") {
    int visits = 0;
    for_each_in_sn(0, [&](std::span<const int> w) {
        CHECK(w.empty());
        ++visits;
    });
    CHECK(visits == 1);
}
