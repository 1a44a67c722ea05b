#include "doctest.h"

#include <map>

#include "cwilf/overlap.hpp"
#include "cwilf/qanalogue.hpp"

#include "oracles.hpp"

using namespace cwilf;

namespace {
const ParallelContext par = ParallelContext::hardware();
}

TEST_CASE("minimal overlap verdicts on small patterns") {
    auto r132 = is_minimal_overlapping(Permutation::parse("132"), par);
    CHECK(r132.verdict);
    CHECK(r132.method == OverlapMethod::DefinitionScan);

    auto r123 = is_minimal_overlapping(Permutation::parse("123"), par);
    CHECK_FALSE(r123.verdict);
    REQUIRE(r123.witness.has_value());
    CHECK(r123.witness->str() == "1234");

    CHECK_FALSE(is_minimal_overlapping(Permutation::parse("14253"), par).verdict);
    CHECK_THROWS_AS(is_minimal_overlapping(Permutation::parse("12"), par), invalid_input);
}

TEST_CASE("the ten S_5 patterns that start with 1 and end with a descent") {
    // inv(12453) is 2 by the inversion-pair definition ((4,3) and (5,3));
    // the printed table carries a typo there
    const std::vector<std::tuple<const char*, int, int, bool>> table = {
        {"12453", 1, 2, true},  {"12543", 2, 3, true},  {"14253", 2, 3, false},
        {"15243", 2, 4, false}, {"13452", 1, 3, true},  {"13542", 2, 4, true},
        {"14352", 2, 4, true},  {"14532", 2, 5, true},  {"15342", 2, 5, true},
        {"15432", 3, 6, true},
    };
    for (const auto& [pat, des, inv, mo] : table) {
        auto b = stats(Permutation::parse(pat));
        CHECK(b.des == des);
        CHECK(b.inv == inv);
        CHECK(is_minimal_overlapping(Permutation::parse(pat), par).verdict == mo);
    }
}

TEST_CASE("prefix/suffix criterion agrees with the definitional scan") {
    // every pattern of S_j, j = 3, 4, 5 (6 is covered by the slow suite)
    for (int j = 3; j <= 5; ++j) {
        for_each_in_sn(j, [&](std::span<const int> w) {
            Permutation tau(std::vector<int>(w.begin(), w.end()));
            CHECK(self_overlap_free(tau) == is_minimal_overlapping_definitional(tau, par).verdict);
        });
    }
}

TEST_CASE("mutual minimal overlap examples") {
    auto r1 = are_mutually_minimal_overlapping(Permutation::parse("14532"),
                                               Permutation::parse("15342"), par);
    CHECK(r1.verdict);
    CHECK(r1.method == OverlapMethod::DefinitionScan);

    // start-with-1 end-with-2 patterns of one length are automatically mutual
    auto r2 = are_mutually_minimal_overlapping(Permutation::parse("1432"),
                                               Permutation::parse("1342"), par);
    CHECK(r2.verdict);

    // a long length-9 pair: beyond the scan budget, settled by the criterion
    auto r3 = are_mutually_minimal_overlapping(Permutation::parse("193827654"),
                                               Permutation::parse("139875264"), par);
    CHECK_FALSE(r3.verdict);
    CHECK(r3.method == OverlapMethod::PrefixSuffix);
    REQUIRE(r3.witness.has_value());
    CHECK(has_match(r3.witness->span(), PatternSet(Permutation::parse("193827654"))));
    CHECK(has_match(r3.witness->span(), PatternSet(Permutation::parse("139875264"))));

    CHECK_THROWS_AS(are_mutually_minimal_overlapping(Permutation::parse("1432"),
                                                     Permutation::parse("1432"), par),
                    invalid_input);
    // non-minimal-overlapping inputs violate the hypothesis
    CHECK_THROWS_AS(are_mutually_minimal_overlapping(Permutation::parse("1234"),
                                                     Permutation::parse("1432"), par),
                    invalid_input);
}

TEST_CASE("start-with-1-end-with-2 families are automatically minimal overlapping") {
    for (int j = 4; j <= 6; ++j) {
        std::vector<Permutation> family;
        for_each_in_sn(j - 2, [&](std::span<const int> mid) {
            std::vector<int> e{1};
            for (int v : mid) e.push_back(v + 2);
            e.push_back(2);
            family.emplace_back(std::move(e));
        });
        for (const auto& tau : family) CHECK(self_overlap_free(tau));
        // pairwise mutually minimal overlapping via the criterion
        for (size_t i = 0; i < family.size(); ++i)
            for (size_t k = i + 1; k < family.size(); ++k) {
                CHECK(largest_cross_overlap(family[i], family[k]) == 0);
                CHECK(largest_cross_overlap(family[k], family[i]) == 0);
            }
    }
}

TEST_CASE("maximum packings for 132") {
    auto tau = Permutation::parse("132");
    auto row1 = enumerate_max_packings(tau, 1, par);
    CHECK(row1.count == 1);
    REQUIRE(row1.packings.size() == 1);
    CHECK(row1.packings[0] == tau);
    Exp e{1, 2, 0, 0, 0}; // q^inv(132) p^coinv(132) = q p^2
    CHECK(row1.poly == MultiPoly::monomial(Int(1), e));

    auto row2 = enumerate_max_packings(tau, 2, par);
    CHECK(row2.count == 3);
    CHECK(row2.poly == closed_form_mp(tau, 1));
    // spot-check the packing set itself: every member has exactly 2 matches
    for (const auto& sigma : row2.packings) {
        CHECK(sigma.size() == 5);
        CHECK(count_matches(sigma.span(), PatternSet(tau)) == 2);
    }

    CHECK_THROWS_AS(enumerate_max_packings(Permutation::parse("123"), 1, par), invalid_input);
    CHECK_THROWS_AS(enumerate_max_packings(tau, 6, par), budget_exceeded);
}

TEST_CASE("closed form packing polynomial against enumeration") {
    // n = 0 trivially gives the single-match monomial
    auto tau4 = Permutation::parse("1342");
    auto st = stats(tau4);
    Exp e{static_cast<int>(st.inv), static_cast<int>(st.coinv), 0, 0, 0};
    CHECK(closed_form_mp(tau4, 0) == MultiPoly::monomial(Int(1), e));

    // two matches of 1342 live in S_7
    CHECK(closed_form_mp(tau4, 1) == enumerate_max_packings(tau4, 2, par).poly);

    // every minimal overlapping tau in S_4 starting with 1, up to 2 extra
    // matches (three matches of a length-4 pattern live in S_10)
    for_each_in_sn(4, [&](std::span<const int> w) {
        if (w[0] != 1) return;
        Permutation tau(std::vector<int>(w.begin(), w.end()));
        if (!self_overlap_free(tau)) return;
        for (int n = 0; n <= 2; ++n)
            CHECK(closed_form_mp(tau, n) == enumerate_max_packings(tau, n + 1, par).poly);
    });

    // p = q = 1 count specialization for tau = 132 through four matches
    auto tau = Permutation::parse("132");
    for (int matches = 1; matches <= 4; ++matches) {
        Int formula = 1;
        for (int i = 1; i <= matches; ++i)
            formula *= pq_binomial(i * 2 - 1, 1).evaluate({Int(1), Int(1), Int(1), Int(1), Int(1)});
        CHECK(enumerate_max_packings(tau, matches, par).count == formula);
    }

    CHECK_THROWS_AS(closed_form_mp(Permutation::parse("2134"), 1), invalid_input);
}

TEST_CASE("glued witnesses realize the claimed overlap") {
    // 123 overlaps itself in 2 letters; the glue has two matches
    Permutation tau = Permutation::parse("123");
    Permutation w = glue_witness(tau, tau, 2);
    CHECK(w.size() == 4);
    CHECK(count_matches(w.span(), PatternSet(tau)) >= 2);

    std::mt19937_64 rng(99);
    int built = 0;
    while (built < 20) {
        Permutation a = cwilf::testing::random_permutation(rng, 5);
        Permutation b = cwilf::testing::random_permutation(rng, 5);
        int i = largest_cross_overlap(a, b);
        if (i == 0) continue;
        ++built;
        Permutation glued = glue_witness(a, b, i);
        CHECK(glued.size() == 10 - i);
        CHECK(has_match(glued.span(), PatternSet(a)));
        CHECK(has_match(glued.span(), PatternSet(b)));
    }
}

TEST_CASE("overlap reports serialize") {
    auto r = is_minimal_overlapping(Permutation::parse("123"), par);
    auto j = r.to_json();
    CHECK(j["verdict"] == false);
    CHECK(j["witness"] == "1234");
    CHECK(j["method"] == "definition-scan");
}

// Exhaustive cross-validation of the fast paths: single patterns and
// all pairs of minimal overlapping patterns through length 6 (so up to
// an S_10 sweep). One inverted sweep per (j, n) marks every violating
// pattern and pair at once; window codes are factorial-system ranks,
// so they index arrays of size j! directly.
TEST_CASE("fast paths validated definitionally through length 6") {
    for (int j = 3; j <= 6; ++j) {
        const size_t nj = static_cast<size_t>(factorial(j));
        std::vector<Permutation> pats;
        pats.reserve(nj);
        for_each_in_sn(j, [&](std::span<const int> w) {
            pats.emplace_back(std::vector<int>(w.begin(), w.end()));
        });

        std::vector<char> self_violated(nj, 0);
        std::vector<char> pair_violated(nj * nj, 0);

        struct Acc {
            std::vector<char> self, pair;
        };
        for (int n = j + 1; n <= 2 * j - 2; ++n) {
            auto acc = sn_map_reduce<Acc>(
                n, par,
                [&](Acc& a, std::span<const int> w) {
                    if (a.self.empty()) {
                        a.self.assign(nj, 0);
                        a.pair.assign(nj * nj, 0);
                    }
                    size_t seen[8];
                    int counts[8];
                    int distinct = 0;
                    for (size_t s = 0; s + static_cast<size_t>(j) <= w.size(); ++s) {
                        const size_t code = lehmer_code(w.subspan(s, static_cast<size_t>(j)));
                        bool found = false;
                        for (int d = 0; d < distinct; ++d)
                            if (seen[d] == code) {
                                ++counts[d];
                                found = true;
                            }
                        if (!found) {
                            seen[distinct] = code;
                            counts[distinct] = 1;
                            ++distinct;
                        }
                    }
                    for (int d = 0; d < distinct; ++d)
                        if (counts[d] >= 2) a.self[seen[d]] = 1;
                    for (int d1 = 0; d1 < distinct; ++d1)
                        for (int d2 = d1 + 1; d2 < distinct; ++d2) {
                            a.pair[seen[d1] * nj + seen[d2]] = 1;
                            a.pair[seen[d2] * nj + seen[d1]] = 1;
                        }
                },
                [](Acc& into, const Acc& from) {
                    if (from.self.empty()) return;
                    if (into.self.empty()) {
                        into = from;
                        return;
                    }
                    for (size_t i = 0; i < from.self.size(); ++i) into.self[i] |= from.self[i];
                    for (size_t i = 0; i < from.pair.size(); ++i) into.pair[i] |= from.pair[i];
                });
            if (!acc.self.empty()) {
                for (size_t i = 0; i < nj; ++i) self_violated[i] |= acc.self[i];
                for (size_t i = 0; i < pair_violated.size(); ++i) pair_violated[i] |= acc.pair[i];
            }
        }

        int overlap_free = 0;
        for (size_t i = 0; i < nj; ++i) {
            CHECK(self_overlap_free(pats[i]) == !self_violated[i]);
            if (!self_violated[i]) ++overlap_free;
        }
        CHECK(overlap_free > 0);

        for (size_t i = 0; i < nj; ++i) {
            if (self_violated[i]) continue;
            for (size_t k = i + 1; k < nj; ++k) {
                if (self_violated[k]) continue;
                const bool fast = largest_cross_overlap(pats[i], pats[k]) == 0 &&
                                  largest_cross_overlap(pats[k], pats[i]) == 0;
                CHECK(fast == !pair_violated[i * nj + k]);
            }
        }
    }
}
