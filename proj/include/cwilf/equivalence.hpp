#pragma once

#include <map>
#include <string>

#include "cwilf/cache.hpp"
#include "cwilf/overlap.hpp"
#include "cwilf/parallel.hpp"
#include "cwilf/permutation.hpp"
#include "cwilf/qseries.hpp"

#include "json.hpp"

namespace cwilf {

/// Which statistics refine the equivalence; the profile monomial uses
/// z^des q^inv x^lrmin over each match-free permutation.
struct StatProfile {
    bool des = false;
    bool inv = false;
    bool lrmin = false;

    static StatProfile parse(std::string_view csv); // e.g. "des,inv"
    std::string str() const;
    bool operator==(const StatProfile&) const = default;
};

/// Outcome of a classification run. A class is a maximal group of
/// patterns whose profile polynomial vectors agree for every n <= N;
/// the certification is only "equivalent up to N", never the infinite
/// claim. For each separated pair the least distinguishing n is kept.
struct EquivReport {
    StatProfile profile;
    int order = 0;
    std::vector<Permutation> patterns;
    std::vector<std::vector<MultiPoly>> vectors; // [pattern][n], n = 0..order
    std::vector<std::vector<int>> classes;       // indices into patterns
    std::map<std::pair<int, int>, int> distinguishing; // (i,j), i<j in different classes

    nlohmann::json to_json() const;
};

EquivReport classify(const std::vector<Permutation>& patterns, StatProfile profile, int order,
                     const ParallelContext& par, const Cache* cache = nullptr,
                     int budget = kDefaultSeriesBudget);

/// The match-replacing bijection: every alpha-match window of sigma is
/// rearranged in place so it reduces to beta. Requires (alpha, beta)
/// mutually minimal overlapping with alpha_i = beta_i for i <= a where
/// alpha_a = 1, equal last letters, and des(alpha) = des(beta). Maps
/// A_n (alpha-matches only) onto B_n (beta-matches only), preserves des
/// and LRmin, preserves inv when inv(alpha) = inv(beta), and fixes
/// match-free permutations pointwise; phi(beta, alpha, .) inverts it.
/// PhiMap validates the pair hypotheses once; apply() is then cheap
/// enough for exhaustive sweeps.
class PhiMap {
public:
    PhiMap(Permutation alpha, Permutation beta, const ParallelContext& par,
           const OverlapBudget& budget = {});

    const Permutation& alpha() const { return alpha_; }
    const Permutation& beta() const { return beta_; }

    Permutation apply(const Permutation& sigma) const;
    Permutation operator()(const Permutation& sigma) const { return apply(sigma); }

private:
    Permutation alpha_, beta_;
    PatternSet alpha_set_;
};

Permutation phi(const Permutation& alpha, const Permutation& beta, const Permutation& sigma,
                const ParallelContext& par, const OverlapBudget& budget = {});

/// Diagnostic split of S_n by (alpha, beta) matches: A (alpha only),
/// B (beta only), C (both), D (neither).
struct MatchSplit {
    Int a, b, c, d;
};
MatchSplit match_split(const Permutation& alpha, const Permutation& beta, int n,
                       const ParallelContext& par);

/// The block constructions whose 2^blocks variants share descents,
/// inversions and endpoints: kind 't' uses 3-blocks
/// t1(x) = (x+1)(x+2)x, t2(x) = (x+2)x(x+1) at x = 3k; kind 's' uses
/// 4-blocks s1(x) = (x+1)(x+2)x(x+3), s2(x) = x(x+3)(x+1)(x+2) at
/// x = 4k-1. The result is 1 block(1) ... block(b) 2.
Permutation family_pattern(char kind, int blocks, std::span<const int> variant);

} // namespace cwilf
