#pragma once

// Test-only oracles, kept deliberately naive and independent of the
// library's optimized paths: everything here works straight from the
// definitions.

#include <random>
#include <span>
#include <vector>

#include "cwilf/multipoly.hpp"
#include "cwilf/permutation.hpp"

namespace cwilf::testing {

inline std::vector<int> dumb_reduce(std::span<const int> w) {
    std::vector<int> out(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        int rank = 1;
        for (size_t j = 0; j < w.size(); ++j)
            if (w[j] < w[i]) ++rank;
        out[i] = rank;
    }
    return out;
}

/// 1-based start positions of windows reducing to any of the patterns
/// (patterns may mix lengths).
inline std::vector<int> dumb_match_positions(std::span<const int> sigma,
                                             const std::vector<std::vector<int>>& patterns) {
    std::vector<int> out;
    for (size_t i = 0; i < sigma.size(); ++i) {
        for (const auto& pat : patterns) {
            if (i + pat.size() > sigma.size()) continue;
            if (dumb_reduce(sigma.subspan(i, pat.size())) == pat) {
                out.push_back(static_cast<int>(i) + 1);
                break;
            }
        }
    }
    return out;
}

inline int dumb_des(std::span<const int> w) {
    int d = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++d;
    return d;
}

inline long long dumb_inv(std::span<const int> w) {
    long long v = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++v;
    return v;
}

inline int dumb_lrmin(std::span<const int> w) {
    int c = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        bool is_min = true;
        for (size_t j = 0; j < i; ++j)
            if (w[j] < w[i]) is_min = false;
        if (is_min) ++c;
    }
    return c;
}

/// Sum of q^inv(S_1^ S_2^ ... S_k^) over ordered set partitions of
/// {1..n} with |S_i| = parts[i]: the inversion interpretation of the
/// q-multinomial coefficient. Enumerates block-label words.
inline MultiPoly multinomial_inversion_sum(int n, std::span<const int> parts) {
    std::vector<int> labels;
    for (size_t b = 0; b < parts.size(); ++b)
        for (int t = 0; t < parts[b]; ++t) labels.push_back(static_cast<int>(b));
    std::sort(labels.begin(), labels.end());
    MultiPoly sum;
    do {
        // labels[v-1] = block of value v; sigma lists each block's values ascending
        std::vector<int> sigma;
        for (size_t b = 0; b < parts.size(); ++b)
            for (int v = 1; v <= n; ++v)
                if (labels[static_cast<size_t>(v - 1)] == static_cast<int>(b)) sigma.push_back(v);
        Exp e{0, 0, 0, 0, 0};
        e[static_cast<size_t>(Var::q)] = static_cast<int>(dumb_inv(sigma));
        sum += MultiPoly::monomial(Int(1), e);
    } while (std::next_permutation(labels.begin(), labels.end()));
    return sum;
}

inline MultiPoly random_poly(std::mt19937_64& rng, int max_terms = 6, int max_exp = 3,
                             long long max_coeff = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<long long> coeff(-max_coeff, max_coeff);
    MultiPoly out;
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Exp e{exp(rng), exp(rng), exp(rng), exp(rng), exp(rng)};
        out += MultiPoly::monomial(Int(coeff(rng)), e);
    }
    return out;
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> e(static_cast<size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    std::shuffle(e.begin(), e.end(), rng);
    return Permutation(std::move(e));
}

} // namespace cwilf::testing
