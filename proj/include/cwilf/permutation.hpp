#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwilf/errors.hpp"

namespace cwilf {

/// A permutation in one-line notation: entries are a bijection on
/// {1..n}. Positions are 1-based throughout, following the usual
/// combinatorial convention. The empty permutation (n = 0) is valid and
/// serves as the constant term of series.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    /// Accepts both serialized forms: a comma-free digit string such as
    /// "15342" (valid when every entry is a single digit) and
    /// space-separated integers such as "9 15 11 16 13".
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    /// Value at 1-based position i.
    int at(int i) const { return entries_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& entries() const { return entries_; }
    std::span<const int> span() const { return entries_; }

    /// Digit string when n <= 9, space-separated integers otherwise.
    std::string str() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> entries_;
};

/// des, inv, coinv, LRmin and the descent set (1-based positions).
/// For n >= 1: des == |des_set|, inv + coinv == n(n-1)/2, 1 <= lrmin <= n.
/// The empty permutation has every field zero.
struct StatBundle {
    int des = 0;
    long long inv = 0;
    long long coinv = 0;
    int lrmin = 0;
    std::vector<int> des_set;
};

/// A word of integers in either accepted form (digit string or
/// space-separated), without the bijection requirement; this is what
/// reduce() consumes.
std::vector<int> parse_word(std::string_view text);

/// red(w): replace the i-th smallest entry by i. Entries must be
/// pairwise distinct. red(53962) = 32541.
Permutation reduce(std::span<const int> word);
inline Permutation reduce(const Permutation& sigma) { return reduce(sigma.span()); }

StatBundle stats(const Permutation& sigma);

// Span-based statistics for hot enumeration loops.
int des_of(std::span<const int> w);
long long inv_of(std::span<const int> w);
long long coinv_of(std::span<const int> w);
int lrmin_of(std::span<const int> w);

/// A set of patterns of one common length j >= 1, deduplicated and kept
/// in lexicographic order. Mixed lengths are rejected. Window lookups
/// go through an order-isomorphism check for a single pattern and a
/// sorted Lehmer-code table otherwise.
class PatternSet {
public:
    PatternSet() = default;
    explicit PatternSet(std::vector<Permutation> patterns);
    explicit PatternSet(const Permutation& single) : PatternSet(std::vector<Permutation>{single}) {}

    static PatternSet parse(std::string_view csv); // comma-separated permutations

    int length() const { return length_; } // j; 0 for the empty set
    int count() const { return static_cast<int>(patterns_.size()); }
    const std::vector<Permutation>& patterns() const { return patterns_; }
    bool contains(const Permutation& p) const;

    /// True iff red(w) is in the set; w must have length j.
    bool matches_window(std::span<const int> w) const;

    std::string str() const; // comma-joined

    bool operator==(const PatternSet&) const = default;

private:
    std::vector<Permutation> patterns_;
    std::vector<uint64_t> codes_;        // sorted Lehmer codes, used when count() > 1
    std::vector<int> single_pos_by_rank_; // single-pattern fast path
    int length_ = 0;
};

/// Patterns of possibly mixed lengths, grouped by length. A bag-match
/// is a window of some pattern's own length reducing to that pattern.
/// The quoted recursion families (e.g. adding an identity permutation
/// of a different length to Gamma) need this; single-length contracts
/// stay on PatternSet.
class PatternBag {
public:
    PatternBag() = default;
    PatternBag(PatternSet group) : groups_{std::move(group)} { canonicalize(); }
    explicit PatternBag(const std::vector<Permutation>& patterns);
    explicit PatternBag(const Permutation& single) : PatternBag(PatternSet(single)) {}

    static PatternBag parse(std::string_view csv);

    const std::vector<PatternSet>& groups() const { return groups_; }
    int count() const;
    int min_length() const; // shortest pattern length
    std::vector<Permutation> all_patterns() const;
    std::string str() const;

    bool operator==(const PatternBag&) const = default;

private:
    void canonicalize();
    std::vector<PatternSet> groups_; // ascending length
};

int count_matches(std::span<const int> sigma, const PatternBag& bag);
bool has_match(std::span<const int> sigma, const PatternBag& bag);

/// 1-based start positions i with red(sigma_i .. sigma_{i+j-1}) in gamma,
/// in increasing order. Empty when j > n.
std::vector<int> match_positions(std::span<const int> sigma, const PatternSet& gamma);
inline std::vector<int> match_positions(const Permutation& sigma, const PatternSet& gamma) {
    return match_positions(sigma.span(), gamma);
}

int count_matches(std::span<const int> sigma, const PatternSet& gamma);
bool has_match(std::span<const int> sigma, const PatternSet& gamma);

/// True iff some (not necessarily consecutive) subsequence of sigma
/// reduces into gamma.
bool occurs(const Permutation& sigma, const PatternSet& gamma);

/// Lehmer code of w interpreted in the factorial number system. Unique
/// per relative order, so it doubles as a reduction fingerprint.
uint64_t lehmer_code(std::span<const int> w);

/// Lexicographic rank/unrank on S_n (0-based ranks).
uint64_t perm_rank(std::span<const int> sigma);
std::vector<int> perm_unrank(int n, uint64_t rank);

/// Visit the permutations of S_n with lexicographic rank in
/// [begin_rank, end_rank). The callback receives the one-line word; the
/// buffer is reused between calls. Ranges partition cleanly, which is
/// what the parallel map-reduce helpers rely on.
void for_each_in_sn(int n, uint64_t begin_rank, uint64_t end_rank,
                    const std::function<void(std::span<const int>)>& visit);
void for_each_in_sn(int n, const std::function<void(std::span<const int>)>& visit);

} // namespace cwilf
