#include "cwilf/overlap.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cwilf/qanalogue.hpp"

namespace cwilf {

bool OverlapBudget::allows_sn(int n) const {
    Int f = factorial(n);
    return f <= Int(max_scan_perms);
}

const char* overlap_method_name(OverlapMethod m) {
    return m == OverlapMethod::DefinitionScan ? "definition-scan" : "prefix-suffix-criterion";
}

nlohmann::json OverlapReport::to_json() const {
    nlohmann::json j;
    auto pats = nlohmann::json::array();
    for (const auto& p : patterns) pats.push_back(p.str());
    j["patterns"] = std::move(pats);
    j["verdict"] = verdict;
    if (witness) j["witness"] = witness->str();
    j["method"] = overlap_method_name(method);
    return j;
}

namespace {

Permutation window_reduction(const Permutation& p, int from, int len) {
    return reduce(std::span<const int>(p.entries()).subspan(static_cast<size_t>(from - 1),
                                                            static_cast<size_t>(len)));
}

Permutation prefix_red(const Permutation& p, int len) { return window_reduction(p, 1, len); }
Permutation suffix_red(const Permutation& p, int len) {
    return window_reduction(p, p.size() - len + 1, len);
}

void require_pattern_length(const Permutation& tau) {
    if (tau.size() < 3)
        throw invalid_input("minimal overlap is defined for patterns of length >= 3, got " +
                            tau.str());
}

/// Smallest-length, then lexicographically least sigma in S_n,
/// n <= max_len, accepted by `bad`; nullopt when none exists.
template <class Bad>
std::optional<Permutation> scan_for_violation(int min_len, int max_len, const ParallelContext& par,
                                              Bad bad) {
    struct MinRank {
        uint64_t rank = std::numeric_limits<uint64_t>::max();
    };
    for (int n = min_len; n <= max_len; ++n) {
        auto found = sn_map_reduce<MinRank>(
            n, par,
            [&](MinRank& m, std::span<const int> w) {
                if (m.rank != std::numeric_limits<uint64_t>::max()) return; // chunk already found its least
                if (bad(w)) m.rank = perm_rank(w);
            },
            [](MinRank& into, const MinRank& from) { into.rank = std::min(into.rank, from.rank); });
        if (found.rank != std::numeric_limits<uint64_t>::max())
            return Permutation(perm_unrank(n, found.rank));
    }
    return std::nullopt;
}

void check_self_witness(const OverlapReport& report, const PatternSet& gamma) {
    if (report.verdict || !report.witness) return;
    if (count_matches(report.witness->span(), gamma) < 2)
        throw internal_consistency_error("overlap witness fails to contain two matches");
}

void check_mutual_witness(const OverlapReport& report, const PatternSet& ga, const PatternSet& gb) {
    if (report.verdict || !report.witness) return;
    if (!has_match(report.witness->span(), ga) || !has_match(report.witness->span(), gb))
        throw internal_consistency_error("overlap witness fails to contain the claimed matches");
}

} // namespace

bool self_overlap_free(const Permutation& tau) {
    const int j = tau.size();
    for (int i = 2; i <= j - 1; ++i)
        if (prefix_red(tau, i) == suffix_red(tau, i)) return false;
    return true;
}

int largest_cross_overlap(const Permutation& a, const Permutation& b) {
    const int j = a.size();
    for (int i = j - 1; i >= 2; --i)
        if (suffix_red(a, i) == prefix_red(b, i)) return i;
    return 0;
}

Permutation glue_witness(const Permutation& first, const Permutation& second, int overlap) {
    const int j = first.size();
    const int m = 2 * j - overlap;
    // sigma[u] < sigma[v] edges from both windows' total orders
    std::vector<std::vector<int>> succ(static_cast<size_t>(m));
    std::vector<int> indeg(static_cast<size_t>(m), 0);
    auto add_window = [&](const Permutation& pat, int offset) {
        std::vector<int> pos_by_rank(static_cast<size_t>(j));
        for (int i = 1; i <= j; ++i) pos_by_rank[static_cast<size_t>(pat.at(i) - 1)] = offset + i - 1;
        for (int r = 0; r + 1 < j; ++r) {
            succ[static_cast<size_t>(pos_by_rank[static_cast<size_t>(r)])].push_back(
                pos_by_rank[static_cast<size_t>(r + 1)]);
            ++indeg[static_cast<size_t>(pos_by_rank[static_cast<size_t>(r + 1)])];
        }
    };
    add_window(first, 0);
    add_window(second, j - overlap);
    // assign 1..m greedily to the smallest ready position
    std::vector<int> values(static_cast<size_t>(m), 0);
    for (int v = 1; v <= m; ++v) {
        int pick = -1;
        for (int u = 0; u < m; ++u)
            if (values[static_cast<size_t>(u)] == 0 && indeg[static_cast<size_t>(u)] == 0) {
                pick = u;
                break;
            }
        if (pick < 0) throw internal_consistency_error("glue_witness: inconsistent overlap orders");
        values[static_cast<size_t>(pick)] = v;
        for (int w : succ[static_cast<size_t>(pick)]) --indeg[static_cast<size_t>(w)];
    }
    return Permutation(std::move(values));
}

OverlapReport is_minimal_overlapping_definitional(const Permutation& tau,
                                                  const ParallelContext& par,
                                                  const OverlapBudget& budget) {
    require_pattern_length(tau);
    const int j = tau.size();
    if (!budget.allows_sn(2 * j - 2))
        throw budget_exceeded("definitional overlap scan needs S_" + std::to_string(2 * j - 2) +
                              " which exceeds the budget of " +
                              std::to_string(budget.max_scan_perms) + " permutations");
    OverlapReport report;
    report.patterns = {tau};
    report.method = OverlapMethod::DefinitionScan;
    const PatternSet gamma(tau);
    report.witness = scan_for_violation(j + 1, 2 * j - 2, par, [&](std::span<const int> w) {
        return count_matches(w, gamma) >= 2;
    });
    report.verdict = !report.witness.has_value();
    check_self_witness(report, gamma);
    return report;
}

OverlapReport is_minimal_overlapping(const Permutation& tau, const ParallelContext& par,
                                     const OverlapBudget& budget) {
    require_pattern_length(tau);
    const int j = tau.size();
    if (budget.allows_sn(2 * j - 2)) return is_minimal_overlapping_definitional(tau, par, budget);
    OverlapReport report;
    report.patterns = {tau};
    report.method = OverlapMethod::PrefixSuffix;
    report.verdict = self_overlap_free(tau);
    if (!report.verdict) {
        const int i = largest_cross_overlap(tau, tau);
        report.witness = glue_witness(tau, tau, i);
        check_self_witness(report, PatternSet(tau));
    }
    return report;
}

namespace {

void require_mutual_preconditions(const Permutation& alpha, const Permutation& beta,
                                  const ParallelContext& par, const OverlapBudget& budget) {
    require_pattern_length(alpha);
    if (alpha.size() != beta.size())
        throw invalid_input("mutual overlap: patterns must have equal length");
    if (alpha == beta)
        throw invalid_input("mutual overlap: patterns must be distinct (alpha = beta is rejected)");
    for (const auto* p : {&alpha, &beta})
        if (!is_minimal_overlapping(*p, par, budget).verdict)
            throw invalid_input("mutual overlap: " + p->str() + " is not minimal overlapping");
}

} // namespace

OverlapReport are_mutually_minimal_overlapping_definitional(const Permutation& alpha,
                                                            const Permutation& beta,
                                                            const ParallelContext& par,
                                                            const OverlapBudget& budget) {
    require_mutual_preconditions(alpha, beta, par, budget);
    const int j = alpha.size();
    if (!budget.allows_sn(2 * j - 2))
        throw budget_exceeded("definitional mutual scan needs S_" + std::to_string(2 * j - 2) +
                              " which exceeds the budget of " +
                              std::to_string(budget.max_scan_perms) + " permutations");
    OverlapReport report;
    report.patterns = {alpha, beta};
    report.method = OverlapMethod::DefinitionScan;
    const PatternSet ga(alpha), gb(beta);
    report.witness = scan_for_violation(j + 1, 2 * j - 2, par, [&](std::span<const int> w) {
        return has_match(w, ga) && has_match(w, gb);
    });
    report.verdict = !report.witness.has_value();
    check_mutual_witness(report, ga, gb);
    return report;
}

OverlapReport are_mutually_minimal_overlapping(const Permutation& alpha, const Permutation& beta,
                                               const ParallelContext& par,
                                               const OverlapBudget& budget) {
    require_mutual_preconditions(alpha, beta, par, budget);
    const int j = alpha.size();
    if (budget.allows_sn(2 * j - 2))
        return are_mutually_minimal_overlapping_definitional(alpha, beta, par, budget);
    OverlapReport report;
    report.patterns = {alpha, beta};
    report.method = OverlapMethod::PrefixSuffix;
    const int ab = largest_cross_overlap(alpha, beta);
    const int ba = largest_cross_overlap(beta, alpha);
    report.verdict = (ab == 0 && ba == 0);
    if (!report.verdict) {
        report.witness = ab >= ba ? glue_witness(alpha, beta, ab) : glue_witness(beta, alpha, ba);
        check_mutual_witness(report, PatternSet(alpha), PatternSet(beta));
    }
    return report;
}

nlohmann::json PackingRow::to_json() const {
    nlohmann::json j;
    j["pattern"] = tau.str();
    j["matches"] = matches;
    j["length"] = matches * (tau.size() - 1) + 1;
    auto arr = nlohmann::json::array();
    for (const auto& p : packings) arr.push_back(p.str());
    j["packings"] = std::move(arr);
    j["count"] = count.str();
    j["poly"] = poly.to_json();
    return j;
}

PackingRow enumerate_max_packings(const Permutation& tau, int matches, const ParallelContext& par,
                                  const OverlapBudget& budget) {
    if (matches < 1) throw invalid_input("enumerate_max_packings: need at least one match");
    if (!is_minimal_overlapping(tau, par, budget).verdict)
        throw invalid_input("enumerate_max_packings: " + tau.str() + " is not minimal overlapping");
    const int j = tau.size();
    const int len = matches * (j - 1) + 1;
    if (!budget.allows_sn(len))
        throw budget_exceeded("maximum packings at length " + std::to_string(len) +
                              " exceed the budget of " + std::to_string(budget.max_scan_perms) +
                              " permutations");
    const PatternSet gamma(tau);
    struct Acc {
        std::vector<Permutation> packings;
        MultiPoly poly;
    };
    auto acc = sn_map_reduce<Acc>(
        len, par,
        [&](Acc& a, std::span<const int> w) {
            if (count_matches(w, gamma) != matches) return;
            a.packings.emplace_back(std::vector<int>(w.begin(), w.end()));
            Exp e{0, 0, 0, 0, 0};
            e[static_cast<size_t>(Var::q)] = static_cast<int>(inv_of(w));
            e[static_cast<size_t>(Var::p)] = static_cast<int>(coinv_of(w));
            a.poly += MultiPoly::monomial(Int(1), e);
        },
        [](Acc& into, const Acc& from) {
            into.packings.insert(into.packings.end(), from.packings.begin(), from.packings.end());
            into.poly += from.poly;
        });
    PackingRow row;
    row.tau = tau;
    row.matches = matches;
    row.packings = std::move(acc.packings);
    row.count = Int(row.packings.size());
    row.poly = std::move(acc.poly);
    return row;
}

MultiPoly closed_form_mp(const Permutation& tau, int n) {
    const int j = tau.size();
    require_pattern_length(tau);
    if (tau.at(1) != 1)
        throw invalid_input("closed_form_mp: the formula requires tau to start with 1");
    if (!self_overlap_free(tau))
        throw invalid_input("closed_form_mp: " + tau.str() + " is not minimal overlapping");
    if (n < 0) throw invalid_input("closed_form_mp: negative index");
    const int s = tau.at(j);
    const auto st = stats(tau);
    Exp base{0, 0, 0, 0, 0};
    base[static_cast<size_t>(Var::q)] = static_cast<int>(st.inv) * (n + 1);
    base[static_cast<size_t>(Var::p)] = static_cast<int>(st.coinv) * (n + 1) +
                                        (s - 1) * (j - 1) * (n * (n + 1) / 2);
    MultiPoly out = MultiPoly::monomial(Int(1), base);
    for (int i = 1; i <= n + 1; ++i) out *= pq_binomial(i * (j - 1) + 1 - s, j - s);
    return out;
}

} // namespace cwilf
