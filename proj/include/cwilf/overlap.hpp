#pragma once

#include <optional>

#include "cwilf/multipoly.hpp"
#include "cwilf/parallel.hpp"
#include "cwilf/permutation.hpp"

#include "json.hpp"

namespace cwilf {

/// Cap on |S_n| for any definitional overlap scan; the default admits
/// n = 10, i.e. single patterns up to j = 6 scanned exhaustively.
struct OverlapBudget {
    uint64_t max_scan_perms = 3'628'800;

    bool allows_sn(int n) const;
};

enum class OverlapMethod { DefinitionScan, PrefixSuffix };

const char* overlap_method_name(OverlapMethod m);

/// Verdict of a minimal-overlap query. When the verdict is false the
/// witness is a permutation that actually realizes the forbidden
/// overlap (re-checked against match_positions before being returned).
/// Witnesses from a definitional scan are the shortest and then
/// lexicographically least violators; beyond the scan budget the
/// prefix/suffix criterion produces a deterministic glued witness
/// instead.
struct OverlapReport {
    std::vector<Permutation> patterns;
    bool verdict = false;
    std::optional<Permutation> witness;
    OverlapMethod method = OverlapMethod::DefinitionScan;

    nlohmann::json to_json() const;
};

/// True iff no i in [2, j-1] has red(prefix_i(tau)) = red(suffix_i(tau)).
/// Exact characterization of the minimal overlapping property; kept
/// separate so the tests can cross-validate it against the definition.
bool self_overlap_free(const Permutation& tau);

/// Largest i in [2, j-1] with red(suffix_i(a)) = red(prefix_i(b)), or 0.
int largest_cross_overlap(const Permutation& a, const Permutation& b);

/// Deterministic permutation of length 2j - overlap whose first window
/// reduces to `first` and last window to `second`.
Permutation glue_witness(const Permutation& first, const Permutation& second, int overlap);

/// tau has the minimal overlapping property: the shortest sigma with two
/// tau-matches has length 2j-1. Definitional scan when S_{2j-2} fits the
/// budget, prefix/suffix criterion otherwise. Requires j >= 3.
OverlapReport is_minimal_overlapping(const Permutation& tau, const ParallelContext& par,
                                     const OverlapBudget& budget = {});

/// Definitional scan only; throws budget_exceeded when S_{2j-2} does not
/// fit the budget.
OverlapReport is_minimal_overlapping_definitional(const Permutation& tau,
                                                  const ParallelContext& par,
                                                  const OverlapBudget& budget = {});

/// alpha and beta (distinct, both minimal overlapping) are mutually
/// minimal overlapping: no sigma shorter than 2j-1 carries both an
/// alpha-match and a beta-match.
OverlapReport are_mutually_minimal_overlapping(const Permutation& alpha, const Permutation& beta,
                                               const ParallelContext& par,
                                               const OverlapBudget& budget = {});

OverlapReport are_mutually_minimal_overlapping_definitional(const Permutation& alpha,
                                                            const Permutation& beta,
                                                            const ParallelContext& par,
                                                            const OverlapBudget& budget = {});

/// One row of the maximum-packing table: all sigma of length
/// matches*(j-1)+1 with exactly `matches` tau-matches, their count, and
/// sum of q^inv p^coinv over the set.
struct PackingRow {
    Permutation tau;
    int matches = 0;
    std::vector<Permutation> packings; // lexicographic order
    Int count;
    MultiPoly poly;

    nlohmann::json to_json() const;
};

PackingRow enumerate_max_packings(const Permutation& tau, int matches, const ParallelContext& par,
                                  const OverlapBudget& budget = {});

/// Product formula for the packing polynomial of n+1 matches of a
/// minimal overlapping tau with tau_1 = 1, tau_j = s:
///   (p^coinv(tau) q^inv(tau))^{n+1} p^{(s-1)(j-1) C(n+1,2)}
///   prod_{i=1}^{n+1} [i(j-1)+1-s choose j-s]_{p,q}
MultiPoly closed_form_mp(const Permutation& tau, int n);

} // namespace cwilf
