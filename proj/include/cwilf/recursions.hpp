#pragma once

#include <optional>
#include <string>

#include "cwilf/overlap.hpp"
#include "cwilf/qseries.hpp"

namespace cwilf {

/// IU_{tau,n}(q,z) by the key recursion for a minimal overlapping tau
/// with tau_1 = 1, tau_p = s, 2 <= s < p:
///   IU_0 = 1, IU_1 = -z,
///   IU_n = (1-z) IU_{n-1} - z^{des(tau)} q^{inv(tau)} [n-s choose p-s]_q IU_{n-p+1}
/// with negative-index terms 0 and out-of-range q-binomials 0.
/// QFactorial norm; coefficientwise equal to reciprocal(brute_inm({tau})).
QSeries iu_thm_key(const Permutation& tau, int order, const ParallelContext& par,
                   const OverlapBudget& budget = {});

/// Set version: all alpha^(i) in S_p minimal overlapping, starting with
/// 1, pairwise mutually minimal overlapping; s_i is the last element of
/// alpha^(i). The correction term is summed over the set.
QSeries iu_thm_set(const PatternSet& gamma, int order, const ParallelContext& par,
                   const OverlapBudget& budget = {});

/// The U_{Gamma,n}(y) recursions quoted from earlier work, keyed by
/// family tag. Each engine is paired with its brute-force oracle in the
/// tests; none is trusted standalone.
enum class UFamily {
    Jr1324,      // Gamma = {1324}
    Jr1324p,     // Gamma = {1324...p}, p >= 5
    Br1324_123,  // Gamma = {1324, 123}
    Br1324p_12p, // Gamma = {1324...p, 123...(p-1)}, p >= 5
    BrGammaK1K2, // Gamma_{k1,k2}, k1,k2 >= 2
    BrGamma22s   // Gamma_{2,2,s} = Gamma_{2,2} + identity of length s+1, s >= 2
};

std::optional<UFamily> u_family_from_name(std::string_view name);
const char* u_family_name(UFamily f);

struct RecursionSpec {
    UFamily family = UFamily::Jr1324;
    int p = 0;  // Jr1324p / Br1324p_12p
    int k1 = 0; // BrGammaK1K2
    int k2 = 0;
    int s = 0; // BrGamma22s

    /// The pattern set the recursion speaks about; this is what the
    /// brute-force oracle enumerates.
    PatternBag pattern_set() const;
};

/// PlainFactorial series in y with U_0 = 1, U_1 = -y and the selected
/// recursion above; parameters are validated against the quoted
/// statement's hypotheses.
QSeries u_quoted(const RecursionSpec& spec, int order);

/// Explicit closed forms for two of the families. Both straight sums;
/// every summand's coefficient is an exact integer and is checked.
enum class UClosed {
    Closed1324_123, // Gamma = {1324, 123}
    ClosedGamma222  // Gamma_{2,2,2}
};

std::optional<UClosed> u_closed_from_name(std::string_view name);
const char* u_closed_name(UClosed t);

/// Smallest index from which the closed form agrees with its recursion,
/// determined empirically against the oracle-checked recursions (the
/// tests pin this agreement through order 9).
int u_closed_min_index(UClosed tag);

MultiPoly u_closed(UClosed tag, int n);

/// All sigma in S_{k1+k2} with sigma_1 = 1, sigma_{k1+1} = 2 made of two
/// increasing runs of lengths k1 and k2.
PatternSet gamma_k1k2(int k1, int k2);

/// Gamma_{k1,k2} together with the identity 12...(s+1), s >= max(k1,k2).
/// Mixed lengths whenever s + 1 differs from k1 + k2.
PatternBag gamma_k1k2_s(int k1, int k2, int s);

} // namespace cwilf
