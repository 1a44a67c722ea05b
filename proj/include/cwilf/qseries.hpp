#pragma once

#include <vector>

#include "cwilf/cache.hpp"
#include "cwilf/multipoly.hpp"
#include "cwilf/parallel.hpp"
#include "cwilf/permutation.hpp"

namespace cwilf {

/// Convolution rule of a truncated series a_0..a_N in t. Three
/// normalizations coexist here: t^n/[n]_q! (INM/IU), the two-variable
/// t^n/[n]_{p,q}! refinement (match distributions) and plain t^n/n!
/// (NM/U), so the rule travels with the coefficients and cross-norm
/// arithmetic is a type error. QFactorial is the p = 1 image of
/// PqFactorial.
enum class Norm { PqFactorial, QFactorial, PlainFactorial };

const char* norm_name(Norm n);

/// Weight w(n,k) such that (a*b)_n = sum_k w(n,k) a_k b_{n-k}.
MultiPoly conv_weight(Norm norm, int n, int k);

class QSeries {
public:
    QSeries() = default;
    QSeries(Norm norm, int order); // zero series a_0..a_order
    static QSeries one(Norm norm, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Norm norm() const { return norm_; }
    const MultiPoly& at(int n) const;
    MultiPoly& at(int n);
    const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

    bool operator==(const QSeries&) const = default;

    /// Termwise substitution (used for q = 1 collapses and z -> y
    /// renamings); the norm tag may be re-declared by the caller since
    /// e.g. q = 1 turns a QFactorial series into a PlainFactorial one.
    QSeries substitute(const std::vector<std::pair<Var, MultiPoly::Binding>>& bindings,
                       Norm new_norm) const;

    friend QSeries mul(const QSeries& a, const QSeries& b);

    /// b with (a*b) = 1 up to the order; requires a_0 = 1. An involution:
    /// reciprocal(reciprocal(a)) = a.
    QSeries reciprocal() const;

private:
    Norm norm_ = Norm::PlainFactorial;
    std::vector<MultiPoly> coeffs_;
};

/// Enumeration ceiling for the brute-force series builders below.
inline constexpr int kDefaultSeriesBudget = 10;

/// INM_{Gamma,n}(q,z) = sum over Gamma-match-free sigma in S_n of
/// z^{des+1} q^{inv}; a_0 = 1. QFactorial norm.
QSeries brute_inm(const PatternBag& gamma, int order, const ParallelContext& par,
                  const Cache* cache = nullptr, int budget = kDefaultSeriesBudget);

/// NM_{Gamma,n}(x,y) = sum over Gamma-match-free sigma in S_n of
/// x^{LRmin} y^{1+des}; a_0 = 1. PlainFactorial norm.
QSeries brute_nm_xy(const PatternBag& gamma, int order, const ParallelContext& par,
                    const Cache* cache = nullptr, int budget = kDefaultSeriesBudget);

/// sum over all sigma in S_n of x^{tau-mch} p^{coinv} q^{inv}
/// (PqFactorial norm); with p_one the p statistic is dropped and the
/// series is QFactorial.
QSeries match_distribution(const Permutation& tau, int order, const ParallelContext& par,
                           bool p_one = false, const Cache* cache = nullptr,
                           int budget = kDefaultSeriesBudget);

/// The U series against INM: U(t,y) = 1 / (1 + sum NM_n(1,y) t^n/n!),
/// i.e. the PlainFactorial reciprocal of brute_nm_xy at x = 1.
QSeries brute_u(const PatternBag& gamma, int order, const ParallelContext& par,
                const Cache* cache = nullptr, int budget = kDefaultSeriesBudget);

/// (1/U)^x for a PlainFactorial series with u_0 = 1, computed as
/// exp(-x log U) with exact rational intermediates. Every t^n/n!
/// coefficient must clear to an integer polynomial; a leftover
/// denominator raises internal_consistency_error.
QSeries power_x(const QSeries& u, int order);

/// The reciprocal-assembled match-distribution series built from
/// maximum packings of a length-j pattern:
///   1 / (1 - (t + sum_{m>=1} (x-1)^m mp_m t^{m(j-1)+1}/[m(j-1)+1]!))
/// where mp_polys[m-1] is the packing polynomial for m matches. Norm is
/// the norm the caller will compare against.
QSeries packing_reciprocal_series(int j, std::span<const MultiPoly> mp_polys, int order, Norm norm);

} // namespace cwilf
