#include "cwilf/qseries.hpp"

#include <string>

#include "cwilf/qanalogue.hpp"
#include "cwilf/ratpoly.hpp"

namespace cwilf {

const char* norm_name(Norm n) {
    switch (n) {
        case Norm::PqFactorial: return "pq-factorial";
        case Norm::QFactorial: return "q-factorial";
        case Norm::PlainFactorial: return "plain-factorial";
    }
    return "?";
}

MultiPoly conv_weight(Norm norm, int n, int k) {
    switch (norm) {
        case Norm::PqFactorial: return pq_binomial(n, k);
        case Norm::QFactorial: return q_binomial(n, k);
        case Norm::PlainFactorial: return MultiPoly(binomial(n, k));
    }
    return MultiPoly();
}

QSeries::QSeries(Norm norm, int order) : norm_(norm) {
    if (order < 0) throw invalid_input("QSeries: negative order");
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

QSeries QSeries::one(Norm norm, int order) {
    QSeries s(norm, order);
    s.coeffs_[0] = MultiPoly(1);
    return s;
}

const MultiPoly& QSeries::at(int n) const {
    if (n < 0 || n > order()) throw invalid_input("QSeries: index out of range");
    return coeffs_[static_cast<size_t>(n)];
}

MultiPoly& QSeries::at(int n) {
    if (n < 0 || n > order()) throw invalid_input("QSeries: index out of range");
    return coeffs_[static_cast<size_t>(n)];
}

QSeries QSeries::substitute(const std::vector<std::pair<Var, MultiPoly::Binding>>& bindings,
                            Norm new_norm) const {
    QSeries out(new_norm, order());
    for (int n = 0; n <= order(); ++n) out.at(n) = at(n).substitute(bindings);
    return out;
}

QSeries mul(const QSeries& a, const QSeries& b) {
    if (a.norm() != b.norm())
        throw invalid_input(std::string("series norm mismatch: ") + norm_name(a.norm()) + " vs " +
                            norm_name(b.norm()));
    const int N = std::min(a.order(), b.order());
    QSeries out(a.norm(), N);
    for (int n = 0; n <= N; ++n) {
        MultiPoly c;
        for (int k = 0; k <= n; ++k) {
            const MultiPoly& ak = a.at(k);
            const MultiPoly& bk = b.at(n - k);
            if (ak.is_zero() || bk.is_zero()) continue;
            c += conv_weight(a.norm(), n, k) * ak * bk;
        }
        out.at(n) = std::move(c);
    }
    return out;
}

QSeries QSeries::reciprocal() const {
    if (at(0) != MultiPoly(1))
        throw invalid_input("reciprocal: constant term must be 1");
    QSeries b(norm_, order());
    b.at(0) = MultiPoly(1);
    for (int n = 1; n <= order(); ++n) {
        MultiPoly acc;
        for (int k = 1; k <= n; ++k) {
            const MultiPoly& ak = at(k);
            if (ak.is_zero() || b.at(n - k).is_zero()) continue;
            acc += conv_weight(norm_, n, k) * ak * b.at(n - k);
        }
        b.at(n) = -acc;
    }
    return b;
}

namespace {

void check_budget(int order, int budget, const char* op) {
    if (order > budget)
        throw budget_exceeded(std::string(op) + ": order " + std::to_string(order) +
                              " exceeds the enumeration budget of S_" + std::to_string(budget));
}

struct PolyAcc {
    MultiPoly poly;
};

// Shared shape of the three brute-force builders: per n, sum a monomial
// over (a filtered subset of) S_n.
template <class Monomial, class Keep>
QSeries brute_series(Norm norm, int order, const ParallelContext& par, Keep keep,
                     Monomial monomial) {
    QSeries s = QSeries::one(norm, order);
    for (int n = 1; n <= order; ++n) {
        auto acc = sn_map_reduce<PolyAcc>(
            n, par,
            [&](PolyAcc& a, std::span<const int> w) {
                if (keep(w)) a.poly += monomial(w);
            },
            [](PolyAcc& into, const PolyAcc& from) { into.poly += from.poly; });
        s.at(n) = std::move(acc.poly);
    }
    return s;
}

std::string set_key(const char* op, const PatternBag& gamma, int order) {
    return std::string(op) + "|set=" + gamma.str() + "|N=" + std::to_string(order);
}

QSeries cached_series(const Cache* cache, const std::string& key, Norm norm, int order,
                      const std::function<QSeries()>& compute) {
    if (cache) {
        if (auto hit = cache->try_get(key)) {
            const auto& coeffs = (*hit).at("coeffs");
            if (coeffs.size() == static_cast<size_t>(order) + 1) {
                QSeries s(norm, order);
                for (int n = 0; n <= order; ++n)
                    s.at(n) = MultiPoly::from_json(coeffs[static_cast<size_t>(n)]);
                return s;
            }
        }
    }
    QSeries s = compute();
    if (cache) {
        nlohmann::json payload;
        auto arr = nlohmann::json::array();
        for (int n = 0; n <= order; ++n) arr.push_back(s.at(n).to_json());
        payload["coeffs"] = std::move(arr);
        payload["norm"] = norm_name(norm);
        cache->put(key, payload);
    }
    return s;
}

} // namespace

QSeries brute_inm(const PatternBag& gamma, int order, const ParallelContext& par,
                  const Cache* cache, int budget) {
    check_budget(order, budget, "brute_inm");
    return cached_series(cache, set_key("inm", gamma, order), Norm::QFactorial, order, [&] {
        return brute_series(
            Norm::QFactorial, order, par,
            [&](std::span<const int> w) { return !has_match(w, gamma); },
            [&](std::span<const int> w) {
                Exp e{0, 0, 0, 0, 0};
                e[static_cast<size_t>(Var::z)] = des_of(w) + 1;
                e[static_cast<size_t>(Var::q)] = static_cast<int>(inv_of(w));
                return MultiPoly::monomial(Int(1), e);
            });
    });
}

QSeries brute_nm_xy(const PatternBag& gamma, int order, const ParallelContext& par,
                    const Cache* cache, int budget) {
    check_budget(order, budget, "brute_nm_xy");
    return cached_series(cache, set_key("nmxy", gamma, order), Norm::PlainFactorial, order, [&] {
        return brute_series(
            Norm::PlainFactorial, order, par,
            [&](std::span<const int> w) { return !has_match(w, gamma); },
            [&](std::span<const int> w) {
                Exp e{0, 0, 0, 0, 0};
                e[static_cast<size_t>(Var::x)] = lrmin_of(w);
                e[static_cast<size_t>(Var::y)] = des_of(w) + 1;
                return MultiPoly::monomial(Int(1), e);
            });
    });
}

QSeries match_distribution(const Permutation& tau, int order, const ParallelContext& par,
                           bool p_one, const Cache* cache, int budget) {
    check_budget(order, budget, "match_distribution");
    const PatternSet gamma(tau);
    const Norm norm = p_one ? Norm::QFactorial : Norm::PqFactorial;
    const std::string key = std::string("matchdist|tau=") + tau.str() +
                            "|N=" + std::to_string(order) + (p_one ? "|p=1" : "");
    return cached_series(cache, key, norm, order, [&] {
        return brute_series(
            norm, order, par, [](std::span<const int>) { return true; },
            [&](std::span<const int> w) {
                Exp e{0, 0, 0, 0, 0};
                e[static_cast<size_t>(Var::x)] = count_matches(w, gamma);
                e[static_cast<size_t>(Var::q)] = static_cast<int>(inv_of(w));
                if (!p_one) e[static_cast<size_t>(Var::p)] = static_cast<int>(coinv_of(w));
                return MultiPoly::monomial(Int(1), e);
            });
    });
}

QSeries brute_u(const PatternBag& gamma, int order, const ParallelContext& par,
                const Cache* cache, int budget) {
    QSeries nm = brute_nm_xy(gamma, order, par, cache, budget);
    QSeries nm1y = nm.substitute({{Var::x, MultiPoly::Binding(Int(1))}}, Norm::PlainFactorial);
    return nm1y.reciprocal();
}

QSeries power_x(const QSeries& u, int order) {
    if (u.norm() != Norm::PlainFactorial)
        throw invalid_input("power_x: series must be plain-factorial normalized");
    if (u.at(0) != MultiPoly(1)) throw invalid_input("power_x: constant term must be 1");
    const int N = std::min(order, u.order());

    // ordinary coefficients c_n = u_n / n!
    std::vector<RatPoly> c(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) c[static_cast<size_t>(n)] = RatPoly(u.at(n), factorial(n));

    // l = log U via l_m = c_m - (1/m) sum_{k=1}^{m-1} k l_k c_{m-k}
    std::vector<RatPoly> l(static_cast<size_t>(N) + 1);
    for (int m = 1; m <= N; ++m) {
        RatPoly acc;
        for (int k = 1; k < m; ++k)
            acc += l[static_cast<size_t>(k)].times(Int(k)) * c[static_cast<size_t>(m - k)];
        l[static_cast<size_t>(m)] = c[static_cast<size_t>(m)] - acc.div(Int(m));
    }

    // e = exp(-x l) via e_n = (1/n) sum_{k=1}^{n} k m_k e_{n-k}, m = -x l
    const MultiPoly minus_x = -x_var();
    std::vector<RatPoly> m(static_cast<size_t>(N) + 1);
    for (int k = 1; k <= N; ++k) m[static_cast<size_t>(k)] = l[static_cast<size_t>(k)].times(minus_x);
    std::vector<RatPoly> e(static_cast<size_t>(N) + 1);
    e[0] = RatPoly(MultiPoly(1));
    for (int n = 1; n <= N; ++n) {
        RatPoly acc;
        for (int k = 1; k <= n; ++k)
            acc += m[static_cast<size_t>(k)].times(Int(k)) * e[static_cast<size_t>(n - k)];
        e[static_cast<size_t>(n)] = acc.div(Int(n));
    }

    QSeries out(Norm::PlainFactorial, N);
    for (int n = 0; n <= N; ++n)
        out.at(n) = e[static_cast<size_t>(n)].times(factorial(n)).to_poly();
    return out;
}

QSeries packing_reciprocal_series(int j, std::span<const MultiPoly> mp_polys, int order,
                                  Norm norm) {
    if (j < 2) throw invalid_input("packing_reciprocal_series: pattern length must be >= 2");
    QSeries denom = QSeries::one(norm, order);
    if (order >= 1) denom.at(1) = MultiPoly(-1);
    const MultiPoly x_minus_1 = x_var() - MultiPoly(1);
    for (size_t m = 1; m <= mp_polys.size(); ++m) {
        const int idx = static_cast<int>(m) * (j - 1) + 1;
        if (idx > order) break;
        denom.at(idx) -= x_minus_1.pow(static_cast<int>(m)) * mp_polys[m - 1];
    }
    return denom.reciprocal();
}

} // namespace cwilf
