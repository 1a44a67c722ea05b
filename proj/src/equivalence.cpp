#include "cwilf/equivalence.hpp"

#include <algorithm>
#include <sstream>

namespace cwilf {

StatProfile StatProfile::parse(std::string_view csv) {
    StatProfile p;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view tok = csv.substr(start, comma - start);
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a != std::string_view::npos) {
            tok = tok.substr(a, b - a + 1);
            if (tok == "des") p.des = true;
            else if (tok == "inv") p.inv = true;
            else if (tok == "lrmin") p.lrmin = true;
            else throw invalid_input("unknown statistic '" + std::string(tok) + "' (want des, inv, lrmin)");
        }
        start = comma + 1;
        if (comma == csv.size()) break;
    }
    return p;
}

std::string StatProfile::str() const {
    std::string s;
    auto add = [&](const char* name) {
        if (!s.empty()) s += ',';
        s += name;
    };
    if (des) add("des");
    if (inv) add("inv");
    if (lrmin) add("lrmin");
    return s;
}

nlohmann::json EquivReport::to_json() const {
    nlohmann::json j;
    j["stats"] = profile.str();
    j["order"] = order;
    j["monomial"] = "z^des * q^inv * x^lrmin (restricted to the selected stats)";
    auto pats = nlohmann::json::array();
    for (const auto& p : patterns) pats.push_back(p.str());
    j["patterns"] = std::move(pats);
    auto vecs = nlohmann::json::array();
    for (const auto& v : vectors) {
        auto arr = nlohmann::json::array();
        for (const auto& poly : v) arr.push_back(poly.to_json());
        vecs.push_back(std::move(arr));
    }
    j["vectors"] = std::move(vecs);
    auto cls = nlohmann::json::array();
    for (const auto& c : classes) {
        auto arr = nlohmann::json::array();
        for (int idx : c) arr.push_back(patterns[static_cast<size_t>(idx)].str());
        cls.push_back(std::move(arr));
    }
    j["classes"] = std::move(cls);
    j["equivalence_certified_up_to"] = order;
    auto dist = nlohmann::json::array();
    for (const auto& [pair, n] : distinguishing) {
        nlohmann::json d;
        d["first"] = patterns[static_cast<size_t>(pair.first)].str();
        d["second"] = patterns[static_cast<size_t>(pair.second)].str();
        d["distinguishing_n"] = n;
        dist.push_back(std::move(d));
    }
    j["separations"] = std::move(dist);
    return j;
}

EquivReport classify(const std::vector<Permutation>& patterns, StatProfile profile, int order,
                     const ParallelContext& par, const Cache* cache, int budget) {
    if (patterns.empty()) throw invalid_input("classify: no patterns given");
    const int j = patterns.front().size();
    for (const auto& p : patterns)
        if (p.size() != j) throw invalid_input("classify: patterns must share one length");
    if (order > budget)
        throw budget_exceeded("classify: order " + std::to_string(order) +
                              " exceeds the enumeration budget of S_" + std::to_string(budget));

    EquivReport report;
    report.profile = profile;
    report.order = order;
    report.patterns = patterns;

    struct Acc {
        MultiPoly poly;
    };
    for (const auto& tau : patterns) {
        const PatternSet gamma(tau);
        std::vector<MultiPoly> vec;
        vec.reserve(static_cast<size_t>(order) + 1);
        const std::string key = "classify|tau=" + tau.str() + "|stats=" + profile.str() +
                                "|N=" + std::to_string(order);
        if (cache) {
            if (auto hit = cache->try_get(key)) {
                for (const auto& pj : (*hit).at("vector")) vec.push_back(MultiPoly::from_json(pj));
            }
        }
        if (vec.empty()) {
            vec.emplace_back(MultiPoly(1));
            for (int n = 1; n <= order; ++n) {
                auto acc = sn_map_reduce<Acc>(
                    n, par,
                    [&](Acc& a, std::span<const int> w) {
                        if (has_match(w, gamma)) return;
                        Exp e{0, 0, 0, 0, 0};
                        if (profile.des) e[static_cast<size_t>(Var::z)] = des_of(w);
                        if (profile.inv) e[static_cast<size_t>(Var::q)] = static_cast<int>(inv_of(w));
                        if (profile.lrmin) e[static_cast<size_t>(Var::x)] = lrmin_of(w);
                        a.poly += MultiPoly::monomial(Int(1), e);
                    },
                    [](Acc& into, const Acc& from) { into.poly += from.poly; });
                vec.push_back(std::move(acc.poly));
            }
            if (cache) {
                nlohmann::json payload;
                auto arr = nlohmann::json::array();
                for (const auto& poly : vec) arr.push_back(poly.to_json());
                payload["vector"] = std::move(arr);
                cache->put(key, payload);
            }
        }
        report.vectors.push_back(std::move(vec));
    }

    // greedy partition by exact vector equality
    std::vector<int> class_of(patterns.size(), -1);
    for (size_t i = 0; i < patterns.size(); ++i) {
        if (class_of[i] >= 0) continue;
        const int cls = static_cast<int>(report.classes.size());
        report.classes.push_back({static_cast<int>(i)});
        class_of[i] = cls;
        for (size_t k = i + 1; k < patterns.size(); ++k) {
            if (class_of[k] >= 0) continue;
            if (report.vectors[i] == report.vectors[k]) {
                report.classes[static_cast<size_t>(cls)].push_back(static_cast<int>(k));
                class_of[k] = cls;
            }
        }
    }
    for (size_t i = 0; i < patterns.size(); ++i)
        for (size_t k = i + 1; k < patterns.size(); ++k) {
            if (class_of[i] == class_of[k]) continue;
            for (int n = 0; n <= order; ++n)
                if (report.vectors[i][static_cast<size_t>(n)] != report.vectors[k][static_cast<size_t>(n)]) {
                    report.distinguishing[{static_cast<int>(i), static_cast<int>(k)}] = n;
                    break;
                }
        }
    return report;
}

PhiMap::PhiMap(Permutation alpha, Permutation beta, const ParallelContext& par,
               const OverlapBudget& budget)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), alpha_set_(alpha_) {
    const int j = alpha_.size();
    if (beta_.size() != j) throw invalid_input("phi: alpha and beta must have the same length");
    // a = position of the letter 1; shared prefix through a
    int a = 0;
    for (int i = 1; i <= j; ++i)
        if (alpha_.at(i) == 1) {
            a = i;
            break;
        }
    if (a == j) throw invalid_input("phi: hypothesis violated: 1 must not be the last letter");
    if (beta_.at(a) != 1) throw invalid_input("phi: hypothesis violated: beta must carry 1 at the same position");
    for (int i = 1; i <= a; ++i)
        if (alpha_.at(i) != beta_.at(i))
            throw invalid_input(
                "phi: hypothesis violated: alpha and beta must agree through the position of 1");
    if (alpha_.at(j) != beta_.at(j))
        throw invalid_input("phi: hypothesis violated: alpha and beta must share the last letter");
    if (des_of(alpha_.span()) != des_of(beta_.span()))
        throw invalid_input("phi: hypothesis violated: des(alpha) must equal des(beta)");
    if (!are_mutually_minimal_overlapping(alpha_, beta_, par, budget).verdict)
        throw invalid_input(
            "phi: hypothesis violated: alpha and beta are not mutually minimal overlapping");
}

Permutation PhiMap::apply(const Permutation& sigma) const {
    const int j = alpha_.size();
    const auto starts = match_positions(sigma, alpha_set_);
    for (size_t t = 1; t < starts.size(); ++t)
        if (starts[t] - starts[t - 1] < j - 1)
            throw internal_consistency_error("phi: alpha-match windows share more than one letter");

    std::vector<int> out = sigma.entries();
    std::vector<int> window;
    for (int start : starts) {
        window.assign(out.begin() + (start - 1), out.begin() + (start - 1 + j));
        std::sort(window.begin(), window.end());
        // rewrite the window by beta's ranks; entries at offsets <= a and
        // the last offset are unchanged since alpha and beta agree there
        for (int t = 1; t <= j; ++t)
            out[static_cast<size_t>(start - 1 + t - 1)] =
                window[static_cast<size_t>(beta_.at(t) - 1)];
    }
    return Permutation(std::move(out));
}

Permutation phi(const Permutation& alpha, const Permutation& beta, const Permutation& sigma,
                const ParallelContext& par, const OverlapBudget& budget) {
    return PhiMap(alpha, beta, par, budget).apply(sigma);
}

MatchSplit match_split(const Permutation& alpha, const Permutation& beta, int n,
                       const ParallelContext& par) {
    const PatternSet ga(alpha), gb(beta);
    struct Acc {
        long long a = 0, b = 0, c = 0, d = 0;
    };
    auto acc = sn_map_reduce<Acc>(
        n, par,
        [&](Acc& acc2, std::span<const int> w) {
            const bool ma = has_match(w, ga);
            const bool mb = has_match(w, gb);
            if (ma && mb) ++acc2.c;
            else if (ma) ++acc2.a;
            else if (mb) ++acc2.b;
            else ++acc2.d;
        },
        [](Acc& into, const Acc& from) {
            into.a += from.a;
            into.b += from.b;
            into.c += from.c;
            into.d += from.d;
        });
    return MatchSplit{Int(acc.a), Int(acc.b), Int(acc.c), Int(acc.d)};
}

Permutation family_pattern(char kind, int blocks, std::span<const int> variant) {
    if (blocks < 1) throw invalid_input("family_pattern: need at least one block");
    if (static_cast<int>(variant.size()) != blocks)
        throw invalid_input("family_pattern: variant must have one digit per block");
    for (int v : variant)
        if (v != 1 && v != 2) throw invalid_input("family_pattern: variant digits must be 1 or 2");
    std::vector<int> e{1};
    if (kind == 't') {
        for (int k = 1; k <= blocks; ++k) {
            const int x = 3 * k;
            if (variant[static_cast<size_t>(k - 1)] == 1) {
                e.insert(e.end(), {x + 1, x + 2, x});
            } else {
                e.insert(e.end(), {x + 2, x, x + 1});
            }
        }
    } else if (kind == 's') {
        for (int k = 1; k <= blocks; ++k) {
            const int x = 4 * k - 1;
            if (variant[static_cast<size_t>(k - 1)] == 1) {
                e.insert(e.end(), {x + 1, x + 2, x, x + 3});
            } else {
                e.insert(e.end(), {x, x + 3, x + 1, x + 2});
            }
        }
    } else {
        throw invalid_input("family_pattern: kind must be 't' or 's'");
    }
    e.push_back(2);
    return Permutation(std::move(e));
}

} // namespace cwilf
