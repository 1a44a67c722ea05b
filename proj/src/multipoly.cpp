#include "cwilf/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace cwilf {

std::optional<Var> var_from_name(std::string_view name) {
    for (int i = 0; i < kNumVars; ++i)
        if (name == kVarNames[static_cast<size_t>(i)]) return static_cast<Var>(i);
    return std::nullopt;
}

MultiPoly::MultiPoly(Int c) {
    if (c != 0) terms_.emplace(Exp{0, 0, 0, 0, 0}, std::move(c));
}

MultiPoly MultiPoly::variable(Var v, int e) {
    if (e < 0) throw invalid_input("variable exponent must be >= 0");
    Exp exp{0, 0, 0, 0, 0};
    exp[static_cast<size_t>(v)] = e;
    return monomial(Int(1), exp);
}

MultiPoly MultiPoly::monomial(Int c, const Exp& e) {
    for (int v : e)
        if (v < 0) throw invalid_input("monomial exponent must be >= 0");
    MultiPoly m;
    if (c != 0) m.terms_.emplace(e, std::move(c));
    return m;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Int MultiPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

int MultiPoly::degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exp e;
            for (int i = 0; i < kNumVars; ++i) e[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
            auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw invalid_input("pow: negative exponent");
    MultiPoly result(Int(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Int MultiPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g < 0 ? Int(-g) : g;
}

MultiPoly MultiPoly::substitute(const std::vector<std::pair<Var, Binding>>& bindings) const {
    std::array<std::optional<Binding>, kNumVars> bound;
    for (const auto& [v, b] : bindings) bound[static_cast<size_t>(v)] = b;
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        Int coeff = c;
        Exp ne{0, 0, 0, 0, 0};
        for (int i = 0; i < kNumVars; ++i) {
            const int exp = e[static_cast<size_t>(i)];
            if (exp == 0) continue;
            const auto& b = bound[static_cast<size_t>(i)];
            if (!b) {
                ne[static_cast<size_t>(i)] += exp;
            } else if (std::holds_alternative<Int>(*b)) {
                coeff *= int_pow(std::get<Int>(*b), static_cast<unsigned>(exp));
            } else {
                ne[static_cast<size_t>(std::get<Var>(*b))] += exp;
            }
        }
        if (coeff == 0) continue;
        auto [it, inserted] = out.terms_.try_emplace(ne, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

Int MultiPoly::evaluate(const std::array<Int, kNumVars>& point) const {
    Int total = 0;
    for (const auto& [e, c] : terms_) {
        Int t = c;
        for (int i = 0; i < kNumVars; ++i)
            if (e[static_cast<size_t>(i)] > 0) t *= int_pow(point[static_cast<size_t>(i)], static_cast<unsigned>(e[static_cast<size_t>(i)]));
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& numerator, const MultiPoly& denominator) {
    if (denominator.is_zero()) throw invalid_input("exact_div: division by zero polynomial");
    MultiPoly quotient;
    MultiPoly rem = numerator;
    const auto& [de, dc] = *denominator.terms_.rbegin(); // grlex leading term
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        Exp qe;
        for (int i = 0; i < kNumVars; ++i) {
            qe[static_cast<size_t>(i)] = re[static_cast<size_t>(i)] - de[static_cast<size_t>(i)];
            if (qe[static_cast<size_t>(i)] < 0)
                throw internal_consistency_error("exact_div: nonzero remainder (monomial mismatch)");
        }
        if (rc % dc != 0)
            throw internal_consistency_error("exact_div: nonzero remainder (coefficient mismatch)");
        MultiPoly t = monomial(rc / dc, qe);
        quotient += t;
        rem -= t * denominator;
    }
    return quotient;
}

MultiPoly MultiPoly::divide_coeffs(const Int& c) const {
    if (c == 0) throw invalid_input("divide_coeffs: division by zero");
    MultiPoly out = *this;
    for (auto& [e, coeff] : out.terms_) {
        if (coeff % c != 0)
            throw internal_consistency_error("divide_coeffs: coefficient not divisible");
        coeff /= c;
    }
    return out;
}

std::string MultiPoly::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        // variable factors by descending exponent, ties by canonical order
        std::vector<std::pair<int, int>> factors; // (var index, exponent)
        for (int i = 0; i < kNumVars; ++i)
            if (e[static_cast<size_t>(i)] > 0) factors.emplace_back(i, e[static_cast<size_t>(i)]);
        std::stable_sort(factors.begin(), factors.end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
        if (factors.empty()) {
            os << abs.str();
        } else {
            if (abs != 1) os << abs.str() << "*";
            for (size_t k = 0; k < factors.size(); ++k) {
                if (k) os << "*";
                os << kVarNames[static_cast<size_t>(factors[k].first)];
                if (factors[k].second > 1) os << "^" << factors[k].second;
            }
        }
    }
    return os.str();
}

nlohmann::json MultiPoly::to_json() const {
    nlohmann::json j;
    j["vars"] = kVarNames;
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        nlohmann::json t;
        t["e"] = it->first;
        t["c"] = it->second.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
    MultiPoly out;
    for (const auto& t : j.at("terms")) {
        Exp e{};
        const auto& je = t.at("e");
        if (je.size() != kNumVars) throw invalid_input("polynomial term: bad exponent arity");
        for (int i = 0; i < kNumVars; ++i) {
            e[static_cast<size_t>(i)] = je[static_cast<size_t>(i)].get<int>();
            if (e[static_cast<size_t>(i)] < 0) throw invalid_input("polynomial term: negative exponent");
        }
        Int c(t.at("c").get<std::string>());
        if (c == 0) continue;
        auto [it, inserted] = out.terms_.try_emplace(e, c);
        if (!inserted) throw invalid_input("polynomial JSON repeats an exponent vector");
    }
    return out;
}

} // namespace cwilf
