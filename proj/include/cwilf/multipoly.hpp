#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cwilf/bigint.hpp"
#include "cwilf/errors.hpp"

#include "json.hpp"

namespace cwilf {

/// The five formal variables every formula in scope uses. The fixed
/// order (q, p, z, x, y) is also the canonical serialization order.
enum class Var : int { q = 0, p = 1, z = 2, x = 3, y = 4 };

inline constexpr int kNumVars = 5;
inline constexpr std::array<const char*, kNumVars> kVarNames{"q", "p", "z", "x", "y"};

std::optional<Var> var_from_name(std::string_view name);

/// Exponent vector over (q, p, z, x, y); componentwise >= 0.
using Exp = std::array<int, kNumVars>;

inline int total_degree(const Exp& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

/// Graded lexicographic order: total degree first, then lex on
/// (q, p, z, x, y). This is the canonical term order; every serialized
/// polynomial lists terms from the grlex-largest down.
struct GrlexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse exact-integer polynomial in Z[q, p, z, x, y]. No zero terms
/// are ever stored; all arithmetic is exact.
class MultiPoly {
public:
    using TermMap = std::map<Exp, Int, GrlexLess>;

    MultiPoly() = default; // zero
    MultiPoly(int c) : MultiPoly(Int(c)) {}
    explicit MultiPoly(Int c);
    static MultiPoly variable(Var v, int e = 1);
    static MultiPoly monomial(Int c, const Exp& e);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (coefficient of the all-zero exponent).
    Int constant_term() const { return coeff(Exp{0, 0, 0, 0, 0}); }
    Int coeff(const Exp& e) const;
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    int degree() const; // total degree; -1 for zero

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Int& c);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Int& c) { return a *= c; }
    friend MultiPoly operator*(const Int& c, MultiPoly a) { return a *= c; }
    bool operator==(const MultiPoly&) const = default;

    MultiPoly pow(int e) const;

    /// gcd of all coefficients, non-negative; 0 for the zero polynomial.
    Int content() const;

    /// Simultaneous substitution of integers or variables for variables;
    /// unbound variables stay. Substituting q=1, p=1 or z -> y is how the
    /// IU/U comparisons collapse one convention onto another.
    using Binding = std::variant<Int, Var>;
    MultiPoly substitute(const std::vector<std::pair<Var, Binding>>& bindings) const;

    Int evaluate(const std::array<Int, kNumVars>& point) const;

    /// Exact division; throws internal_consistency_error on any nonzero
    /// remainder. Long division on grlex leading terms, which terminates
    /// because grlex is a monomial well-order.
    static MultiPoly exact_div(const MultiPoly& numerator, const MultiPoly& denominator);

    /// Divide all coefficients by c; throws if any is not divisible.
    MultiPoly divide_coeffs(const Int& c) const;

    /// Canonical human-readable form, leading term first, e.g.
    /// "z^2*q - z". Within a monomial, variables print by descending
    /// exponent with ties broken by the (q,p,z,x,y) order.
    std::string pretty() const;

    /// {"vars":["q","p","z","x","y"],"terms":[{"e":[..5 ints..],"c":"<decimal>"}...]}
    /// with terms in canonical (descending grlex) order.
    nlohmann::json to_json() const;
    static MultiPoly from_json(const nlohmann::json& j);

private:
    TermMap terms_;
};

inline MultiPoly q_var() { return MultiPoly::variable(Var::q); }
inline MultiPoly p_var() { return MultiPoly::variable(Var::p); }
inline MultiPoly z_var() { return MultiPoly::variable(Var::z); }
inline MultiPoly x_var() { return MultiPoly::variable(Var::x); }
inline MultiPoly y_var() { return MultiPoly::variable(Var::y); }

} // namespace cwilf
