#pragma once

#include <functional>

#include "cwilf/multipoly.hpp"
#include "cwilf/parallel.hpp"
#include "cwilf/permutation.hpp"

#include "json.hpp"

namespace cwilf {

/// A composition (b_1..b_l) of n: the brick lengths of a tabloid read
/// left to right. The induced partition is the sorted multiset.
struct BrickTabloid {
    std::vector<int> bricks;

    int total() const;
    int brick_count() const { return static_cast<int>(bricks.size()); }

    bool operator==(const BrickTabloid&) const = default;
};

/// B_{lambda,n}: number of lambda-brick tabloids of shape (n), i.e.
/// distinct left-to-right arrangements of the parts of lambda.
Int count_brick_tabloids(std::vector<int> lambda, int n);

/// All compositions of n in lexicographic order.
std::vector<BrickTabloid> compositions_of(int n);

enum class CellLabel { None, Z, MinusZ };

/// A pair (B, sigma): a brick tabloid filled with a permutation such
/// that no Gamma-match of sigma lies inside a single brick. Labels are
/// derived, never stored: an internal descent cell carries z and each
/// brick's last cell carries -z. sign = (-1)^#bricks; the weight is
/// q^inv(sigma) z^#labels with the -z signs folded into the sign.
class FilledTabloid {
public:
    FilledTabloid(BrickTabloid shape, Permutation sigma);

    const BrickTabloid& shape() const { return shape_; }
    const Permutation& sigma() const { return sigma_; }
    int size() const { return sigma_.size(); }
    int brick_count() const { return shape_.brick_count(); }

    /// 1-based index of the brick containing the 1-based cell.
    int brick_of(int cell) const;
    int brick_start(int brick) const { return starts_[static_cast<size_t>(brick - 1)]; }
    int brick_end(int brick) const { return ends_[static_cast<size_t>(brick - 1)]; }

    CellLabel label(int cell) const;
    int label_count() const; // internal descents + one per brick

    int sign() const { return brick_count() % 2 == 0 ? 1 : -1; }
    MultiPoly weight() const;        // q^inv z^labels
    MultiPoly signed_weight() const; // sign * weight

    /// No Gamma-match of sigma lies entirely inside one brick.
    bool valid_for(const PatternBag& gamma) const;

    nlohmann::json to_json() const;

    bool operator==(const FilledTabloid&) const;

private:
    BrickTabloid shape_;
    Permutation sigma_;
    std::vector<int> starts_, ends_;
};

inline constexpr int kDefaultObjectBudget = 8; // max n; |O_n| <= 2^{n-1} n!

/// Stream every object of O_{Gamma,n} exactly once: compositions outer,
/// permutations inner, both lexicographic.
void for_each_object(const PatternBag& gamma, int n,
                     const std::function<void(const FilledTabloid&)>& visit,
                     int budget = kDefaultObjectBudget);

/// The involution J_Gamma. Scans cells left to right for the first cell
/// in Case I (a z-labeled cell whose brick may be split there) or Case
/// II (a brick boundary descent whose bricks may be combined); fixed
/// points are returned unchanged. J is its own inverse, flips the sign
/// off fixed points, and preserves the weight.
FilledTabloid involution_j(const PatternBag& gamma, const FilledTabloid& o);

bool is_fixed_point(const PatternBag& gamma, const FilledTabloid& o);

std::vector<FilledTabloid> fixed_points(const PatternBag& gamma, int n,
                                        const ParallelContext& par,
                                        int budget = kDefaultObjectBudget);

/// sum of sgn(O) W(O) over all of O_{Gamma,n} and over the J-fixed
/// subset; both equal IU_{Gamma,n}(q,z).
MultiPoly object_sum(const PatternBag& gamma, int n, const ParallelContext& par,
                     int budget = kDefaultObjectBudget);
MultiPoly fixed_point_sum(const PatternBag& gamma, int n, const ParallelContext& par,
                          int budget = kDefaultObjectBudget);

/// Structure of an involution fixed point: (1) a brick preceded by an
/// increase (or the first brick) is strictly increasing; (2) a brick
/// preceded by a descent is entered by a Gamma-match spanning the
/// boundary and carries at most max_des(Gamma)-1 internal z labels;
/// (3) when every pattern's descent bottoms read 2..des+1 left to
/// right, brick-first elements increase.
struct FixedPointStructure {
    bool prop1 = false;
    bool prop2 = false;
    bool prop3_hypothesis = false; // does Gamma satisfy property (3)'s hypothesis
    bool prop3 = false;            // only meaningful when the hypothesis holds
};

FixedPointStructure fixed_point_structure(const PatternBag& gamma, const FilledTabloid& o);

/// Property (3)'s hypothesis on the pattern set itself.
bool descent_bottoms_canonical(const PatternBag& gamma);

} // namespace cwilf
