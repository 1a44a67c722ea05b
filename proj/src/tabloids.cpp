#include "cwilf/tabloids.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <thread>

namespace cwilf {

int BrickTabloid::total() const {
    int t = 0;
    for (int b : bricks) t += b;
    return t;
}

Int count_brick_tabloids(std::vector<int> lambda, int n) {
    if (lambda.empty() && n == 0) return 1;
    int sum = 0;
    for (int part : lambda) {
        if (part < 1) throw invalid_input("count_brick_tabloids: parts must be >= 1");
        sum += part;
    }
    if (sum != n) throw invalid_input("count_brick_tabloids: lambda is not a partition of n");
    // multinomial over part multiplicities
    std::map<int, int> mult;
    for (int part : lambda) ++mult[part];
    Int r = factorial(static_cast<int>(lambda.size()));
    for (const auto& [part, m] : mult) r /= factorial(m);
    return r;
}

std::vector<BrickTabloid> compositions_of(int n) {
    std::vector<BrickTabloid> out;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int rest) {
        if (rest == 0) {
            out.push_back(BrickTabloid{cur});
            return;
        }
        for (int b = 1; b <= rest; ++b) {
            cur.push_back(b);
            gen(rest - b);
            cur.pop_back();
        }
    };
    gen(n);
    return out;
}

FilledTabloid::FilledTabloid(BrickTabloid shape, Permutation sigma)
    : shape_(std::move(shape)), sigma_(std::move(sigma)) {
    if (shape_.total() != sigma_.size())
        throw invalid_input("filled tabloid: brick lengths must sum to the permutation length");
    int pos = 1;
    for (int b : shape_.bricks) {
        starts_.push_back(pos);
        ends_.push_back(pos + b - 1);
        pos += b;
    }
}

int FilledTabloid::brick_of(int cell) const {
    for (size_t i = 0; i < ends_.size(); ++i)
        if (cell <= ends_[i]) return static_cast<int>(i) + 1;
    throw invalid_input("brick_of: cell out of range");
}

CellLabel FilledTabloid::label(int cell) const {
    const int b = brick_of(cell);
    if (cell == brick_end(b)) return CellLabel::MinusZ;
    if (sigma_.at(cell) > sigma_.at(cell + 1)) return CellLabel::Z;
    return CellLabel::None;
}

int FilledTabloid::label_count() const {
    int z = 0;
    for (int b = 1; b <= brick_count(); ++b)
        for (int c = brick_start(b); c < brick_end(b); ++c)
            if (sigma_.at(c) > sigma_.at(c + 1)) ++z;
    return z + brick_count();
}

MultiPoly FilledTabloid::weight() const {
    Exp e{0, 0, 0, 0, 0};
    e[static_cast<size_t>(Var::q)] = static_cast<int>(inv_of(sigma_.span()));
    e[static_cast<size_t>(Var::z)] = label_count();
    return MultiPoly::monomial(Int(1), e);
}

MultiPoly FilledTabloid::signed_weight() const {
    MultiPoly w = weight();
    return sign() < 0 ? -w : w;
}

namespace {

/// Any Gamma-match fully inside cells [lo, hi] whose end cell is <= max_end.
bool any_match_in_range(const Permutation& sigma, const PatternBag& gamma, int lo, int hi,
                        int max_end) {
    const auto whole = std::span<const int>(sigma.entries());
    for (const auto& group : gamma.groups()) {
        const int len = group.length();
        const int last_start = std::min(hi, max_end) - len + 1;
        for (int s = lo; s <= last_start; ++s)
            if (group.matches_window(whole.subspan(static_cast<size_t>(s - 1), static_cast<size_t>(len))))
                return true;
    }
    return false;
}

} // namespace

bool FilledTabloid::valid_for(const PatternBag& gamma) const {
    for (int b = 1; b <= brick_count(); ++b)
        if (any_match_in_range(sigma_, gamma, brick_start(b), brick_end(b), brick_end(b)))
            return false;
    return true;
}

nlohmann::json FilledTabloid::to_json() const {
    nlohmann::json j;
    j["bricks"] = shape_.bricks;
    j["sigma"] = sigma_.str();
    j["sign"] = sign();
    j["weight"] = weight().to_json();
    std::string labels;
    for (int c = 1; c <= size(); ++c) {
        switch (label(c)) {
            case CellLabel::None: labels += '.'; break;
            case CellLabel::Z: labels += 'z'; break;
            case CellLabel::MinusZ: labels += '|'; break;
        }
    }
    j["labels"] = labels;
    return j;
}

bool FilledTabloid::operator==(const FilledTabloid& o) const {
    return shape_ == o.shape_ && sigma_ == o.sigma_;
}

namespace {

void check_object_budget(int n, int budget) {
    if (n > budget)
        throw budget_exceeded("tabloid objects at n = " + std::to_string(n) +
                              " exceed the object budget (max n = " + std::to_string(budget) + ")");
}

} // namespace

void for_each_object(const PatternBag& gamma, int n,
                     const std::function<void(const FilledTabloid&)>& visit, int budget) {
    check_object_budget(n, budget);
    for (const auto& comp : compositions_of(n)) {
        for_each_in_sn(n, [&](std::span<const int> w) {
            FilledTabloid o(comp, Permutation(std::vector<int>(w.begin(), w.end())));
            if (o.valid_for(gamma)) visit(o);
        });
    }
}

FilledTabloid involution_j(const PatternBag& gamma, const FilledTabloid& o) {
    const int n = o.size();
    const auto& sigma = o.sigma();
    for (int c = 1; c <= n; ++c) {
        const CellLabel lab = o.label(c);
        if (lab == CellLabel::Z) {
            const int j = o.brick_of(c);
            bool splits = false;
            if (j == 1) {
                splits = true; // Case I, first brick
            } else {
                const int last_prev = sigma.at(o.brick_end(j - 1));
                const int first_cur = sigma.at(o.brick_start(j));
                if (last_prev < first_cur) {
                    splits = true; // Case I(i)
                } else if (any_match_in_range(sigma, gamma, o.brick_start(j - 1), o.brick_end(j),
                                              c)) {
                    splits = true; // Case I(ii): a match ending weakly left of c
                }
            }
            if (splits) {
                std::vector<int> bricks;
                for (int b = 1; b <= o.brick_count(); ++b) {
                    if (b == j) {
                        bricks.push_back(c - o.brick_start(j) + 1);
                        bricks.push_back(o.brick_end(j) - c);
                    } else {
                        bricks.push_back(o.shape().bricks[static_cast<size_t>(b - 1)]);
                    }
                }
                return FilledTabloid(BrickTabloid{std::move(bricks)}, sigma);
            }
        } else if (lab == CellLabel::MinusZ) {
            const int i = o.brick_of(c);
            if (i < o.brick_count() && sigma.at(c) > sigma.at(c + 1) &&
                !any_match_in_range(sigma, gamma, o.brick_start(i), o.brick_end(i + 1),
                                    o.brick_end(i + 1))) {
                // Case II: combine bricks i and i+1
                std::vector<int> bricks;
                for (int b = 1; b <= o.brick_count(); ++b) {
                    if (b == i) {
                        bricks.push_back(o.shape().bricks[static_cast<size_t>(b - 1)] +
                                         o.shape().bricks[static_cast<size_t>(b)]);
                    } else if (b != i + 1) {
                        bricks.push_back(o.shape().bricks[static_cast<size_t>(b - 1)]);
                    }
                }
                return FilledTabloid(BrickTabloid{std::move(bricks)}, sigma);
            }
        }
    }
    return o;
}

bool is_fixed_point(const PatternBag& gamma, const FilledTabloid& o) {
    return involution_j(gamma, o) == o;
}

namespace {

/// Parallel fold over objects, one slice of compositions per thread,
/// merged in composition order so the outcome is thread-count
/// independent even for order-sensitive accumulators.
template <class Acc, class Fold>
Acc objects_map_reduce(const PatternBag& gamma, int n, const ParallelContext& par, Fold fold,
                       const std::function<void(Acc&, Acc&)>& merge, int budget) {
    check_object_budget(n, budget);
    const auto comps = compositions_of(n);
    const int threads = std::max(1, par.threads);
    if (threads == 1 || comps.size() < 2) {
        Acc acc{};
        for (const auto& comp : comps) {
            for_each_in_sn(n, [&](std::span<const int> w) {
                FilledTabloid o(comp, Permutation(std::vector<int>(w.begin(), w.end())));
                if (o.valid_for(gamma)) fold(acc, o);
            });
        }
        return acc;
    }
    std::vector<Acc> parts(comps.size());
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < comps.size(); i = next.fetch_add(1)) {
                for_each_in_sn(n, [&](std::span<const int> w) {
                    FilledTabloid o(comps[i], Permutation(std::vector<int>(w.begin(), w.end())));
                    if (o.valid_for(gamma)) fold(parts[i], o);
                });
            }
        });
    }
    for (auto& t : workers) t.join();
    Acc acc = std::move(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) merge(acc, parts[i]);
    return acc;
}

} // namespace

std::vector<FilledTabloid> fixed_points(const PatternBag& gamma, int n, const ParallelContext& par,
                                        int budget) {
    using Acc = std::vector<FilledTabloid>;
    return objects_map_reduce<Acc>(
        gamma, n, par,
        [&](Acc& acc, const FilledTabloid& o) {
            if (is_fixed_point(gamma, o)) acc.push_back(o);
        },
        [](Acc& into, Acc& from) {
            into.insert(into.end(), std::make_move_iterator(from.begin()),
                        std::make_move_iterator(from.end()));
        },
        budget);
}

MultiPoly object_sum(const PatternBag& gamma, int n, const ParallelContext& par, int budget) {
    struct Acc {
        MultiPoly poly;
    };
    return objects_map_reduce<Acc>(
            gamma, n, par, [&](Acc& acc, const FilledTabloid& o) { acc.poly += o.signed_weight(); },
            [](Acc& into, Acc& from) { into.poly += from.poly; }, budget)
        .poly;
}

MultiPoly fixed_point_sum(const PatternBag& gamma, int n, const ParallelContext& par, int budget) {
    struct Acc {
        MultiPoly poly;
    };
    return objects_map_reduce<Acc>(
            gamma, n, par,
            [&](Acc& acc, const FilledTabloid& o) {
                if (is_fixed_point(gamma, o)) acc.poly += o.signed_weight();
            },
            [](Acc& into, Acc& from) { into.poly += from.poly; }, budget)
        .poly;
}

bool descent_bottoms_canonical(const PatternBag& gamma) {
    for (const auto& group : gamma.groups()) {
        for (const auto& tau : group.patterns()) {
            std::vector<int> bottoms;
            for (int i = 1; i < tau.size(); ++i)
                if (tau.at(i) > tau.at(i + 1)) bottoms.push_back(tau.at(i + 1));
            for (size_t k = 0; k < bottoms.size(); ++k)
                if (bottoms[k] != static_cast<int>(k) + 2) return false;
        }
    }
    return true;
}

FixedPointStructure fixed_point_structure(const PatternBag& gamma, const FilledTabloid& o) {
    FixedPointStructure r;
    const auto& sigma = o.sigma();
    int max_des = 0;
    for (const auto& group : gamma.groups())
        for (const auto& tau : group.patterns()) max_des = std::max(max_des, des_of(tau.span()));

    r.prop1 = true;
    r.prop2 = true;
    for (int b = 1; b <= o.brick_count(); ++b) {
        int internal_z = 0;
        for (int c = o.brick_start(b); c < o.brick_end(b); ++c)
            if (sigma.at(c) > sigma.at(c + 1)) ++internal_z;
        const bool after_increase =
            b == 1 || sigma.at(o.brick_end(b - 1)) < sigma.at(o.brick_start(b));
        if (after_increase) {
            if (internal_z != 0) r.prop1 = false;
        } else {
            const int e = o.brick_end(b - 1);
            bool covering_match = false;
            for (const auto& group : gamma.groups()) {
                const int len = group.length();
                const auto whole = std::span<const int>(sigma.entries());
                for (int s = std::max(o.brick_start(b - 1), e - len + 2);
                     s + len - 1 <= o.brick_end(b) && s <= e; ++s) {
                    if (group.matches_window(
                            whole.subspan(static_cast<size_t>(s - 1), static_cast<size_t>(len)))) {
                        covering_match = true;
                        break;
                    }
                }
                if (covering_match) break;
            }
            if (!covering_match || internal_z > max_des - 1) r.prop2 = false;
        }
    }

    r.prop3_hypothesis = descent_bottoms_canonical(gamma);
    r.prop3 = true;
    for (int b = 2; b <= o.brick_count(); ++b)
        if (sigma.at(o.brick_start(b - 1)) >= sigma.at(o.brick_start(b))) r.prop3 = false;
    return r;
}

} // namespace cwilf
