#pragma once

#include "cwilf/multipoly.hpp"

namespace cwilf {

/// A polynomial with a single positive integer denominator, kept
/// reduced (gcd of numerator content and denominator is 1). This is the
/// plumbing type for the log/exp series recurrences; public results
/// must clear back to denominator 1.
class RatPoly {
public:
    RatPoly() : den_(1) {}
    RatPoly(MultiPoly num) : num_(std::move(num)), den_(1) {}
    RatPoly(MultiPoly num, Int den);
    RatPoly(int c) : num_(MultiPoly(c)), den_(1) {}

    const MultiPoly& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }

    /// The underlying polynomial; throws internal_consistency_error when
    /// the denominator has not cancelled.
    MultiPoly to_poly() const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    RatPoly operator-() const;

    RatPoly times(const MultiPoly& f) const;
    RatPoly times(const Int& c) const;
    RatPoly div(const Int& c) const;

    bool operator==(const RatPoly& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void normalize();
    MultiPoly num_;
    Int den_;
};

} // namespace cwilf
