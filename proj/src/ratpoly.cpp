#include "cwilf/ratpoly.hpp"

namespace cwilf {

RatPoly::RatPoly(MultiPoly num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw invalid_input("RatPoly: zero denominator");
    normalize();
}

void RatPoly::normalize() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    Int g = int_gcd(num_.content(), den_);
    if (g > 1) {
        num_ = num_.divide_coeffs(g);
        den_ /= g;
    }
}

MultiPoly RatPoly::to_poly() const {
    if (den_ != 1)
        throw internal_consistency_error("rational coefficient did not clear to an integer polynomial (denominator " +
                                         den_.str() + ")");
    return num_;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    r.num_ = -r.num_;
    return r;
}

RatPoly RatPoly::times(const MultiPoly& f) const {
    RatPoly r;
    r.num_ = num_ * f;
    r.den_ = den_;
    r.normalize();
    return r;
}

RatPoly RatPoly::times(const Int& c) const {
    RatPoly r;
    r.num_ = num_ * c;
    r.den_ = den_;
    r.normalize();
    return r;
}

RatPoly RatPoly::div(const Int& c) const {
    if (c == 0) throw invalid_input("RatPoly: division by zero");
    RatPoly r;
    r.num_ = num_;
    r.den_ = den_ * c;
    r.normalize();
    return r;
}

} // namespace cwilf
