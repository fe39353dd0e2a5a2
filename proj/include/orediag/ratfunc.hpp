#pragma once

// Rational functions num/den over Q[x], kept in the canonical form
// gcd(num, den) = 1 with monic denominator.

#include <stdexcept>
#include <string>
#include <utility>

#include "orediag/unipoly.hpp"

namespace orediag {

class RatFunc {
  public:
    RatFunc() = default;
    RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    explicit RatFunc(UniPoly num) : num_(std::move(num)), den_(UniPoly(Rat(1))) {}
    explicit RatFunc(Rat c) : num_(UniPoly(std::move(c))), den_(UniPoly(Rat(1))) {}
    explicit RatFunc(long c) : RatFunc(rat(c)) {}

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.deg() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const Rat& c, const RatFunc& a) {
        return RatFunc(c * a.num_, a.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::size_t max_coeff_bits() const {
        return std::max(num_.max_coeff_bits(), den_.max_coeff_bits());
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        std::string n = num_.num_terms() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
        return n + "/(" + den_.to_string() + ")";
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly(Rat(1));
            return;
        }
        UniPoly g = poly_gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        Rat lc = den_.leading_coeff();
        num_ = (Rat(1) / lc) * num_;
        den_ = (Rat(1) / lc) * den_;
    }

    UniPoly num_;
    UniPoly den_ = UniPoly(Rat(1));
};

}  // namespace orediag
