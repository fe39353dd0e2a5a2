#pragma once

// Univariate polynomials over Q in the commutative variable x.
//
// Coefficients are stored densely, lowest exponent first, with no trailing
// zero; the zero polynomial has an empty coefficient vector and degree -1
// (the "minus infinity" marker used throughout).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orediag/rational.hpp"

namespace orediag {

class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(Rat constant) {
        if (!orediag::is_zero(constant)) coeffs_.push_back(std::move(constant));
    }
    explicit UniPoly(long constant) : UniPoly(rat(constant)) {}

    static UniPoly monomial(Rat c, std::size_t exp) {
        UniPoly p;
        if (orediag::is_zero(c)) return p;
        p.coeffs_.assign(exp + 1, Rat(0));
        p.coeffs_[exp] = std::move(c);
        return p;
    }
    static UniPoly variable() { return monomial(Rat(1), 1); }
    static UniPoly from_coeffs(std::vector<Rat> ascending) {
        UniPoly p;
        p.coeffs_ = std::move(ascending);
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree; -1 stands in for the degree of the zero polynomial.
    int deg() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rat(0);
    }
    const Rat& leading_coeff() const {
        if (is_zero()) throw std::domain_error("leading_coeff of zero polynomial");
        return coeffs_.back();
    }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_constant() const { return deg() <= 0; }
    std::size_t num_terms() const {
        std::size_t n = 0;
        for (const auto& c : coeffs_)
            if (!orediag::is_zero(c)) ++n;
        return n;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        r.trim();
        return r;
    }
    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        UniPoly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (orediag::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.trim();
        return r;
    }
    friend UniPoly operator*(const Rat& c, const UniPoly& p) {
        if (orediag::is_zero(c)) return UniPoly();
        UniPoly r(p);
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Euclidean division over the field Q: *this = q*d + r with deg r < deg d.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        UniPoly q, r(*this);
        if (r.deg() >= d.deg())
            q.coeffs_.assign(static_cast<std::size_t>(r.deg() - d.deg()) + 1, Rat(0));
        while (!r.is_zero() && r.deg() >= d.deg()) {
            std::size_t shift = static_cast<std::size_t>(r.deg() - d.deg());
            Rat c = r.leading_coeff() / d.leading_coeff();
            q.coeffs_[shift] = c;
            for (std::size_t i = 0; i < d.coeffs_.size(); ++i)
                r.coeffs_[i + shift] -= c * d.coeffs_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    bool divides(const UniPoly& multiple) const {
        if (is_zero()) return multiple.is_zero();
        return multiple.divrem(*this).second.is_zero();
    }
    UniPoly exact_div(const UniPoly& d) const {
        auto [q, r] = divrem(d);
        if (!r.is_zero()) throw std::domain_error("exact_div with nonzero remainder");
        return q;
    }

    UniPoly make_monic() const {
        if (is_zero()) return *this;
        return (Rat(1) / leading_coeff()) * *this;
    }

    // Positive rational c such that (1/c)*f has coprime integer coefficients
    // with positive leading coefficient.
    Rat content_unit() const {
        if (is_zero()) return Rat(1);
        Int num_gcd(0), den_lcm(1);
        for (const auto& c : coeffs_) {
            if (orediag::is_zero(c)) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rat u(num_gcd, den_lcm);
        u.canonicalize();
        if (sgn(leading_coeff()) < 0) u = -u;
        return u;
    }
    UniPoly primitive_part() const {
        if (is_zero()) return *this;
        return (Rat(1) / content_unit()) * *this;
    }

    UniPoly derivative() const {
        UniPoly r;
        if (deg() < 1) return r;
        r.coeffs_.resize(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            r.coeffs_[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
        r.trim();
        return r;
    }

    Rat eval(const Rat& at) const {
        Rat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * at + *it;
        return acc;
    }

    // f(x + t), exact.
    UniPoly shift(const Rat& t) const {
        UniPoly xt = from_coeffs({t, Rat(1)});
        UniPoly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * xt + UniPoly(*it);
        return acc;
    }
    // f(c * x), exact.
    UniPoly scale(const Rat& c) const {
        UniPoly r(*this);
        Rat p(1);
        for (std::size_t i = 1; i < r.coeffs_.size(); ++i) {
            p *= c;
            r.coeffs_[i] *= p;
        }
        r.trim();
        return r;
    }

    std::size_t max_coeff_bits() const {
        std::size_t m = 0;
        for (const auto& c : coeffs_) m = std::max(m, bit_length(c));
        return m;
    }

    // Canonical text form, terms in descending exponent: "3/4*x^2 - x + 1".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = deg(); k >= 0; --k) {
            const Rat c = coeff(static_cast<std::size_t>(k));
            if (orediag::is_zero(c)) continue;
            bool neg = sgn(c) < 0;
            Rat a = abs(c);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            bool unit = (a == 1);
            if (k == 0) {
                out += orediag::to_string(a);
            } else {
                if (!unit) out += orediag::to_string(a) + "*";
                out += "x";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && orediag::is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

// Monic greatest common divisor; gcd(a, 0) = a made monic.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    a = a.make_monic();
    b = b.make_monic();
    while (!b.is_zero()) {
        UniPoly r = a.divrem(b).second;
        a = b;
        b = r.make_monic();
    }
    return a;
}

inline UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly g = poly_gcd(a, b);
    return (a * b).exact_div(g).make_monic();
}

inline UniPoly substitute_shift(const UniPoly& f, long z) { return f.shift(rat(z)); }
inline UniPoly substitute_scale(const UniPoly& f, const Rat& c) { return f.scale(c); }

}  // namespace orediag
