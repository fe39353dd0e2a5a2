#pragma once

// Skew polynomials  f = Σ c_β(x) ∂^β  over a coefficient domain C, where C is
// UniPoly (the fraction-free layer R* = K[x][∂;σ,δ]) or RatFunc (the rational
// layer R = K(x)[∂;σ,δ]). Multiplication expands ∂^β·c by β-fold iteration of
// the first-order rule ∂·c = σ(c)∂ + δ(c); the running image ∂^k·g is shared
// across all terms of the left factor.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orediag/algebra.hpp"

namespace orediag {

template <class C>
class SkewPoly {
  public:
    using Coeff = C;

    explicit SkewPoly(AlgebraSpec alg) : alg_(std::move(alg)) {}

    static SkewPoly term(AlgebraSpec alg, C c, unsigned op_exp) {
        SkewPoly p(std::move(alg));
        if (!c.is_zero()) p.coeffs_.emplace(op_exp, std::move(c));
        return p;
    }
    static SkewPoly constant(AlgebraSpec alg, Rat c) {
        return term(std::move(alg), C(UniPoly(std::move(c))), 0);
    }
    static SkewPoly variable_x(AlgebraSpec alg) {
        return term(std::move(alg), C(UniPoly::variable()), 0);
    }
    static SkewPoly op(AlgebraSpec alg) {
        return term(std::move(alg), C(UniPoly(Rat(1))), 1);
    }

    const AlgebraSpec& algebra() const { return alg_; }
    bool is_zero() const { return coeffs_.empty(); }
    // ∂-weighted degree; -1 marks the zero element.
    int deg() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first); }
    C coeff(unsigned op_exp) const {
        auto it = coeffs_.find(op_exp);
        return it == coeffs_.end() ? C() : it->second;
    }
    const C& leading_coeff() const {
        if (is_zero()) throw std::domain_error("leading_coeff of zero skew polynomial");
        return coeffs_.rbegin()->second;
    }
    const std::map<unsigned, C>& terms() const { return coeffs_; }

    bool is_constant_in_op() const { return deg() <= 0; }

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
        a.require_compatible(b);
        SkewPoly r(a);
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
        return r;
    }
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
        a.require_compatible(b);
        SkewPoly r(a);
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, -c);
        return r;
    }
    SkewPoly operator-() const {
        SkewPoly r(*this);
        for (auto& [e, c] : r.coeffs_) c = -c;
        return r;
    }

    // Exact noncommutative product, normal form Σ c_β(x)∂^β.
    friend SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) {
        f.require_compatible(g);
        SkewPoly r(f.alg_);
        if (f.is_zero() || g.is_zero()) return r;
        // walk ∂^k·g upward, consuming f's terms in ascending ∂-exponent
        SkewPoly dk_g = g;
        unsigned k = 0;
        for (const auto& [beta, c] : f.coeffs_) {
            while (k < beta) {
                dk_g = dk_g.apply_op_once();
                ++k;
            }
            for (const auto& [e, gc] : dk_g.coeffs_) r.add_term(e, c * gc);
        }
        return r;
    }
    friend SkewPoly operator*(const Rat& c, const SkewPoly& f) {
        SkewPoly r(f.alg_);
        if (orediag::is_zero(c)) return r;
        r.coeffs_ = f.coeffs_;
        for (auto& [e, v] : r.coeffs_) v = c * v;
        return r;
    }
    // Left multiplication by a coefficient a(x): per-term coefficient product.
    friend SkewPoly operator*(const C& a, const SkewPoly& f) {
        SkewPoly r(f.alg_);
        if (a.is_zero()) return r;
        for (const auto& [e, v] : f.coeffs_) r.add_term(e, a * v);
        return r;
    }
    SkewPoly& operator+=(const SkewPoly& o) { return *this = *this + o; }
    SkewPoly& operator-=(const SkewPoly& o) { return *this = *this - o; }
    SkewPoly& operator*=(const SkewPoly& o) { return *this = *this * o; }

    // this ∂·(...) — one application of the commutation rule.
    SkewPoly apply_op_once() const {
        SkewPoly r(alg_);
        for (const auto& [e, c] : coeffs_) {
            r.add_term(e + 1, alg_.sigma(c));
            C d = alg_.delta(c);
            if (!d.is_zero()) r.add_term(e, d);
        }
        return r;
    }

    // c·x^a∂^b · this, with the commutation expanded exactly.
    SkewPoly mul_monomial_left(const Rat& c, unsigned x_exp, unsigned op_exp) const {
        SkewPoly t = *this;
        for (unsigned i = 0; i < op_exp; ++i) t = t.apply_op_once();
        C m(UniPoly::monomial(c, x_exp));
        return m * t;
    }

    SkewPoly pow(unsigned n) const {
        SkewPoly r = constant(alg_, Rat(1));
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        return a.alg_.compatible(b.alg_) && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

    std::size_t max_coeff_bits() const {
        std::size_t m = 0;
        for (const auto& [e, c] : coeffs_) m = std::max(m, c.max_coeff_bits());
        return m;
    }
    std::size_t num_terms() const {
        std::size_t n = 0;
        for (const auto& [e, c] : coeffs_) n += c.num_terms();
        return n;
    }

    // Canonical text form: terms in descending ∂-exponent, coefficient
    // polynomials in descending x-exponent, e.g. "(x-1)*s + x^2 - x".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const unsigned beta = it->first;
            std::string cs = it->second.to_string();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (beta == 0) {
                out += cs;
                continue;
            }
            std::string opname = alg_.op_symbol();
            if (beta > 1) opname += "^" + std::to_string(beta);
            if (cs == "1") {
                out += opname;
            } else if (cs.find(' ') != std::string::npos) {
                // multi-term coefficient: compact inside parentheses
                std::string compact;
                for (char ch : cs)
                    if (ch != ' ') compact += ch;
                out += "(" + compact + ")*" + opname;
            } else {
                out += cs + "*" + opname;
            }
        }
        return out;
    }

  private:
    void require_compatible(const SkewPoly& o) const {
        if (!alg_.compatible(o.alg_))
            throw std::invalid_argument("skew polynomials over different algebras");
    }
    void add_term(unsigned e, C c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    AlgebraSpec alg_;
    std::map<unsigned, C> coeffs_;
};

using OrePoly = SkewPoly<UniPoly>;     // fraction-free layer, coefficients in K[x]
using OreRatPoly = SkewPoly<RatFunc>;  // rational layer, coefficients in K(x)

// x-degree across all coefficients (fraction-free layer).
inline int deg_x(const OrePoly& f) {
    int d = -1;
    for (const auto& [e, c] : f.terms()) d = std::max(d, c.deg());
    return d;
}

inline OreRatPoly to_rational(const OrePoly& f) {
    OreRatPoly r(f.algebra());
    for (const auto& [e, c] : f.terms())
        r += OreRatPoly::term(f.algebra(), RatFunc(c), e);
    return r;
}

// Evaluate a commutative polynomial at a skew-polynomial argument (Horner).
template <class C>
SkewPoly<C> eval_poly_at(const UniPoly& p, const SkewPoly<C>& at) {
    SkewPoly<C> acc(at.algebra());
    for (int k = p.deg(); k >= 0; --k)
        acc = acc * at + SkewPoly<C>::constant(at.algebra(), p.coeff(static_cast<std::size_t>(k)));
    return acc;
}

}  // namespace orediag
