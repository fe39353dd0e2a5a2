#pragma once

// Algebra presets for the Ore extension K[x][∂; σ, δ], fixed by the
// commutation rule ∂·x = σ(x)∂ + δ(x):
//
//   weyl          σ = id        δ = d/dx      (∂x = x∂ + 1)
//   shift         σ: x ↦ x+1    δ = 0         (sx = xs + s)
//   qcomm         σ: x ↦ q·x    δ = 0         (yx = q·xy)
//   commutative   σ = id        δ = 0

#include <stdexcept>
#include <string>
#include <utility>

#include "orediag/ratfunc.hpp"
#include "orediag/unipoly.hpp"

namespace orediag {

enum class AlgebraKind { weyl, shift, qcomm, commutative };

inline std::string to_string(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::weyl: return "weyl";
        case AlgebraKind::shift: return "shift";
        case AlgebraKind::qcomm: return "qcomm";
        case AlgebraKind::commutative: return "commutative";
    }
    return "?";
}

class AlgebraSpec {
  public:
    static AlgebraSpec weyl(std::string symbol = "d") {
        return AlgebraSpec(AlgebraKind::weyl, Rat(0), std::move(symbol));
    }
    static AlgebraSpec shift(std::string symbol = "s") {
        return AlgebraSpec(AlgebraKind::shift, Rat(0), std::move(symbol));
    }
    static AlgebraSpec qcommutative(Rat q, std::string symbol = "y") {
        if (is_zero(q) || q == 1)
            throw std::invalid_argument("qcomm algebra requires q not in {0, 1}");
        return AlgebraSpec(AlgebraKind::qcomm, std::move(q), std::move(symbol));
    }
    static AlgebraSpec commutative(std::string symbol = "d") {
        return AlgebraSpec(AlgebraKind::commutative, Rat(0), std::move(symbol));
    }

    AlgebraKind kind() const { return kind_; }
    const Rat& q() const { return q_; }
    const std::string& op_symbol() const { return symbol_; }

    // Same commutation rule; the display symbol does not matter.
    bool compatible(const AlgebraSpec& o) const {
        return kind_ == o.kind_ && (kind_ != AlgebraKind::qcomm || q_ == o.q_);
    }

    UniPoly sigma(const UniPoly& f) const { return sigma_pow(f, 1); }
    UniPoly sigma_pow(const UniPoly& f, long k) const {
        switch (kind_) {
            case AlgebraKind::weyl:
            case AlgebraKind::commutative: return f;
            case AlgebraKind::shift: return f.shift(rat(k));
            case AlgebraKind::qcomm: return f.scale(q_power(k));
        }
        return f;
    }
    UniPoly delta(const UniPoly& f) const {
        if (kind_ == AlgebraKind::weyl) return f.derivative();
        return UniPoly();
    }

    RatFunc sigma(const RatFunc& f) const { return sigma_pow(f, 1); }
    RatFunc sigma_pow(const RatFunc& f, long k) const {
        return RatFunc(sigma_pow(f.num(), k), sigma_pow(f.den(), k));
    }
    RatFunc delta(const RatFunc& f) const {
        if (kind_ != AlgebraKind::weyl) return RatFunc();
        return RatFunc(f.num().derivative() * f.den() - f.num() * f.den().derivative(),
                       f.den() * f.den());
    }

    Rat q_power(long k) const {
        Rat p(1);
        Rat base = k >= 0 ? q_ : Rat(1) / q_;
        for (long i = 0; i < (k >= 0 ? k : -k); ++i) p *= base;
        return p;
    }

  private:
    AlgebraSpec(AlgebraKind k, Rat q, std::string symbol)
        : kind_(k), q_(std::move(q)), symbol_(std::move(symbol)) {}

    AlgebraKind kind_;
    Rat q_;
    std::string symbol_;
};

}  // namespace orediag
