#pragma once

// Involutive anti-automorphisms θ of R*, given by the images of the two
// generators. Construction checks that θ respects the commutation rule and
// that θ² fixes both generators; θ̃(M) applies θ entrywise to the transpose,
// which turns column operations into row operations.

#include <stdexcept>
#include <utility>

#include "orediag/matrix.hpp"

namespace orediag {

class Involution {
  public:
    Involution(OrePoly image_x, OrePoly image_op)
        : image_x_(std::move(image_x)), image_op_(std::move(image_op)) {
        if (!image_x_.algebra().compatible(image_op_.algebra()))
            throw std::invalid_argument("involution images over different algebras");
        validate();
    }

    static Involution default_for(const AlgebraSpec& alg) {
        OrePoly x = OrePoly::variable_x(alg);
        OrePoly op = OrePoly::op(alg);
        switch (alg.kind()) {
            case AlgebraKind::weyl: return Involution(x, -op);   // formal adjoint
            case AlgebraKind::shift: return Involution(-x, op);  // x ↦ -x, s ↦ s
            case AlgebraKind::commutative: return Involution(x, op);
            case AlgebraKind::qcomm:
                throw std::invalid_argument(
                    "no default involution for q-commutative algebras; supply one");
        }
        throw std::logic_error("unknown algebra kind");
    }

    const AlgebraSpec& algebra() const { return image_x_.algebra(); }
    const OrePoly& image_x() const { return image_x_; }
    const OrePoly& image_op() const { return image_op_; }

    // θ(Σ c_β(x) ∂^β) = Σ θ(∂)^β · c_β(θ(x)).
    OrePoly apply(const OrePoly& f) const {
        if (!f.algebra().compatible(algebra()))
            throw std::invalid_argument("involution applied across algebras");
        OrePoly out(f.algebra());
        for (const auto& [beta, c] : f.terms())
            out += image_op_.pow(beta) * eval_poly_at(c, image_x_);
        return out;
    }

  private:
    void validate() const {
        const AlgebraSpec& alg = algebra();
        // θ applied to both sides of ∂·x = σ(x)∂ + δ(x) must agree:
        // θ(x)·θ(∂) = θ(∂)·σ(x)(θ(x)) + δ(x)(θ(x))
        OrePoly lhs = image_x_ * image_op_;
        UniPoly x = UniPoly::variable();
        OrePoly rhs = image_op_ * eval_poly_at(alg.sigma(x), image_x_) +
                      eval_poly_at(alg.delta(x), image_x_);
        if (lhs != rhs)
            throw std::invalid_argument("images do not define an anti-automorphism");
        if (apply(image_x_) != OrePoly::variable_x(alg) ||
            apply(image_op_) != OrePoly::op(alg))
            throw std::invalid_argument("involution does not square to the identity");
    }

    OrePoly image_x_;
    OrePoly image_op_;
};

inline OreMatrix theta_transpose(const Involution& theta, const OreMatrix& m) {
    OreMatrix out = OreMatrix::zero(m.cols(), m.rows(), m.algebra());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = theta.apply(m.at(i, j));
    return out;
}

}  // namespace orediag
