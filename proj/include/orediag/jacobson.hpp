#pragma once

// Probabilistic Jacobson normal form over the rational Weyl algebra: the sum
// of the ∂-degrees of a full-rank diagonal form is the dimension of the
// module over K(x) and certifies cyclicity. Random candidate vectors are
// drawn, the generator of their left annihilator ideal is extracted from the
// syzygies of the stacked rows, and a degree match yields Diag(1, ..., 1, c).
// A strictly smaller degree exhibits a proper submodule.

#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orediag/groebner.hpp"
#include "orediag/diagonalize.hpp"

namespace orediag {

inline int dimension_invariant(const OreMatrix& d) {
    if (d.rows() != d.cols())
        throw std::invalid_argument("dimension_invariant: non-square matrix");
    if (!d.is_rect_diagonal())
        throw std::invalid_argument("dimension_invariant: non-diagonal matrix");
    int sum = 0;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        if (d.at(i, i).is_zero())
            throw std::invalid_argument("dimension_invariant: zero diagonal entry");
        sum += d.at(i, i).deg();
    }
    return sum;
}

// Coefficient statistics in the notation of the experiment tables:
// NT number of terms, TD total degree, BC/SC/AC biggest, smallest and average
// absolute coefficient, BX/SX/AX the same for the x-degrees of the monomials.
struct CoeffStats {
    std::size_t nt = 0;
    int td = 0;
    Int bc = 0, sc = 0;
    Rat ac = Rat(0);
    int bx = 0, sx = 0;
    Rat ax = Rat(0);
    std::size_t max_coeff_bits = 0;
    int max_x_degree = 0;
};

inline CoeffStats coeff_stats(const OrePoly& f) {
    CoeffStats s;
    OrePoly g = f;
    // fraction-free representative in Z[x, op]
    Rat unit = ModVec({f}).primitive_unit();
    if (!orediag::is_zero(unit)) g = (Rat(1) / unit) * f;
    Int sum_c = 0;
    long sum_x = 0;
    bool first = true;
    for (const auto& [beta, c] : g.terms())
        for (int a = c.deg(); a >= 0; --a) {
            Rat r = c.coeff(static_cast<std::size_t>(a));
            if (orediag::is_zero(r)) continue;
            Int v = abs(r.get_num());
            ++s.nt;
            s.td = std::max(s.td, static_cast<int>(beta) + a);
            sum_c += v;
            sum_x += a;
            if (first || v > s.bc) s.bc = v;
            if (first || v < s.sc) s.sc = v;
            if (first || a > s.bx) s.bx = a;
            if (first || a < s.sx) s.sx = a;
            first = false;
        }
    if (s.nt > 0) {
        s.ac = Rat(sum_c, static_cast<long>(s.nt));
        s.ac.canonicalize();
        s.ax = rat(sum_x, static_cast<long>(s.nt));
    }
    s.max_coeff_bits = f.max_coeff_bits();
    s.max_x_degree = deg_x(g);
    return s;
}

struct CyclicAttempt {
    std::vector<OrePoly> p;
    OrePoly c;
    int d = 0;
    enum class Status { cyclic_certified, proper_submodule_found } status =
        Status::proper_submodule_found;
    unsigned long seed = 0;
    CoeffStats stats;

    CyclicAttempt(AlgebraSpec alg) : c(std::move(alg)) {}
};

// p_i of ∂-degree <= deg(m_i) - 1 and x-degree <= degree_bound_x, with
// integer coefficients drawn uniformly from [0, coeff_range); deterministic
// for a fixed engine state.
inline std::vector<OrePoly> random_candidate(const OreMatrix& d, int degree_bound_x,
                                             long coeff_range, std::mt19937_64& engine) {
    if (coeff_range < 2) throw std::invalid_argument("coeff_range must be at least 2");
    const AlgebraSpec& alg = d.algebra();
    std::vector<OrePoly> p;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        int bound_op = d.at(i, i).deg() - 1;
        OrePoly pi(alg);
        if (bound_op >= 0) {
            do {
                pi = OrePoly(alg);
                for (int beta = bound_op; beta >= 0; --beta) {
                    std::vector<Rat> coeffs;
                    for (int a = 0; a <= degree_bound_x; ++a)
                        coeffs.push_back(rat(static_cast<long>(engine() %
                                                               static_cast<unsigned long>(coeff_range))));
                    pi += OrePoly::term(alg, UniPoly::from_coeffs(std::move(coeffs)),
                                        static_cast<unsigned>(beta));
                }
            } while (pi.is_zero());
        }
        p.push_back(std::move(pi));
    }
    return p;
}

inline std::vector<OrePoly> random_candidate(const OreMatrix& d, int degree_bound_x,
                                             long coeff_range, unsigned long seed) {
    std::mt19937_64 engine(seed);
    return random_candidate(d, degree_bound_x, coeff_range, engine);
}

// Generator of the left annihilator of p in R^r / R^r·M: stack p over the
// rows of M, project the left syzygies onto the first coordinate, and pick
// the minimal-degree element of the reduced basis of that left ideal.
inline CyclicAttempt cyclic_annihilator(const OreMatrix& m, const std::vector<OrePoly>& p,
                                        const Involution* theta = nullptr,
                                        unsigned long seed = 0) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("cyclic_annihilator: non-square matrix");
    if (p.size() != m.cols()) throw std::invalid_argument("cyclic_annihilator: bad vector size");
    const AlgebraSpec& alg = m.algebra();
    OreMatrix diag = m;
    if (!m.is_rect_diagonal()) {
        Involution th = theta ? *theta : Involution::default_for(alg);
        diag = diagonalize(m, th).D;
    }
    for (std::size_t i = 0; i < diag.rows(); ++i)
        if (diag.at(i, i).is_zero())
            throw std::invalid_argument("cyclic_annihilator: rank-deficient matrix");

    CyclicAttempt attempt(alg);
    attempt.p = p;
    attempt.seed = seed;
    attempt.d = dimension_invariant(diag);

    OreMatrix stacked = OreMatrix::zero(m.rows() + 1, m.cols(), alg);
    for (std::size_t j = 0; j < m.cols(); ++j) stacked.at(0, j) = p[j];
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) stacked.at(i + 1, j) = m.at(i, j);
    std::vector<OrePoly> gens = kernel_rows(stacked);
    if (gens.empty()) throw std::logic_error("annihilator ideal came out empty");

    std::vector<ModVec> rows;
    for (const auto& g : gens) rows.push_back(ModVec({g}));
    GBResult gb = buchberger(rows);
    BoxedSelection sel = select_boxed(gb);
    const ModVec& best = gb.basis[sel.indices.front()];
    attempt.c = best.comp(0);
    if (attempt.c.deg() > attempt.d)
        throw std::logic_error("annihilator degree exceeds the dimension invariant");
    attempt.status = attempt.c.deg() == attempt.d ? CyclicAttempt::Status::cyclic_certified
                                                  : CyclicAttempt::Status::proper_submodule_found;
    attempt.stats = coeff_stats(attempt.c);
    return attempt;
}

struct JacobsonResult {
    OreMatrix normal_form;
    std::vector<CyclicAttempt> attempts;
    bool certified = false;
};

// Diagonalize first, then repeat random candidates until the degree
// certificate fires or the attempts are exhausted. Restricted to the Weyl
// preset: over non-simple domains a Jacobson form need not exist.
inline JacobsonResult jacobson_form(const OreMatrix& m, unsigned max_attempts = 8,
                                    unsigned long seed = 0, int degree_bound_x = 3,
                                    long coeff_range = 100, const DiagConfig& cfg = {}) {
    if (m.algebra().kind() != AlgebraKind::weyl)
        throw std::invalid_argument(
            "jacobson_form requires the weyl preset; over " + to_string(m.algebra().kind()) +
            " algebras a Jacobson form need not exist");
    if (m.rows() != m.cols()) throw std::invalid_argument("jacobson_form: non-square matrix");
    const AlgebraSpec& alg = m.algebra();
    OreMatrix diag = m;
    if (!m.is_rect_diagonal()) diag = diagonalize(m, Involution::default_for(alg), cfg).D;
    for (std::size_t i = 0; i < diag.rows(); ++i)
        if (diag.at(i, i).is_zero())
            throw std::invalid_argument("jacobson_form: rank-deficient matrix");

    JacobsonResult res{diag};
    if (m.rows() == 1) {
        res.certified = true;
        return res;
    }
    std::mt19937_64 engine(seed);
    for (unsigned a = 0; a < max_attempts; ++a) {
        std::vector<OrePoly> p = random_candidate(diag, degree_bound_x, coeff_range, engine);
        CyclicAttempt attempt = cyclic_annihilator(diag, p, nullptr, seed);
        res.attempts.push_back(attempt);
        if (attempt.status == CyclicAttempt::Status::cyclic_certified) {
            OreMatrix nf = OreMatrix::identity(diag.rows(), alg);
            nf.at(diag.rows() - 1, diag.rows() - 1) = attempt.c;
            res.normal_form = nf;
            res.certified = true;
            return res;
        }
    }
    return res;  // attempts exhausted; best submodule witnesses are in the log
}

}  // namespace orediag
