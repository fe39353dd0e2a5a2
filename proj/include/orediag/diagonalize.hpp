#pragma once

// Fraction-free diagonalization: iterate reduced Gröbner basis, boxed-row
// selection and involution transpose, accumulating U on odd passes and V on
// even passes, until the working matrix is diagonal (in the rectangular
// sense) after an even number of passes. Each pass produces a square
// transformation: one cofactor row per boxed basis element, padded on top by
// left-syzygy rows of the current matrix when the occupied leading positions
// do not fill all rows.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orediag/groebner.hpp"
#include "orediag/involution.hpp"

namespace orediag {

struct BoxedSelection {
    std::vector<std::size_t> indices;       // into GBResult::basis, ascending leading position
    std::map<std::size_t, int> alphas;      // per occupied position, the minimal ∂-degree
};

// One basis row per occupied leading position: minimal ∂-degree, ties broken
// by the smallest leading monomial. The basis is sorted ascending by leading
// monomial, so within a position the first candidate of minimal degree wins.
inline BoxedSelection select_boxed(const GBResult& gb,
                                   std::size_t rank_bound = static_cast<std::size_t>(-1)) {
    BoxedSelection sel;
    std::map<std::size_t, std::pair<int, std::size_t>> best;  // comp -> (deg, index)
    for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        const ModMonomial lm = *gb.basis[i].leading_monomial();
        auto it = best.find(lm.comp);
        if (it == best.end() || static_cast<int>(lm.op_exp) < it->second.first)
            best[lm.comp] = {static_cast<int>(lm.op_exp), i};
    }
    for (const auto& [comp, di] : best) {
        sel.indices.push_back(di.second);
        sel.alphas[comp] = di.first;
    }
    if (sel.indices.size() > rank_bound)
        throw std::logic_error("boxed selection exceeded the rank bound");
    return sel;
}

struct DiagConfig {
    std::size_t max_passes = 64;
};

struct DiagStats {
    std::size_t reductions = 0;
    std::size_t spairs = 0;
    std::size_t max_coeff_bits = 0;
};

struct DiagResult {
    OreMatrix T;  // denominator-clearing diagonal; identity for polynomial input
    OreMatrix U;  // p x p
    OreMatrix V;  // q x q
    OreMatrix D;  // p x q, diagonal in the rectangular sense
    std::size_t iterations = 0;
    bool verified = false;
    std::vector<std::vector<int>> alphas_history;
    DiagStats stats;
};

inline bool verify(const OreMatrix& m, const OreMatrix& u, const OreMatrix& v,
                   const OreMatrix& d) {
    if (u.cols() != m.rows() || m.cols() != v.rows() || u.rows() != d.rows() ||
        v.cols() != d.cols())
        throw std::invalid_argument("verify: matrix shape mismatch");
    return (u * m) * v == d;
}

inline DiagResult diagonalize(const OreMatrix& input, const Involution& theta,
                              const DiagConfig& cfg = {}) {
    if (!theta.algebra().compatible(input.algebra()))
        throw std::invalid_argument("involution does not match the matrix algebra");
    if (input.is_zero()) throw std::invalid_argument("diagonalize: zero matrix");
    for (std::size_t i = 0; i < input.rows(); ++i)
        if (input.row_is_zero(i))
            throw std::invalid_argument("diagonalize: zero row " + std::to_string(i) +
                                        "; strip zero rows first");

    const AlgebraSpec& alg = input.algebra();
    const std::size_t p = input.rows(), q = input.cols();

    DiagResult res{OreMatrix::identity(p, alg), OreMatrix::identity(p, alg),
                   OreMatrix::identity(q, alg), input};
    OreMatrix work = input;
    std::size_t i = 0;
    do {
        ++i;
        if (i > cfg.max_passes)
            throw std::runtime_error("diagonalize: pass limit " + std::to_string(cfg.max_passes) +
                                     " exceeded; this indicates a bug, not bad input");
        const std::size_t r = work.rows(), c = work.cols();
        GBResult gb = buchberger(work);
        res.stats.reductions += gb.stats.reductions;
        res.stats.spairs += gb.stats.spairs;
        res.stats.max_coeff_bits = std::max(res.stats.max_coeff_bits, gb.stats.max_coeff_bits);

        BoxedSelection sel = select_boxed(gb, r);
        const std::size_t k = sel.indices.size();

        OreMatrix u_pass = OreMatrix::zero(r, r, alg);
        OreMatrix selected = OreMatrix::zero(r, c, alg);
        if (k < r) {
            // Rank-deficient rows: top-pad with a generating set of the left
            // syzygies, one boxed row per occupied position of the syzygy
            // module, so that u_pass stays square and R-unimodular.
            std::vector<ModVec> syz_rows;
            for (const auto& row : gb.syzygies) syz_rows.emplace_back(row);
            if (syz_rows.empty()) throw std::logic_error("missing syzygies for rank-deficient rows");
            GBResult syz_gb = buchberger(syz_rows);
            res.stats.max_coeff_bits =
                std::max(res.stats.max_coeff_bits, syz_gb.stats.max_coeff_bits);
            BoxedSelection syz_sel = select_boxed(syz_gb, r - k);
            if (syz_sel.indices.size() != r - k)
                throw std::logic_error("syzygy padding does not complete the transformation");
            for (std::size_t t = 0; t < r - k; ++t)
                for (std::size_t j = 0; j < r; ++j)
                    u_pass.at(t, j) = syz_gb.basis[syz_sel.indices[t]].comp(j);
        }
        for (std::size_t t = 0; t < k; ++t) {
            const std::size_t bi = sel.indices[t];
            for (std::size_t j = 0; j < r; ++j) u_pass.at(r - k + t, j) = gb.cofactors[bi][j];
            for (std::size_t j = 0; j < c; ++j) selected.at(r - k + t, j) = gb.basis[bi].comp(j);
        }
        if (u_pass * work != selected)
            throw std::logic_error("pass transformation failed the exactness check");

        work = theta_transpose(theta, selected);
        if (i % 2 == 1)
            res.U = u_pass * res.U;
        else
            res.V = res.V * theta_transpose(theta, u_pass);
        res.stats.max_coeff_bits = std::max(
            {res.stats.max_coeff_bits, res.U.max_coeff_bits(), res.V.max_coeff_bits(),
             work.max_coeff_bits()});

        std::vector<int> alphas;
        for (const auto& [comp, a] : sel.alphas) alphas.push_back(a);
        res.alphas_history.push_back(std::move(alphas));
    } while (!work.is_rect_diagonal() || i % 2 == 1);

    res.D = work;
    res.iterations = i;
    res.verified = verify(res.T * input, res.U, res.V, res.D);
    return res;
}

// Rational-layer entry point: clear denominators first (Lemma on common left
// denominators), then run the polynomial pipeline on T·M.
inline DiagResult diagonalize(const OreRatMatrix& input, const Involution& theta,
                              const DiagConfig& cfg = {}) {
    ClearedMatrix cm = clear_denominators(input);
    DiagResult res = diagonalize(cm.cleared, theta, cfg);
    res.T = cm.T;
    return res;
}

// Commutative Smith post-normalization: monic diagonal entries reordered and
// pairwise replaced by (gcd, lcm) until the divisibility chain holds. The
// input must be diagonal with all entries free of the operator variable.
inline OreMatrix smith_normalize(const OreMatrix& d) {
    if (d.algebra().kind() != AlgebraKind::commutative)
        throw std::invalid_argument("smith_normalize requires the commutative preset");
    if (!d.is_rect_diagonal()) throw std::invalid_argument("smith_normalize: non-diagonal input");
    std::vector<UniPoly> entries;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) {
            const OrePoly& e = d.at(i, j);
            if (e.is_zero()) continue;
            if (e.deg() != 0)
                throw std::invalid_argument("smith_normalize: entry involves the operator");
            entries.push_back(e.coeff(0).make_monic());
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = i + 1; j < entries.size(); ++j) {
                if (entries[i].divides(entries[j])) continue;
                UniPoly g = poly_gcd(entries[i], entries[j]);
                UniPoly l = poly_lcm(entries[i], entries[j]);
                entries[i] = g;
                entries[j] = l;
                changed = true;
            }
    }
    OreMatrix out = OreMatrix::zero(d.rows(), d.cols(), d.algebra());
    for (std::size_t i = 0; i < entries.size() && i < std::min(d.rows(), d.cols()); ++i)
        out.at(i, i) = OrePoly::term(d.algebra(), entries[i], 0);
    return out;
}

}  // namespace orediag
