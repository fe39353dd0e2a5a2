#pragma once

// Left Gröbner bases for row modules of R*^{1×q} under the POT ordering
//   x^a ∂^b e_i < x^c ∂^d e_j  iff  i < j, or i = j and (b, a) < (d, c),
// i.e. components decide first, then ∂-weight, then x-degree. Reduction and
// S-polynomial steps carry exact cofactor rows over the input, so every
// element e of the working set satisfies e = cof(e)·inputs at all times;
// elements that collapse to zero hand their cofactor row over as a left
// syzygy of the inputs. This one engine yields the reduced basis, the
// transformation rows and the syzygy generators used for kernels.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orediag/matrix.hpp"

namespace orediag {

struct ModMonomial {
    std::size_t comp = 0;  // 0-based module component
    unsigned x_exp = 0;
    unsigned op_exp = 0;

    friend bool operator==(const ModMonomial&, const ModMonomial&) = default;
};

inline int compare(const ModMonomial& a, const ModMonomial& b) {
    if (a.comp != b.comp) return a.comp < b.comp ? -1 : 1;
    if (a.op_exp != b.op_exp) return a.op_exp < b.op_exp ? -1 : 1;
    if (a.x_exp != b.x_exp) return a.x_exp < b.x_exp ? -1 : 1;
    return 0;
}
inline bool monomial_lt(const ModMonomial& a, const ModMonomial& b) { return compare(a, b) < 0; }
inline bool monomial_divides(const ModMonomial& d, const ModMonomial& m) {
    return d.comp == m.comp && d.x_exp <= m.x_exp && d.op_exp <= m.op_exp;
}

// Row vector with entries in R*.
class ModVec {
  public:
    explicit ModVec(std::vector<OrePoly> comps) : comps_(std::move(comps)) {
        if (comps_.empty()) throw std::invalid_argument("empty module vector");
    }
    static ModVec zero(std::size_t q, const AlgebraSpec& alg) {
        return ModVec(std::vector<OrePoly>(q, OrePoly(alg)));
    }

    std::size_t size() const { return comps_.size(); }
    const OrePoly& comp(std::size_t i) const { return comps_[i]; }
    OrePoly& comp(std::size_t i) { return comps_[i]; }
    const std::vector<OrePoly>& comps() const { return comps_; }
    const AlgebraSpec& algebra() const { return comps_.front().algebra(); }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    std::optional<ModMonomial> leading_monomial() const {
        for (std::size_t k = comps_.size(); k-- > 0;) {
            const OrePoly& p = comps_[k];
            if (p.is_zero()) continue;
            unsigned beta = static_cast<unsigned>(p.deg());
            int alpha = p.terms().rbegin()->second.deg();
            return ModMonomial{k, static_cast<unsigned>(alpha), beta};
        }
        return std::nullopt;
    }
    std::size_t lpos() const {
        auto lm = leading_monomial();
        if (!lm) throw std::domain_error("lpos of zero vector");
        return lm->comp;
    }
    // ∂-degree of the leading monomial; -1 for the zero vector.
    int deg() const {
        auto lm = leading_monomial();
        return lm ? static_cast<int>(lm->op_exp) : -1;
    }
    Rat coeff_at(const ModMonomial& m) const {
        return comps_[m.comp].coeff(m.op_exp).coeff(m.x_exp);
    }

    friend ModVec operator-(const ModVec& a, const ModVec& b) {
        ModVec r(a);
        for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] -= b.comps_[i];
        return r;
    }
    friend ModVec operator*(const Rat& c, const ModVec& v) {
        ModVec r(v);
        for (auto& p : r.comps_) p = c * p;
        return r;
    }
    ModVec mul_monomial_left(const Rat& c, unsigned x_exp, unsigned op_exp) const {
        ModVec r(*this);
        for (auto& p : r.comps_) p = p.mul_monomial_left(c, x_exp, op_exp);
        return r;
    }

    friend bool operator==(const ModVec& a, const ModVec& b) { return a.comps_ == b.comps_; }

    std::size_t max_coeff_bits() const {
        std::size_t m = 0;
        for (const auto& p : comps_) m = std::max(m, p.max_coeff_bits());
        return m;
    }

    // Positive leading coefficient, coprime integer coefficients; the same
    // unit must be applied to any attached cofactor row.
    Rat primitive_unit() const {
        Int num_gcd(0), den_lcm(1);
        for (const auto& p : comps_)
            for (const auto& [e, c] : p.terms())
                for (const auto& r : c.coeffs()) {
                    if (orediag::is_zero(r)) continue;
                    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num().get_mpz_t());
                    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
                }
        if (num_gcd == 0) return Rat(1);
        Rat u(num_gcd, den_lcm);
        u.canonicalize();
        if (sgn(coeff_at(*leading_monomial())) < 0) u = -u;
        return u;
    }

  private:
    std::vector<OrePoly> comps_;
};

inline std::vector<ModVec> rows_of(const OreMatrix& m) {
    std::vector<ModVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i));
    return rows;
}

struct GBStats {
    std::size_t reductions = 0;
    std::size_t spairs = 0;
    std::size_t max_coeff_bits = 0;

    void absorb(const GBStats& o) {
        reductions += o.reductions;
        spairs += o.spairs;
        max_coeff_bits = std::max(max_coeff_bits, o.max_coeff_bits);
    }
};

struct GBResult {
    std::vector<ModVec> basis;  // reduced, ascending by leading monomial
    std::vector<std::vector<OrePoly>> cofactors;  // basis[i] = cofactors[i]·inputs
    std::vector<std::vector<OrePoly>> syzygies;   // generators of the left kernel of the inputs
    GBStats stats;
};

namespace detail {

struct Tracked {
    ModVec vec;
    std::vector<OrePoly> cof;
};

inline void scale_cof(std::vector<OrePoly>& cof, const Rat& c) {
    for (auto& p : cof) p = c * p;
}
inline void sub_mul_cof(std::vector<OrePoly>& cof, const OrePoly& q,
                        const std::vector<OrePoly>& other) {
    for (std::size_t i = 0; i < cof.size(); ++i) cof[i] -= q * other[i];
}
inline bool cof_is_zero(const std::vector<OrePoly>& cof) {
    for (const auto& p : cof)
        if (!p.is_zero()) return false;
    return true;
}

// Largest monomial of v divisible by some basis leading monomial.
inline std::optional<std::pair<ModMonomial, std::size_t>> largest_reducible(
    const ModVec& v, const std::vector<Tracked>& basis, const std::vector<ModMonomial>& lms,
    long skip) {
    for (std::size_t k = v.size(); k-- > 0;) {
        const OrePoly& p = v.comp(k);
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            const unsigned beta = it->first;
            const UniPoly& c = it->second;
            for (int a = c.deg(); a >= 0; --a) {
                if (orediag::is_zero(c.coeff(static_cast<std::size_t>(a)))) continue;
                ModMonomial m{k, static_cast<unsigned>(a), beta};
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    if (static_cast<long>(b) == skip) continue;
                    if (monomial_divides(lms[b], m)) return std::make_pair(m, b);
                }
            }
        }
    }
    return std::nullopt;
}

// Full left normal form of f against basis, updating f's cofactor row.
inline void reduce_full(Tracked& f, const std::vector<Tracked>& basis,
                        const std::vector<ModMonomial>& lms, GBStats& stats, long skip = -1) {
    while (auto hit = largest_reducible(f.vec, basis, lms, skip)) {
        const auto& [m, bi] = *hit;
        const Tracked& g = basis[bi];
        const ModMonomial glm = lms[bi];
        unsigned dx = m.x_exp - glm.x_exp;
        unsigned dop = m.op_exp - glm.op_exp;
        ModVec ug = g.vec.mul_monomial_left(Rat(1), dx, dop);
        Rat lambda = ug.coeff_at(m);
        Rat c = f.vec.coeff_at(m) / lambda;
        f.vec = f.vec - (c * ug);
        OrePoly q = OrePoly::term(f.vec.algebra(), UniPoly::monomial(c, dx), dop);
        sub_mul_cof(f.cof, q, g.cof);
        ++stats.reductions;
        stats.max_coeff_bits = std::max(stats.max_coeff_bits, f.vec.max_coeff_bits());
    }
}

inline void normalize_primitive(Tracked& t) {
    Rat u = t.vec.primitive_unit();
    if (u == 1) return;
    Rat inv = Rat(1) / u;
    t.vec = inv * t.vec;
    scale_cof(t.cof, inv);
}

}  // namespace detail

// Left normal form of v against a list of generators; returns the remainder
// and the division cofactors with v = Σ cofactors[i]·G[i] + remainder.
struct LeftReduceResult {
    ModVec remainder;
    std::vector<OrePoly> cofactors;
};

inline LeftReduceResult left_reduce(const ModVec& v, const std::vector<ModVec>& G) {
    const AlgebraSpec& alg = v.algebra();
    std::vector<detail::Tracked> basis;
    std::vector<ModMonomial> lms;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        std::vector<OrePoly> unit(G.size(), OrePoly(alg));
        unit[i] = OrePoly::constant(alg, Rat(1));
        basis.push_back({G[i], std::move(unit)});
        lms.push_back(*G[i].leading_monomial());
    }
    detail::Tracked f{v, std::vector<OrePoly>(G.size(), OrePoly(alg))};
    GBStats stats;
    detail::reduce_full(f, basis, lms, stats);
    // f.cof holds -q_i; v = Σ q_i·G_i + remainder
    for (auto& p : f.cof) p = -p;
    return {f.vec, f.cof};
}

// Reduced left Gröbner basis of the row module, with exact cofactors over the
// inputs and generators of the input syzygy module. Deterministic: FIFO pair
// queue, pairs created lowest index first, final basis sorted ascending by
// leading monomial, elements integer-primitive with positive leading
// coefficient.
inline GBResult buchberger(const std::vector<ModVec>& inputs) {
    if (inputs.empty()) throw std::invalid_argument("buchberger with no input rows");
    const AlgebraSpec& alg = inputs.front().algebra();
    const std::size_t r = inputs.size();

    GBResult out;
    std::vector<detail::Tracked> work;
    std::vector<ModMonomial> lms;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;

    auto unit_cof = [&](std::size_t i) {
        std::vector<OrePoly> u(r, OrePoly(alg));
        u[i] = OrePoly::constant(alg, Rat(1));
        return u;
    };
    auto record_syzygy = [&](std::vector<OrePoly> row) {
        if (!detail::cof_is_zero(row)) out.syzygies.push_back(std::move(row));
    };
    auto append = [&](detail::Tracked t) {
        detail::normalize_primitive(t);
        ModMonomial lm = *t.vec.leading_monomial();
        for (std::size_t i = 0; i < work.size(); ++i)
            if (lms[i].comp == lm.comp) pairs.emplace_back(i, work.size());
        work.push_back(std::move(t));
        lms.push_back(lm);
        out.stats.max_coeff_bits =
            std::max(out.stats.max_coeff_bits, work.back().vec.max_coeff_bits());
    };

    for (std::size_t i = 0; i < r; ++i) {
        detail::Tracked t{inputs[i], unit_cof(i)};
        detail::reduce_full(t, work, lms, out.stats);
        if (t.vec.is_zero())
            record_syzygy(std::move(t.cof));
        else
            append(std::move(t));
    }

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        ++out.stats.spairs;
        const ModMonomial mi = lms[i], mj = lms[j];
        ModMonomial L{mi.comp, std::max(mi.x_exp, mj.x_exp), std::max(mi.op_exp, mj.op_exp)};
        ModVec ai = work[i].vec.mul_monomial_left(Rat(1), L.x_exp - mi.x_exp, L.op_exp - mi.op_exp);
        ModVec aj = work[j].vec.mul_monomial_left(Rat(1), L.x_exp - mj.x_exp, L.op_exp - mj.op_exp);
        Rat li = ai.coeff_at(L), lj = aj.coeff_at(L);
        detail::Tracked s{ModVec::zero(inputs.front().size(), alg),
                          std::vector<OrePoly>(r, OrePoly(alg))};
        s.vec = (lj * ai) - (li * aj);
        OrePoly qi = OrePoly::term(alg, UniPoly::monomial(lj, L.x_exp - mi.x_exp), L.op_exp - mi.op_exp);
        OrePoly qj = OrePoly::term(alg, UniPoly::monomial(li, L.x_exp - mj.x_exp), L.op_exp - mj.op_exp);
        for (std::size_t t = 0; t < r; ++t)
            s.cof[t] = qi * work[i].cof[t] - qj * work[j].cof[t];
        detail::reduce_full(s, work, lms, out.stats);
        if (s.vec.is_zero())
            record_syzygy(std::move(s.cof));
        else
            append(std::move(s));
    }

    // Reduced basis: minimal leading monomials, tails fully reduced.
    std::vector<std::size_t> order(work.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return monomial_lt(lms[a], lms[b]); });
    std::vector<detail::Tracked> kept;
    std::vector<ModMonomial> kept_lms;
    std::vector<std::size_t> discarded;
    for (std::size_t idx : order) {
        bool redundant = false;
        for (const auto& klm : kept_lms)
            if (monomial_divides(klm, lms[idx])) {
                redundant = true;
                break;
            }
        if (redundant)
            discarded.push_back(idx);
        else {
            kept.push_back(work[idx]);
            kept_lms.push_back(lms[idx]);
        }
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        detail::reduce_full(kept[i], kept, kept_lms, out.stats, static_cast<long>(i));
        detail::normalize_primitive(kept[i]);
    }
    // Redundant elements and the original inputs must reduce to zero against
    // the reduced basis; their reduction relations complete the syzygies.
    auto reduce_to_syzygy = [&](detail::Tracked t) {
        detail::reduce_full(t, kept, kept_lms, out.stats);
        if (!t.vec.is_zero()) throw std::logic_error("Groebner basis failed a membership check");
        record_syzygy(std::move(t.cof));
    };
    for (std::size_t idx : discarded) reduce_to_syzygy(work[idx]);
    for (std::size_t i = 0; i < r; ++i)
        if (!inputs[i].is_zero()) reduce_to_syzygy({inputs[i], unit_cof(i)});

    for (auto& t : kept) {
        out.basis.push_back(std::move(t.vec));
        out.cofactors.push_back(std::move(t.cof));
    }
    return out;
}

inline GBResult buchberger(const OreMatrix& m) { return buchberger(rows_of(m)); }

// Generators of { c in R* : c·p is in the row module of M }, where the first
// input row is p and the rest are the rows of M: these are the first
// components of the left syzygies of the stacked rows.
inline std::vector<OrePoly> kernel_rows(const OreMatrix& stacked) {
    GBResult gb = buchberger(stacked);
    std::vector<OrePoly> out;
    for (const auto& row : gb.syzygies)
        if (!row.front().is_zero()) out.push_back(row.front());
    return out;
}

}  // namespace orediag
