#pragma once

// Localization analysis: skew Euclidean division over rational coefficients,
// two-sidedness and total-divisibility tests, unimodularity certificates for
// transformation matrices, and minimal Ore-closure descriptions of the
// denominators each algebra needs.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orediag/diagonalize.hpp"
#include "orediag/factor.hpp"

namespace orediag {

enum class DivSide { left, right };

struct SkewDivRem {
    OreRatPoly quotient;
    OreRatPoly remainder;
};

// side = right: f = q·g + r;  side = left: f = g·q + r;  deg r < deg g.
inline SkewDivRem skew_divrem(const OreRatPoly& f, const OreRatPoly& g, DivSide side) {
    if (g.is_zero()) throw std::domain_error("skew division by zero");
    const AlgebraSpec& alg = f.algebra();
    OreRatPoly q(alg), r = f;
    const int dg = g.deg();
    const RatFunc& lg = g.leading_coeff();
    while (!r.is_zero() && r.deg() >= dg) {
        unsigned beta = static_cast<unsigned>(r.deg() - dg);
        RatFunc c = side == DivSide::right
                        ? r.leading_coeff() / alg.sigma_pow(lg, static_cast<long>(beta))
                        : alg.sigma_pow(r.leading_coeff() / lg, -static_cast<long>(dg));
        OreRatPoly t = OreRatPoly::term(alg, c, beta);
        r = side == DivSide::right ? r - t * g : r - g * t;
        q += t;
    }
    return {q, r};
}

struct MembershipWitness {
    std::string relation;  // e.g. "x*r in r*R"
    OreRatPoly quotient;
    OreRatPoly remainder;
    bool member = false;
};

struct TwoSidedReport {
    OreRatPoly element;
    bool is_two_sided = false;
    std::vector<MembershipWitness> witnesses;
};

// r is two-sided iff Rr = rR; it suffices to test the generators:
// x·r, ∂·r in rR (left division) and r·x, r·∂ in Rr (right division),
// since rR is closed under left multiplication once the generators are.
inline TwoSidedReport is_two_sided(const OreRatPoly& r) {
    if (r.is_zero()) throw std::invalid_argument("is_two_sided of zero");
    const AlgebraSpec& alg = r.algebra();
    TwoSidedReport rep{r};
    rep.is_two_sided = true;
    const OreRatPoly x = OreRatPoly::variable_x(alg);
    const OreRatPoly op = OreRatPoly::op(alg);
    const std::string xs = "x", ops = alg.op_symbol();
    auto check = [&](const OreRatPoly& f, const std::string& rel, DivSide side) {
        SkewDivRem d = skew_divrem(f, r, side);
        bool member = d.remainder.is_zero();
        rep.witnesses.push_back({rel, d.quotient, d.remainder, member});
        rep.is_two_sided = rep.is_two_sided && member;
    };
    check(x * r, xs + "*r in r*R", DivSide::left);
    check(op * r, ops + "*r in r*R", DivSide::left);
    check(r * x, "r*" + xs + " in R*r", DivSide::right);
    check(r * op, "r*" + ops + " in R*r", DivSide::right);
    return rep;
}

inline TwoSidedReport is_two_sided(const OrePoly& r) { return is_two_sided(to_rational(r)); }

inline bool divides_either_side(const OreRatPoly& a, const OreRatPoly& b) {
    return skew_divrem(b, a, DivSide::right).remainder.is_zero() ||
           skew_divrem(b, a, DivSide::left).remainder.is_zero();
}

// a totally divides b via the two-sided witness c: c is two-sided and
// a | c | b, divisibility on either side.
inline bool totally_divides(const OreRatPoly& a, const OreRatPoly& b, const OreRatPoly& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw std::invalid_argument("totally_divides with zero input");
    if (!is_two_sided(c).is_two_sided) return false;
    return divides_either_side(a, c) && divides_either_side(c, b);
}

inline bool totally_divides(const OrePoly& a, const OrePoly& b, const OrePoly& c) {
    return totally_divides(to_rational(a), to_rational(b), to_rational(c));
}

enum class ClosureRule { powers, integer_shifts, q_scalings };

inline std::string to_string(ClosureRule r) {
    switch (r) {
        case ClosureRule::powers: return "powers";
        case ClosureRule::integer_shifts: return "integer_shifts";
        case ClosureRule::q_scalings: return "q_scalings";
    }
    return "?";
}

inline ClosureRule closure_rule_for(const AlgebraSpec& alg) {
    switch (alg.kind()) {
        case AlgebraKind::weyl:
        case AlgebraKind::commutative: return ClosureRule::powers;
        case AlgebraKind::shift: return ClosureRule::integer_shifts;
        case AlgebraKind::qcomm: return ClosureRule::q_scalings;
    }
    throw std::logic_error("unknown algebra kind");
}

struct OreSetDescription {
    std::optional<AlgebraSpec> algebra;
    std::vector<UniPoly> factors;  // primitive canonical representatives; empty = trivial {1}
    ClosureRule rule = ClosureRule::powers;
    bool unverified_irreducibility = false;

    bool trivial() const { return factors.empty(); }
};

namespace detail {

// Canonical representative of the integer-shift class: translate so the
// second-highest coefficient of the monic form lands in [0, deg).
inline UniPoly shift_canonical(const UniPoly& f) {
    int d = f.deg();
    if (d < 1) return f.primitive_part();
    UniPoly m = f.make_monic();
    Rat c = m.coeff(static_cast<std::size_t>(d - 1));
    Rat ratio = c / rat(d);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
    Rat t = -Rat(fl);
    return m.shift(t).primitive_part();
}

// Does g equal f(q^z x) up to a rational unit for some integer z?
inline bool q_scale_equivalent(const UniPoly& f, const UniPoly& g, const AlgebraSpec& alg) {
    UniPoly fp = f.primitive_part(), gp = g.primitive_part();
    if (fp.deg() != gp.deg()) return false;
    if (fp == gp) return true;
    const long kMaxScale = 256;
    for (long z = 1; z <= kMaxScale; ++z) {
        if (fp.scale(alg.q_power(z)).primitive_part() == gp) return true;
        if (fp.scale(alg.q_power(-z)).primitive_part() == gp) return true;
    }
    return false;
}

}  // namespace detail

// Factor every element of Omega, drop constants, deduplicate associates
// (for shift: modulo integer shifts of the argument; for qcomm: modulo
// q-power scalings) and attach the algebra's closure rule.
inline OreSetDescription ore_closure_describe(const std::vector<UniPoly>& omega,
                                              const AlgebraSpec& alg) {
    OreSetDescription out;
    out.algebra = alg;
    out.rule = closure_rule_for(alg);
    for (const auto& f : omega) {
        if (f.is_zero()) throw std::invalid_argument("ore_closure_describe: zero input");
        FactorSet fs = factor_partial(f);
        out.unverified_irreducibility = out.unverified_irreducibility || fs.any_unverified();
        for (const auto& fac : fs.factors) {
            UniPoly rep = fac.poly.primitive_part();
            if (out.rule == ClosureRule::integer_shifts) rep = detail::shift_canonical(rep);
            bool seen = false;
            for (const auto& kept : out.factors) {
                if (kept == rep ||
                    (out.rule == ClosureRule::q_scalings &&
                     detail::q_scale_equivalent(kept, rep, alg))) {
                    seen = true;
                    break;
                }
            }
            if (!seen) out.factors.push_back(rep);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const UniPoly& a, const UniPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.to_string() < b.to_string();
    });
    return out;
}

inline OreSetDescription merge_ore_sets(const OreSetDescription& a, const OreSetDescription& b) {
    if (a.trivial() && !b.algebra) return a;
    const AlgebraSpec& alg = a.algebra ? *a.algebra : *b.algebra;
    std::vector<UniPoly> omega = a.factors;
    omega.insert(omega.end(), b.factors.begin(), b.factors.end());
    OreSetDescription merged =
        omega.empty() ? OreSetDescription{alg, {}, closure_rule_for(alg), false}
                      : ore_closure_describe(omega, alg);
    merged.unverified_irreducibility =
        a.unverified_irreducibility || b.unverified_irreducibility;
    return merged;
}

enum class UnimodStatus { unimodular_over_Rstar, unimodular_over_localization, not_full_rank };

inline std::string to_string(UnimodStatus s) {
    switch (s) {
        case UnimodStatus::unimodular_over_Rstar: return "unimodular_over_Rstar";
        case UnimodStatus::unimodular_over_localization: return "unimodular_over_localization";
        case UnimodStatus::not_full_rank: return "not_full_rank";
    }
    return "?";
}

struct UnimodularityCertificate {
    UnimodStatus status = UnimodStatus::not_full_rank;
    std::optional<OreMatrix> inverse;       // present iff unimodular over R*
    std::vector<UniPoly> diagonal_witness;  // nonzero K[x] entries of the nested diagonal form
    std::vector<OrePoly> nested_diagonal;   // all nested diagonal entries, for reporting
    OreSetDescription ore_set;
};

// Diagonalize W; degree-0 nonzero diagonal entries certify R-unimodularity.
// Rational-constant entries admit an exact polynomial inverse assembled from
// the nested transformation matrices; otherwise the K[x] witness is factored
// into the Ore closure needed to invert W. not_full_rank covers every matrix
// without an inverse over R (zero or operator-positive witness entries).
inline UnimodularityCertificate unimodularity_certificate(const OreMatrix& w,
                                                          const Involution& theta,
                                                          const DiagConfig& cfg = {}) {
    if (w.rows() != w.cols())
        throw std::invalid_argument("unimodularity_certificate: non-square matrix");
    UnimodularityCertificate cert;
    cert.ore_set.algebra = w.algebra();
    cert.ore_set.rule = closure_rule_for(w.algebra());
    DiagResult nested = diagonalize(w, theta, cfg);
    const std::size_t n = w.rows();
    for (std::size_t i = 0; i < n; ++i) {
        OrePoly entry(w.algebra());
        for (std::size_t j = 0; j < n; ++j)
            if (!nested.D.at(i, j).is_zero()) entry = nested.D.at(i, j);
        cert.nested_diagonal.push_back(entry);
    }
    bool full_rank_units = true;
    bool all_constants = true;
    for (const auto& e : cert.nested_diagonal) {
        if (e.is_zero() || e.deg() != 0) full_rank_units = false;
        else if (e.coeff(0).deg() != 0) all_constants = false;
    }
    if (!full_rank_units) {
        cert.status = UnimodStatus::not_full_rank;
        return cert;
    }
    for (const auto& e : cert.nested_diagonal) cert.diagonal_witness.push_back(e.coeff(0));
    if (all_constants) {
        // W^{-1} = V·D^{-1}·U exactly, checked on both sides.
        OreMatrix dinv = OreMatrix::zero(n, n, w.algebra());
        for (std::size_t i = 0; i < n; ++i)
            dinv.at(i, i) =
                OrePoly::constant(w.algebra(), Rat(1) / cert.diagonal_witness[i].coeff(0));
        OreMatrix inv = (nested.V * dinv) * nested.U;
        OreMatrix id = OreMatrix::identity(n, w.algebra());
        if (w * inv != id || inv * w != id)
            throw std::logic_error("unimodularity certificate: inverse check failed");
        cert.inverse = std::move(inv);
        cert.status = UnimodStatus::unimodular_over_Rstar;
        return cert;
    }
    std::vector<UniPoly> nonconstant;
    for (const auto& p : cert.diagonal_witness)
        if (p.deg() > 0) nonconstant.push_back(p);
    cert.ore_set = ore_closure_describe(nonconstant, w.algebra());
    cert.status = UnimodStatus::unimodular_over_localization;
    return cert;
}

inline UnimodularityCertificate unimodularity_certificate(const OreMatrix& w,
                                                          const DiagConfig& cfg = {}) {
    return unimodularity_certificate(w, Involution::default_for(w.algebra()), cfg);
}

struct DecoupledEquation {
    OrePoly coefficient;     // nonzero diagonal entry d
    std::size_t variable;    // 0-based index i of the unknown in  d·w_i = 0
};

struct DecouplingReport {
    UnimodularityCertificate cert_u;
    UnimodularityCertificate cert_v;
    OreSetDescription merged;  // Ore closure of S_U ∪ S_V
    std::vector<DecoupledEquation> equations;
    std::size_t free_variables = 0;  // zero columns of D
};

// Combine the certificates of U and V into the localization over which the
// system decouples into the scalar equations d_ii·w_i = 0.
inline DecouplingReport decoupling_report(const DiagResult& result, const Involution& theta,
                                          const DiagConfig& cfg = {}) {
    if (!result.verified)
        throw std::invalid_argument("decoupling_report requires a verified diagonalization");
    DecouplingReport rep;
    rep.cert_u = unimodularity_certificate(result.U, theta, cfg);
    rep.cert_v = unimodularity_certificate(result.V, theta, cfg);
    rep.merged = merge_ore_sets(rep.cert_u.ore_set, rep.cert_v.ore_set);
    for (std::size_t i = 0; i < result.D.rows(); ++i)
        for (std::size_t j = 0; j < result.D.cols(); ++j)
            if (!result.D.at(i, j).is_zero()) rep.equations.push_back({result.D.at(i, j), j});
    for (std::size_t j = 0; j < result.D.cols(); ++j)
        if (result.D.col_is_zero(j)) ++rep.free_variables;
    return rep;
}

// Per-position minimal ∂-degrees of the row module over the rational layer,
// by skew-triangularizing with Euclidean division (R is a left PID, so one
// row per occupied position suffices).
inline std::map<std::size_t, int> rational_position_degrees(const OreRatMatrix& m) {
    auto lpos_of = [&](const std::vector<OreRatPoly>& row) -> std::optional<std::size_t> {
        for (std::size_t k = row.size(); k-- > 0;)
            if (!row[k].is_zero()) return k;
        return std::nullopt;
    };
    std::vector<std::vector<OreRatPoly>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!m.row_is_zero(i)) rows.push_back(m.row(i));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < rows.size() && !changed; ++a)
            for (std::size_t b = 0; b < rows.size() && !changed; ++b) {
                if (a == b) continue;
                auto pa = lpos_of(rows[a]), pb = lpos_of(rows[b]);
                if (!pa || !pb || *pa != *pb) continue;
                std::size_t hi = rows[a][*pa].deg() >= rows[b][*pb].deg() ? a : b;
                std::size_t lo = hi == a ? b : a;
                OreRatPoly qd =
                    skew_divrem(rows[hi][*pa], rows[lo][*pa], DivSide::right).quotient;
                for (std::size_t j = 0; j < rows[hi].size(); ++j)
                    rows[hi][j] -= qd * rows[lo][j];
                if (!lpos_of(rows[hi])) rows.erase(rows.begin() + static_cast<long>(hi));
                changed = true;
            }
    }
    std::map<std::size_t, int> out;
    for (const auto& row : rows) out[*lpos_of(row)] = row[*lpos_of(row)].deg();
    return out;
}

}  // namespace orediag
