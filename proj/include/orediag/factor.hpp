#pragma once

// Partial factorization over Q: square-free decomposition (Yun) followed by
// extraction of rational roots as linear factors. Square-free residuals
// without rational roots are kept whole and flagged, so Ore-closure reports
// can state when irreducibility was not established.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "orediag/unipoly.hpp"

namespace orediag {

struct Factor {
    UniPoly poly;           // primitive, non-constant, positive leading coefficient
    unsigned multiplicity = 1;
    bool irreducibility_unverified = false;  // true for non-linear residuals
};

struct FactorSet {
    std::vector<Factor> factors;
    Rat scalar = Rat(1);

    bool any_unverified() const {
        for (const auto& f : factors)
            if (f.irreducibility_unverified) return true;
        return false;
    }
    UniPoly reassemble() const {
        UniPoly p{scalar};
        for (const auto& f : factors)
            for (unsigned i = 0; i < f.multiplicity; ++i) p *= f.poly;
        return p;
    }
};

// Yun's algorithm: f = prod g_i^i with g_i square-free and pairwise coprime.
inline std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly, unsigned>> out;
    UniPoly a = f.make_monic();
    if (a.deg() == 0) return out;
    UniPoly da = a.derivative();
    UniPoly g = poly_gcd(a, da);
    UniPoly b = a.exact_div(g);
    UniPoly c = da.exact_div(g);
    UniPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.deg() > 0) {
        UniPoly gi = poly_gcd(b, d);
        if (gi.deg() > 0) out.emplace_back(gi, i);
        b = b.exact_div(gi);
        c = d.exact_div(gi);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace detail {

// Positive divisors of |n|, by trial division. Bails out (returns partial
// list missing nothing below the bound) only for absurdly composite inputs;
// the callers treat a missed root as "factor left unsplit", never as wrong
// output.
inline std::vector<Int> positive_divisors(Int n, const Int& trial_bound = Int(1) << 20) {
    n = abs(n);
    std::vector<Int> small, large;
    for (Int d(1); d * d <= n && d <= trial_bound; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

// All rational roots of a square-free polynomial.
inline std::vector<Rat> rational_roots(const UniPoly& f) {
    std::vector<Rat> roots;
    if (f.deg() < 1) return roots;
    UniPoly g = f.primitive_part();
    std::size_t low = 0;
    while (orediag::is_zero(g.coeff(low))) ++low;
    if (low > 0) roots.push_back(Rat(0));
    Int a0 = g.coeff(low).get_num();
    Int ad = g.leading_coeff().get_num();
    for (const auto& p : positive_divisors(a0)) {
        for (const auto& q : positive_divisors(ad)) {
            Rat cand(p, q);
            cand.canonicalize();
            if (g.eval(cand) == 0) roots.push_back(cand);
            if (g.eval(-cand) == 0) roots.push_back(-cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace detail

inline FactorSet factor_partial(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_partial of zero");
    FactorSet out;
    out.scalar = f.content_unit();
    UniPoly g = f.primitive_part();
    if (g.deg() == 0) {
        out.scalar = out.scalar * g.coeff(0);
        return out;
    }
    for (const auto& [sqf, mult] : squarefree_decomposition(g)) {
        UniPoly rest = sqf.primitive_part();
        for (const auto& r : detail::rational_roots(rest)) {
            // x - r, primitive with positive leading coefficient
            UniPoly lin = UniPoly::from_coeffs({-r, Rat(1)}).primitive_part();
            out.factors.push_back({lin, mult, false});
            rest = rest.exact_div(UniPoly::from_coeffs({-r, Rat(1)})).primitive_part();
        }
        if (rest.deg() > 0)
            out.factors.push_back({rest.primitive_part(), mult, true});
    }
    // The primitive parts taken above shed rational units; recover the exact
    // scalar from one reassembly division.
    UniPoly prod{Rat(1)};
    for (const auto& fac : out.factors)
        for (unsigned i = 0; i < fac.multiplicity; ++i) prod *= fac.poly;
    UniPoly q = f.exact_div(prod);
    if (q.deg() != 0) throw std::logic_error("factor_partial lost a factor");
    out.scalar = q.coeff(0);
    return out;
}

}  // namespace orediag
