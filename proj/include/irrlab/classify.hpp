#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "irrlab/ideal.hpp"
#include "irrlab/ring.hpp"

namespace irrlab {

/**
 * All per-element flags in one row. Flag order is fixed everywhere it is
 * serialized: zero, unit, zd, harmless, irr, b_irr, f_irr.
 *
 * The predicates are raw: irr is true for units (every factor of a unit is
 * a unit), while b_irr and f_irr are false for units by definition.
 * Proposition checks restate each proposition's own hypotheses at the
 * quantifier instead.
 */
struct ClassificationRecord {
    Elem element = 0;
    bool is_zero = false;
    bool is_unit = false;
    bool is_zero_divisor = false;
    bool is_harmless_zd = false;
    bool irr = false;
    bool b_irr = false;
    bool f_irr = false;

    /// Flags in serialization order.
    std::array<bool, 7> flags() const {
        return {is_zero, is_unit, is_zero_divisor, is_harmless_zd,
                irr,     b_irr,   f_irr};
    }
};

/// Classical irreducibility: every two-factor factorization has a unit factor.
inline bool is_irreducible(const FiniteRing& R, const DerivedSets& D, Elem r) {
    for (int a = 0; a < R.order; ++a) {
        if (D.is_unit(a)) continue;
        for (int b = 0; b <= a; ++b) {
            if (D.is_unit(b)) continue;
            if (R.mul(a, b) == r) return false;
        }
    }
    return true;
}

/// Bouvier: nonzero non-unit whose ideal is maximal among proper principal ideals.
inline bool is_b_irreducible(const FiniteRing& R, const DerivedSets& D, Elem r) {
    if (r == R.zero || D.is_unit(r)) return false;
    return is_max_principal_proper(R, r);
}

/// Fletcher (binary characterization): non-unit r with a in (r) or b in (r)
/// for every factorization r = ab.
inline bool is_f_irreducible(const FiniteRing& R, const DerivedSets& D, Elem r) {
    if (D.is_unit(r)) return false;
    PrincipalIdeal I = principal_ideal(R, r);
    for (int a = 0; a < R.order; ++a) {
        if (I.contains(a)) continue;
        for (int b = 0; b <= a; ++b) {
            if (I.contains(b)) continue;
            if (R.mul(a, b) == r) return false;
        }
    }
    return true;
}

/// r is a zero divisor of the harmless kind: 1 - r is a unit.
inline bool is_harmless_zd(const FiniteRing& R, const DerivedSets& D, Elem r) {
    return D.is_zero_divisor(r) && D.is_unit(R.sub(R.one, r));
}

inline bool has_only_harmless_zds(const FiniteRing& R, const DerivedSets& D) {
    for (Elem r : D.zero_divisors)
        if (!D.is_unit(R.sub(R.one, r))) return false;
    return true;
}

inline ClassificationRecord classify_element(const FiniteRing& R,
                                             const DerivedSets& D, Elem r) {
    ClassificationRecord c;
    c.element = r;
    c.is_zero = r == R.zero;
    c.is_unit = D.is_unit(r);
    c.is_zero_divisor = D.is_zero_divisor(r);
    c.is_harmless_zd = is_harmless_zd(R, D, r);
    c.irr = is_irreducible(R, D, r);
    c.b_irr = is_b_irreducible(R, D, r);
    c.f_irr = is_f_irreducible(R, D, r);
    return c;
}

inline ClassificationRecord classify_element(const FiniteRing& R, Elem r) {
    return classify_element(R, derive_sets(R), r);
}

/// Classify every element of R. One O(n^2) sweep per predicate family.
inline std::vector<ClassificationRecord> classify_ring(const FiniteRing& R,
                                                       const DerivedSets& D) {
    const int n = R.order;
    // ideal membership bitmaps: in_ideal[r][e] iff e in (r)
    std::vector<std::vector<char>> in_ideal(n, std::vector<char>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) in_ideal[r][R.mul(r, s)] = 1;

    std::vector<char> not_irr(n, 0), not_f(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b <= a; ++b) {
            const Elem p = R.mul(a, b);
            if (!D.is_unit(a) && !D.is_unit(b)) not_irr[p] = 1;
            if (!in_ideal[p][a] && !in_ideal[p][b]) not_f[p] = 1;
        }
    }

    std::vector<ClassificationRecord> out(n);
    for (int r = 0; r < n; ++r) {
        ClassificationRecord& c = out[r];
        c.element = r;
        c.is_zero = r == R.zero;
        c.is_unit = D.is_unit(r);
        c.is_zero_divisor = D.is_zero_divisor(r);
        c.is_harmless_zd = is_harmless_zd(R, D, r);
        c.irr = !not_irr[r];
        c.b_irr = is_b_irreducible(R, D, r);
        c.f_irr = !c.is_unit && !not_f[r];
    }
    return out;
}

inline std::vector<ClassificationRecord> classify_ring(const FiniteRing& R) {
    return classify_ring(R, derive_sets(R));
}

namespace detail {

/// All factorizations of v into multisets of m factors (each listed once,
/// as a sorted tuple), products taken in R.
inline void factorizations_of(const FiniteRing& R, Elem v, int m,
                              std::vector<std::vector<Elem>>& out) {
    std::vector<Elem> cur;
    // choose factors non-decreasing; track partial product
    auto rec = [&](auto&& self, int pos, Elem minf, Elem partial) -> void {
        if (pos == m - 1) {
            for (Elem last = minf; last < R.order; ++last)
                if (R.mul(partial, last) == v) {
                    cur.push_back(last);
                    out.push_back(cur);
                    cur.pop_back();
                }
            return;
        }
        for (Elem f = minf; f < R.order; ++f) {
            cur.push_back(f);
            self(self, pos + 1, f, R.mul(partial, f));
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, R.one);
}

inline std::uint64_t encode_multiset(const std::vector<Elem>& ms) {
    std::uint64_t key = 0;
    for (Elem e : ms) key = key * 257 + static_cast<std::uint64_t>(e) + 1;
    return key;
}

}  // namespace detail

/**
 * Refinement-based F-irreducibility oracle.
 *
 * Enumerates every factorization of r with between 2 and max_len factors and
 * searches for a chain of refinement steps (replace one factor by a
 * factorization of it into >= 2 factors) reaching a multiset containing r.
 * The zero-step chain counts, so a factorization already containing r
 * passes. Chains may grow past max_len factors during refinement (up to
 * 2*max_len); without that headroom a full-length factorization could never
 * be refined and the oracle would disagree with the binary characterization.
 *
 * Bounded by construction: requires order(R) <= 12 and max_len <= 4, and r
 * must be a non-unit.
 */
inline bool is_f_irreducible_refinement(const FiniteRing& R, Elem r,
                                        int max_len) {
    if (R.order > 12)
        throw usage_error("refinement oracle capped at ring order 12");
    if (max_len < 2 || max_len > 4)
        throw usage_error("refinement oracle requires 2 <= max_len <= 4");
    DerivedSets D = derive_sets(R);
    if (D.is_unit(r))
        throw usage_error("F-irreducibility is defined for non-units");

    const int chain_cap = 2 * max_len;

    // factorizations of every element into exactly m parts, 2 <= m <= max_len
    std::vector<std::vector<std::vector<std::vector<Elem>>>> facs(
        R.order, std::vector<std::vector<std::vector<Elem>>>(max_len + 1));
    for (int v = 0; v < R.order; ++v)
        for (int m = 2; m <= max_len; ++m)
            detail::factorizations_of(R, v, m, facs[v][m]);

    auto refines_to_contain = [&](const std::vector<Elem>& start) {
        std::set<std::uint64_t> seen;
        std::vector<std::vector<Elem>> stack{start};
        seen.insert(detail::encode_multiset(start));
        while (!stack.empty()) {
            std::vector<Elem> ms = std::move(stack.back());
            stack.pop_back();
            if (std::binary_search(ms.begin(), ms.end(), r)) return true;
            const int sz = static_cast<int>(ms.size());
            for (int i = 0; i < sz; ++i) {
                const Elem f = ms[i];
                for (int m = 2; m <= max_len && sz - 1 + m <= chain_cap; ++m) {
                    for (const auto& sub : facs[f][m]) {
                        std::vector<Elem> next;
                        next.reserve(sz - 1 + m);
                        for (int j = 0; j < sz; ++j)
                            if (j != i) next.push_back(ms[j]);
                        next.insert(next.end(), sub.begin(), sub.end());
                        std::sort(next.begin(), next.end());
                        if (seen.insert(detail::encode_multiset(next)).second)
                            stack.push_back(std::move(next));
                    }
                }
            }
        }
        return false;
    };

    for (int m = 2; m <= max_len; ++m)
        for (const auto& fac : facs[r][m])
            if (!refines_to_contain(fac)) return false;
    return true;
}

}  // namespace irrlab
