#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "irrlab/ring.hpp"

namespace irrlab {

/**
 * The principal ideal rR as an explicit sorted element set.
 *
 * Ideal identity is extensional: two ideals are equal iff their element sets
 * are equal, so associate generators collapse. The originating ring is
 * remembered by spec text and order so cross-ring comparisons can be caught.
 */
struct PrincipalIdeal {
    Elem generator = 0;
    std::vector<Elem> elements;  // sorted
    int ring_order = 0;
    std::string ring_spec;

    bool contains(Elem e) const {
        return std::binary_search(elements.begin(), elements.end(), e);
    }
    bool same_set(const PrincipalIdeal& other) const {
        return elements == other.elements;
    }
};

inline PrincipalIdeal principal_ideal(const FiniteRing& R, Elem r) {
    PrincipalIdeal I;
    I.generator = r;
    I.ring_order = R.order;
    I.ring_spec = R.spec;
    std::vector<char> seen(R.order, 0);
    for (int s = 0; s < R.order; ++s) seen[R.mul(r, s)] = 1;
    for (int e = 0; e < R.order; ++e)
        if (seen[e]) I.elements.push_back(e);
    return I;
}

/// Inclusion I subset-of J. Both ideals must come from the same ring.
inline bool ideal_leq(const PrincipalIdeal& I, const PrincipalIdeal& J) {
    if (I.ring_order != J.ring_order || I.ring_spec != J.ring_spec)
        throw usage_error("comparing principal ideals of different rings");
    return std::includes(J.elements.begin(), J.elements.end(),
                         I.elements.begin(), I.elements.end());
}

/// True iff (r) is proper and maximal among the proper principal ideals.
inline bool is_max_principal_proper(const FiniteRing& R, Elem r) {
    PrincipalIdeal I = principal_ideal(R, r);
    if (static_cast<int>(I.elements.size()) == R.order) return false;  // (r) = R
    for (int s = 0; s < R.order; ++s) {
        PrincipalIdeal J = principal_ideal(R, s);
        if (static_cast<int>(J.elements.size()) == R.order) continue;
        if (ideal_leq(I, J) && !J.same_set(I)) return false;
    }
    return true;
}

/**
 * All distinct principal ideals of R with the covering edges of inclusion.
 *
 * Nodes are sorted by (size, smallest generator); the recorded generator of
 * each node is the smallest one. cover_edges (i,j) means node i is covered
 * by node j (strict inclusion with nothing strictly between).
 */
struct PrincipalPoset {
    std::vector<PrincipalIdeal> ideals;
    std::vector<std::pair<int, int>> cover_edges;
};

inline PrincipalPoset principal_poset(const FiniteRing& R) {
    PrincipalPoset P;
    for (int r = 0; r < R.order; ++r) {
        PrincipalIdeal I = principal_ideal(R, r);
        bool dup = false;
        for (auto& J : P.ideals) {
            if (J.same_set(I)) {
                J.generator = std::min(J.generator, I.generator);
                dup = true;
                break;
            }
        }
        if (!dup) P.ideals.push_back(std::move(I));
    }
    std::sort(P.ideals.begin(), P.ideals.end(),
              [](const PrincipalIdeal& a, const PrincipalIdeal& b) {
                  if (a.elements.size() != b.elements.size())
                      return a.elements.size() < b.elements.size();
                  return a.generator < b.generator;
              });
    const int m = static_cast<int>(P.ideals.size());
    std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            leq[i][j] = ideal_leq(P.ideals[i], P.ideals[j]) ? 1 : 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j || !leq[i][j] || leq[j][i]) continue;
            bool covering = true;
            for (int k = 0; k < m && covering; ++k) {
                if (k == i || k == j) continue;
                if (leq[i][k] && leq[k][j] && !leq[k][i] && !leq[j][k])
                    covering = false;
            }
            if (covering) P.cover_edges.emplace_back(i, j);
        }
    }
    std::sort(P.cover_edges.begin(), P.cover_edges.end());
    return P;
}

}  // namespace irrlab
