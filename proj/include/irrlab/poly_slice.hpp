#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "irrlab/ideal.hpp"
#include "irrlab/ring.hpp"

namespace irrlab {

/// Polynomial over a finite base ring, little-endian coefficients (element
/// ids of the base). Canonical form has no trailing zeros; zero is empty.
using Poly = std::vector<Elem>;

inline Poly poly_canon(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline Poly poly_add(const FiniteRing& A, const Poly& f, const Poly& g) {
    Poly h(std::max(f.size(), g.size()), A.zero);
    for (size_t i = 0; i < h.size(); ++i) {
        Elem a = i < f.size() ? f[i] : A.zero;
        Elem b = i < g.size() ? g[i] : A.zero;
        h[i] = A.add(a, b);
    }
    return poly_canon(std::move(h));
}

inline Poly poly_neg(const FiniteRing& A, const Poly& f) {
    Poly h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = A.neg(f[i]);
    return poly_canon(std::move(h));
}

inline Poly poly_sub(const FiniteRing& A, const Poly& f, const Poly& g) {
    return poly_add(A, f, poly_neg(A, g));
}

inline Poly poly_mul(const FiniteRing& A, const Poly& f, const Poly& g) {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, A.zero);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            h[i + j] = A.add(h[i + j], A.mul(f[i], g[j]));
    return poly_canon(std::move(h));
}

inline Poly poly_scale(const FiniteRing& A, Elem c, const Poly& f) {
    Poly h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = A.mul(c, f[i]);
    return poly_canon(std::move(h));
}

/// "c0 + c1*x + ..." with zero terms omitted. Coefficient labels containing
/// operators are parenthesized.
inline std::string poly_to_string(const FiniteRing& A, const Poly& f,
                                  const std::string& var = "x") {
    std::vector<std::string> cl(f.size());
    std::vector<bool> nz(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        std::string lab = A.label(f[i]);
        if (lab.find('+') != std::string::npos ||
            lab.find('*') != std::string::npos)
            lab = "(" + lab + ")";
        cl[i] = lab;
        nz[i] = f[i] != A.zero;
    }
    return detail::format_poly(cl, nz, var);
}

/// Constant-annihilator criterion: f is a zero divisor of A[x] iff some
/// nonzero constant c of A kills every coefficient. Returns that c.
inline std::optional<Elem> zd_poly_witness(const FiniteRing& A, const Poly& f) {
    if (poly_canon(f).empty())
        throw usage_error("zero polynomial is excluded from Z(A[x])");
    for (Elem c = 1; c < A.order; ++c) {
        bool kills = true;
        for (Elem coeff : f)
            if (A.mul(c, coeff) != A.zero) {
                kills = false;
                break;
            }
        if (kills) return c;
    }
    return std::nullopt;
}

inline bool is_zd_poly(const FiniteRing& A, const Poly& f) {
    return zd_poly_witness(A, f).has_value();
}

/// f is a unit of A[x] iff its constant coefficient is a unit of A and every
/// higher coefficient is nilpotent in A.
inline bool is_unit_poly(const FiniteRing& A, const DerivedSets& D,
                         const Poly& f) {
    if (f.empty()) return false;
    if (!D.is_unit(f[0])) return false;
    for (size_t i = 1; i < f.size(); ++i)
        if (!D.is_nilpotent(f[i])) return false;
    return true;
}

inline bool is_unit_poly(const FiniteRing& A, const Poly& f) {
    return is_unit_poly(A, derive_sets(A), f);
}

/**
 * Result of checking one bounded-degree slice of A[x] for an Artinian local
 * principal ideal base A with maximal ideal (t).
 *
 * Checked identities, each with a pass flag and witnesses on failure:
 *   harmless      — every zero divisor f in the slice has 1 - f a unit
 *   z_equals_t    — zero-divisor slice = nonzero elements of t * slice
 *   z_equals_nil  — zero-divisor slice = nonzero polys with all coefficients
 *                   nilpotent in A (the Jacobson slice)
 *   jacobson_unit — for every f in the Jacobson slice and g in the slice,
 *                   1 - f*g is a unit
 */
struct SliceReport {
    std::string base_spec;
    std::string base_label;
    int degree_bound = 0;
    std::string t_label;
    long long examined = 0;
    long long zero_divisors = 0;
    long long harmless = 0;
    long long jacobson_pairs_checked = 0;
    bool jacobson_pairs_sampled = false;
    bool harmless_pass = true;
    bool z_equals_t_pass = true;
    bool z_equals_nil_pass = true;
    bool jacobson_unit_pass = true;
    std::vector<std::string> harmless_witnesses;
    std::vector<std::string> z_equals_t_witnesses;
    std::vector<std::string> z_equals_nil_witnesses;
    std::vector<std::string> jacobson_unit_witnesses;

    bool all_pass() const {
        return harmless_pass && z_equals_t_pass && z_equals_nil_pass &&
               jacobson_unit_pass;
    }
};

namespace detail {

/// Single generator t of the maximal ideal (the non-units), if one exists.
inline std::optional<Elem> local_pir_generator(const FiniteRing& A,
                                               const DerivedSets& D) {
    std::vector<Elem> nonunits;
    for (int e = 0; e < A.order; ++e)
        if (!D.is_unit(e)) nonunits.push_back(e);
    for (Elem t : nonunits) {
        if (principal_ideal(A, t).elements == nonunits) return t;
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * Enumerate all polynomials of degree <= d over A and check the slice-level
 * versions of the harmless-zero-divisor identities. A must be a finite local
 * ring whose maximal ideal is principal.
 */
inline SliceReport bounded_slice_check(const FiniteRing& A, int d,
                                       const std::string& var = "x") {
    if (d < 1) throw usage_error("slice degree bound must be >= 1");
    DerivedSets D = derive_sets(A);
    if (!is_local(A, D))
        throw usage_error("slice base must be local: " + A.spec);
    auto t = detail::local_pir_generator(A, D);
    if (!t)
        throw usage_error("maximal ideal of slice base is not principal: " +
                          A.spec);
    double size = 1;
    for (int i = 0; i <= d; ++i) size *= A.order;
    if (size > 1e6)
        throw usage_error("slice too large: |A|^(d+1) exceeds 10^6");

    SliceReport rep;
    rep.base_spec = A.spec;
    rep.base_label = A.spec;
    rep.degree_bound = d;
    rep.t_label = A.label(*t);

    const long long total = static_cast<long long>(size);
    auto decode = [&](long long idx) {
        Poly f(d + 1);
        for (int i = 0; i <= d; ++i) {
            f[i] = static_cast<Elem>(idx % A.order);
            idx /= A.order;
        }
        return poly_canon(std::move(f));
    };

    std::set<Poly> zd_slice, t_slice, nil_slice_nonzero;
    std::vector<Poly> slice, nil_slice;
    slice.reserve(total);
    Poly one_poly{A.one};

    for (long long idx = 0; idx < total; ++idx) {
        Poly f = decode(idx);
        slice.push_back(f);
        rep.examined++;
        if (!f.empty()) {
            Poly tf = poly_scale(A, *t, f);
            if (!tf.empty()) t_slice.insert(std::move(tf));
        }
        bool all_nil = true;
        for (Elem c : f)
            if (!D.is_nilpotent(c)) {
                all_nil = false;
                break;
            }
        if (all_nil) {
            nil_slice.push_back(f);
            if (!f.empty()) nil_slice_nonzero.insert(f);
        }
        if (f.empty()) continue;
        if (is_zd_poly(A, f)) {
            rep.zero_divisors++;
            zd_slice.insert(f);
            if (is_unit_poly(A, D, poly_sub(A, one_poly, f))) {
                rep.harmless++;
            } else {
                rep.harmless_pass = false;
                rep.harmless_witnesses.push_back(poly_to_string(A, f, var));
            }
        }
    }

    auto diff_witnesses = [&](const std::set<Poly>& X, const std::set<Poly>& Y,
                              std::vector<std::string>& out) {
        std::vector<Poly> diff;
        std::set_symmetric_difference(X.begin(), X.end(), Y.begin(), Y.end(),
                                      std::back_inserter(diff));
        for (const auto& f : diff) out.push_back(poly_to_string(A, f, var));
    };
    if (zd_slice != t_slice) {
        rep.z_equals_t_pass = false;
        diff_witnesses(zd_slice, t_slice, rep.z_equals_t_witnesses);
    }
    if (zd_slice != nil_slice_nonzero) {
        rep.z_equals_nil_pass = false;
        diff_witnesses(zd_slice, nil_slice_nonzero, rep.z_equals_nil_witnesses);
    }

    // 1 - f*g must be a unit for f in the Jacobson slice, g in the slice.
    // Full cross product when affordable, deterministic sample otherwise.
    const long long pairs =
        static_cast<long long>(nil_slice.size()) * total;
    if (pairs <= 4'000'000) {
        for (const auto& f : nil_slice)
            for (const auto& g : slice) {
                rep.jacobson_pairs_checked++;
                if (!is_unit_poly(A, D,
                                  poly_sub(A, one_poly, poly_mul(A, f, g)))) {
                    rep.jacobson_unit_pass = false;
                    rep.jacobson_unit_witnesses.push_back(
                        "f=" + poly_to_string(A, f, var) +
                        " g=" + poly_to_string(A, g, var));
                }
            }
    } else {
        rep.jacobson_pairs_sampled = true;
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<size_t> pick_f(0, nil_slice.size() - 1);
        std::uniform_int_distribution<long long> pick_g(0, total - 1);
        for (int it = 0; it < 100000; ++it) {
            const Poly& f = nil_slice[pick_f(rng)];
            Poly g = decode(pick_g(rng));
            rep.jacobson_pairs_checked++;
            if (!is_unit_poly(A, D, poly_sub(A, one_poly, poly_mul(A, f, g)))) {
                rep.jacobson_unit_pass = false;
                rep.jacobson_unit_witnesses.push_back(
                    "f=" + poly_to_string(A, f, var) +
                    " g=" + poly_to_string(A, g, var));
            }
        }
    }
    std::sort(rep.jacobson_unit_witnesses.begin(),
              rep.jacobson_unit_witnesses.end());
    std::sort(rep.harmless_witnesses.begin(), rep.harmless_witnesses.end());
    return rep;
}

}  // namespace irrlab
