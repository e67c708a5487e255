#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace irrlab {

/// Index of an element in a ring's tables; canonical in [0, order).
using Elem = int;

struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A ring's own tables violate an axiom (table corruption, bad construction).
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxRingOrder = 256;

/**
 * A finite commutative ring with unity, stored as full operation tables.
 *
 * Elements are identified by index; labels give the human-readable form
 * ("3", "(1,0)", "x+1") used in all reports. Instances are immutable after
 * construction and safe to share across threads.
 */
struct FiniteRing {
    int order = 0;
    Elem zero = 0;
    Elem one = 0;
    std::vector<std::uint16_t> add_tab;  // order*order
    std::vector<std::uint16_t> mul_tab;  // order*order
    std::vector<std::uint16_t> neg_tab;  // order
    std::vector<std::string> labels;
    std::string spec;  // ring-spec text this ring was built from

    Elem add(Elem a, Elem b) const { return add_tab[a * order + b]; }
    Elem mul(Elem a, Elem b) const { return mul_tab[a * order + b]; }
    Elem neg(Elem a) const { return neg_tab[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    const std::string& label(Elem a) const { return labels[a]; }

    /// Index of the element with the given label, or -1.
    Elem find_label(const std::string& s) const {
        for (int i = 0; i < order; ++i)
            if (labels[i] == s) return i;
        return -1;
    }
};

namespace detail {

inline std::string poly_term_string(const std::string& coeff, int deg,
                                    const std::string& var) {
    if (deg == 0) return coeff;
    std::string x = deg == 1 ? var : var + "^" + std::to_string(deg);
    if (coeff == "1") return x;
    return coeff + "*" + x;
}

/// "c0 + c1*x + ..." with zero terms omitted; "0" for the zero polynomial.
inline std::string format_poly(const std::vector<std::string>& coeff_labels,
                               const std::vector<bool>& nonzero,
                               const std::string& var) {
    std::string out;
    for (size_t i = 0; i < coeff_labels.size(); ++i) {
        if (!nonzero[i]) continue;
        if (!out.empty()) out += " + ";
        out += poly_term_string(coeff_labels[i], static_cast<int>(i), var);
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

/// The integers mod n, Z_n. Rejects n < 2 (zero = one is excluded).
inline FiniteRing make_cyclic(int n) {
    if (n < 2) throw construction_error("trivial or empty ring: need order >= 2");
    if (n > kMaxRingOrder)
        throw construction_error("ring order exceeds cap of " +
                                 std::to_string(kMaxRingOrder));
    FiniteRing r;
    r.order = n;
    r.zero = 0;
    r.one = 1;
    r.add_tab.resize(n * n);
    r.mul_tab.resize(n * n);
    r.neg_tab.resize(n);
    r.labels.resize(n);
    for (int a = 0; a < n; ++a) {
        r.neg_tab[a] = static_cast<std::uint16_t>((n - a) % n);
        r.labels[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) {
            r.add_tab[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
            r.mul_tab[a * n + b] = static_cast<std::uint16_t>((a * b) % n);
        }
    }
    r.spec = "zn:" + std::to_string(n);
    return r;
}

/**
 * Direct product of the given rings, componentwise on tuples.
 *
 * Tuple (a_0,...,a_{k-1}) is encoded mixed-radix with factor 0 as the least
 * significant digit. Labels are "(a_0,...,a_{k-1})" built from factor labels.
 */
inline FiniteRing make_product(const std::vector<FiniteRing>& factors) {
    if (factors.empty())
        throw construction_error("product of an empty sequence of rings");
    long long n = 1;
    for (const auto& f : factors) {
        n *= f.order;
        if (n > kMaxRingOrder)
            throw construction_error("product order exceeds cap of " +
                                     std::to_string(kMaxRingOrder));
    }
    const int order = static_cast<int>(n);
    const int k = static_cast<int>(factors.size());

    auto decode = [&](int idx, std::vector<int>& out) {
        for (int i = 0; i < k; ++i) {
            out[i] = idx % factors[i].order;
            idx /= factors[i].order;
        }
    };
    auto encode = [&](const std::vector<int>& t) {
        int idx = 0;
        for (int i = k - 1; i >= 0; --i) idx = idx * factors[i].order + t[i];
        return idx;
    };

    FiniteRing r;
    r.order = order;
    r.zero = 0;
    r.add_tab.resize(order * order);
    r.mul_tab.resize(order * order);
    r.neg_tab.resize(order);
    r.labels.resize(order);

    std::vector<int> ta(k), tb(k), tc(k);
    for (int a = 0; a < order; ++a) {
        decode(a, ta);
        std::string lab = "(";
        for (int i = 0; i < k; ++i) {
            if (i) lab += ",";
            lab += factors[i].labels[ta[i]];
        }
        lab += ")";
        r.labels[a] = lab;
        for (int i = 0; i < k; ++i) tc[i] = factors[i].neg(ta[i]);
        r.neg_tab[a] = static_cast<std::uint16_t>(encode(tc));
        for (int b = 0; b < order; ++b) {
            decode(b, tb);
            for (int i = 0; i < k; ++i) tc[i] = factors[i].add(ta[i], tb[i]);
            r.add_tab[a * order + b] = static_cast<std::uint16_t>(encode(tc));
            for (int i = 0; i < k; ++i) tc[i] = factors[i].mul(ta[i], tb[i]);
            r.mul_tab[a * order + b] = static_cast<std::uint16_t>(encode(tc));
        }
    }

    std::vector<int> tone(k);
    for (int i = 0; i < k; ++i) tone[i] = factors[i].one;
    r.one = encode(tone);

    std::string spec = "prod(";
    for (int i = 0; i < k; ++i) {
        if (i) spec += ",";
        spec += factors[i].spec;
    }
    r.spec = spec + ")";
    return r;
}

/**
 * Z_n[x]/(m) for a monic modulus m, given little-endian over Z_n.
 *
 * Elements are coefficient vectors of degree < deg(m); order = n^deg(m).
 * Coefficients are reduced mod n; the leading coefficient must reduce to 1.
 */
inline FiniteRing make_poly_quotient(int n, std::vector<int> modulus,
                                     const std::string& var = "x") {
    if (n < 2) throw construction_error("trivial or empty ring: need modulus n >= 2");
    if (modulus.size() < 2)
        throw construction_error("quotient modulus must have degree >= 1");
    for (auto& c : modulus) c = ((c % n) + n) % n;
    if (modulus.back() != 1)
        throw construction_error("quotient modulus must be monic mod n");
    const int d = static_cast<int>(modulus.size()) - 1;

    long long ord = 1;
    for (int i = 0; i < d; ++i) {
        ord *= n;
        if (ord > kMaxRingOrder)
            throw construction_error("quotient order exceeds cap of " +
                                     std::to_string(kMaxRingOrder));
    }
    const int order = static_cast<int>(ord);

    auto decode = [&](int idx, std::vector<int>& c) {
        for (int i = 0; i < d; ++i) {
            c[i] = idx % n;
            idx /= n;
        }
    };
    auto encode = [&](const std::vector<int>& c) {
        int idx = 0;
        for (int i = d - 1; i >= 0; --i) idx = idx * n + c[i];
        return idx;
    };

    FiniteRing r;
    r.order = order;
    r.zero = 0;
    r.one = 1;  // constant polynomial 1
    r.add_tab.resize(order * order);
    r.mul_tab.resize(order * order);
    r.neg_tab.resize(order);
    r.labels.resize(order);

    std::vector<int> ca(d), cb(d), cc(d);
    std::vector<int> prod(2 * d - 1);
    for (int a = 0; a < order; ++a) {
        decode(a, ca);
        {
            std::vector<std::string> cl(d);
            std::vector<bool> nz(d);
            for (int i = 0; i < d; ++i) {
                cl[i] = std::to_string(ca[i]);
                nz[i] = ca[i] != 0;
            }
            r.labels[a] = detail::format_poly(cl, nz, var);
        }
        for (int i = 0; i < d; ++i) cc[i] = (n - ca[i]) % n;
        r.neg_tab[a] = static_cast<std::uint16_t>(encode(cc));
        for (int b = 0; b < order; ++b) {
            decode(b, cb);
            for (int i = 0; i < d; ++i) cc[i] = (ca[i] + cb[i]) % n;
            r.add_tab[a * order + b] = static_cast<std::uint16_t>(encode(cc));
            // multiply, then reduce by the monic modulus from the top down
            std::fill(prod.begin(), prod.end(), 0);
            for (int i = 0; i < d; ++i) {
                if (ca[i] == 0) continue;
                for (int j = 0; j < d; ++j)
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % n;
            }
            for (int kdeg = 2 * d - 2; kdeg >= d; --kdeg) {
                int c = prod[kdeg];
                if (c == 0) continue;
                prod[kdeg] = 0;
                for (int i = 0; i < d; ++i)
                    prod[kdeg - d + i] =
                        ((prod[kdeg - d + i] - c * modulus[i]) % n + n * n) % n;
            }
            for (int i = 0; i < d; ++i) cc[i] = prod[i];
            r.mul_tab[a * order + b] = static_cast<std::uint16_t>(encode(cc));
        }
    }

    std::string spec = "quot(zn:" + std::to_string(n) + ",[";
    for (size_t i = 0; i < modulus.size(); ++i) {
        if (i) spec += ",";
        spec += std::to_string(modulus[i]);
    }
    r.spec = spec + "])";
    return r;
}

/**
 * The basic derived subsets of a ring: U(R), Z(R), Nil(R), J(R), 1-U(R).
 *
 * Z(R) excludes 0 by convention, so integral domains have an empty
 * zero-divisor set. Each set is stored sorted, with a parallel membership
 * mask for O(1) queries.
 */
struct DerivedSets {
    std::vector<Elem> units, zero_divisors, nilradical, jacobson, one_minus_units;
    std::vector<char> unit_mask, zd_mask, nil_mask, jac_mask, omu_mask;

    bool is_unit(Elem e) const { return unit_mask[e] != 0; }
    bool is_zero_divisor(Elem e) const { return zd_mask[e] != 0; }
    bool is_nilpotent(Elem e) const { return nil_mask[e] != 0; }
    bool in_jacobson(Elem e) const { return jac_mask[e] != 0; }
    bool in_one_minus_units(Elem e) const { return omu_mask[e] != 0; }
};

inline DerivedSets derive_sets(const FiniteRing& R) {
    const int n = R.order;
    DerivedSets D;
    D.unit_mask.assign(n, 0);
    D.zd_mask.assign(n, 0);
    D.nil_mask.assign(n, 0);
    D.jac_mask.assign(n, 0);
    D.omu_mask.assign(n, 0);

    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            if (R.mul(r, s) == R.one) {
                D.unit_mask[r] = 1;
                break;
            }
        }
    }
    for (int r = 1; r < n; ++r) {
        for (int s = 1; s < n; ++s) {
            if (R.mul(r, s) == R.zero) {
                D.zd_mask[r] = 1;
                break;
            }
        }
    }
    for (int r = 0; r < n; ++r) {
        Elem p = r;
        for (int k = 1; k <= n; ++k) {
            if (p == R.zero) {
                D.nil_mask[r] = 1;
                break;
            }
            p = R.mul(p, r);
        }
    }
    // x in J(R) iff 1 - x*y is a unit for every y
    for (int x = 0; x < n; ++x) {
        bool in_j = true;
        for (int y = 0; y < n && in_j; ++y)
            if (!D.unit_mask[R.sub(R.one, R.mul(x, y))]) in_j = false;
        D.jac_mask[x] = in_j ? 1 : 0;
    }
    for (int u = 0; u < n; ++u)
        if (D.unit_mask[u]) D.omu_mask[R.sub(R.one, u)] = 1;

    for (int e = 0; e < n; ++e) {
        if (D.unit_mask[e]) D.units.push_back(e);
        if (D.zd_mask[e]) D.zero_divisors.push_back(e);
        if (D.nil_mask[e]) D.nilradical.push_back(e);
        if (D.jac_mask[e]) D.jacobson.push_back(e);
        if (D.omu_mask[e]) D.one_minus_units.push_back(e);
    }
    return D;
}

/// True iff the non-units form an ideal, i.e. R has a unique maximal ideal.
/// In a finite ring it suffices that non-units are closed under addition.
inline bool is_local(const FiniteRing& R, const DerivedSets& D) {
    const int n = R.order;
    for (int a = 0; a < n; ++a) {
        if (D.unit_mask[a]) continue;
        for (int b = 0; b < n; ++b) {
            if (D.unit_mask[b]) continue;
            if (D.unit_mask[R.add(a, b)]) return false;
        }
    }
    return true;
}

inline bool is_local(const FiniteRing& R) { return is_local(R, derive_sets(R)); }

/**
 * Check all commutative-ring-with-unity axioms on R's tables.
 *
 * Orders <= 64 are checked on every triple; larger rings on all pairs plus
 * 10^4 deterministic pseudorandom triples. Throws invariant_error naming the
 * first failure.
 */
inline void validate_ring(const FiniteRing& R) {
    const int n = R.order;
    auto fail = [&](const std::string& what) {
        throw invariant_error("ring axiom violated in " +
                              (R.spec.empty() ? std::string("<unnamed>") : R.spec) +
                              ": " + what);
    };
    if (n < 2) fail("order < 2");
    if (R.zero == R.one) fail("zero equals one");
    if (static_cast<int>(R.add_tab.size()) != n * n ||
        static_cast<int>(R.mul_tab.size()) != n * n ||
        static_cast<int>(R.neg_tab.size()) != n ||
        static_cast<int>(R.labels.size()) != n)
        fail("table size mismatch");
    for (int a = 0; a < n; ++a) {
        if (R.neg_tab[a] >= n) fail("negation out of range");
        if (R.add(a, R.zero) != a) fail("zero is not an additive identity");
        if (R.add(a, R.neg(a)) != R.zero) fail("negation is not an additive inverse");
        if (R.mul(a, R.one) != a) fail("one is not a multiplicative identity");
        for (int b = 0; b < n; ++b) {
            if (R.add_tab[a * n + b] >= n || R.mul_tab[a * n + b] >= n)
                fail("operation out of range");
            if (R.add(a, b) != R.add(b, a)) fail("addition not commutative");
            if (R.mul(a, b) != R.mul(b, a)) fail("multiplication not commutative");
        }
    }
    auto check_triple = [&](int a, int b, int c) {
        if (R.add(R.add(a, b), c) != R.add(a, R.add(b, c)))
            fail("addition not associative");
        if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
            fail("multiplication not associative");
        if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c)))
            fail("multiplication does not distribute over addition");
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 10000; ++t)
            check_triple(pick(rng), pick(rng), pick(rng));
    }
}

}  // namespace irrlab
