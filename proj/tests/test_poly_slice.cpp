#include <catch2/catch_amalgamated.hpp>

#include "irrlab/poly_slice.hpp"
#include "irrlab/ring.hpp"
#include "irrlab/ringspec.hpp"

using namespace irrlab;

namespace {

FiniteRing ring_of(const char* text) { return build_ring(parse_ring_spec(text)); }

/// All canonical polynomials of degree <= d over A.
std::vector<Poly> polys_up_to(const FiniteRing& A, int d) {
    long long total = 1;
    for (int i = 0; i <= d; ++i) total *= A.order;
    std::vector<Poly> out;
    out.reserve(total);
    for (long long idx = 0; idx < total; ++idx) {
        long long v = idx;
        Poly f(d + 1);
        for (int i = 0; i <= d; ++i) {
            f[i] = static_cast<Elem>(v % A.order);
            v /= A.order;
        }
        out.push_back(poly_canon(std::move(f)));
    }
    return out;
}

/// Brute-force zero-divisor test: search for a nonzero cofactor of degree <= d.
bool zd_brute(const FiniteRing& A, const Poly& f, int d) {
    for (const Poly& g : polys_up_to(A, d)) {
        if (g.empty()) continue;
        if (poly_mul(A, f, g).empty()) return true;
    }
    return false;
}

/// Brute-force unit test: search for an inverse of degree <= d.
bool unit_brute(const FiniteRing& A, const Poly& f, int d) {
    Poly one{A.one};
    for (const Poly& g : polys_up_to(A, d))
        if (poly_mul(A, f, g) == one) return true;
    return false;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    FiniteRing z4 = make_cyclic(4);
    REQUIRE(poly_mul(z4, {2, 2}, {2}).empty());  // (2x+2)*2 = 0

    FiniteRing z2 = make_cyclic(2);
    REQUIRE(poly_mul(z2, {1, 1}, {1, 1}) == Poly{1, 0, 1});  // (x+1)^2 = x^2+1

    Poly f{3, 0, 2};
    REQUIRE(poly_add(z4, f, {}) == f);
    REQUIRE(poly_add(z4, f, poly_neg(z4, f)).empty());
    REQUIRE(poly_canon({1, 2, 0, 0}) == Poly{1, 2});
}

TEST_CASE("polynomial printing") {
    FiniteRing z4 = make_cyclic(4);
    REQUIRE(poly_to_string(z4, {}) == "0");
    REQUIRE(poly_to_string(z4, {2}) == "2");
    REQUIRE(poly_to_string(z4, {0, 1}) == "x");
    REQUIRE(poly_to_string(z4, {1, 2, 3}) == "1 + 2*x + 3*x^2");
    REQUIRE(poly_to_string(z4, {0, 0, 1}) == "x^2");
}

TEST_CASE("constant-annihilator zero-divisor criterion") {
    FiniteRing z4 = make_cyclic(4);
    auto w = zd_poly_witness(z4, {2, 2});
    REQUIRE(w.has_value());
    REQUIRE(*w == 2);
    REQUIRE_FALSE(is_zd_poly(z4, {0, 1}));  // c*x = 0 forces c = 0

    FiniteRing z2 = make_cyclic(2);
    for (const Poly& f : polys_up_to(z2, 2))
        if (!f.empty()) REQUIRE_FALSE(is_zd_poly(z2, f));  // Z_2[x] is a domain

    REQUIRE_THROWS_AS(zd_poly_witness(z4, {}), usage_error);
    REQUIRE_THROWS_AS(zd_poly_witness(z4, {0, 0}), usage_error);
}

TEST_CASE("unit criterion examples") {
    FiniteRing z4 = make_cyclic(4);
    REQUIRE(is_unit_poly(z4, {1, 2}));        // (1+2x)^2 = 1
    REQUIRE_FALSE(is_unit_poly(z4, {1, 1}));  // 1 not nilpotent in Z_4
    FiniteRing z2 = make_cyclic(2);
    REQUIRE(is_unit_poly(z2, {1}));
    REQUIRE_FALSE(is_unit_poly(z2, {}));
}

TEST_CASE("zd criterion agrees with bounded brute force") {
    for (const char* text :
         {"zn:2", "zn:3", "zn:4", "zn:5", "zn:6", "zn:7", "zn:8", "zn:9",
          "quot(zn:2,[0,0,1])", "quot(zn:2,[1,1,1])", "quot(zn:2,[0,1,1])",
          "prod(zn:2,zn:2)"}) {
        FiniteRing A = ring_of(text);
        CAPTURE(text);
        for (const Poly& f : polys_up_to(A, 2)) {
            if (f.empty()) continue;
            REQUIRE(is_zd_poly(A, f) == zd_brute(A, f, 2));
        }
    }
}

TEST_CASE("unit criterion agrees with bounded brute force") {
    for (const char* text : {"zn:2", "zn:3", "zn:4", "quot(zn:2,[0,0,1])",
                             "quot(zn:2,[1,1,1])"}) {
        FiniteRing A = ring_of(text);
        CAPTURE(text);
        for (const Poly& f : polys_up_to(A, 2))
            REQUIRE(is_unit_poly(A, f) == unit_brute(A, f, 4));
    }
}

TEST_CASE("bounded slice check over Z_4") {
    SliceReport rep = bounded_slice_check(make_cyclic(4), 2);
    REQUIRE(rep.examined == 64);
    REQUIRE(rep.zero_divisors == 7);
    REQUIRE(rep.harmless == 7);
    REQUIRE(rep.t_label == "2");
    REQUIRE(rep.all_pass());
}

TEST_CASE("bounded slice check over a domain is vacuous") {
    SliceReport rep = bounded_slice_check(make_cyclic(2), 3);
    REQUIRE(rep.zero_divisors == 0);
    REQUIRE(rep.all_pass());
}

TEST_CASE("bounded slice check over F_2[y]/(y^2)") {
    FiniteRing A = make_poly_quotient(2, {0, 0, 1}, "y");
    SliceReport rep = bounded_slice_check(A, 1);
    REQUIRE(rep.examined == 16);
    REQUIRE(rep.t_label == "y");
    // zero-divisor slice = nonzero multiples of y: y-coefficients only
    REQUIRE(rep.zero_divisors == 3);
    REQUIRE(rep.all_pass());
}

TEST_CASE("slice base admission checks") {
    REQUIRE_THROWS_AS(bounded_slice_check(make_cyclic(6), 2), usage_error);
    REQUIRE_THROWS_AS(bounded_slice_check(ring_of("prod(zn:2,zn:2)"), 2),
                      usage_error);
    REQUIRE_THROWS_AS(bounded_slice_check(make_cyclic(4), 0), usage_error);
    REQUIRE_THROWS_AS(bounded_slice_check(make_cyclic(4), 12), usage_error);
}
