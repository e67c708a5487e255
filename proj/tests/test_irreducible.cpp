#include <map>

#include <catch2/catch_amalgamated.hpp>

#include "irrlab/classify.hpp"
#include "irrlab/ring.hpp"
#include "irrlab/ringspec.hpp"

using namespace irrlab;

namespace {

FiniteRing ring_of(const char* text) { return build_ring(parse_ring_spec(text)); }

}  // namespace

TEST_CASE("classical irreducibility") {
    FiniteRing z6 = make_cyclic(6);
    DerivedSets d6 = derive_sets(z6);
    REQUIRE_FALSE(is_irreducible(z6, d6, 3));  // 3 = 3*3, no unit factor
    REQUIRE(is_irreducible(z6, d6, 5));        // units are (raw) irreducible

    FiniteRing z4 = make_cyclic(4);
    REQUIRE(is_irreducible(z4, derive_sets(z4), 2));
}

TEST_CASE("B-irreducibility") {
    FiniteRing z6 = make_cyclic(6);
    DerivedSets d6 = derive_sets(z6);
    REQUIRE(is_b_irreducible(z6, d6, 3));
    REQUIRE_FALSE(is_b_irreducible(z6, d6, 5));  // unit
    REQUIRE_FALSE(is_b_irreducible(z6, d6, 0));

    FiniteRing p22 = ring_of("prod(zn:2,zn:2)");
    DerivedSets dp = derive_sets(p22);
    Elem e10 = p22.find_label("(1,0)");
    REQUIRE(e10 >= 0);
    REQUIRE(is_b_irreducible(p22, dp, e10));
}

TEST_CASE("F-irreducibility, binary characterization") {
    FiniteRing z6 = make_cyclic(6);
    DerivedSets d6 = derive_sets(z6);
    REQUIRE(is_f_irreducible(z6, d6, 3));
    REQUIRE(is_f_irreducible(z6, d6, 2));
    REQUIRE_FALSE(is_f_irreducible(z6, d6, 5));  // units excluded by definition
    REQUIRE_FALSE(is_f_irreducible(z6, d6, 0));  // 0 = 2*3 with 2,3 not in (0)

    // in a field, every factorization of 0 has a zero factor
    FiniteRing z2 = make_cyclic(2);
    REQUIRE(is_f_irreducible(z2, derive_sets(z2), 0));
}

TEST_CASE("harmless zero divisors") {
    FiniteRing z6 = make_cyclic(6);
    DerivedSets d6 = derive_sets(z6);
    REQUIRE(is_harmless_zd(z6, d6, 2));        // 2 = 1 - 5
    REQUIRE_FALSE(is_harmless_zd(z6, d6, 3));  // 1 - 3 = 4 is not a unit

    FiniteRing z5 = make_cyclic(5);
    DerivedSets d5 = derive_sets(z5);
    for (int r = 0; r < 5; ++r) REQUIRE_FALSE(is_harmless_zd(z5, d5, r));

    FiniteRing z4 = make_cyclic(4);
    REQUIRE(has_only_harmless_zds(z4, derive_sets(z4)));
    REQUIRE_FALSE(has_only_harmless_zds(z6, d6));
    FiniteRing z7 = make_cyclic(7);
    REQUIRE(has_only_harmless_zds(z7, derive_sets(z7)));
}

TEST_CASE("classify_element bundles") {
    FiniteRing z6 = make_cyclic(6);
    ClassificationRecord c = classify_element(z6, 3);
    REQUIRE(c.is_zero_divisor);
    REQUIRE_FALSE(c.is_harmless_zd);
    REQUIRE_FALSE(c.irr);
    REQUIRE(c.b_irr);
    REQUIRE(c.f_irr);

    FiniteRing z4 = make_cyclic(4);
    ClassificationRecord c2 = classify_element(z4, 2);
    REQUIRE(c2.irr);
    REQUIRE(c2.b_irr);
    REQUIRE(c2.f_irr);

    FiniteRing p22 = ring_of("prod(zn:2,zn:2)");
    ClassificationRecord c3 = classify_element(p22, p22.find_label("(1,0)"));
    REQUIRE_FALSE(c3.irr);  // (1,0)*(1,0) = (1,0), no unit factor
    REQUIRE(c3.b_irr);
    REQUIRE(c3.f_irr);
}

TEST_CASE("classify_ring agrees with classify_element") {
    for (const char* text :
         {"zn:6", "zn:8", "prod(zn:2,zn:3)", "quot(zn:2,[0,1,1])"}) {
        FiniteRing R = ring_of(text);
        DerivedSets D = derive_sets(R);
        auto records = classify_ring(R, D);
        CAPTURE(text);
        for (int r = 0; r < R.order; ++r) {
            ClassificationRecord one = classify_element(R, D, r);
            REQUIRE(records[r].flags() == one.flags());
        }
    }
}

TEST_CASE("unit exclusion across the classification") {
    for (const char* text : {"zn:9", "zn:12", "prod(zn:2,zn:4)"}) {
        FiniteRing R = ring_of(text);
        for (const auto& c : classify_ring(R)) {
            if (!c.is_unit) continue;
            REQUIRE(c.irr);  // raw classical predicate is true on units
            REQUIRE_FALSE(c.b_irr);
            REQUIRE_FALSE(c.f_irr);
        }
    }
}

TEST_CASE("record invariants hold everywhere") {
    for (const auto& spec : builtin_catalog()) {
        FiniteRing R = build_ring(spec);
        CAPTURE(R.spec);
        for (const auto& c : classify_ring(R)) {
            if (c.is_harmless_zd) REQUIRE(c.is_zero_divisor);
            if (c.b_irr) {
                REQUIRE_FALSE(c.is_zero);
                REQUIRE_FALSE(c.is_unit);
            }
            if (c.f_irr) REQUIRE_FALSE(c.is_unit);
        }
    }
}

TEST_CASE("refinement oracle examples and bounds") {
    FiniteRing z6 = make_cyclic(6);
    REQUIRE(is_f_irreducible_refinement(z6, 3, 3));
    REQUIRE_THROWS_AS(is_f_irreducible_refinement(z6, 5, 3), usage_error);

    FiniteRing z4 = make_cyclic(4);
    REQUIRE(is_f_irreducible_refinement(z4, 2, 4));

    REQUIRE_THROWS_AS(is_f_irreducible_refinement(make_cyclic(13), 2, 3),
                      usage_error);
    REQUIRE_THROWS_AS(is_f_irreducible_refinement(z6, 2, 5), usage_error);
    REQUIRE_THROWS_AS(is_f_irreducible_refinement(z6, 2, 1), usage_error);
}

TEST_CASE("refinement oracle matches the binary characterization") {
    for (const char* text : {"zn:6", "zn:8", "zn:10", "zn:12",
                             "prod(zn:2,zn:2)", "prod(zn:2,zn:3)",
                             "quot(zn:2,[0,0,1])", "quot(zn:2,[1,1,1])"}) {
        FiniteRing R = ring_of(text);
        DerivedSets D = derive_sets(R);
        CAPTURE(text);
        for (int r = 0; r < R.order; ++r) {
            if (D.is_unit(r)) continue;
            REQUIRE(is_f_irreducible_refinement(R, r, 4) ==
                    is_f_irreducible(R, D, r));
        }
    }
}

TEST_CASE("flag multiset of Z_6 equals that of Z_2 x Z_3") {
    auto multiset = [](const FiniteRing& R) {
        std::map<std::array<bool, 7>, int> m;
        for (const auto& c : classify_ring(R)) m[c.flags()]++;
        return m;
    };
    REQUIRE(multiset(make_cyclic(6)) == multiset(ring_of("prod(zn:2,zn:3)")));
}
