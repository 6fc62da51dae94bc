#include <catch_amalgamated.hpp>

#include "coxmono/invariants.hpp"

using namespace coxmono;

namespace {

MultiPoly compose_basics(const MultiPoly& p, const std::vector<MultiPoly>& basics) {
    return p.compose(basics);
}

}  // namespace

TEST_CASE("reynolds averaging") {
    auto a1 = root_system(parse_type("A1"));
    auto ga1 = generate_group(a1);
    MultiPoly x = MultiPoly::variable(1, 0);
    CHECK(reynolds(x * x, ga1) == x * x);
    CHECK(reynolds(x, ga1).is_zero());

    auto b2 = root_system(parse_type("B2"));
    auto gb2 = generate_group(b2);
    MultiPoly u = MultiPoly::variable(2, 0), v = MultiPoly::variable(2, 1);
    CHECK(reynolds(u.pow(4), gb2) == (u.pow(4) + v.pow(4)) * rat(1, 2));
}

TEST_CASE("reynolds is a projection onto invariants") {
    auto r = root_system(parse_type("A2"));
    auto g = generate_group(r);
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    MultiPoly p = x.pow(3) + rat(2) * x * y;
    MultiPoly rp = reynolds(p, g);
    CHECK(reynolds(rp, g) == rp);
    for (const auto& m : g) CHECK(rp.compose_linear(m) == rp);
    // q is already invariant, hence fixed.
    CHECK(reynolds(r.q_poly(), g) == r.q_poly());
}

TEST_CASE("basic invariants start with q and carry the right degrees") {
    for (const char* name : {"A1", "A2", "B2", "B3", "G2", "A1xA1"}) {
        GroupType t = parse_type(name);
        InvariantPresentation pres = basic_invariants(t);
        INFO(name);
        REQUIRE(pres.basics.size() == t.degrees().size());
        CHECK(pres.basics[0] == pres.root_data.q_poly());
        CHECK(pres.degrees == t.degrees());
        for (size_t i = 0; i < pres.basics.size(); ++i) {
            CHECK(pres.basics[i].total_degree() == pres.degrees[i]);
            // Each basic is a genuine invariant.
            for (const auto& g : pres.group)
                CHECK(pres.basics[i].compose_linear(g) == pres.basics[i]);
        }
    }
}

TEST_CASE("invariantize simple cases") {
    InvariantPresentation a1 = basic_invariants(parse_type("A1"));
    MultiPoly x = MultiPoly::variable(1, 0);
    MultiPoly y1 = MultiPoly::variable(1, 0);  // quotient coordinate
    CHECK(invariantize(x * x, a1) == y1);
    CHECK(invariantize((x * x).pow(3), a1) == y1.pow(3));

    InvariantPresentation b2 = basic_invariants(parse_type("B2"));
    CHECK(invariantize(b2.root_data.q_poly().pow(2), b2) ==
          MultiPoly::variable(2, 0).pow(2));
}

TEST_CASE("invariantize against the classical basis of squares") {
    // Hand-built presentation: f1 = x^2 + y^2, f2 = x^2 y^2.
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    InvariantPresentation pres;
    pres.degrees = {2, 4};
    pres.basics = {x * x + y * y, x * x * y * y};
    MultiPoly delta = (x * x * y * y) * (x * x - y * y).pow(2);
    MultiPoly dt = invariantize(delta, pres);
    MultiPoly y1 = MultiPoly::variable(2, 0), y2 = MultiPoly::variable(2, 1);
    CHECK(dt == y2 * (y1 * y1 - rat(4) * y2));
}

TEST_CASE("invariantize rejects non members") {
    InvariantPresentation b2 = basic_invariants(parse_type("B2"));
    MultiPoly x = MultiPoly::variable(2, 0);
    CHECK_THROWS_AS(invariantize(x.pow(4), b2), std::domain_error);
    // Odd degree has no weighted monomials at all.
    CHECK_THROWS_AS(invariantize(x.pow(3), b2), std::domain_error);
}

TEST_CASE("discriminant polynomial") {
    RootSystemData a1 = root_system(parse_type("A1"));
    MultiPoly x1 = MultiPoly::variable(1, 0);
    CHECK(discriminant_poly(a1) == x1 * x1);

    RootSystemData b2 = root_system(parse_type("B2"));
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    CHECK(discriminant_poly(b2) ==
          (x * x) * (y * y) * (x - y).pow(2) * (x + y).pow(2));

    // Invariance of the discriminant: Reynolds fixes it.
    RootSystemData a2 = root_system(parse_type("A2"));
    MultiPoly d = discriminant_poly(a2);
    CHECK(reynolds(d, generate_group(a2)) == d);
    CHECK(d.total_degree() == 6);
}

TEST_CASE("discriminant round trip through the quotient") {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "G2", "A1xA1", "A1xA2", "A1xB2"}) {
        GroupType t = parse_type(name);
        InvariantPresentation pres = discriminant_in_invariants(t);
        INFO(name);
        REQUIRE(pres.has_delta);
        CHECK(compose_basics(pres.delta_tilde, pres.basics) ==
              discriminant_poly(pres.root_data));
    }
}

TEST_CASE("G2 discriminant has the right invariant weight") {
    InvariantPresentation g2 = discriminant_in_invariants(parse_type("G2"));
    // Weighted degree 12 in (y1 deg 2, y2 deg 6).
    for (const auto& [e, c] : g2.delta_tilde.terms())
        CHECK(e[0] * 2 + e[1] * 6 == 12);
    CHECK_FALSE(g2.delta_tilde.is_zero());
}

TEST_CASE("triangular basis change shifts the discriminant accordingly") {
    InvariantPresentation pres = discriminant_in_invariants(parse_type("B2"));
    // f2' = f2 + f1^2 keeps degrees and algebraic independence.
    InvariantPresentation moved = pres;
    moved.basics[1] = pres.basics[1] + pres.basics[0].pow(2);
    MultiPoly delta = discriminant_poly(pres.root_data);
    MultiPoly dt2 = invariantize(delta, moved);
    moved.delta_tilde = dt2;
    CHECK(compose_basics(dt2, moved.basics) == delta);
    // And the expected substitution relates the two expressions:
    // delta_tilde(y1, y2) = dt2(y1, y2 + y1^2).
    MultiPoly y1 = MultiPoly::variable(2, 0), y2 = MultiPoly::variable(2, 1);
    CHECK(dt2.compose({y1, y2 + y1 * y1}) == pres.delta_tilde);
}
