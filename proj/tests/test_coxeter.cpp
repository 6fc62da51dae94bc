#include <catch_amalgamated.hpp>

#include "coxmono/coxeter.hpp"
#include "coxmono/group.hpp"
#include "coxmono/root_system.hpp"

using namespace coxmono;

TEST_CASE("degree tables") {
    CHECK(parse_type("A1").degrees() == std::vector<int>{2});
    CHECK(parse_type("A3").degrees() == std::vector<int>{2, 3, 4});
    CHECK(parse_type("B2").degrees() == std::vector<int>{2, 4});
    CHECK(parse_type("B3").degrees() == std::vector<int>{2, 4, 6});
    CHECK(parse_type("D4").degrees() == std::vector<int>{2, 4, 4, 6});
    CHECK(parse_type("F4").degrees() == std::vector<int>{2, 6, 8, 12});
    CHECK(parse_type("H3").degrees() == std::vector<int>{2, 6, 10});
    CHECK(parse_type("H4").degrees() == std::vector<int>{2, 12, 20, 30});
    CHECK(parse_type("G2").degrees() == std::vector<int>{2, 6});
    CHECK(parse_type("I2(7)").degrees() == std::vector<int>{2, 7});
    CHECK(parse_type("E6").degrees() == std::vector<int>{2, 5, 6, 8, 9, 12});
    CHECK(parse_type("E7").degrees() == std::vector<int>{2, 6, 8, 10, 12, 14, 18});
    CHECK(parse_type("E8").degrees() == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
}

TEST_CASE("order and reflection count from the degrees") {
    for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "E6", "E7", "E8",
                             "F4", "G2", "H3", "H4", "I2(5)", "I2(8)", "A1xA1", "A2xB2"}) {
        GroupType t = parse_type(name);
        long long prod = 1;
        int sum = 0;
        for (int d : t.degrees()) {
            prod *= d;
            sum += d - 1;
        }
        CHECK(t.order() == prod);
        CHECK(t.num_reflections() == sum);
    }
    CHECK(parse_type("A2").order() == 6);
    CHECK(parse_type("B2").order() == 8);
    CHECK(parse_type("F4").order() == 1152);
    CHECK(parse_type("E8").order() == 696729600);
    CHECK(parse_type("H3").order() == 120);
}

TEST_CASE("classification round trip") {
    for (const char* name : {"A1", "A2", "A5", "B2", "B3", "B6", "D4", "D5", "E6", "E7", "E8",
                             "F4", "G2", "H3", "H4", "I2(5)", "I2(9)", "A1xA1", "A2xA1",
                             "B2xA2", "H3xA1"}) {
        GroupType t = parse_type(name);
        CHECK(classify(diagram_of_type(t)) == t);
    }
}

TEST_CASE("dihedral aliases") {
    CHECK(parse_type("I2(3)").name() == "A2");
    CHECK(parse_type("I2(4)").name() == "B2");
    CHECK(parse_type("I2(6)").name() == "G2");
    CHECK(parse_type("G2") == parse_type("I2(6)"));
}

TEST_CASE("explicit edge lists classify") {
    CHECK(classify(parse_diagram("0-1:3,1-2:3")).name() == "A3");
    CHECK(classify(parse_diagram("0-1:3,1-2:4")).name() == "B3");
    CHECK(classify(parse_diagram("0-1:4,1-2:3")).name() == "B3");
    CHECK(classify(parse_diagram("0-1:3,1-2:4,2-3:3")).name() == "F4");
    CHECK(classify(parse_diagram("0-1:5,1-2:3")).name() == "H3");
    CHECK(classify(parse_diagram("0-1:3,1-2:3,1-3:3")).name() == "D4");
    CHECK(classify(parse_diagram("0-1:7")).name() == "I2(7)");
    // Isolated vertices are A1 factors.
    CHECK(classify(parse_diagram("1-2:3")).name() == "A1xA2");
}

TEST_CASE("vertex permutation invariance of classification") {
    // Same D4 star with a different centre label.
    CHECK(classify(parse_diagram("3-0:3,3-1:3,3-2:3")).name() == "D4");
    CHECK(classify(parse_diagram("2-0:4,2-1:3")).name() == "B3");
}

TEST_CASE("non finite diagrams are rejected") {
    CHECK_THROWS_AS(classify(parse_diagram("0-1:3,1-2:3,0-2:3")), std::invalid_argument);
    CHECK_THROWS_AS(classify(parse_diagram("0-1:5,1-2:3,2-3:3,3-4:3")), std::invalid_argument);
    CHECK_THROWS_AS(classify(parse_diagram("0-1:4,1-2:4")), std::invalid_argument);
    CHECK_THROWS_AS(classify(parse_diagram("0-1:6,1-2:3")), std::invalid_argument);
    CHECK_THROWS_AS(classify(parse_diagram("0-1:3,1-2:3,1-3:3,1-4:3")), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("E9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("D3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("Z4"), std::invalid_argument);
}

TEST_CASE("components and induced subdiagrams") {
    CoxeterDiagram d = parse_diagram("A2xA1");
    auto comps = d.connected_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2});
    CHECK(classify(d.induced(comps[0])).name() == "A2");

    CoxeterDiagram b3 = parse_diagram("B3");
    CoxeterDiagram sub = b3.induced({0, 1});
    CHECK(classify(sub).name() == "B2");
}

TEST_CASE("root counts match the reflection number") {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "D4", "F4", "G2", "A1xA1", "A2xB2"}) {
        GroupType t = parse_type(name);
        RootSystemData r = root_system(t);
        REQUIRE(r.exact);
        CHECK(static_cast<int>(r.roots.size()) == t.num_reflections());
        CHECK(r.num_hyperplanes() == t.num_reflections());
        CHECK(r.gram.det() != 0);
    }
    for (const char* name : {"H3", "H4", "I2(5)", "I2(7)"}) {
        GroupType t = parse_type(name);
        RootSystemData r = root_system(t);
        CHECK_FALSE(r.exact);
        CHECK(r.num_hyperplanes() == t.num_reflections());
    }
}

TEST_CASE("reflections preserve the form and permute the root lines") {
    for (const char* name : {"A2", "B2", "G2", "B3"}) {
        RootSystemData r = root_system(parse_type(name));
        for (const RationalVector& a : r.roots) {
            RationalMatrix s = reflection_matrix(a, r.gram);
            CHECK(s * s == RationalMatrix::identity(r.rank));
            CHECK(s.transpose() * r.gram * s == r.gram);
        }
    }
}

TEST_CASE("generated group orders") {
    CHECK(generate_group(root_system(parse_type("A1"))).size() == 2);
    CHECK(generate_group(root_system(parse_type("A2"))).size() == 6);
    CHECK(generate_group(root_system(parse_type("B2"))).size() == 8);
    CHECK(generate_group(root_system(parse_type("G2"))).size() == 12);
    CHECK(generate_group(root_system(parse_type("A1xA1"))).size() == 4);
    CHECK(generate_group(root_system(parse_type("B3"))).size() == 48);
}

TEST_CASE("Molien series reproduces the degree table") {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "G2", "A1xA1", "A1xA2"}) {
        GroupType t = parse_type(name);
        auto group = generate_group(root_system(t));
        CHECK(molien_degrees(group) == t.degrees());
    }
}

TEST_CASE("q polynomial is the gram quadratic form") {
    RootSystemData a1 = root_system(parse_type("A1"));
    MultiPoly x = MultiPoly::variable(1, 0);
    CHECK(a1.q_poly() == x * x);

    RootSystemData b2 = root_system(parse_type("B2"));
    MultiPoly u = MultiPoly::variable(2, 0), v = MultiPoly::variable(2, 1);
    CHECK(b2.q_poly() == u * u + v * v);

    // Invariance under every reflection.
    RootSystemData a2 = root_system(parse_type("A2"));
    MultiPoly q = a2.q_poly();
    for (const RationalVector& a : a2.roots)
        CHECK(q.compose_linear(reflection_matrix(a, a2.gram)) == q);
}
