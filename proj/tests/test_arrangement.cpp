#include <catch_amalgamated.hpp>

#include <random>

#include "coxmono/arrangement.hpp"

using namespace coxmono;

TEST_CASE("forms are deduplicated up to scalar") {
    Arrangement a = Arrangement::from_forms(
        2, {{rat(1), rat(0)}, {rat(2), rat(0)}, {rat(-3), rat(0)}, {rat(0), rat(1)}});
    CHECK(a.forms.size() == 2);
    CHECK_THROWS_AS(Arrangement::from_forms(2, {{rat(0), rat(0)}}), std::invalid_argument);
}

TEST_CASE("intersection poset of the B2 arrangement") {
    Arrangement a = coxeter_arrangement(root_system(parse_type("B2")));
    IntersectionPoset p = intersection_poset(a);
    // V, four lines, the origin.
    REQUIRE(p.elements.size() == 6);
    CHECK(p.elements[0].mobius == 1);
    long long origin_mu = 0;
    int lines = 0;
    for (const auto& e : p.elements) {
        if (e.dim == 1) {
            ++lines;
            CHECK(e.mobius == -1);
        }
        if (e.dim == 0) origin_mu = e.mobius;
    }
    CHECK(lines == 4);
    CHECK(origin_mu == 3);
}

TEST_CASE("coxeter chamber counts equal the group order") {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "G2", "A1xA1", "A1xB2"}) {
        GroupType t = parse_type(name);
        CHECK(chamber_count(coxeter_arrangement(root_system(t))) == t.order());
    }
}

TEST_CASE("generic and degenerate small arrangements") {
    // n lines through the origin of the plane cut 2n chambers.
    Arrangement three = Arrangement::from_forms(
        2, {{rat(1), rat(0)}, {rat(0), rat(1)}, {rat(1), rat(1)}});
    CHECK(chamber_count(three) == 6);
    // A single hyperplane in any dimension cuts 2 chambers.
    Arrangement one = Arrangement::from_forms(3, {{rat(1), rat(2), rat(3)}});
    CHECK(chamber_count(one) == 2);
    // Three generic planes in space: 8 chambers.
    Arrangement planes = Arrangement::from_forms(
        3, {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}});
    CHECK(chamber_count(planes) == 8);
}

TEST_CASE("zaslavsky agrees with deletion restriction on random arrangements") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> dim_dist(1, 3), count_dist(1, 6), coef(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        int n = dim_dist(rng), m = count_dist(rng);
        std::vector<RationalVector> forms;
        for (int i = 0; i < m; ++i) {
            RationalVector f(n);
            bool nonzero = false;
            for (int j = 0; j < n; ++j) {
                f[j] = rat(coef(rng));
                nonzero |= (f[j] != 0);
            }
            if (nonzero) forms.push_back(f);
        }
        if (forms.empty()) continue;
        Arrangement a = Arrangement::from_forms(n, forms);
        CHECK(zaslavsky_chamber_count(a) ==
              deletion_restriction_chamber_count(a.dim, a.forms));
    }
}

TEST_CASE("quadric complement euler characteristic base cases") {
    // One line in the plane.
    Arrangement one = Arrangement::from_forms(2, {{rat(1), rat(0)}});
    CHECK(quadric_complement_euler(one, RationalMatrix::identity(2)) == -2);
    // One point on the affine conic in one variable.
    Arrangement pt = Arrangement::from_forms(1, {{rat(1)}});
    CHECK(quadric_complement_euler(pt, RationalMatrix::identity(1)) == 2);
}

TEST_CASE("euler characteristic equals signed chamber count under nondegeneracy") {
    std::mt19937 rng(991);
    std::uniform_int_distribution<int> dim_dist(1, 3), count_dist(1, 5), coef(-3, 3);
    int verified = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = dim_dist(rng), m = count_dist(rng);
        std::vector<RationalVector> forms;
        for (int i = 0; i < m; ++i) {
            RationalVector f(n);
            bool nonzero = false;
            for (int j = 0; j < n; ++j) {
                f[j] = rat(coef(rng));
                nonzero |= (f[j] != 0);
            }
            if (nonzero) forms.push_back(f);
        }
        if (forms.empty()) continue;
        Arrangement a = Arrangement::from_forms(n, forms);
        RationalMatrix gram = RationalMatrix::identity(n);
        if (!quadric_hypothesis_holds(a, gram)) continue;
        long long sign = (n % 2) ? 1 : -1;
        CHECK(quadric_complement_euler(a, gram) == sign * chamber_count(a));
        ++verified;
    }
    CHECK(verified > 50);
}

TEST_CASE("degenerate restriction is detected") {
    // q = x^2 - y^2 degenerates on the line x + y = 0.
    RationalMatrix gram(2, 2);
    gram(0, 0) = 1;
    gram(1, 1) = -1;
    Arrangement a = Arrangement::from_forms(2, {{rat(1), rat(1)}});
    CHECK_FALSE(quadric_hypothesis_holds(a, gram));
    CHECK_THROWS_AS(quadric_complement_euler(a, gram), std::domain_error);
    // The same line is fine for the definite form.
    CHECK(quadric_hypothesis_holds(a, RationalMatrix::identity(2)));
}

TEST_CASE("coxeter euler checks for small ranks") {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "G2", "A1xA1", "A1xA2"}) {
        GroupType t = parse_type(name);
        EulerCheckReport rep = coxeter_euler_checks(t);
        INFO(name);
        CHECK(rep.chi_ok);
        CHECK(rep.quotient_ok);
        CHECK(rep.chambers_ok);
        long long sign = (t.rank() % 2) ? 1 : -1;
        CHECK(rep.chi_B == sign * t.order());
    }
}

TEST_CASE("restriction to a hyperplane deletes one and restricts the rest") {
    // ch(A) = ch(A') + ch(A'') on the A3 arrangement, split by hand.
    Arrangement a = coxeter_arrangement(root_system(parse_type("A3")));
    std::vector<RationalVector> rest(a.forms.begin(), a.forms.end() - 1);
    RationalVector h = a.forms.back();
    RationalMatrix basis = form_kernel_basis(h);
    auto restricted = coxmono::detail::restrict_forms(rest, basis);
    CHECK(deletion_restriction_chamber_count(a.dim, a.forms) ==
          deletion_restriction_chamber_count(a.dim, rest) +
              deletion_restriction_chamber_count(a.dim - 1, restricted));
}
