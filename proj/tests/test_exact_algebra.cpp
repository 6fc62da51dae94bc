#include <catch_amalgamated.hpp>

#include "coxmono/multipoly.hpp"
#include "coxmono/rational.hpp"

using namespace coxmono;

TEST_CASE("rational construction canonicalizes") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat(1, -2) == rat(-1, 2));
    CHECK(to_string(rat(-3, 6)) == "-1/2");
    CHECK(to_double(rat(1, 4)) == 0.25);
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("matrix determinant and rank") {
    RationalMatrix m(2, 2);
    m(0, 0) = 1; m(0, 1) = 2; m(1, 0) = 3; m(1, 1) = 4;
    CHECK(m.det() == rat(-2));
    CHECK(matrix_rank(m) == 2);

    RationalMatrix s(2, 2);
    s(0, 0) = 1; s(0, 1) = 2; s(1, 0) = 2; s(1, 1) = 4;
    CHECK(s.det() == 0);
    CHECK(matrix_rank(s) == 1);

    CHECK(RationalMatrix::identity(3).det() == 1);
}

TEST_CASE("matrix inverse round trip") {
    RationalMatrix m(2, 2);
    m(0, 0) = 2; m(0, 1) = -1; m(1, 0) = -1; m(1, 1) = 2;
    RationalMatrix inv = inverse(m);
    CHECK(m * inv == RationalMatrix::identity(2));
    RationalMatrix s(2, 2);
    s(0, 0) = 1; s(0, 1) = 1; s(1, 0) = 1; s(1, 1) = 1;
    CHECK_THROWS_AS(inverse(s), std::domain_error);
}

TEST_CASE("linear solver distinguishes outcomes") {
    RationalMatrix a(2, 2);
    a(0, 0) = 1; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = -1;
    auto r = solve_linear(a, {rat(3), rat(1)});
    REQUIRE(r.status == LinSolveStatus::Unique);
    CHECK(r.solution == RationalVector{rat(2), rat(1)});

    RationalMatrix b(2, 2);
    b(0, 0) = 1; b(0, 1) = 1; b(1, 0) = 2; b(1, 1) = 2;
    CHECK(solve_linear(b, {rat(1), rat(3)}).status == LinSolveStatus::Inconsistent);
    CHECK(solve_linear(b, {rat(1), rat(2)}).status == LinSolveStatus::Underdetermined);
}

TEST_CASE("overdetermined consistent system solves") {
    RationalMatrix a(3, 2);
    a(0, 0) = 1; a(1, 1) = 1; a(2, 0) = 1; a(2, 1) = 1;
    auto r = solve_linear(a, {rat(2), rat(5), rat(7)});
    REQUIRE(r.status == LinSolveStatus::Unique);
    CHECK(r.solution == RationalVector{rat(2), rat(5)});
}

TEST_CASE("form kernel basis annihilates the form") {
    RationalVector f{rat(2), rat(-3), rat(1)};
    RationalMatrix b = form_kernel_basis(f);
    REQUIRE(b.rows() == 3);
    REQUIRE(b.cols() == 2);
    for (int c = 0; c < 2; ++c) {
        Rational dot(0);
        for (int i = 0; i < 3; ++i) dot += f[i] * b(i, c);
        CHECK(dot == 0);
    }
    CHECK(matrix_rank(b) == 2);
}

TEST_CASE("polynomial arithmetic") {
    MultiPoly x = MultiPoly::variable(2, 0);
    MultiPoly y = MultiPoly::variable(2, 1);
    MultiPoly p = (x + y) * (x - y);
    MultiPoly q = x * x - y * y;
    CHECK(p == q);
    CHECK(p.total_degree() == 2);
    CHECK((p - q).is_zero());
    CHECK(p.eval({rat(3), rat(2)}) == rat(5));
}

TEST_CASE("polynomial powers and binomial identity") {
    MultiPoly x = MultiPoly::variable(2, 0);
    MultiPoly y = MultiPoly::variable(2, 1);
    MultiPoly lhs = (x + y).pow(3);
    MultiPoly rhs = x.pow(3) + rat(3) * x * x * y + rat(3) * x * y * y + y.pow(3);
    CHECK(lhs == rhs);
    CHECK((x + y).pow(0) == MultiPoly::constant(2, rat(1)));
}

TEST_CASE("derivative and composition") {
    MultiPoly x = MultiPoly::variable(1, 0);
    MultiPoly p = x.pow(3) + rat(2) * x;
    CHECK(p.derivative(0) == rat(3) * x * x + MultiPoly::constant(1, rat(2)));

    // p(x^2 + 1) expanded two ways.
    MultiPoly inner = x * x + MultiPoly::constant(1, rat(1));
    MultiPoly composed = p.compose({inner});
    CHECK(composed == inner.pow(3) + rat(2) * inner);
}

TEST_CASE("linear substitution matches matrix action") {
    MultiPoly x = MultiPoly::variable(2, 0);
    MultiPoly y = MultiPoly::variable(2, 1);
    MultiPoly p = x * x + x * y;
    RationalMatrix g(2, 2);
    g(0, 0) = 0; g(0, 1) = 1; g(1, 0) = 1; g(1, 1) = 0;  // swap
    CHECK(p.compose_linear(g) == y * y + y * x);
}

TEST_CASE("linear form evaluation") {
    MultiPoly l = MultiPoly::linear_form({rat(1), rat(-2)});
    CHECK(l.eval({rat(5), rat(2)}) == rat(1));
    CHECK(l.total_degree() == 1);
}

TEST_CASE("zero coefficients never stored") {
    MultiPoly x = MultiPoly::variable(1, 0);
    MultiPoly p = x - x;
    CHECK(p.term_count() == 0);
    p.add_term({2}, rat(1));
    p.add_term({2}, rat(-1));
    CHECK(p.is_zero());
}
