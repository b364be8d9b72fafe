#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ecgr/perm.hpp"

using namespace ecgr;

TEST_CASE("identity permutation") {
  Permutation id(4);
  CHECK(id.degree() == 4);
  CHECK(id.is_identity());
  CHECK(id.cycles() == "()");
  for (Point x = 0; x < 4; ++x)
    CHECK(id(x) == x);
  CHECK_THROWS_AS(Permutation(0u), Error);
}

TEST_CASE("image table constructor validates bijections") {
  Permutation p(std::vector<Point>{1, 2, 0});
  CHECK(p(0) == 1);
  CHECK(p(1) == 2);
  CHECK(p(2) == 0);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3, 1}), Error);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{}), Error);
}

TEST_CASE("cycle notation parsing") {
  CHECK(Permutation::parse_cycles("(0 1 2)", 3).images() ==
        std::vector<Point>{1, 2, 0});
  CHECK(Permutation::parse_cycles("(1 2 4)(3 6 5)", 7).images() ==
        std::vector<Point>{0, 2, 4, 6, 1, 3, 5});
  CHECK(Permutation::parse_cycles("()", 3).is_identity());
  CHECK(Permutation::parse_cycles("", 3).is_identity());
  CHECK(Permutation::parse_cycles("(0, 1, 2)", 3).images() ==
        std::vector<Point>{1, 2, 0});

  CHECK_THROWS_AS(Permutation::parse_cycles("(0 3)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 1)(1 2)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 1", 3), ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles("abc", 3), ParseError);
}

TEST_CASE("cycle notation round trip") {
  for (const char* text : {"(0 1 2)", "(1 2 4)(3 6 5)", "(0 6)(2 4)", "()"}) {
    Permutation p = Permutation::parse_cycles(text, 7);
    CHECK(Permutation::parse_cycles(p.cycles(), 7) == p);
  }
  CHECK(Permutation::parse_cycles("(2 1 4)(6 5 3)", 7).cycles() ==
        "(1 4 2)(3 6 5)");
}

TEST_CASE("composition applies the right factor first") {
  // Hand evaluation: applying (1 2) first sends 0->0, 1->2, 2->1; applying
  // (0 1) after gives 0->1, 1->2, 2->0, i.e. the 3-cycle (0 1 2).
  Permutation p = Permutation::parse_cycles("(0 1)", 3);
  Permutation q = Permutation::parse_cycles("(1 2)", 3);
  Permutation r = compose(p, q);
  CHECK(r.images() == std::vector<Point>{1, 2, 0});
  CHECK(r.cycles() == "(0 1 2)");
  for (Point x = 0; x < 3; ++x)
    CHECK(r(x) == p(q(x)));
  CHECK((p * q) == r);
  CHECK(compose(q, p).cycles() == "(0 2 1)"); // not commutative

  CHECK_THROWS_AS(compose(p, Permutation(4)), Error);
}

TEST_CASE("inverse") {
  Permutation p = Permutation::parse_cycles("(0 1 2 3 4)(5 6)", 7);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p.inverse(), p).is_identity());
  CHECK(p.inverse().cycles() == "(0 4 3 2 1)(5 6)");
}

TEST_CASE("three-cycle generates a group of order 3") {
  PermGroup g = generate({Permutation::parse_cycles("(0 1 2)", 3)});
  CHECK(g.order() == 3);
  CHECK(g.degree() == 3);
  CHECK(g.contains(Permutation(3)));
  CHECK(g.contains(Permutation::parse_cycles("(0 2 1)", 3)));
  CHECK_FALSE(g.contains(Permutation::parse_cycles("(0 1)", 3)));
}

TEST_CASE("elements are sorted and deterministic") {
  PermGroup s3 = generate({Permutation::parse_cycles("(0 1)", 3),
                           Permutation::parse_cycles("(0 1 2)", 3)});
  CHECK(s3.order() == 6);
  const auto& elems = s3.elements();
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK(elems.front().is_identity());
  PermGroup again = generate({Permutation::parse_cycles("(0 1 2)", 3),
                              Permutation::parse_cycles("(1 2)", 3)});
  CHECK(again.elements() == elems);
  CHECK(again.same_group_as(s3));
}

TEST_CASE("from_elements round trip") {
  PermGroup s3 = generate({Permutation::parse_cycles("(0 1)", 3),
                           Permutation::parse_cycles("(0 1 2)", 3)});
  PermGroup rebuilt = PermGroup::from_elements(3, s3.elements());
  CHECK(rebuilt.same_group_as(s3));
  CHECK(rebuilt.generators().size() <= 2);

  std::vector<Permutation> no_id{Permutation::parse_cycles("(0 1)", 3)};
  CHECK_THROWS_AS(PermGroup::from_elements(3, no_id), Error);
}

TEST_CASE("element cap raises a budget error") {
  PermGroup s8 = generate({Permutation::parse_cycles("(0 1)", 8),
                           Permutation::parse_cycles("(0 1 2 3 4 5 6 7)", 8)},
                          100);
  CHECK_THROWS_AS(s8.elements(), BudgetError);
}

TEST_CASE("orbits and transitivity") {
  PermGroup g = generate({Permutation::parse_cycles("(0 1)", 3)});
  CHECK(g.orbits() == std::vector<std::vector<Point>>{{0, 1}, {2}});
  CHECK_FALSE(g.is_transitive());
  CHECK_FALSE(g.is_regular());

  PermGroup c4 = generate({Permutation::parse_cycles("(0 1 2 3)", 4)});
  CHECK(c4.is_transitive());
  CHECK(c4.is_regular());
  CHECK(c4.is_abelian());

  PermGroup s3 = generate({Permutation::parse_cycles("(0 1)", 3),
                           Permutation::parse_cycles("(0 1 2)", 3)});
  CHECK(s3.is_transitive());
  CHECK_FALSE(s3.is_regular());
  CHECK_FALSE(s3.is_abelian());

  CHECK(PermGroup::identity(5).orbits().size() == 5);
}

TEST_CASE("direct product grid action") {
  PermGroup c2 = generate({Permutation::parse_cycles("(0 1)", 2)});
  PermGroup c3 = generate({Permutation::parse_cycles("(0 1 2)", 3)});
  PermGroup prod = direct_product(c2, c3);
  CHECK(prod.degree() == 6);
  CHECK(prod.order() == 6);
  CHECK(prod.is_abelian());

  // Point (x, y) is x * 3 + y; the left factor moves the x coordinate.
  Permutation left_gen = Permutation::parse_cycles("(0 3)(1 4)(2 5)", 6);
  Permutation right_gen = Permutation::parse_cycles("(0 1 2)(3 4 5)", 6);
  CHECK(prod.contains(left_gen));
  CHECK(prod.contains(right_gen));

  SUBCASE("degree-1 factors short-circuit") {
    PermGroup one = PermGroup::identity(1);
    CHECK(direct_product(one, c3).same_group_as(c3));
    CHECK(direct_product(c3, one).same_group_as(c3));
  }

  SUBCASE("degree limit") {
    PermGroup c8 = generate({Permutation::parse_cycles("(0 1 2 3 4 5 6 7)", 8)});
    CHECK_THROWS_AS(direct_product(c8, c8, 63), BudgetError);
  }

  SUBCASE("product order multiplies") {
    PermGroup s3 = generate({Permutation::parse_cycles("(0 1)", 3),
                             Permutation::parse_cycles("(0 1 2)", 3)});
    CHECK(direct_product(s3, s3).order() == 36);
  }
}

TEST_CASE("generate requires generators") {
  CHECK_THROWS_AS(generate({}), Error);
}
