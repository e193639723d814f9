#include <catch2/catch_amalgamated.hpp>

#include "forca/forca.hpp"
#include "support/gens.hpp"

using namespace forca;

namespace {

RingPtr<Rationals> qring(std::vector<std::string> vars) {
  return make_ring(Rationals{}, std::move(vars));
}

}  // namespace

TEST_CASE("parsing produces canonical sparse form", "[poly][parse]") {
  auto r = qring({"x", "y"});
  auto p = parse_polynomial("x^2*y + 3", r);
  REQUIRE(p.term_count() == 2);
  CHECK(p.str() == "x^2*y + 3");

  CHECK(parse_polynomial("0", r).is_zero());
  CHECK(parse_polynomial("x - x", r).is_zero());

  auto r5 = qring({"x", "y", "u", "v", "z"});
  auto q = parse_polynomial("x*v + y*u + z*(z-1)", r5);
  auto expected = parse_polynomial("x*v + y*u + z^2 - z", r5);
  CHECK(q == expected);

  // parse-print-parse is the identity
  CHECK(parse_polynomial(q.str(), r5) == q);
  auto messy = parse_polynomial("-(x - 2*y)^3 + 1/2*x*y", r);
  CHECK(parse_polynomial(messy.str(), r) == messy);
}

TEST_CASE("parse errors carry positions and reasons", "[poly][parse]") {
  auto r = qring({"x", "y"});
  CHECK_THROWS_AS(parse_polynomial("x + + y", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x*", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x+y", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x + w", r), ParseError);
  try {
    parse_polynomial("x + w", r);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
  }

  auto f2 = make_ring(PrimeField(2), {"x"});
  CHECK_THROWS_AS(parse_polynomial("1/2*x", f2), ParseError);
  CHECK(parse_polynomial("1/3", make_ring(PrimeField(7), std::vector<std::string>{"x"})).str() == "5");
}

TEST_CASE("arithmetic identities", "[poly][arith]") {
  auto r = qring({"x", "y"});
  auto f = parse_polynomial("x^3 - 2*x*y + 7", r);
  CHECK(f + Polynomial<Rationals>::zero(r) == f);
  CHECK(parse_polynomial("(x+y)*(x-y)", r) == parse_polynomial("x^2 - y^2", r));

  auto r5 = qring({"x", "y", "u", "v", "z"});
  auto sq = parse_polynomial("x*v + y*u", r5).pow(2);
  CHECK(sq == parse_polynomial("x^2*v^2 + 2*x*v*y*u + y^2*u^2", r5));
  CHECK(parse_polynomial("x", r).pow(0).is_one());

  auto other = qring({"z"});
  CHECK_THROWS_AS(f + parse_polynomial("z", other), RingMismatchError);
}

TEST_CASE("evaluation", "[poly][eval]") {
  auto r = qring({"x", "y"});
  // x^0 y^0 at the origin is 1
  std::vector<Rationals::Elem> origin = {0, 0};
  CHECK(parse_polynomial("1", r).evaluate(origin) == 1);
  CHECK(Polynomial<Rationals>::zero(r).evaluate(origin) == 0);

  auto f7 = make_ring(PrimeField(7), {"x", "y"});
  auto g = parse_polynomial("x^2*y + 3", f7);
  std::vector<PrimeField::Elem> p = {2, 5};
  CHECK(g.evaluate(p) == 2);  // 4*5 + 3 = 23 = 2 mod 7
}

TEST_CASE("partial derivatives", "[poly][diff]") {
  auto r5 = qring({"x", "y", "z", "u", "v"});
  auto g = parse_polynomial("x*v + y*u + z*(z-1)", r5);
  CHECK(g.derivative(0) == parse_polynomial("v", r5));
  CHECK(g.derivative(1) == parse_polynomial("u", r5));
  CHECK(g.derivative(2) == parse_polynomial("2*z - 1", r5));
  CHECK(g.derivative(3) == parse_polynomial("y", r5));
  CHECK(g.derivative(4) == parse_polynomial("x", r5));
  CHECK(parse_polynomial("5", r5).derivative(0).is_zero());
}

TEST_CASE("weighted degrees and gradings", "[poly][grading]") {
  auto r = qring({"X", "Y", "Z"});
  Grading w{{{21}, {14}, {6}}};
  auto f = parse_polynomial("X^2 + Y^3 + Z^7", r);
  auto d = weighted_degree(f, w);
  REQUIRE(d.has_value());
  CHECK(*d == std::vector<std::int64_t>{42});

  auto r5 = qring({"x", "y", "u", "v", "z"});
  Grading big{{{1, 0}, {0, 1}, {0, -1}, {-1, 0}, {0, 0}}};
  auto basic = parse_polynomial("x*v + y*u + z^2 - z", r5);
  auto bd = weighted_degree(basic, big);
  REQUIRE(bd.has_value());
  CHECK(*bd == std::vector<std::int64_t>{0, 0});

  Grading ones{{{1}, {1}, {1}}};
  CHECK_FALSE(weighted_degree(parse_polynomial("X + Y^2", r), ones).has_value());
  CHECK_THROWS_AS(weighted_degree(Polynomial<Rationals>::zero(r), ones),
                  std::domain_error);
}

TEST_CASE("canonical form uniqueness", "[poly][property]") {
  auto f7 = make_ring(PrimeField(7), {"x", "y", "z"});
  auto& eng = testgen::rng();
  for (int i = 0; i < 200; ++i) {
    auto a = testgen::random_poly(f7, eng);
    auto b = testgen::random_poly(f7, eng);
    auto left = a + b, right = b + a;
    CHECK(left == right);
    CHECK(left.str() == right.str());
    if (!left.is_zero()) {
      // strictly descending monomials, no zero coefficients
      for (std::size_t t = 1; t < left.terms().size(); ++t)
        CHECK(f7->order.compare(left.terms()[t - 1].mono, left.terms()[t].mono) > 0);
      for (const auto& term : left.terms()) CHECK(term.coeff != 0);
    }
  }
}

TEST_CASE("ring axioms over F7", "[poly][property]") {
  auto f7 = make_ring(PrimeField(7), {"x", "y", "z"});
  auto& eng = testgen::rng();
  for (int i = 0; i < 1000; ++i) {
    auto a = testgen::random_poly(f7, eng, 3, 2);
    auto b = testgen::random_poly(f7, eng, 3, 2);
    auto c = testgen::random_poly(f7, eng, 3, 2);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism", "[poly][property]") {
  auto f7 = make_ring(PrimeField(7), {"x", "y", "z"});
  const PrimeField& k = f7->field;
  auto& eng = testgen::rng();
  for (int i = 0; i < 300; ++i) {
    auto a = testgen::random_poly(f7, eng);
    auto b = testgen::random_poly(f7, eng);
    auto p = testgen::random_point(f7, eng);
    CHECK((a * b).evaluate(p) == k.mul(a.evaluate(p), b.evaluate(p)));
    CHECK((a + b).evaluate(p) == k.add(a.evaluate(p), b.evaluate(p)));
  }
}

TEST_CASE("Leibniz rule", "[poly][property]") {
  auto f7 = make_ring(PrimeField(7), {"x", "y"});
  auto& eng = testgen::rng();
  for (int i = 0; i < 300; ++i) {
    auto f = testgen::random_poly(f7, eng);
    auto g = testgen::random_poly(f7, eng);
    for (std::size_t v = 0; v < 2; ++v)
      CHECK((f * g).derivative(v) ==
            f * g.derivative(v) + g * f.derivative(v));
  }
}

TEST_CASE("weighted degree is additive on homogeneous factors", "[poly][property]") {
  auto f7 = make_ring(PrimeField(7), {"x", "y"});
  Grading w{{{2, 1}, {3, -1}}};
  auto& eng = testgen::rng();
  int done = 0;
  while (done < 100) {
    auto f = testgen::random_nonzero_poly(f7, eng, 3, 3);
    auto g = testgen::random_nonzero_poly(f7, eng, 3, 3);
    auto df = weighted_degree(f, w), dg = weighted_degree(g, w);
    if (!df || !dg) continue;
    auto dfg = weighted_degree(f * g, w);
    REQUIRE(dfg.has_value());
    std::vector<std::int64_t> sum = {(*df)[0] + (*dg)[0], (*df)[1] + (*dg)[1]};
    CHECK(*dfg == sum);
    ++done;
  }
}

TEST_CASE("monomial orders", "[poly][order]") {
  auto r = make_ring(Rationals{}, {"x", "y", "z"}, MonomialOrder::degrevlex());
  auto f = parse_polynomial("x^2 + x*y^2 + z", r);
  CHECK(f.leading_term().mono == parse_polynomial("x*y^2", r).leading_term().mono);

  auto rl = make_ring(Rationals{}, {"x", "y", "z"}, MonomialOrder::lex());
  auto g = parse_polynomial("x^2 + x*y^2 + z", rl);
  CHECK(g.leading_term().mono == parse_polynomial("x^2", rl).leading_term().mono);

  // block order: {x} block dominates regardless of total degree
  auto rb = make_ring(Rationals{}, {"x", "y", "z"},
                      MonomialOrder::elimination_block(1));
  auto h = parse_polynomial("x + y^5", rb);
  CHECK(h.leading_term().mono == parse_polynomial("x", rb).leading_term().mono);
}
