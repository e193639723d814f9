#include <catch2/catch_amalgamated.hpp>

#include "forca/forca.hpp"
#include "support/gens.hpp"

using namespace forca;

namespace {

template <CoefficientField F>
std::vector<Polynomial<F>> parse_all(const RingPtr<F>& r,
                                     std::initializer_list<const char*> txts) {
  std::vector<Polynomial<F>> out;
  for (auto* t : txts) out.push_back(parse_polynomial(t, r));
  return out;
}

/// The quadric cocycle (W/XY, -V/XZ, U/YZ) on D(X,Y,Z) over
/// K[X,Y,Z,U,V,W]/(UX+VY+WZ), optionally with a perturbed first numerator.
CechCocycle<Rationals> quadric_cocycle(bool perturbed = false) {
  auto r = make_ring(Rationals{}, {"X", "Y", "Z", "U", "V", "W"});
  RingPresentation<Rationals> pres(r, parse_all(r, {"U*X + V*Y + W*Z"}));
  return make_cocycle(pres, parse_all(r, {"X", "Y", "Z"}), 1,
                      {{{0, 1}, parse_polynomial(perturbed ? "W + 1" : "W", r)},
                       {{0, 2}, parse_polynomial("-V", r)},
                       {{1, 2}, parse_polynomial("U", r)}});
}

/// The affine-torsor class ((z-1)/xy, -u/xz, v/yz) on D(x,y,z) over
/// K[x,y,u,v,z]/(xv+yu+z(z-1)).
CechCocycle<Rationals> smooth_quadric_cocycle() {
  auto r = make_ring(Rationals{}, {"x", "y", "u", "v", "z"});
  RingPresentation<Rationals> pres(r, parse_all(r, {"x*v + y*u + z*(z-1)"}));
  return make_cocycle(pres, parse_all(r, {"x", "y", "z"}), 1,
                      {{{0, 1}, parse_polynomial("z - 1", r)},
                       {{0, 2}, parse_polynomial("-u", r)},
                       {{1, 2}, parse_polynomial("v", r)}});
}

}  // namespace

TEST_CASE("cocycle condition", "[cech]") {
  CHECK(check_cocycle(quadric_cocycle()).ok);
  CHECK(check_cocycle(smooth_quadric_cocycle()).ok);

  auto zero = make_cocycle(quadric_cocycle().base, quadric_cocycle().gens, 2, {});
  CHECK(check_cocycle(zero).ok);

  auto bad = check_cocycle(quadric_cocycle(true));
  REQUIRE_FALSE(bad.ok);
  CHECK(bad.failing == std::tuple<std::size_t, std::size_t, std::size_t>{0, 1, 2});
  // residual of (W+1)Z - (-V)Y + UX is the class of Z
  auto r = quadric_cocycle().base.ring();
  CHECK(bad.residual == parse_polynomial("Z", r));
}

TEST_CASE("cocycle to forcing system", "[cech]") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  RingPresentation<Rationals> plain(r);
  auto two = make_cocycle(plain, parse_all(r, {"x", "y"}), 2,
                          {{{0, 1}, parse_polynomial("x*y", r)}});
  auto fs = cech_to_forcing(two);
  REQUIRE(fs.rows() == 1);
  CHECK(fs.matrix()[0][0] == parse_polynomial("y^2", r));
  CHECK(fs.matrix()[0][1] == parse_polynomial("-x^2", r));
  CHECK(fs.rhs()[0] == parse_polynomial("x*y", r));

  auto fs9 = cech_to_forcing(smooth_quadric_cocycle());
  auto rb = smooth_quadric_cocycle().base.ring();
  REQUIRE(fs9.rows() == 3);
  CHECK(fs9.rhs()[0] == parse_polynomial("z - 1", rb));
  CHECK(fs9.rhs()[1] == parse_polynomial("-u", rb));
  CHECK(fs9.rhs()[2] == parse_polynomial("v", rb));
  CHECK(fs9.matrix()[1][0] == parse_polynomial("z", rb));
  CHECK(fs9.matrix()[1][2] == parse_polynomial("-x", rb));

  CHECK_THROWS_AS(cech_to_forcing(quadric_cocycle(true)), std::invalid_argument);
}

TEST_CASE("coboundary decisions", "[cech]") {
  auto r = make_ring(Rationals{}, {"x", "y"});
  RingPresentation<Rationals> plain(r);

  auto zero = make_cocycle(plain, parse_all(r, {"x", "y"}), 1, {});
  auto res0 = is_coboundary(zero);
  REQUIRE(res0.coboundary);
  CHECK(res0.witness[0].is_zero());
  CHECK(res0.witness[1].is_zero());

  auto punctured = make_cocycle(plain, parse_all(r, {"x", "y"}), 1,
                                {{{0, 1}, parse_polynomial("1", r)}});
  CHECK_FALSE(is_coboundary(punctured).coboundary);

  auto trivial = make_cocycle(plain, parse_all(r, {"x", "y"}), 1,
                              {{{0, 1}, parse_polynomial("x", r)}});
  auto res = is_coboundary(trivial);
  REQUIRE(res.coboundary);
  // y t1 - x t2 = x
  CHECK((parse_polynomial("y", r) * res.witness[0] -
         parse_polynomial("x", r) * res.witness[1] -
         parse_polynomial("x", r))
            .is_zero());
}

TEST_CASE("coboundaries of random vectors round-trip", "[cech][property]") {
  auto f7 = make_ring(PrimeField(7), {"x", "y", "z"});
  RingPresentation<PrimeField> plain(f7);
  auto gens = parse_all(f7, {"x", "y", "z"});
  auto& eng = testgen::rng();
  const unsigned m = 2;
  for (int iter = 0; iter < 100; ++iter) {
    // b_ij := f_j^m t_i - f_i^m t_j is always a cocycle, and a coboundary
    std::vector<Polynomial<PrimeField>> t = {
        testgen::random_poly(f7, eng, 2, 2), testgen::random_poly(f7, eng, 2, 2),
        testgen::random_poly(f7, eng, 2, 2)};
    std::map<std::pair<std::size_t, std::size_t>, Polynomial<PrimeField>> nums;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        nums[{i, j}] = gens[j].pow(m) * t[i] - gens[i].pow(m) * t[j];
    auto c = make_cocycle(plain, gens, m, nums);
    CHECK(check_cocycle(c).ok);
    auto res = is_coboundary(c);
    REQUIRE(res.coboundary);
    // witness reproduces every numerator exactly
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        CHECK(plain.is_zero_in_quotient(gens[j].pow(m) * res.witness[i] -
                                        gens[i].pow(m) * res.witness[j] -
                                        c.numerator(i, j)));
  }
}

TEST_CASE("two-generator coboundary test is ideal membership", "[cech][property]") {
  auto f7 = make_ring(PrimeField(7), {"x", "y"});
  RingPresentation<PrimeField> plain(f7);
  auto x = parse_polynomial("x", f7);
  auto y = parse_polynomial("y", f7);
  auto& eng = testgen::rng();
  const unsigned m = 2;
  IdealHandle<PrimeField> bracket(plain, {x.pow(m), y.pow(m)});
  for (int iter = 0; iter < 60; ++iter) {
    auto b = testgen::random_poly(f7, eng, 3, 3);
    auto c = make_cocycle(plain, {x, y}, m, {{{0, 1}, b}});
    CHECK(is_coboundary(c).coboundary == bracket.contains_fast(b));
  }
}

TEST_CASE("class restriction", "[cech][restrict]") {
  // d = u * c restricted to u = 0 becomes the zero class
  auto c = smooth_quadric_cocycle();
  auto rb = c.base.ring();
  auto u = parse_polynomial("u", rb);
  std::map<std::pair<std::size_t, std::size_t>, Polynomial<Rationals>> dnums;
  for (const auto& [key, b] : c.numerators) dnums[key] = u * b;
  auto d = make_cocycle(c.base, c.gens, c.exponent, dnums);
  REQUIRE(check_cocycle(d).ok);
  auto restricted = restrict_class(d, {u});
  for (const auto& [key, b] : restricted.numerators) CHECK(b.is_zero());
  auto res = is_coboundary(restricted);
  REQUIRE(res.coboundary);
  for (const auto& w : res.witness) CHECK(restricted.base.reduce(w).is_zero());

  // quadric class restricted to Z=U=V=0, W=1: b12 becomes 1, not a coboundary
  auto q = quadric_cocycle();
  auto rq = q.base.ring();
  auto qres = restrict_class(
      q, parse_all(rq, {"Z", "U", "V", "W - 1"}));
  CHECK(qres.numerator(0, 1) == parse_polynomial("1", rq));
  CHECK(qres.numerator(0, 2).is_zero());
  CHECK(qres.numerator(1, 2).is_zero());
  CHECK_FALSE(is_coboundary(qres).coboundary);

  // restriction by nothing is the identity
  auto same = restrict_class(q, {});
  CHECK(same.numerators == q.numerators);

  // restriction commutes with the forcing builder, entry by entry
  auto fs_then = cech_to_forcing(qres);
  auto fs_before = cech_to_forcing(q);
  for (std::size_t i = 0; i < fs_then.rows(); ++i) {
    for (std::size_t j = 0; j < fs_then.unknowns(); ++j)
      CHECK(qres.base.reduce(fs_then.matrix()[i][j] - fs_before.matrix()[i][j])
                .is_zero());
    CHECK(qres.base.reduce(fs_then.rhs()[i] - fs_before.rhs()[i]).is_zero());
  }

  // inconsistent restriction data is rejected: X/(YZ) type class on the
  // septic surface fails the two-gen cocycle trivially (n=2 has no triples),
  // so exercise the failure with a three-generator non-cocycle instead
  auto r3 = make_ring(Rationals{}, {"a", "b", "cc"});
  RingPresentation<Rationals> plain3(r3);
  auto broken = make_cocycle(plain3, parse_all(r3, {"a", "b", "cc"}), 1,
                             {{{0, 1}, parse_polynomial("1", r3)}});
  CHECK_FALSE(check_cocycle(broken).ok);
}

TEST_CASE("localization exhibits polynomial charts", "[cech][localize]") {
  auto c = smooth_quadric_cocycle();
  for (std::size_t chart = 0; chart < 3; ++chart) {
    auto rep = localize_presentation(c, chart);
    CHECK(rep.all_rows_vanish);
    CHECK(rep.eliminated.size() == 2);
  }

  // n = 2: one row, one eliminated variable, nothing residual
  auto r = make_ring(Rationals{}, {"x", "y"});
  RingPresentation<Rationals> plain(r);
  auto two = make_cocycle(plain, parse_all(r, {"x", "y"}), 1,
                          {{{0, 1}, parse_polynomial("x^2 + y", r)}});
  auto rep2 = localize_presentation(two, 0);
  CHECK(rep2.all_rows_vanish);
  REQUIRE(rep2.eliminated.size() == 1);

  // transition identity W_i - W_j = b_ij y_i^m y_j^m
  CHECK(check_transition(c, 0, 1));
  CHECK(check_transition(c, 0, 2));
  CHECK(check_transition(c, 1, 2));
  CHECK(check_transition(two, 0, 1));

  CHECK_THROWS_AS(localize_presentation(c, 5), std::invalid_argument);
}
