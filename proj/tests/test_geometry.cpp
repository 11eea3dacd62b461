#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galcurve/geometry.hpp"
#include "galcurve/parse.hpp"

#include <algorithm>
#include <set>

using namespace galcurve;

TEST_CASE("points normalize scale, slot, and field") {
  const Field* F5 = Field::make(5, 1).get();
  CHECK(ProjPoint::make(F5->from_int(2), F5->from_int(4), F5->from_int(2)) ==
        ProjPoint::make(F5->one(), F5->from_int(2), F5->one()));
  ProjPoint inf = ProjPoint::make(F5->from_int(3), F5->zero(), F5->zero());
  CHECK(inf.x.is_one());
  CHECK(inf.y.is_zero());
  CHECK(inf.z.is_zero());
  CHECK(ProjPoint::make(F5->zero(), F5->from_int(2), F5->zero()).y.is_one());
  CHECK_THROWS_AS(ProjPoint::make(F5->zero(), F5->zero(), F5->zero()), Error);

  // a point whose coordinates all lie in F_9 drops from F_81 to F_9
  const Field* F9 = Field::make(3, 2).get();
  const Field* F81 = Field::make(3, 4).get();
  FE g9 = F9->gen();
  ProjPoint lifted = ProjPoint::make(embed(g9, F81), F81->zero(), F81->one());
  CHECK(lifted.field() == F9);
  CHECK(lifted == ProjPoint::make(g9, F9->zero(), F9->one()));
  // and a genuinely quartic coordinate stays at level four
  CHECK(ProjPoint::make(F81->gen(), F81->zero(), F81->one()).field() == F81);
}

TEST_CASE("lines and points pair off through incidence") {
  const Field* F3 = Field::make(3, 1).get();
  ProjPoint p = ProjPoint::make(F3->one(), F3->one(), F3->one());
  ProjPoint q = ProjPoint::make(F3->one(), F3->zero(), F3->zero());
  ProjLine l = line_through(p, q);
  CHECK(incident(p, l));
  CHECK(incident(q, l));
  // the joining line is Y - Z = 0
  CHECK(l == ProjLine::make(F3->zero(), F3->one(), -F3->one()));
  CHECK_THROWS_AS(line_through(p, p), Error);

  ProjLine x0 = ProjLine::make(F3->one(), F3->zero(), F3->zero());
  ProjLine y0 = ProjLine::make(F3->zero(), F3->one(), F3->zero());
  CHECK(meet(x0, y0) == ProjPoint::make(F3->zero(), F3->zero(), F3->one()));
  CHECK_THROWS_AS(meet(x0, x0), Error);

  // incidence across fields: (g : 1 : 0) lies on Z = 0
  const Field* F9 = Field::make(3, 2).get();
  ProjPoint pg = ProjPoint::make(F9->gen(), F9->one(), F9->zero());
  ProjLine z0 = ProjLine::make(F3->zero(), F3->zero(), F3->one());
  CHECK(incident(pg, z0));
  CHECK(!incident(pg, x0));
}

TEST_CASE("every line is spanned and parametrized by its own points") {
  Rng rng(41);
  for (auto [p, k] : {std::pair<std::int64_t, int>{5, 1}, {3, 2}}) {
    const Field* F = Field::make(p, k).get();
    for (int trial = 0; trial < 25; ++trial) {
      FE a = F->from_index(rng.below(F->size()));
      FE b = F->from_index(rng.below(F->size()));
      FE c = F->from_index(rng.below(F->size()));
      if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
      ProjLine l = ProjLine::make(a, b, c);
      auto [p0, p1] = span(l);
      CHECK(p0 != p1);
      CHECK(incident(p0, l));
      CHECK(incident(p1, l));
      CHECK(line_through(p0, p1) == l);

      auto par = line_parametrization(l, F);
      for (int i = 0; i < 8; ++i) {
        FE s = F->from_index(rng.below(F->size()));
        FE t = F->from_index(rng.below(F->size()));
        if (s.is_zero() && t.is_zero()) continue;
        ProjPoint pt = ProjPoint::make(par[0].eval(s, t), par[1].eval(s, t),
                                       par[2].eval(s, t));
        CHECK(incident(pt, l));
      }
    }
  }
}

TEST_CASE("common zeros of the Fermat quartic gradient are empty") {
  const Field* F3 = Field::make(3, 1).get();
  TernaryForm f = parse_ternary(F3, "X^4 + Y^4 + Z^4");
  auto cz = common_zeros({f, f.partial(Var::X), f.partial(Var::Y), f.partial(Var::Z)}, 4);
  CHECK(cz.points.empty());
  CHECK(cz.complete);
}

TEST_CASE("common zeros of a conic and a line") {
  const Field* F5 = Field::make(5, 1).get();
  TernaryForm conic = parse_ternary(F5, "X*Z - Y^2");
  TernaryForm line = parse_ternary(F5, "Y");
  auto cz = common_zeros({conic, line}, 1);
  CHECK(cz.complete);
  REQUIRE(cz.points.size() == 2);
  std::set<ProjPoint> got(cz.points.begin(), cz.points.end());
  CHECK(got.count(ProjPoint::make(F5->one(), F5->zero(), F5->zero())));
  CHECK(got.count(ProjPoint::make(F5->zero(), F5->zero(), F5->one())));
}

TEST_CASE("zeros beyond the tower are reported as incomplete") {
  const Field* F3 = Field::make(3, 1).get();
  // X^2 + Y^2 needs a square root of -1, which lives one level up
  TernaryForm circle = parse_ternary(F3, "X^2 + Y^2");
  TernaryForm zaxis = parse_ternary(F3, "Z");
  auto low = common_zeros({circle, zaxis}, 1);
  CHECK(low.points.empty());
  CHECK(!low.complete);
  auto high = common_zeros({circle, zaxis}, 2);
  CHECK(high.complete);
  REQUIRE(high.points.size() == 2);
  const Field* F9 = Field::make(3, 2).get();
  for (const auto& P : high.points) {
    CHECK(P.field() == F9);
    CHECK(P.z.is_zero());
    CHECK((P.x * P.x + P.y * P.y).is_zero());
  }
}

TEST_CASE("fiber solving may need its own extension") {
  const Field* F3 = Field::make(3, 1).get();
  // along Y = 0 the first form asks for Z^2 = -X^2
  TernaryForm f = parse_ternary(F3, "Z^2 + X^2");
  TernaryForm g = parse_ternary(F3, "Y");
  auto low = common_zeros({f, g}, 1);
  CHECK(low.points.empty());
  CHECK(!low.complete);
  auto high = common_zeros({f, g}, 2);
  CHECK(high.complete);
  REQUIRE(high.points.size() == 2);
  for (const auto& P : high.points) {
    CHECK(P.field()->k() == 2);
    CHECK(P.y.is_zero());
  }
}

TEST_CASE("spurious eliminant roots are filtered and the far point found") {
  const Field* F5 = Field::make(5, 1).get();
  TernaryForm f1 = parse_ternary(F5, "X*Z - Y^2");
  TernaryForm f2 = parse_ternary(F5, "X*Z - X^2");
  auto cz = common_zeros({f1, f2}, 2);
  CHECK(cz.complete);
  std::set<ProjPoint> got(cz.points.begin(), cz.points.end());
  REQUIRE(got.size() == 3);
  CHECK(got.count(ProjPoint::make(F5->zero(), F5->zero(), F5->one())));
  CHECK(got.count(ProjPoint::make(F5->one(), F5->one(), F5->one())));
  CHECK(got.count(ProjPoint::make(F5->one(), F5->from_int(4), F5->one())));
}

TEST_CASE("positive dimensional loci are refused") {
  const Field* F5 = Field::make(5, 1).get();
  TernaryForm a = parse_ternary(F5, "X*Z");
  TernaryForm b = parse_ternary(F5, "Y*Z");
  CHECK_THROWS_AS(common_zeros({a, b}, 2), Error);
  CHECK_THROWS_AS(common_zeros({parse_ternary(F5, "X^2 + Y*Z")}, 2), Error);
  try {
    common_zeros({a, b}, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::undetermined);
  }
}

TEST_CASE("forms with no z dependence single out the far point") {
  const Field* F5 = Field::make(5, 1).get();
  auto cz = common_zeros({parse_ternary(F5, "X"), parse_ternary(F5, "Y")}, 1);
  CHECK(cz.complete);
  REQUIRE(cz.points.size() == 1);
  CHECK(cz.points[0] == ProjPoint::make(F5->zero(), F5->zero(), F5->one()));
}

TEST_CASE("zero search is deterministic") {
  const Field* F3 = Field::make(3, 1).get();
  TernaryForm f = parse_ternary(F3, "X^2*Z + Y^3 + Z^3");
  TernaryForm fx = f.partial(Var::X);
  TernaryForm fy = f.partial(Var::Y);
  TernaryForm fz = f.partial(Var::Z);
  auto a = common_zeros({f, fx, fy, fz}, 4);
  auto b = common_zeros({f, fx, fy, fz}, 4);
  CHECK(a.complete == b.complete);
  REQUIRE(a.points.size() == b.points.size());
  for (size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i] == b.points[i]);
}
