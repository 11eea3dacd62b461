#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galcurve/parse.hpp"

using namespace galcurve;

TEST_CASE("ternary forms parse from plain text") {
  const Field* F3 = Field::make(3, 1).get();
  TernaryForm fermat = parse_ternary(F3, "X^4 + Y^4 + Z^4");
  CHECK(fermat == TernaryForm::from_terms(F3, 4, {{4, 0, 1}, {0, 4, 1}, {0, 0, 1}}));
  CHECK(parse_ternary(F3, "  X^4\t+ Y ^ 4 +Z^4 ") == fermat);

  const Field* F5 = Field::make(5, 1).get();
  CHECK(parse_ternary(F5, "2*X^3*Y + Z^4") ==
        TernaryForm::from_terms(F5, 4, {{3, 1, 2}, {0, 0, 1}}));
  CHECK(parse_ternary(F5, "-X*Y + 7*Z^2") ==
        TernaryForm::from_terms(F5, 2, {{1, 1, 4}, {0, 0, 2}}));
  CHECK(parse_ternary(F5, "X*X + X^2") == TernaryForm::from_terms(F5, 2, {{2, 0, 2}}));

  TernaryForm cancelled = parse_ternary(F5, "X^2 - X^2");
  CHECK(cancelled.is_zero());
  CHECK(cancelled.degree() == 2);
}

TEST_CASE("long coefficient literals fold into the field") {
  const Field* F7 = Field::make(7, 1).get();
  std::string lit = "123456789123456789123456789";
  std::int64_t r = 0;
  for (char c : lit) r = (r * 10 + (c - '0')) % 7;
  TernaryForm f = parse_ternary(F7, lit + "*X + Y");
  CHECK(f == TernaryForm::from_terms(F7, 1, {{1, 0, r}, {0, 1, 1}}));
}

TEST_CASE("generator coefficients need an extension field") {
  const Field* F9 = Field::make(3, 2).get();
  FE g = F9->gen();
  CHECK(parse_ternary(F9, "g^2*X + g*Y - Z") ==
        TernaryForm::from_terms_fe(F9, 1, {{1, 0, g * g}, {0, 1, g}, {0, 0, -F9->one()}}));
  CHECK(parse_ternary(F9, "(g+2)*X*Y") ==
        TernaryForm::from_terms_fe(F9, 2, {{1, 1, g + F9->from_int(2)}}));
  CHECK(parse_ternary(F9, "(2*g - 1)*X^2") ==
        TernaryForm::from_terms_fe(F9, 2, {{2, 0, F9->from_int(2) * g - F9->one()}}));

  const Field* F3 = Field::make(3, 1).get();
  CHECK_THROWS_AS(parse_ternary(F3, "g*X"), Error);
  CHECK_THROWS_AS(parse_ternary(Field::rationals().get(), "g*X"), Error);
}

TEST_CASE("binary forms parse in the parameter variables") {
  const Field* F5 = Field::make(5, 1).get();
  CHECK(parse_binary(F5, "s^2*t - 4*s*t^2") == BinaryForm::from_ints(F5, 3, {0, 1, 1, 0}));
  CHECK(parse_binary(F5, "s^3") == BinaryForm::from_ints(F5, 3, {1, 0, 0, 0}));
  CHECK(parse_binary(F5, "t^3") == BinaryForm::from_ints(F5, 3, {0, 0, 0, 1}));
  CHECK_THROWS_AS(parse_binary(F5, "(s+t)*s"), Error);
}

TEST_CASE("rational coefficients may be fractions") {
  const Field* Q = Field::rationals().get();
  TernaryForm f = parse_ternary(Q, "1/2*X + Y - 3/4*Z");
  CHECK(f == TernaryForm::from_terms_fe(
                 Q, 1, {{1, 0, Q->from_ratio(1, 2)}, {0, 1, Q->one()}, {0, 0, Q->from_ratio(-3, 4)}}));
  CHECK_THROWS_AS(parse_ternary(Q, "1/0*X"), Error);
}

TEST_CASE("malformed input is rejected") {
  const Field* F5 = Field::make(5, 1).get();
  for (const char* bad : {"", "X +", "^2", "X^", "2**X", "(g", "()", "X Y", "w*X",
                          "X + Y^2", "X*Y + Z", "X/2", "s + t"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_ternary(F5, bad), Error);
  }
  CHECK_THROWS_AS(parse_binary(F5, "X + Y"), Error);
  CHECK_THROWS_AS(parse_binary(F5, "s^200"), Error);
}

TEST_CASE("rendered forms parse back to themselves") {
  Rng rng(17);
  for (auto [p, k] : {std::pair<std::int64_t, int>{5, 1}, {3, 2}}) {
    const Field* F = Field::make(p, k).get();
    for (int trial = 0; trial < 30; ++trial) {
      int d = 1 + int(rng.below(4));
      std::vector<std::tuple<int, int, FE>> terms;
      for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j)
          terms.emplace_back(i, j, F->from_index(rng.below(F->size())));
      TernaryForm f = TernaryForm::from_terms_fe(F, d, terms);
      if (f.is_zero()) continue;
      CHECK(parse_ternary(F, f.str()) == f);

      std::vector<FE> bc;
      for (int i = 0; i <= d; ++i) bc.push_back(F->from_index(rng.below(F->size())));
      BinaryForm b(F, d, bc);
      if (b.is_zero()) continue;
      CHECK(parse_binary(F, b.str()) == b);
    }
  }
}
