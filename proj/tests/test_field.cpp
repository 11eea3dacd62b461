#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galcurve/field.hpp"
#include "support/oracles.hpp"

using namespace galcurve;

TEST_CASE("modulus is the first monic irreducible in encoding order") {
  // frozen small cases, cross-checked against trial division
  auto f9 = Field::make(3, 2);
  CHECK(f9->modulus() == std::vector<std::int64_t>{1, 0});  // t^2 + 1
  auto f4 = Field::make(2, 2);
  CHECK(f4->modulus() == std::vector<std::int64_t>{1, 1});  // t^2 + t + 1

  for (auto [p, k] : {std::pair<std::int64_t, int>{2, 2}, {2, 3}, {2, 4}, {2, 8},
                      {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 4}, {7, 2}, {13, 2}}) {
    auto F = Field::make(p, k);
    auto expect = oracles::lex_first_irreducible(p, k);
    REQUIRE(int(expect.size()) == k + 1);
    std::vector<std::int64_t> low(expect.begin(), expect.end() - 1);
    CAPTURE(p);
    CAPTURE(k);
    CHECK(F->modulus() == low);
  }
}

TEST_CASE("fields are interned") {
  CHECK(Field::make(3, 2).get() == Field::make(3, 2).get());
  CHECK(Field::make(3, 2).get() != Field::make(3, 1).get());
  CHECK(Field::rationals().get() == Field::make(0, 1).get());
}

TEST_CASE("bad field parameters are rejected") {
  CHECK_THROWS_AS(Field::make(4, 1), Error);
  CHECK_THROWS_AS(Field::make(6, 2), Error);
  CHECK_THROWS_AS(Field::make(3, 2, {0, 0}), Error);   // t^2 is reducible
  CHECK_THROWS_AS(Field::make(3, 2, {2, 0}), Error);   // t^2 + 2 = (t-1)(t+1)
  CHECK_THROWS_AS(Field::make(2, 30), Error);          // over the size cap
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto [p, k] : {std::pair<std::int64_t, int>{2, 2}, {3, 2}, {2, 4}}) {
    auto F = Field::make(p, k);
    std::uint64_t q = F->size();
    for (std::uint64_t i = 0; i < q; ++i) {
      FE a = F->from_index(i);
      CHECK((a + F->zero()) == a);
      CHECK((a * F->one()) == a);
      CHECK((a + (-a)).is_zero());
      CHECK(a.pow(std::int64_t(q)) == a);
      if (!a.is_zero()) {
        CHECK((a * a.inv()).is_one());
        CHECK(a.pow(std::int64_t(q) - 1).is_one());
        CHECK(a.pow(-1) == a.inv());
      }
      for (std::uint64_t j = 0; j < q; ++j) {
        FE b = F->from_index(j);
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        for (std::uint64_t l = 0; l < q; ++l) {
          FE c = F->from_index(l);
          CHECK(((a + b) + c) == (a + (b + c)));
          CHECK(((a * b) * c) == (a * (b * c)));
          CHECK((a * (b + c)) == (a * b + a * c));
        }
      }
    }
  }
}

TEST_CASE("generator satisfies the modulus") {
  auto f9 = Field::make(3, 2);
  FE g = f9->gen();
  CHECK((g * g) == f9->from_int(-1));  // t^2 + 1 = 0
  auto f16 = Field::make(2, 4);
  FE h = f16->gen();
  // t^4 + t + 1 is the first irreducible quartic over F_2
  CHECK(f16->modulus() == std::vector<std::int64_t>{1, 1, 0, 0});
  CHECK((h.pow(4) + h + f16->one()).is_zero());
}

TEST_CASE("frobenius is a field automorphism and pth_root inverts it") {
  for (auto [p, k] : {std::pair<std::int64_t, int>{3, 2}, {2, 3}, {5, 2}}) {
    auto F = Field::make(p, k);
    for (std::uint64_t i = 0; i < F->size(); ++i) {
      FE a = F->from_index(i);
      CHECK(a.frobenius().pth_root() == a);
      CHECK(a.pth_root().frobenius() == a);
      for (std::uint64_t j = 0; j < F->size(); ++j) {
        FE b = F->from_index(j);
        CHECK((a + b).frobenius() == (a.frobenius() + b.frobenius()));
        CHECK((a * b).frobenius() == (a.frobenius() * b.frobenius()));
      }
      CHECK(a.frobenius(k) == a);
    }
  }
}

TEST_CASE("coefficient vectors round-trip") {
  auto F = Field::make(3, 4);
  for (std::uint64_t i = 0; i < F->size(); i += 7) {
    FE a = F->from_index(i);
    CHECK(F->from_coeffs(a.coeffs()) == a);
  }
  CHECK(F->from_coeffs({2, 1}) == (F->gen() + F->from_int(2)));
  CHECK_THROWS_AS(F->from_coeffs({0, 0, 0, 0, 1}), Error);
}

TEST_CASE("embeddings preserve arithmetic and are compatible") {
  auto f3 = Field::make(3, 1);
  auto f9 = Field::make(3, 2);
  auto f81 = Field::make(3, 4);

  const auto& e39 = Embedding::get(f3.get(), f9.get());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FE a = f3->from_index(std::uint64_t(i)), b = f3->from_index(std::uint64_t(j));
      CHECK(e39(a + b) == (e39(a) + e39(b)));
      CHECK(e39(a * b) == (e39(a) * e39(b)));
    }

  const auto& e9_81 = Embedding::get(f9.get(), f81.get());
  for (std::uint64_t i = 0; i < 9; ++i)
    for (std::uint64_t j = 0; j < 9; ++j) {
      FE a = f9->from_index(i), b = f9->from_index(j);
      CHECK(e9_81(a + b) == (e9_81(a) + e9_81(b)));
      CHECK(e9_81(a * b) == (e9_81(a) * e9_81(b)));
    }
  // the image of F_9's generator is a root of t^2 + 1 in F_81
  FE im = e9_81(f9->gen());
  CHECK((im * im + f81->one()).is_zero());
}

TEST_CASE("minimal_level classifies tower levels") {
  auto f81 = Field::make(3, 4);  // tower over F_3: levels 1, 2, 4
  int count1 = 0, count2 = 0, count4 = 0;
  for (std::uint64_t i = 0; i < f81->size(); ++i) {
    switch (minimal_level(f81->from_index(i), 1)) {
      case 1: ++count1; break;
      case 2: ++count2; break;
      case 4: ++count4; break;
      default: FAIL("impossible level");
    }
  }
  CHECK(count1 == 3);
  CHECK(count2 == 6);
  CHECK(count4 == 72);

  // over base F_9 the same field is a level-2 tower
  int c1 = 0, c2 = 0;
  for (std::uint64_t i = 0; i < f81->size(); ++i) {
    switch (minimal_level(f81->from_index(i), 2)) {
      case 1: ++c1; break;
      case 2: ++c2; break;
      default: FAIL("impossible level");
    }
  }
  CHECK(c1 == 9);
  CHECK(c2 == 72);
}

TEST_CASE("rational arithmetic is exact and overflow is detected") {
  auto Q = Field::rationals();
  FE half = Q->from_ratio(1, 2), third = Q->from_ratio(1, 3);
  CHECK((half + third) == Q->from_ratio(5, 6));
  CHECK((half * third) == Q->from_ratio(1, 6));
  CHECK((half - half).is_zero());
  CHECK(half.inv() == Q->from_int(2));
  CHECK(Q->from_ratio(-4, -6) == Q->from_ratio(2, 3));
  FE big = Q->from_int(std::int64_t(1) << 62);
  CHECK_THROWS_AS(big * big, Error);
  CHECK_THROWS_AS(Q->from_ratio(1, 0), Error);
}

TEST_CASE("element rendering") {
  auto f9 = Field::make(3, 2);
  CHECK((f9->gen() + f9->from_int(2)).str() == "g+2");
  CHECK(f9->from_int(0).str() == "0");
  auto f81 = Field::make(3, 4);
  CHECK(f81->from_coeffs({0, 0, 2}).str() == "2*g^2");
}

TEST_CASE("projection into a subfield inverts embedding") {
  const Field* F3 = Field::make(3, 1).get();
  const Field* F9 = Field::make(3, 2).get();
  const Field* F81 = Field::make(3, 4).get();
  const auto& up = Embedding::get(F9, F81);
  for (std::uint64_t i = 0; i < F9->size(); ++i) {
    FE x = F9->from_index(i);
    CHECK(project_down(up(x), F9) == x);
  }
  // g has full degree over F_3, so it does not drop to F_9
  CHECK(minimal_level(F81->gen(), 1) == 4);
  CHECK_THROWS_AS(project_down(F81->gen(), F9), Error);
  CHECK_THROWS_AS(project_down(F81->gen(), Field::make(3, 3).get()), Error);
  CHECK(project_down(embed(F3->from_int(2), F81), F3) == F3->from_int(2));
}

TEST_CASE("join picks the least common tower field") {
  const Field* F9 = Field::make(3, 2).get();
  const Field* F27 = Field::make(3, 3).get();
  CHECK(join(F9, F27) == Field::make(3, 6).get());
  CHECK(join(F9, F9) == F9);
  CHECK(join(F9, Field::make(3, 1).get()) == F9);
  CHECK_THROWS_AS(join(F9, Field::make(2, 1).get()), Error);
  CHECK_THROWS_AS(join(F9, Field::rationals().get()), Error);
  CHECK(join(Field::rationals().get(), Field::rationals().get()) == Field::rationals().get());
}
