#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "galcurve/field.hpp"
#include "galcurve/util.hpp"

namespace galcurve {

enum class Var { X, Y, Z };

// Dense univariate polynomial with exact coefficients, trimmed so the
// leading coefficient is nonzero.
class UniPoly {
 public:
  static UniPoly zero(const Field* f);
  static UniPoly x(const Field* f);
  static UniPoly from_coeffs(const Field* f, std::vector<FE> c);
  static UniPoly from_ints(const Field* f, const std::vector<std::int64_t>& c);

  const Field* field() const { return f_; }
  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero poly
  bool is_zero() const { return c_.empty(); }
  FE coeff(int i) const;
  FE lc() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const FE& s) const;
  bool operator==(const UniPoly& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }
  bool operator<(const UniPoly& o) const;

  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly rem(const UniPoly& d) const { return divmod(d).second; }
  UniPoly exact_div(const UniPoly& d) const;
  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly pow(int e) const;
  UniPoly powmod(std::uint64_t e, const UniPoly& mod) const;
  FE eval(const FE& x) const;
  UniPoly map_field(const Field* to) const;
  std::string str(const std::string& var = "x") const;

 private:
  UniPoly(const Field* f, std::vector<FE> c) : f_(f), c_(std::move(c)) {}
  const Field* f_;
  std::vector<FE> c_;  // c_[i] multiplies x^i
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct Factorization {
  FE unit;
  std::vector<std::pair<UniPoly, int>> factors;  // monic irreducible, multiplicity
};
struct SquarefreeParts {
  FE unit;
  std::vector<std::pair<UniPoly, int>> parts;  // monic squarefree, multiplicity
};

// Multiplicity structure of f: unit * prod parts[i]^mult with the parts
// squarefree and pairwise coprime, sorted by ascending multiplicity.
SquarefreeParts squarefree_decomposition(const UniPoly& f);

// Complete factorization over a finite field, deterministic ordering.
Factorization factor_univariate(const UniPoly& f);

// Roots in the polynomial's own field, with multiplicities.
std::vector<std::pair<FE, int>> roots_of(const UniPoly& f);

// Homogeneous form in (s, t) of a stated formal degree; the zero form keeps
// its degree as bookkeeping and may carry a negative one inside determinant
// pipelines.
class BinaryForm {
 public:
  static BinaryForm zero(const Field* f, int d);
  BinaryForm(const Field* f, int d, std::vector<FE> c);
  static BinaryForm from_ints(const Field* f, int d, const std::vector<std::int64_t>& c);
  // w holds f(x, 1); the form is recovered as sum w_j s^j t^(d-j).
  static BinaryForm from_poly(const UniPoly& w, int d);

  const Field* field() const { return f_; }
  int degree() const { return d_; }
  bool is_zero() const;
  FE coeff(int i) const;  // multiplies s^(d-i) t^i

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator-() const;
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator*(const FE& s) const;
  bool operator==(const BinaryForm& o) const;
  bool operator!=(const BinaryForm& o) const { return !(*this == o); }

  BinaryForm exact_div(const BinaryForm& d) const;
  BinaryForm partial_s() const;
  BinaryForm partial_t() const;
  BinaryForm compose2(const FE& a, const FE& b, const FE& c, const FE& d) const;
  FE eval(const FE& s, const FE& t) const;
  UniPoly poly() const;  // f(x, 1), lossless together with the formal degree
  BinaryForm map_field(const Field* to) const;
  std::string str(const std::string& s = "s", const std::string& t = "t") const;

 private:
  const Field* f_;
  int d_;
  std::vector<FE> c_;
};

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

struct BinaryFactorization {
  FE unit;
  std::vector<std::pair<BinaryForm, int>> factors;
};
BinaryFactorization factor_binary(const BinaryForm& f);

// Point of the projective line, normalized so the last nonzero coordinate is 1.
struct P1Point {
  FE s, t;
  bool operator==(const P1Point& o) const { return s == o.s && t == o.t; }
  bool operator<(const P1Point& o) const;
  std::string str() const;
};
P1Point p1_point(const FE& s, const FE& t);

// All roots of f rational over the given field (an extension of f's own),
// with multiplicities. Multiplicities sum to deg f exactly when f splits.
std::vector<std::pair<P1Point, int>> projective_roots(const BinaryForm& f,
                                                      const Field* over);

// Homogeneous form in (X, Y, Z), dense triangular coefficient table.
class TernaryForm {
 public:
  static TernaryForm zero(const Field* f, int d);
  // terms are (x-exponent, y-exponent, coefficient); z-exponent is implied
  static TernaryForm from_terms(const Field* f, int d,
                                const std::vector<std::tuple<int, int, std::int64_t>>& terms);
  static TernaryForm from_terms_fe(const Field* f, int d,
                                   const std::vector<std::tuple<int, int, FE>>& terms);

  const Field* field() const { return f_; }
  int degree() const { return d_; }
  bool is_zero() const;
  FE coeff(int i, int j) const;  // multiplies X^i Y^j Z^(d-i-j)
  int deg_in(Var v) const;

  TernaryForm operator+(const TernaryForm& o) const;
  TernaryForm operator-(const TernaryForm& o) const;
  TernaryForm operator-() const;
  TernaryForm operator*(const TernaryForm& o) const;
  TernaryForm operator*(const FE& s) const;
  bool operator==(const TernaryForm& o) const;
  bool operator!=(const TernaryForm& o) const { return !(*this == o); }

  TernaryForm exact_div(const TernaryForm& d) const;
  TernaryForm partial(Var v) const;
  TernaryForm compose3(const std::array<std::array<FE, 3>, 3>& m) const;
  FE eval(const FE& x, const FE& y, const FE& z) const;
  // substitute binary forms of one common degree for X, Y, Z
  BinaryForm subst(const BinaryForm& x, const BinaryForm& y,
                   const BinaryForm& z) const;
  // Coefficients with respect to powers of v: entry r is the coefficient of
  // v^r, a binary form of formal degree d-r in the remaining variables taken
  // in X, Y, Z order.
  std::vector<BinaryForm> coeffs_wrt(Var v) const;
  TernaryForm map_field(const Field* to) const;
  std::string str() const;

 private:
  TernaryForm(const Field* f, int d, std::vector<FE> c)
      : f_(f), d_(d), c_(std::move(c)) {}
  const Field* f_;
  int d_;
  std::vector<FE> c_;  // triangular index over (i, j)
};

// Formal-degree Sylvester resultant of two binary forms.
FE resultant(const BinaryForm& f, const BinaryForm& g);

// Eliminate one projective variable from two ternary forms. The result is a
// binary form in the remaining variables vanishing at every projection of a
// common zero.
BinaryForm resultant_eliminate(const TernaryForm& a, const TernaryForm& b, Var v);

// Eliminate the parameter pair from two forms in (s, t) whose coefficients
// are ternary forms; a[i] multiplies s^(n-i) t^i. All coefficients of each
// input must share one degree.
TernaryForm resultant_eliminate_st(const std::vector<TernaryForm>& a,
                                   const std::vector<TernaryForm>& b);

}  // namespace galcurve
