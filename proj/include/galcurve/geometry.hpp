#pragma once

#include <array>
#include <string>
#include <vector>

#include "galcurve/poly.hpp"

namespace galcurve {

// Point of the projective plane.  Coordinates are scaled so the last nonzero
// one is 1 and live in the smallest standard field containing all three, so
// the same point found over different tower levels compares equal.
struct ProjPoint {
  FE x, y, z;

  static ProjPoint make(const FE& x, const FE& y, const FE& z);
  const Field* field() const { return x.f; }
  bool operator==(const ProjPoint& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  bool operator<(const ProjPoint& o) const;
  std::string str() const;
};

// Line a X + b Y + c Z = 0, canonicalized the same way.
struct ProjLine {
  FE a, b, c;

  static ProjLine make(const FE& a, const FE& b, const FE& c);
  const Field* field() const { return a.f; }
  bool operator==(const ProjLine& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const ProjLine& o) const { return !(*this == o); }
  bool operator<(const ProjLine& o) const;
  TernaryForm form(const Field* over) const;
  std::string str() const;
};

bool incident(const ProjPoint& p, const ProjLine& l);
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);

// Two distinct points spanning the line, rational over its own field.
std::array<ProjPoint, 2> span(const ProjLine& l);

// Linear binary forms (X, Y, Z)(s, t) mapping the parameter line onto l,
// with (1:0) and (0:1) landing on the two spanning points.
std::array<BinaryForm, 3> line_parametrization(const ProjLine& l, const Field* over);

// Common projective zeros of a finite set of forms over one finite field,
// searched through the extension tower F_{q^j}, j <= k_max.  `complete` is
// true when every zero over the algebraic closure was captured, i.e. the
// eliminant and all fiber polynomials split inside the tower.  Throws an
// undetermined error when the common zero locus has positive dimension.
struct CommonZeros {
  std::vector<ProjPoint> points;
  bool complete = true;
};
CommonZeros common_zeros(const std::vector<TernaryForm>& forms, int k_max);

}  // namespace galcurve
