#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galcurve/geometry.hpp"

namespace galcurve {

// default height of the extension tower searched for special points
constexpr int kDefaultTower = 4;

struct GenusInfo {
  bool known = false;
  int value = 0;
  std::string note;  // why the genus is undetermined, or how it was found
};

// whether irreducibility over the base field was proved or merely not refuted
enum class Irreducibility { certified, assumed };

// An irreducible plane projective curve over a finite field, either cut out
// by one form or presented as the image of the projective line.  Immutable
// after construction; the singular locus is computed once, up front.
class PlaneCurve {
 public:
  static PlaneCurve from_implicit(const TernaryForm& f, int k_max = kDefaultTower);
  static PlaneCurve from_param(const BinaryForm& f0, const BinaryForm& f1,
                               const BinaryForm& f2, int k_max = kDefaultTower);
  // curve description text: `field p k`, then `implicit <poly>` or
  // `param <f0> ; <f1> ; <f2>`, optionally `genus n`; # starts a comment
  static PlaneCurve from_text(const std::string& text, int k_max = kDefaultTower);
  static PlaneCurve from_file(const std::string& path, int k_max = kDefaultTower);

  const Field* field() const { return form_.field(); }
  int degree() const { return form_.degree(); }
  const TernaryForm& form() const { return form_; }
  bool parametrized() const { return param_.has_value(); }
  const std::array<BinaryForm, 3>& param() const;
  GenusInfo genus() const { return genus_; }
  Irreducibility irreducibility() const { return irr_; }
  // true when the point count over the quadratic extension breaks the Weil
  // range for an absolutely irreducible curve of this degree
  bool point_count_warning() const { return weil_warning_; }
  int tower_bound() const { return k_max_; }

  const std::vector<std::pair<ProjPoint, int>>& singular_points() const {
    return singular_;
  }
  bool singular_complete() const { return singular_complete_; }

  // order of vanishing of the moved-to-origin chart; 0 off the curve,
  // 1 at smooth points
  int multiplicity_at(const ProjPoint& p) const;
  ProjLine tangent_line_at(const ProjPoint& p) const;

  struct LineIntersection {
    std::vector<std::pair<ProjPoint, int>> points;  // I_P(C, l) per point
    int unsplit = 0;  // degree not splitting over the requested field
  };
  LineIntersection intersect_line(const ProjLine& l, const Field* over) const;

  // all points of the curve rational over the given extension of its field
  std::vector<ProjPoint> points_over(const Field* over) const;

 private:
  PlaneCurve(TernaryForm f, std::optional<std::array<BinaryForm, 3>> par, int k_max);
  void find_singular_points();
  void derive_genus();
  void check_point_count();

  TernaryForm form_;
  std::optional<std::array<BinaryForm, 3>> param_;
  int k_max_;
  GenusInfo genus_;
  Irreducibility irr_ = Irreducibility::assumed;
  bool weil_warning_ = false;
  std::vector<std::pair<ProjPoint, int>> singular_;
  bool singular_complete_ = false;
};

// X^d + Y^d + Z^d over F_p with d = p^e + 1
PlaneCurve fermat_curve(std::int64_t p, int e, int k_max = kDefaultTower);
// (s^d : (s+t)^d : t^d) over F_p with d = p^e + 1
PlaneCurve ballico_hefez_curve(std::int64_t p, int e, int k_max = kDefaultTower);
// X^(d-1) Z - A(X, Y) with A a seeded random degree-d form, A(0,1) != 0;
// one singular point (0:0:1) of multiplicity d-1
PlaneCurve cuspidal_curve(std::int64_t p, int k, int d, std::uint64_t seed,
                          int k_max = kDefaultTower);
// seeded random smooth curve of the given degree (smoothness certified)
PlaneCurve random_smooth_curve(std::int64_t p, int k, int d, std::uint64_t seed,
                               int k_max = kDefaultTower);

}  // namespace galcurve
