#include "galcurve/geometry.hpp"

#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace galcurve {
namespace {

// scale so the last nonzero slot is 1, then drop into the smallest standard
// field holding all three coordinates
void canonicalize3(FE& u, FE& v, FE& w, const char* what) {
  if (!(u.same_field(v) && u.same_field(w)))
    fail_input(std::string(what) + " coordinates from different fields");
  FE sc;
  if (!w.is_zero()) sc = w.inv();
  else if (!v.is_zero()) sc = v.inv();
  else if (!u.is_zero()) sc = u.inv();
  else fail_input(std::string(what) + " needs a nonzero coordinate");
  u = u * sc;
  v = v * sc;
  w = w * sc;
  const Field* f = u.f;
  if (f->is_rational()) return;
  int m = 1;
  for (const FE* e : {&u, &v, &w}) m = std::lcm(m, minimal_level(*e, 1));
  const Field* sub = Field::make(f->p(), m).get();
  if (sub == f) return;
  u = project_down(u, sub);
  v = project_down(v, sub);
  w = project_down(w, sub);
}

bool less3(const FE& a1, const FE& a2, const FE& a3, const FE& b1, const FE& b2,
           const FE& b3) {
  const Field* fa = a1.f;
  const Field* fb = b1.f;
  auto ka = std::make_tuple(fa->p(), fa->k());
  auto kb = std::make_tuple(fb->p(), fb->k());
  if (ka != kb) return ka < kb;
  auto ta = std::tie(a1.a, a1.b, a2.a, a2.b, a3.a, a3.b);
  auto tb = std::tie(b1.a, b1.b, b2.a, b2.b, b3.a, b3.b);
  return ta < tb;
}

std::string str3(const FE& a, const FE& b, const FE& c, char open, char close) {
  std::string s;
  s += open;
  s += a.str() + ":" + b.str() + ":" + c.str();
  s += close;
  return s;
}

}  // namespace

ProjPoint ProjPoint::make(const FE& x, const FE& y, const FE& z) {
  FE u = x, v = y, w = z;
  canonicalize3(u, v, w, "point");
  return ProjPoint{u, v, w};
}

bool ProjPoint::operator<(const ProjPoint& o) const {
  return less3(x, y, z, o.x, o.y, o.z);
}

std::string ProjPoint::str() const { return str3(x, y, z, '(', ')'); }

ProjLine ProjLine::make(const FE& a, const FE& b, const FE& c) {
  FE u = a, v = b, w = c;
  canonicalize3(u, v, w, "line");
  return ProjLine{u, v, w};
}

bool ProjLine::operator<(const ProjLine& o) const {
  return less3(a, b, c, o.a, o.b, o.c);
}

TernaryForm ProjLine::form(const Field* over) const {
  return TernaryForm::from_terms_fe(
      over, 1, {{1, 0, embed(a, over)}, {0, 1, embed(b, over)}, {0, 0, embed(c, over)}});
}

std::string ProjLine::str() const { return str3(a, b, c, '[', ']'); }

bool incident(const ProjPoint& p, const ProjLine& l) {
  const Field* F = join(p.field(), l.field());
  FE v = embed(l.a, F) * embed(p.x, F) + embed(l.b, F) * embed(p.y, F) +
         embed(l.c, F) * embed(p.z, F);
  return v.is_zero();
}

namespace {

std::array<FE, 3> cross(const std::array<FE, 3>& p, const std::array<FE, 3>& q) {
  return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2],
          p[0] * q[1] - p[1] * q[0]};
}

std::array<FE, 3> embed3(const FE& a, const FE& b, const FE& c, const Field* F) {
  return {embed(a, F), embed(b, F), embed(c, F)};
}

}  // namespace

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) fail_input("a line needs two distinct points");
  const Field* F = join(p.field(), q.field());
  auto v = cross(embed3(p.x, p.y, p.z, F), embed3(q.x, q.y, q.z, F));
  return ProjLine::make(v[0], v[1], v[2]);
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) fail_input("meet needs two distinct lines");
  const Field* F = join(l.field(), m.field());
  auto v = cross(embed3(l.a, l.b, l.c, F), embed3(m.a, m.b, m.c, F));
  return ProjPoint::make(v[0], v[1], v[2]);
}

std::array<ProjPoint, 2> span(const ProjLine& l) {
  const FE &a = l.a, &b = l.b, &c = l.c;
  FE o = a.f->zero();
  if (!c.is_zero()) return {ProjPoint::make(o, -c, b), ProjPoint::make(-c, o, a)};
  if (!b.is_zero()) return {ProjPoint::make(o, -c, b), ProjPoint::make(-b, a, o)};
  return {ProjPoint::make(-c, o, a), ProjPoint::make(-b, a, o)};
}

std::array<BinaryForm, 3> line_parametrization(const ProjLine& l, const Field* over) {
  auto [p0, p1] = span(l);
  auto u = embed3(p0.x, p0.y, p0.z, over);
  auto v = embed3(p1.x, p1.y, p1.z, over);
  return {BinaryForm(over, 1, {u[0], v[0]}), BinaryForm(over, 1, {u[1], v[1]}),
          BinaryForm(over, 1, {u[2], v[2]})};
}

namespace {

[[noreturn]] void fail_positive_dimensional() {
  throw Error(ErrKind::undetermined,
              "common zero locus appears to have positive dimension");
}

}  // namespace

CommonZeros common_zeros(const std::vector<TernaryForm>& forms, int k_max) {
  if (forms.empty()) fail_input("no forms given");
  const Field* base = forms[0].field();
  for (const auto& f : forms)
    if (f.field() != base) fail_input("forms over different fields");
  if (base->is_rational()) fail_input("zero search needs positive characteristic");
  if (k_max < 1) fail_input("tower height must be at least 1");

  std::vector<TernaryForm> with_z, without_z;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    if (f.degree() == 0) return {{}, true};  // a nonzero constant never vanishes
    (f.deg_in(Var::Z) > 0 ? with_z : without_z).push_back(f);
  }
  if (with_z.empty() && without_z.empty()) fail_input("all forms are zero");

  // eliminant in (X, Y): gcd of pairwise Z-resultants and of the Z-free forms
  bool have_e = false;
  BinaryForm elim = BinaryForm::zero(base, 0);
  auto fold = [&](const BinaryForm& r) {
    if (r.is_zero()) return;
    elim = have_e ? gcd(elim, r) : r;
    have_e = true;
  };
  if (with_z.size() >= 2) {
    for (size_t i = 1; i < with_z.size(); ++i)
      fold(resultant_eliminate(with_z[0], with_z[i], Var::Z));
    if (!have_e)
      for (size_t i = 1; i < with_z.size(); ++i)
        for (size_t j = i + 1; j < with_z.size(); ++j)
          fold(resultant_eliminate(with_z[i], with_z[j], Var::Z));
  }
  for (const auto& f : without_z) {
    auto cz = f.coeffs_wrt(Var::Z);
    fold(cz[0]);
  }
  if (!have_e) fail_positive_dimensional();
  if (with_z.empty() && elim.degree() >= 1) fail_positive_dimensional();

  CommonZeros out;
  std::set<ProjPoint> pts;
  std::int64_t p = base->p();
  int k0 = base->k();

  // (0:0:1) is outside every (X:Y) chart; each Z-free form vanishes there
  bool origin = true;
  for (const auto& f : with_z)
    if (!f.coeff(0, 0).is_zero()) origin = false;
  if (origin) pts.insert(ProjPoint::make(base->zero(), base->zero(), base->one()));

  std::map<int, const Field*> level;
  auto field_at = [&](int j) -> const Field* {
    auto it = level.find(j);
    if (it != level.end()) return it->second;
    const Field* L = Field::make(p, k0 * j).get();
    level.emplace(j, L);
    return L;
  };

  if (elim.degree() >= 1) {
    auto fac = factor_binary(elim);
    for (auto& [u, mult] : fac.factors) {
      int e = u.degree();
      if (e > k_max) {
        out.complete = false;
        continue;
      }
      const Field* L;
      try {
        L = field_at(e);
      } catch (const Error&) {
        out.complete = false;
        continue;
      }
      for (auto& [pt, rm] : projective_roots(u.map_field(L), L)) {
        // fiber polynomial in Z over this eliminant root
        UniPoly g = UniPoly::zero(L);
        bool have_g = false, all_zero = true;
        for (const auto& f : forms) {
          if (f.is_zero()) continue;
          auto cz = f.map_field(L).coeffs_wrt(Var::Z);
          std::vector<FE> coef;
          for (const auto& c : cz) coef.push_back(c.is_zero() ? L->zero() : c.eval(pt.s, pt.t));
          UniPoly spec = UniPoly::from_coeffs(L, coef);
          if (spec.is_zero()) continue;
          all_zero = false;
          g = have_g ? gcd(g, spec) : spec;
          have_g = true;
        }
        if (all_zero) fail_positive_dimensional();
        if (g.degree() == 0) continue;  // no common Z-value over this root
        for (auto& [uz, mz] : factor_univariate(g).factors) {
          int ez = uz.degree();
          if (e * ez > k_max) {
            out.complete = false;
            continue;
          }
          const Field* L2;
          try {
            L2 = field_at(e * ez);
          } catch (const Error&) {
            out.complete = false;
            continue;
          }
          for (auto& [z0, zm] : roots_of(uz.map_field(L2)))
            pts.insert(ProjPoint::make(embed(pt.s, L2), embed(pt.t, L2), z0));
        }
      }
    }
  }

  for (const auto& P : pts) {
    const Field* F = join(base, P.field());
    for (const auto& f : forms)
      if (!f.map_field(F).eval(embed(P.x, F), embed(P.y, F), embed(P.z, F)).is_zero())
        fail_internal("zero candidate does not vanish on every form");
  }
  out.points.assign(pts.begin(), pts.end());
  return out;
}

}  // namespace galcurve
