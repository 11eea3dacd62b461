#include "galcurve/poly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace galcurve {
namespace {

void trim(std::vector<FE>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// coefficient string, parenthesized when it would not bind as a factor
std::string coeff_str(const FE& x) {
  std::string s = x.str();
  bool simple = s.find('+') == std::string::npos && s.find('-') == std::string::npos;
  return simple ? s : "(" + s + ")";
}

std::string monomial_str(const std::string& v, int e) {
  if (e == 0) return "";
  if (e == 1) return v;
  return v + "^" + std::to_string(e);
}

void append_term(std::string& out, const FE& c, const std::string& mono) {
  std::string cs = coeff_str(c);
  bool neg = !cs.empty() && cs[0] == '-';
  if (neg) cs = cs.substr(1);
  std::string term;
  if (mono.empty()) {
    term = cs;
  } else if (cs == "1") {
    term = mono;
  } else {
    term = cs + "*" + mono;
  }
  if (out.empty()) out = neg ? "-" + term : term;
  else out += (neg ? " - " : " + ") + term;
}

}  // namespace

// ---------------------------------------------------------------------------
// UniPoly

UniPoly UniPoly::zero(const Field* f) { return UniPoly(f, {}); }

UniPoly UniPoly::x(const Field* f) { return UniPoly(f, {f->zero(), f->one()}); }

UniPoly UniPoly::from_coeffs(const Field* f, std::vector<FE> c) {
  for (const auto& e : c)
    if (e.f != f) fail_input("polynomial coefficient from a different field");
  trim(c);
  return UniPoly(f, std::move(c));
}

UniPoly UniPoly::from_ints(const Field* f, const std::vector<std::int64_t>& c) {
  std::vector<FE> v;
  v.reserve(c.size());
  for (auto n : c) v.push_back(f->from_int(n));
  trim(v);
  return UniPoly(f, std::move(v));
}

FE UniPoly::coeff(int i) const {
  if (i < 0 || i >= int(c_.size())) return f_->zero();
  return c_[size_t(i)];
}

FE UniPoly::lc() const {
  if (is_zero()) fail_internal("leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  if (f_ != o.f_) fail_internal("mixed-field polynomial arithmetic");
  std::vector<FE> c(std::max(c_.size(), o.c_.size()), f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
  trim(c);
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<FE> c = c_;
  for (auto& e : c) e = -e;
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (f_ != o.f_) fail_internal("mixed-field polynomial arithmetic");
  if (is_zero() || o.is_zero()) return zero(f_);
  std::vector<FE> c(c_.size() + o.c_.size() - 1, f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = c[i + j] + c_[i] * o.c_[j];
  }
  trim(c);
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::operator*(const FE& s) const {
  std::vector<FE> c = c_;
  for (auto& e : c) e = e * s;
  trim(c);
  return UniPoly(f_, std::move(c));
}

bool UniPoly::operator<(const UniPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (f_ != d.f_) fail_internal("mixed-field polynomial arithmetic");
  if (d.is_zero()) fail_input("division by the zero polynomial");
  if (degree() < d.degree()) return {zero(f_), *this};
  FE inv_lc = d.lc().inv();
  std::vector<FE> r = c_;
  std::vector<FE> q(size_t(degree() - d.degree() + 1), f_->zero());
  for (int i = degree(); i >= d.degree(); --i) {
    FE top = r[size_t(i)];
    if (top.is_zero()) continue;
    FE fac = top * inv_lc;
    int shift = i - d.degree();
    q[size_t(shift)] = fac;
    for (int j = 0; j <= d.degree(); ++j)
      r[size_t(shift + j)] = r[size_t(shift + j)] - fac * d.c_[size_t(j)];
  }
  trim(r);
  trim(q);
  return {UniPoly(f_, std::move(q)), UniPoly(f_, std::move(r))};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) fail_internal("polynomial division expected to be exact");
  return q;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inv();
}

UniPoly UniPoly::derivative() const {
  if (degree() < 1) return zero(f_);
  std::vector<FE> c(c_.size() - 1, f_->zero());
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * f_->from_int(std::int64_t(i));
  trim(c);
  return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::pow(int e) const {
  if (e < 0) fail_input("negative polynomial power");
  UniPoly r = from_coeffs(f_, {f_->one()});
  UniPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

UniPoly UniPoly::powmod(std::uint64_t e, const UniPoly& mod) const {
  if (mod.degree() < 1) fail_input("power modulus must have positive degree");
  UniPoly r = from_coeffs(f_, {f_->one()});
  UniPoly b = rem(mod);
  while (e > 0) {
    if (e & 1) r = (r * b).rem(mod);
    b = (b * b).rem(mod);
    e >>= 1;
  }
  return r;
}

FE UniPoly::eval(const FE& x) const {
  FE acc = f_->zero();
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::map_field(const Field* to) const {
  if (to == f_) return *this;
  std::vector<FE> c;
  c.reserve(c_.size());
  for (const auto& e : c_) c.push_back(embed(e, to));
  return UniPoly(to, std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    append_term(out, c_[i], monomial_str(var, int(i)));
  }
  return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.rem(y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// Squarefree decomposition and factorization

namespace {

// f with vanishing derivative is g(x^p) = h(x)^p; returns h
UniPoly pth_root_poly(const UniPoly& f) {
  const Field* F = f.field();
  std::int64_t p = F->p();
  if (p == 0) fail_internal("p-th root of a characteristic-zero polynomial");
  std::vector<FE> c;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i % p == 0) {
      c.push_back(f.coeff(i).pth_root());
    } else if (!f.coeff(i).is_zero()) {
      fail_internal("derivative-free polynomial not a p-th power");
    }
  }
  return UniPoly::from_coeffs(F, std::move(c));
}

void squarefree_rec(const UniPoly& f, int scale,
                    std::vector<std::pair<UniPoly, int>>& out) {
  if (f.degree() < 1) return;
  UniPoly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_rec(pth_root_poly(f), scale * int(f.field()->p()), out);
    return;
  }
  UniPoly c = gcd(f, fp);
  UniPoly w = f.exact_div(c);
  int i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly z = w.exact_div(y);
    if (z.degree() > 0) out.emplace_back(z, i * scale);
    w = std::move(y);
    c = c.exact_div(w);
    ++i;
  }
  if (c.degree() > 0)
    squarefree_rec(pth_root_poly(c), scale * int(f.field()->p()), out);
}

std::uint64_t poly_seed(const UniPoly& f) {
  std::uint64_t h = 0x6b79f1d30aa1cde5ULL;
  h = hash_combine(h, std::uint64_t(f.field()->p()));
  h = hash_combine(h, std::uint64_t(f.field()->k()));
  for (int i = 0; i <= f.degree(); ++i) {
    h = hash_combine(h, std::uint64_t(f.coeff(i).a));
    h = hash_combine(h, std::uint64_t(f.coeff(i).b));
  }
  return h;
}

UniPoly random_below(const Field* F, int deg, Rng& rng) {
  std::vector<FE> c;
  for (int i = 0; i < deg; ++i) c.push_back(F->from_index(rng.below(F->size())));
  return UniPoly::from_coeffs(F, std::move(c));
}

// equal-degree splitting of a monic squarefree product of degree-e irreducibles
void edf(const UniPoly& g, int e, Rng& rng, std::vector<UniPoly>& out) {
  if (g.degree() == e) {
    out.push_back(g);
    return;
  }
  const Field* F = g.field();
  std::uint64_t q = F->size();
  UniPoly one = UniPoly::from_coeffs(F, {F->one()});
  for (int attempt = 0; attempt < 200; ++attempt) {
    UniPoly r = random_below(F, g.degree(), rng);
    if (r.degree() < 1) continue;
    UniPoly split = UniPoly::zero(F);
    if (F->p() == 2) {
      // trace map over F_2: sum of iterated squarings
      UniPoly t = r, acc = r;
      int steps = F->k() * e - 1;
      for (int j = 0; j < steps; ++j) {
        t = (t * t).rem(g);
        acc = acc + t;
      }
      split = gcd(acc, g);
    } else {
      // norm to the base field, then a half-order power
      UniPoly m = r, acc = r;
      for (int j = 1; j < e; ++j) {
        m = m.powmod(q, g);
        acc = (acc * m).rem(g);
      }
      UniPoly b = acc.powmod((q - 1) / 2, g);
      split = gcd(b - one, g);
    }
    if (split.degree() > 0 && split.degree() < g.degree()) {
      edf(split, e, rng, out);
      edf(g.exact_div(split), e, rng, out);
      return;
    }
  }
  fail_internal("equal-degree splitting failed to converge");
}

// distinct-degree stage; f monic squarefree
std::vector<std::pair<UniPoly, int>> ddf(const UniPoly& f) {
  const Field* F = f.field();
  std::uint64_t q = F->size();
  std::vector<std::pair<UniPoly, int>> res;
  UniPoly v = f;
  UniPoly x = UniPoly::x(F);
  UniPoly h = x;
  int i = 0;
  while (v.degree() >= 2 * (i + 1)) {
    ++i;
    h = h.powmod(q, v);
    UniPoly g = gcd(h - x, v);
    if (g.degree() > 0) {
      res.emplace_back(g, i);
      v = v.exact_div(g);
      h = h.rem(v);
    }
  }
  if (v.degree() > 0) res.emplace_back(v, v.degree());
  return res;
}

}  // namespace

SquarefreeParts squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) fail_input("squarefree decomposition of the zero polynomial");
  SquarefreeParts out{f.lc(), {}};
  squarefree_rec(f.monic(), 1, out.parts);
  std::sort(out.parts.begin(), out.parts.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second < b.second;
              return a.first < b.first;
            });
  return out;
}

Factorization factor_univariate(const UniPoly& f) {
  if (f.is_zero()) fail_input("factorization of the zero polynomial");
  const Field* F = f.field();
  if (F->p() == 0) fail_input("factorization requires a finite field");
  Factorization out{f.lc(), {}};
  if (f.degree() == 0) return out;
  Rng rng(poly_seed(f));
  auto sq = squarefree_decomposition(f);
  for (auto& [part, mult] : sq.parts) {
    for (auto& [prod, deg] : ddf(part)) {
      std::vector<UniPoly> irr;
      edf(prod, deg, rng, irr);
      for (auto& u : irr) out.factors.emplace_back(u, mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::pair<FE, int>> roots_of(const UniPoly& f) {
  auto fac = factor_univariate(f);
  std::vector<std::pair<FE, int>> out;
  for (auto& [u, m] : fac.factors) {
    if (u.degree() == 1) out.emplace_back(-u.coeff(0), m);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------------------
// BinaryForm

BinaryForm BinaryForm::zero(const Field* f, int d) {
  if (d < 0) return BinaryForm(f, d, {});
  return BinaryForm(f, d, std::vector<FE>(size_t(d) + 1, f->zero()));
}

BinaryForm::BinaryForm(const Field* f, int d, std::vector<FE> c)
    : f_(f), d_(d), c_(std::move(c)) {
  if (d < 0) {
    if (!c_.empty()) fail_input("negative-degree form must be zero");
    return;
  }
  if (int(c_.size()) != d + 1) fail_input("binary form needs degree+1 coefficients");
  for (const auto& e : c_)
    if (e.f != f_) fail_input("form coefficient from a different field");
}

BinaryForm BinaryForm::from_ints(const Field* f, int d,
                                 const std::vector<std::int64_t>& c) {
  std::vector<FE> v;
  v.reserve(c.size());
  for (auto n : c) v.push_back(f->from_int(n));
  return BinaryForm(f, d, std::move(v));
}

BinaryForm BinaryForm::from_poly(const UniPoly& w, int d) {
  const Field* F = w.field();
  if (w.is_zero()) return zero(F, d);
  if (w.degree() > d) fail_internal("dehomogenized degree exceeds the form degree");
  BinaryForm out = zero(F, d);
  for (int j = 0; j <= w.degree(); ++j) out.c_[size_t(d - j)] = w.coeff(j);
  return out;
}

bool BinaryForm::is_zero() const {
  for (const auto& e : c_)
    if (!e.is_zero()) return false;
  return true;
}

FE BinaryForm::coeff(int i) const {
  if (i < 0 || i >= int(c_.size())) fail_internal("binary form coefficient out of range");
  return c_[size_t(i)];
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (f_ != o.f_) fail_internal("mixed-field form arithmetic");
  if (d_ != o.d_) fail_internal("form addition with mismatched degrees");
  std::vector<FE> c = c_;
  for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + o.c_[i];
  return BinaryForm(f_, d_, std::move(c));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + (-o); }

BinaryForm BinaryForm::operator-() const {
  std::vector<FE> c = c_;
  for (auto& e : c) e = -e;
  return BinaryForm(f_, d_, std::move(c));
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  if (f_ != o.f_) fail_internal("mixed-field form arithmetic");
  if (is_zero() || o.is_zero()) return zero(f_, d_ + o.d_);
  BinaryForm out = zero(f_, d_ + o.d_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      out.c_[i + j] = out.c_[i + j] + c_[i] * o.c_[j];
  }
  return out;
}

BinaryForm BinaryForm::operator*(const FE& s) const {
  std::vector<FE> c = c_;
  for (auto& e : c) e = e * s;
  return BinaryForm(f_, d_, std::move(c));
}

bool BinaryForm::operator==(const BinaryForm& o) const {
  return f_ == o.f_ && d_ == o.d_ && c_ == o.c_;
}

BinaryForm BinaryForm::exact_div(const BinaryForm& d) const {
  if (d.is_zero()) fail_internal("form division by zero");
  if (is_zero()) return zero(f_, d_ - d.d_);
  UniPoly q = poly().exact_div(d.poly());
  // valuation bookkeeping: the t-power of the divisor must not exceed ours
  if (d_ - poly().degree() < d.d_ - d.poly().degree())
    fail_internal("form division not exact in the t factor");
  return from_poly(q, d_ - d.d_);
}

BinaryForm BinaryForm::partial_s() const {
  if (d_ < 1) return zero(f_, d_ - 1);
  BinaryForm out = zero(f_, d_ - 1);
  for (int i = 0; i < d_; ++i)
    out.c_[size_t(i)] = c_[size_t(i)] * f_->from_int(d_ - i);
  return out;
}

BinaryForm BinaryForm::partial_t() const {
  if (d_ < 1) return zero(f_, d_ - 1);
  BinaryForm out = zero(f_, d_ - 1);
  for (int i = 1; i <= d_; ++i)
    out.c_[size_t(i - 1)] = c_[size_t(i)] * f_->from_int(i);
  return out;
}

BinaryForm BinaryForm::compose2(const FE& a, const FE& b, const FE& c,
                                const FE& d) const {
  if (is_zero()) return zero(f_, d_);
  // powers of the two substituted linear forms
  std::vector<BinaryForm> pow1{BinaryForm(f_, 0, {f_->one()})};
  std::vector<BinaryForm> pow2{BinaryForm(f_, 0, {f_->one()})};
  BinaryForm l1(f_, 1, {a, b});
  BinaryForm l2(f_, 1, {c, d});
  for (int i = 1; i <= d_; ++i) {
    pow1.push_back(pow1.back() * l1);
    pow2.push_back(pow2.back() * l2);
  }
  BinaryForm out = zero(f_, d_);
  for (int i = 0; i <= d_; ++i) {
    if (c_[size_t(i)].is_zero()) continue;
    out = out + (pow1[size_t(d_ - i)] * pow2[size_t(i)]) * c_[size_t(i)];
  }
  return out;
}

FE BinaryForm::eval(const FE& s, const FE& t) const {
  FE acc = f_->zero();
  std::vector<FE> spow(size_t(d_) + 1, f_->one());
  for (int i = 1; i <= d_; ++i) spow[size_t(i)] = spow[size_t(i - 1)] * s;
  FE tp = f_->one();
  for (int i = 0; i <= d_; ++i) {
    if (!c_[size_t(i)].is_zero()) acc = acc + c_[size_t(i)] * spow[size_t(d_ - i)] * tp;
    tp = tp * t;
  }
  return acc;
}

UniPoly BinaryForm::poly() const {
  std::vector<FE> w(size_t(std::max(d_ + 1, 0)), f_->zero());
  for (int j = 0; j <= d_; ++j) w[size_t(j)] = c_[size_t(d_ - j)];
  return UniPoly::from_coeffs(f_, std::move(w));
}

BinaryForm BinaryForm::map_field(const Field* to) const {
  if (to == f_) return *this;
  std::vector<FE> c;
  c.reserve(c_.size());
  for (const auto& e : c_) c.push_back(embed(e, to));
  return BinaryForm(to, d_, std::move(c));
}

std::string BinaryForm::str(const std::string& s, const std::string& t) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= d_; ++i) {
    if (c_[size_t(i)].is_zero()) continue;
    std::string mono = monomial_str(s, d_ - i);
    std::string mt = monomial_str(t, i);
    if (!mono.empty() && !mt.empty()) mono += "*";
    mono += mt;
    append_term(out, c_[size_t(i)], mono);
  }
  return out;
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  bool az = a.is_zero(), bz = b.is_zero();
  if (az && bz) fail_input("gcd of two zero forms");
  auto normalize = [](const BinaryForm& f) {
    UniPoly w = f.poly();
    return BinaryForm::from_poly(w.monic(), f.degree());
  };
  if (az) return normalize(b);
  if (bz) return normalize(a);
  UniPoly g = gcd(a.poly(), b.poly());
  int tval = std::min(a.degree() - a.poly().degree(), b.degree() - b.poly().degree());
  return BinaryForm::from_poly(g, g.degree() + tval);
}

BinaryFactorization factor_binary(const BinaryForm& f) {
  if (f.is_zero()) fail_input("factorization of the zero form");
  const Field* F = f.field();
  UniPoly w = f.poly();
  BinaryFactorization out{w.lc(), {}};
  int tmult = f.degree() - w.degree();
  if (tmult > 0)
    out.factors.emplace_back(BinaryForm(F, 1, {F->zero(), F->one()}), tmult);
  auto fac = factor_univariate(w);
  for (auto& [u, m] : fac.factors)
    out.factors.emplace_back(BinaryForm::from_poly(u, u.degree()), m);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              return a.first.poly() < b.first.poly();
            });
  return out;
}

P1Point p1_point(const FE& s, const FE& t) {
  if (!t.is_zero()) return P1Point{s / t, t.f->one()};
  if (s.is_zero()) fail_input("(0:0) is not a projective point");
  return P1Point{s.f->one(), s.f->zero()};
}

bool P1Point::operator<(const P1Point& o) const {
  if (s != o.s) return s < o.s;
  return t < o.t;
}

std::string P1Point::str() const { return "(" + s.str() + ":" + t.str() + ")"; }

std::vector<std::pair<P1Point, int>> projective_roots(const BinaryForm& f,
                                                      const Field* over) {
  if (f.is_zero()) fail_input("roots of the zero form");
  UniPoly w = f.poly().map_field(over);
  std::vector<std::pair<P1Point, int>> out;
  int inf_mult = f.degree() - w.degree();
  if (inf_mult > 0) out.emplace_back(P1Point{over->one(), over->zero()}, inf_mult);
  for (auto& [r, m] : roots_of(w)) out.emplace_back(P1Point{r, over->one()}, m);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------------------
// TernaryForm

namespace {
inline size_t tri_size(int d) { return size_t(d + 1) * size_t(d + 2) / 2; }
inline size_t tri_idx(int d, int i, int j) {
  return size_t(i) * size_t(d + 1) - size_t(i) * size_t(i - 1) / 2 + size_t(j);
}
}  // namespace

TernaryForm TernaryForm::zero(const Field* f, int d) {
  if (d < 0) fail_internal("ternary form of negative degree");
  return TernaryForm(f, d, std::vector<FE>(tri_size(d), f->zero()));
}

TernaryForm TernaryForm::from_terms(
    const Field* f, int d, const std::vector<std::tuple<int, int, std::int64_t>>& terms) {
  std::vector<std::tuple<int, int, FE>> fe;
  fe.reserve(terms.size());
  for (auto& [i, j, c] : terms) fe.emplace_back(i, j, f->from_int(c));
  return from_terms_fe(f, d, fe);
}

TernaryForm TernaryForm::from_terms_fe(
    const Field* f, int d, const std::vector<std::tuple<int, int, FE>>& terms) {
  TernaryForm out = zero(f, d);
  for (auto& [i, j, c] : terms) {
    if (i < 0 || j < 0 || i + j > d) fail_input("term exponents exceed the form degree");
    if (c.f != f) fail_input("form coefficient from a different field");
    size_t idx = tri_idx(d, i, j);
    out.c_[idx] = out.c_[idx] + c;
  }
  return out;
}

bool TernaryForm::is_zero() const {
  for (const auto& e : c_)
    if (!e.is_zero()) return false;
  return true;
}

FE TernaryForm::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > d_) return f_->zero();
  return c_[tri_idx(d_, i, j)];
}

int TernaryForm::deg_in(Var v) const {
  int best = 0;
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; i + j <= d_; ++j) {
      if (c_[tri_idx(d_, i, j)].is_zero()) continue;
      int e = v == Var::X ? i : v == Var::Y ? j : d_ - i - j;
      best = std::max(best, e);
    }
  return best;
}

TernaryForm TernaryForm::operator+(const TernaryForm& o) const {
  if (f_ != o.f_) fail_internal("mixed-field form arithmetic");
  if (d_ != o.d_) fail_internal("form addition with mismatched degrees");
  std::vector<FE> c = c_;
  for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + o.c_[i];
  return TernaryForm(f_, d_, std::move(c));
}

TernaryForm TernaryForm::operator-(const TernaryForm& o) const { return *this + (-o); }

TernaryForm TernaryForm::operator-() const {
  std::vector<FE> c = c_;
  for (auto& e : c) e = -e;
  return TernaryForm(f_, d_, std::move(c));
}

TernaryForm TernaryForm::operator*(const TernaryForm& o) const {
  if (f_ != o.f_) fail_internal("mixed-field form arithmetic");
  TernaryForm out = zero(f_, d_ + o.d_);
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; i + j <= d_; ++j) {
      FE a = c_[tri_idx(d_, i, j)];
      if (a.is_zero()) continue;
      for (int u = 0; u <= o.d_; ++u)
        for (int v = 0; u + v <= o.d_; ++v) {
          FE b = o.c_[tri_idx(o.d_, u, v)];
          if (b.is_zero()) continue;
          size_t idx = tri_idx(out.d_, i + u, j + v);
          out.c_[idx] = out.c_[idx] + a * b;
        }
    }
  return out;
}

TernaryForm TernaryForm::operator*(const FE& s) const {
  std::vector<FE> c = c_;
  for (auto& e : c) e = e * s;
  return TernaryForm(f_, d_, std::move(c));
}

bool TernaryForm::operator==(const TernaryForm& o) const {
  return f_ == o.f_ && d_ == o.d_ && c_ == o.c_;
}

TernaryForm TernaryForm::exact_div(const TernaryForm& d) const {
  if (d.is_zero()) fail_internal("form division by zero");
  int dq = d_ - d.d_;
  if (is_zero()) {
    if (dq < 0) fail_internal("form division not exact");
    return zero(f_, dq);
  }
  if (dq < 0) fail_internal("form division not exact");
  auto lex_lead = [](const TernaryForm& t) {
    for (int i = t.d_; i >= 0; --i)
      for (int j = t.d_ - i; j >= 0; --j)
        if (!t.c_[tri_idx(t.d_, i, j)].is_zero()) return std::pair<int, int>{i, j};
    fail_internal("lead of zero form");
  };
  auto [di, dj] = lex_lead(d);
  FE dlead_inv = d.c_[tri_idx(d.d_, di, dj)].inv();
  TernaryForm r = *this;
  TernaryForm q = zero(f_, dq);
  while (!r.is_zero()) {
    auto [ri, rj] = lex_lead(r);
    int qi = ri - di, qj = rj - dj;
    if (qi < 0 || qj < 0 || qi + qj > dq) fail_internal("form division not exact");
    FE qc = r.c_[tri_idx(r.d_, ri, rj)] * dlead_inv;
    size_t qidx = tri_idx(dq, qi, qj);
    q.c_[qidx] = q.c_[qidx] + qc;
    for (int u = 0; u <= d.d_; ++u)
      for (int v = 0; u + v <= d.d_; ++v) {
        FE b = d.c_[tri_idx(d.d_, u, v)];
        if (b.is_zero()) continue;
        size_t idx = tri_idx(r.d_, qi + u, qj + v);
        r.c_[idx] = r.c_[idx] - qc * b;
      }
  }
  return q;
}

TernaryForm TernaryForm::partial(Var v) const {
  if (d_ < 1) return zero(f_, 0);
  TernaryForm out = zero(f_, d_ - 1);
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; i + j <= d_; ++j) {
      FE a = c_[tri_idx(d_, i, j)];
      if (a.is_zero()) continue;
      int k = d_ - i - j;
      if (v == Var::X && i > 0) {
        size_t idx = tri_idx(d_ - 1, i - 1, j);
        out.c_[idx] = out.c_[idx] + a * f_->from_int(i);
      } else if (v == Var::Y && j > 0) {
        size_t idx = tri_idx(d_ - 1, i, j - 1);
        out.c_[idx] = out.c_[idx] + a * f_->from_int(j);
      } else if (v == Var::Z && k > 0) {
        size_t idx = tri_idx(d_ - 1, i, j);
        out.c_[idx] = out.c_[idx] + a * f_->from_int(k);
      }
    }
  return out;
}

TernaryForm TernaryForm::compose3(const std::array<std::array<FE, 3>, 3>& m) const {
  TernaryForm one = TernaryForm::from_terms(f_, 0, {{0, 0, 1}});
  std::array<std::vector<TernaryForm>, 3> pows;
  for (int r = 0; r < 3; ++r) {
    TernaryForm lin =
        from_terms_fe(f_, 1, {{1, 0, m[size_t(r)][0]}, {0, 1, m[size_t(r)][1]}, {0, 0, m[size_t(r)][2]}});
    pows[size_t(r)].push_back(one);
    for (int e = 1; e <= d_; ++e)
      pows[size_t(r)].push_back(pows[size_t(r)].back() * lin);
  }
  TernaryForm out = zero(f_, d_);
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; i + j <= d_; ++j) {
      FE a = c_[tri_idx(d_, i, j)];
      if (a.is_zero()) continue;
      int k = d_ - i - j;
      TernaryForm term = pows[0][size_t(i)] * pows[1][size_t(j)];
      term = term * pows[2][size_t(k)];
      out = out + term * a;
    }
  return out;
}

FE TernaryForm::eval(const FE& x, const FE& y, const FE& z) const {
  if (x.f != f_ || y.f != f_ || z.f != f_)
    fail_internal("evaluation point from a different field");
  std::vector<FE> xp{f_->one()}, yp{f_->one()}, zp{f_->one()};
  for (int i = 1; i <= d_; ++i) {
    xp.push_back(xp.back() * x);
    yp.push_back(yp.back() * y);
    zp.push_back(zp.back() * z);
  }
  FE acc = f_->zero();
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; i + j <= d_; ++j) {
      FE a = c_[tri_idx(d_, i, j)];
      if (a.is_zero()) continue;
      acc = acc + a * xp[size_t(i)] * yp[size_t(j)] * zp[size_t(d_ - i - j)];
    }
  return acc;
}

BinaryForm TernaryForm::subst(const BinaryForm& x, const BinaryForm& y,
                              const BinaryForm& z) const {
  if (x.field() != f_ || y.field() != f_ || z.field() != f_)
    fail_input("substitution components over a different field");
  int m = x.degree();
  if (m < 0 || y.degree() != m || z.degree() != m)
    fail_input("substitution components must share one nonnegative degree");
  BinaryForm one(f_, 0, {f_->one()});
  std::vector<BinaryForm> xp{one}, yp{one}, zp{one};
  for (int i = 1; i <= d_; ++i) {
    xp.push_back(xp.back() * x);
    yp.push_back(yp.back() * y);
    zp.push_back(zp.back() * z);
  }
  BinaryForm acc = BinaryForm::zero(f_, d_ * m);
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; i + j <= d_; ++j) {
      FE a = c_[tri_idx(d_, i, j)];
      if (a.is_zero()) continue;
      acc = acc + xp[size_t(i)] * yp[size_t(j)] * zp[size_t(d_ - i - j)] * a;
    }
  return acc;
}

std::vector<BinaryForm> TernaryForm::coeffs_wrt(Var v) const {
  std::vector<BinaryForm> out;
  for (int r = 0; r <= d_; ++r) out.push_back(BinaryForm::zero(f_, d_ - r));
  auto put = [&](int r, int pos, const FE& a) {
    // pos is the exponent of the later variable of the remaining pair
    BinaryForm& b = out[size_t(r)];
    std::vector<FE> c;
    for (int t = 0; t <= b.degree(); ++t) c.push_back(b.coeff(t));
    c[size_t(pos)] = c[size_t(pos)] + a;
    b = BinaryForm(f_, d_ - r, std::move(c));
  };
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; i + j <= d_; ++j) {
      FE a = c_[tri_idx(d_, i, j)];
      if (a.is_zero()) continue;
      int k = d_ - i - j;
      if (v == Var::Z) put(k, j, a);        // remaining pair (X, Y)
      else if (v == Var::Y) put(j, k, a);   // remaining pair (X, Z)
      else put(i, k, a);                    // remaining pair (Y, Z)
    }
  return out;
}

TernaryForm TernaryForm::map_field(const Field* to) const {
  if (to == f_) return *this;
  std::vector<FE> c;
  c.reserve(c_.size());
  for (const auto& e : c_) c.push_back(embed(e, to));
  return TernaryForm(to, d_, std::move(c));
}

std::string TernaryForm::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = d_; i >= 0; --i)
    for (int j = d_ - i; j >= 0; --j) {
      FE a = c_[tri_idx(d_, i, j)];
      if (a.is_zero()) continue;
      std::string mono;
      for (auto& [v, e] : {std::pair<const char*, int>{"X", i}, {"Y", j}, {"Z", d_ - i - j}}) {
        std::string m = monomial_str(v, e);
        if (m.empty()) continue;
        if (!mono.empty()) mono += "*";
        mono += m;
      }
      append_term(out, a, mono);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Resultants via fraction-free elimination

namespace {

FE det_div(const FE& a, const FE& b) { return a / b; }
BinaryForm det_div(const BinaryForm& a, const BinaryForm& b) { return a.exact_div(b); }
TernaryForm det_div(const TernaryForm& a, const TernaryForm& b) { return a.exact_div(b); }

template <class R>
R bareiss_det(std::vector<std::vector<R>> m, const R& singular) {
  size_t n = m.size();
  if (n == 0) fail_internal("empty determinant");
  bool negate = false;
  std::optional<R> prev;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k;
      for (size_t i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row == k) return singular;
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        R t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev ? det_div(t, *prev) : std::move(t);
      }
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

FE resultant(const BinaryForm& f, const BinaryForm& g) {
  const Field* F = f.field();
  if (F != g.field()) fail_internal("mixed-field resultant");
  int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) fail_input("resultant of a negative-degree form");
  if (m == 0 && n == 0) return F->one();
  if (m == 0) return f.coeff(0).pow(n);
  if (n == 0) return g.coeff(0).pow(m);
  size_t size = size_t(m + n);
  std::vector<std::vector<FE>> mat(size, std::vector<FE>(size, F->zero()));
  // p_j, the x^j coefficient of f(x, 1), sits at c[m - j]
  for (int r = 0; r < n; ++r)
    for (int c = r; c <= r + m; ++c) mat[size_t(r)][size_t(c)] = f.coeff(c - r);
  for (int r = 0; r < m; ++r)
    for (int c = r; c <= r + n; ++c) mat[size_t(n + r)][size_t(c)] = g.coeff(c - r);
  return bareiss_det(std::move(mat), F->zero());
}

BinaryForm resultant_eliminate(const TernaryForm& a, const TernaryForm& b, Var v) {
  const Field* F = a.field();
  if (F != b.field()) fail_internal("mixed-field resultant");
  int da = a.deg_in(v), db = b.deg_in(v);
  if (da == 0 || db == 0)
    fail_input("eliminated variable absent from one of the forms");
  auto av = a.coeffs_wrt(v);
  auto bv = b.coeffs_wrt(v);
  size_t size = size_t(da + db);
  std::vector<std::vector<BinaryForm>> mat;
  mat.reserve(size);
  // degree structure: zero pads carry the row/column weights too, so the
  // homogeneity checks inside the elimination stay honest
  int wa = a.degree() - da;  // degree of the leading v-coefficient of a
  int wb = b.degree() - db;
  for (int r = 0; r < db; ++r) {
    std::vector<BinaryForm> row;
    for (int c = 0; c < int(size); ++c) {
      int jj = da - (c - r);
      if (c >= r && jj >= 0)
        row.push_back(av[size_t(jj)]);
      else
        row.push_back(BinaryForm::zero(F, wa + (c - r)));
    }
    mat.push_back(std::move(row));
  }
  for (int r = 0; r < da; ++r) {
    std::vector<BinaryForm> row;
    for (int c = 0; c < int(size); ++c) {
      int jj = db - (c - r);
      if (c >= r && jj >= 0)
        row.push_back(bv[size_t(jj)]);
      else
        row.push_back(BinaryForm::zero(F, wb + (c - r)));
    }
    mat.push_back(std::move(row));
  }
  int det_degree = 0;
  for (int r = 0; r < db; ++r) det_degree += wa - r;
  for (int r = 0; r < da; ++r) det_degree += wb - r;
  for (int c = 0; c < int(size); ++c) det_degree += c;
  return bareiss_det(std::move(mat), BinaryForm::zero(F, det_degree));
}

TernaryForm resultant_eliminate_st(const std::vector<TernaryForm>& a,
                                   const std::vector<TernaryForm>& b) {
  if (a.size() < 2 || b.size() < 2)
    fail_input("parameter elimination needs positive-degree inputs");
  const Field* F = a[0].field();
  auto uniform_degree = [&](const std::vector<TernaryForm>& v) {
    int deg = -1;
    for (auto& t : v) {
      if (t.field() != F) fail_internal("mixed-field parameter elimination");
      if (deg == -1) deg = t.degree();
      if (t.degree() != deg) fail_input("coefficient degrees must agree");
    }
    return deg;
  };
  int ea = uniform_degree(a), eb = uniform_degree(b);
  int da = int(a.size()) - 1, db = int(b.size()) - 1;
  size_t size = size_t(da + db);
  std::vector<std::vector<TernaryForm>> mat;
  mat.reserve(size);
  // a[i] multiplies s^(da-i) t^i, so the x^j coefficient of a(x, 1) is a[da-j]
  for (int r = 0; r < db; ++r) {
    std::vector<TernaryForm> row;
    for (int c = 0; c < int(size); ++c) {
      int jj = c - r;
      if (jj >= 0 && jj <= da)
        row.push_back(a[size_t(jj)]);
      else
        row.push_back(TernaryForm::zero(F, ea));
    }
    mat.push_back(std::move(row));
  }
  for (int r = 0; r < da; ++r) {
    std::vector<TernaryForm> row;
    for (int c = 0; c < int(size); ++c) {
      int jj = c - r;
      if (jj >= 0 && jj <= db)
        row.push_back(b[size_t(jj)]);
      else
        row.push_back(TernaryForm::zero(F, eb));
    }
    mat.push_back(std::move(row));
  }
  return bareiss_det(std::move(mat), TernaryForm::zero(F, db * ea + da * eb));
}

}  // namespace galcurve
