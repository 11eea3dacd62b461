#include "galcurve/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace galcurve {
namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using Digits = std::vector<i64>;  // poly over F_p, low degree first, no trailing zeros

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Digits& a) { return int(a.size()) - 1; }

i64 mod_p(i64 x, i64 p) {
  x %= p;
  if (x < 0) x += p;
  return x;
}

Digits add_fp(const Digits& a, const Digits& b, i64 p) {
  Digits r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    i64 v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = mod_p(v, p);
  }
  trim(r);
  return r;
}

Digits scale_fp(const Digits& a, i64 c, i64 p) {
  Digits r(a);
  for (auto& x : r) x = mod_p(x * c, p);
  trim(r);
  return r;
}

Digits mul_fp(const Digits& a, const Digits& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod_p(r[i + j] + a[i] * b[j], p);
  trim(r);
  return r;
}

i64 inv_mod_p(i64 a, i64 p) {
  // extended euclid on integers
  i64 t = 0, nt = 1, r = p, nr = mod_p(a, p);
  while (nr != 0) {
    i64 q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return mod_p(t, p);
}

// remainder of a by monic-normalizable b
Digits rem_fp(Digits a, const Digits& b, i64 p) {
  i64 lcinv = inv_mod_p(b.back(), p);
  while (deg(a) >= deg(b) && !a.empty()) {
    i64 c = mod_p(a.back() * lcinv, p);
    int shift = deg(a) - deg(b);
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] = mod_p(a[i + shift] - c * b[i], p);
    trim(a);
  }
  return a;
}

Digits gcd_fp(Digits a, Digits b, i64 p) {
  while (!b.empty()) {
    Digits r = rem_fp(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale_fp(a, inv_mod_p(a.back(), p), p);
  return a;
}

Digits powmod_fp(Digits base, u64 e, const Digits& m, i64 p) {
  Digits r{1};
  base = rem_fp(std::move(base), m, p);
  while (e) {
    if (e & 1) r = rem_fp(mul_fp(r, base, p), m, p);
    base = rem_fp(mul_fp(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// x^(p^j) mod m
Digits frob_fp(Digits x, int j, const Digits& m, i64 p) {
  for (int i = 0; i < j; ++i) x = powmod_fp(std::move(x), u64(p), m, p);
  return x;
}

bool is_irreducible_fp(const Digits& f, i64 p) {
  int k = deg(f);
  if (k < 1) return false;
  if (k == 1) return true;
  // Rabin: x^(p^k) == x mod f, and gcd(x^(p^(k/r)) - x, f) = 1 for primes r | k
  Digits x{0, 1};
  Digits xq = frob_fp(x, k, f, p);
  if (add_fp(xq, scale_fp(x, p - 1, p), p) != Digits{}) return false;
  int n = k;
  for (int r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    while (n % r == 0) n /= r;
    Digits t = add_fp(frob_fp(x, k / r, f, p), scale_fp(x, p - 1, p), p);
    if (deg(gcd_fp(f, t, p)) != 0) return false;
  }
  if (n > 1) {
    Digits t = add_fp(frob_fp(x, k / n, f, p), scale_fp(x, p - 1, p), p);
    if (deg(gcd_fp(f, t, p)) != 0) return false;
  }
  return true;
}

bool is_prime_i64(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> ps;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    ps.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

i64 checked_i64(__int128 v, const char* what) {
  if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN))
    throw Error(ErrKind::input, std::string("rational arithmetic overflow in ") + what);
  return i64(v);
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field::Field(i64 p, int k, Digits mod) : p_(p), k_(k), mod_(std::move(mod)) {
  if (p_ == 0) {
    q_ = 0;
    return;
  }
  q_ = 1;
  for (int i = 0; i < k_; ++i) {
    q_ *= u64(p_);
    if (q_ > kMaxSize) fail_input("field too large: p^k exceeds 2^22");
  }
  // reduction rows: row i = digits of t^(k+i) mod m
  if (k_ > 1) {
    Digits m = mod_;
    m.resize(size_t(k_) + 1, 0);
    m[size_t(k_)] = 1;
    for (int i = 0; i + 1 < k_; ++i) {
      Digits t(size_t(k_ + i) + 1, 0);
      t[size_t(k_ + i)] = 1;
      Digits r = rem_fp(t, m, p_);
      r.resize(size_t(k_), 0);
      red_.push_back(r);
    }
  }
  build_tables();
}

void Field::build_tables() {
  if (q_ > kMaxTable || q_ < 3) return;
  u64 n = q_ - 1;
  auto ps = prime_factors(n);
  i64 g = -1;
  for (u64 cand = 1; cand < q_; ++cand) {
    bool prim = true;
    for (u64 r : ps) {
      // cand^(n/r) via square and multiply on raw indices
      u64 e = n / r;
      i64 acc = 1, base = i64(cand);
      while (e) {
        if (e & 1) acc = mul_raw(acc, base);
        base = mul_raw(base, base);
        e >>= 1;
      }
      if (acc == 1) {
        prim = false;
        break;
      }
    }
    if (prim) {
      g = i64(cand);
      break;
    }
  }
  if (g < 0) fail_internal("no primitive element found");
  exp_.assign(n, 0);
  log_.assign(q_, 0);
  i64 cur = 1;
  for (u64 i = 0; i < n; ++i) {
    exp_[i] = std::int32_t(cur);
    log_[cur] = std::int32_t(i);
    cur = mul_raw(cur, g);
  }
}

i64 Field::mul_raw(i64 x, i64 y) const {
  if (x == 0 || y == 0) return 0;
  if (k_ == 1) return mod_p(x * y, p_);
  // digit convolution
  i64 xd[32], yd[32];
  i64 xx = x, yy = y;
  for (int i = 0; i < k_; ++i) {
    xd[i] = xx % p_;
    xx /= p_;
    yd[i] = yy % p_;
    yy /= p_;
  }
  i64 conv[63] = {0};
  for (int i = 0; i < k_; ++i) {
    if (!xd[i]) continue;
    for (int j = 0; j < k_; ++j) conv[i + j] += xd[i] * yd[j];
  }
  i64 low[32];
  for (int i = 0; i < k_; ++i) low[i] = conv[i] % p_;
  for (int i = 0; i + 1 < k_; ++i) {
    i64 c = conv[k_ + i] % p_;
    if (!c) continue;
    const Digits& row = red_[size_t(i)];
    for (int j = 0; j < k_; ++j) low[j] += c * row[size_t(j)];
  }
  i64 r = 0;
  for (int i = k_ - 1; i >= 0; --i) r = r * p_ + mod_p(low[i], p_);
  return r;
}

namespace {
std::mutex g_field_mu;
std::map<std::tuple<i64, int, Digits>, FieldPtr>& field_registry() {
  static std::map<std::tuple<i64, int, Digits>, FieldPtr> reg;
  return reg;
}
}  // namespace

FieldPtr Field::make(i64 p, int k) {
  if (p == 0) return rationals();
  if (!is_prime_i64(p)) fail_input("field characteristic must be prime, got " + std::to_string(p));
  if (k < 1 || k > 30) fail_input("extension degree out of range");
  if (k == 1) return make(p, 1, Digits{});
  // lexicographically first monic irreducible: coefficient tuples ordered with
  // the high-degree coefficient most significant, i.e. by integer encoding.
  u64 q = 1;
  for (int i = 0; i < k; ++i) {
    q *= u64(p);
    if (q > kMaxSize) fail_input("field too large: p^k exceeds 2^22");
  }
  for (u64 enc = 0;; ++enc) {
    if (enc >= q) fail_internal("no irreducible modulus found");
    Digits f(size_t(k) + 1, 0);
    u64 e = enc;
    for (int i = 0; i < k; ++i) {
      f[size_t(i)] = i64(e % u64(p));
      e /= u64(p);
    }
    f[size_t(k)] = 1;
    if (is_irreducible_fp(f, p)) {
      Digits low(f.begin(), f.end() - 1);
      return make(p, k, low);
    }
  }
}

FieldPtr Field::make(i64 p, int k, const Digits& modulus_low) {
  if (p == 0) return rationals();
  if (!is_prime_i64(p)) fail_input("field characteristic must be prime, got " + std::to_string(p));
  Digits low(modulus_low);
  low.resize(size_t(std::max(k, 1)), 0);
  for (auto& c : low) c = mod_p(c, p);
  if (k > 1) {
    Digits f(low);
    f.resize(size_t(k) + 1, 0);
    f[size_t(k)] = 1;
    if (!is_irreducible_fp(f, p)) fail_input("modulus is not irreducible");
  } else {
    low.clear();
  }
  std::lock_guard<std::mutex> lk(g_field_mu);
  auto key = std::make_tuple(p, k, low);
  auto& reg = field_registry();
  auto it = reg.find(key);
  if (it != reg.end()) return it->second;
  FieldPtr f(new Field(p, k, low));
  reg.emplace(key, f);
  return f;
}

FieldPtr Field::rationals() {
  std::lock_guard<std::mutex> lk(g_field_mu);
  auto key = std::make_tuple(i64(0), 1, Digits{});
  auto& reg = field_registry();
  auto it = reg.find(key);
  if (it != reg.end()) return it->second;
  FieldPtr f(new Field(0, 1, {}));
  reg.emplace(key, f);
  return f;
}

std::string Field::name() const {
  if (is_rational()) return "Q";
  std::ostringstream os;
  if (k_ == 1)
    os << "F_" << p_;
  else if (q_ <= 9999)
    os << "F_" << q_;
  else
    os << "F_{" << p_ << "^" << k_ << "}";
  return os.str();
}

FE Field::one() const { return is_rational() ? FE{this, 1, 1} : FE{this, 1, 1}; }

FE Field::gen() const {
  if (is_rational() || k_ == 1) fail_input("field has no extension generator");
  return FE{this, p_, 1};
}

FE Field::from_int(i64 n) const {
  if (is_rational()) return FE{this, n, 1};
  return FE{this, mod_p(n, p_), 1};
}

FE Field::from_index(u64 idx) const {
  if (is_rational()) fail_input("from_index on the rationals");
  if (idx >= q_) fail_input("element index out of range");
  return FE{this, i64(idx), 1};
}

FE Field::from_coeffs(const Digits& c) const {
  if (is_rational()) fail_input("from_coeffs on the rationals");
  if (int(c.size()) > k_) {
    for (size_t i = size_t(k_); i < c.size(); ++i)
      if (mod_p(c[i], p_) != 0) fail_input("coefficient vector longer than extension degree");
  }
  i64 a = 0;
  for (int i = std::min<int>(k_, int(c.size())) - 1; i >= 0; --i) a = a * p_ + mod_p(c[size_t(i)], p_);
  return FE{this, a, 1};
}

FE Field::from_ratio(i64 num, i64 den) const {
  if (den == 0) fail_input("zero denominator");
  if (!is_rational()) {
    FE d = from_int(den);
    if (d.is_zero()) fail_input("denominator vanishes in F_p");
    return mul(from_int(num), inv(d));
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i64 g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return FE{this, num, den};
}

FE Field::add(const FE& x, const FE& y) const {
  if (is_rational()) {
    __int128 n = __int128(x.a) * y.b + __int128(y.a) * x.b;
    __int128 d = __int128(x.b) * y.b;
    i64 nn = checked_i64(n, "add"), dd = checked_i64(d, "add");
    return from_ratio(nn, dd);
  }
  if (p_ == 2) return FE{this, x.a ^ y.a, 1};
  if (k_ == 1) return FE{this, mod_p(x.a + y.a, p_), 1};
  i64 r = 0, xx = x.a, yy = y.a, mul = 1;
  for (int i = 0; i < k_; ++i) {
    r += mod_p(xx % p_ + yy % p_, p_) * mul;
    mul *= p_;
    xx /= p_;
    yy /= p_;
  }
  return FE{this, r, 1};
}

FE Field::neg(const FE& x) const {
  if (is_rational()) return FE{this, -x.a, x.b};
  if (p_ == 2) return x;
  if (k_ == 1) return FE{this, mod_p(-x.a, p_), 1};
  i64 r = 0, xx = x.a, mul = 1;
  for (int i = 0; i < k_; ++i) {
    r += mod_p(-(xx % p_), p_) * mul;
    mul *= p_;
    xx /= p_;
  }
  return FE{this, r, 1};
}

FE Field::sub(const FE& x, const FE& y) const { return add(x, neg(y)); }

FE Field::mul(const FE& x, const FE& y) const {
  if (is_rational()) {
    __int128 n = __int128(x.a) * y.a;
    __int128 d = __int128(x.b) * y.b;
    return from_ratio(checked_i64(n, "mul"), checked_i64(d, "mul"));
  }
  if (!log_.empty()) {
    if (x.a == 0 || y.a == 0) return zero();
    u64 e = u64(log_[x.a]) + u64(log_[y.a]);
    if (e >= q_ - 1) e -= q_ - 1;
    return FE{this, exp_[e], 1};
  }
  return FE{this, mul_raw(x.a, y.a), 1};
}

FE Field::inv(const FE& x) const {
  if (x.is_zero()) fail_input("division by zero");
  if (is_rational()) return from_ratio(x.b, x.a);
  if (!log_.empty()) {
    u64 e = (q_ - 1 - u64(log_[x.a])) % (q_ - 1);
    return FE{this, exp_[e], 1};
  }
  return pow(x, i64(q_) - 2);
}

FE Field::pow(const FE& x, i64 e) const {
  if (is_rational()) {
    FE r = one(), b = x;
    i64 ee = e;
    if (ee < 0) {
      b = inv(b);
      ee = -ee;
    }
    while (ee) {
      if (ee & 1) r = mul(r, b);
      b = mul(b, b);
      ee >>= 1;
    }
    return r;
  }
  if (x.is_zero()) {
    if (e == 0) return one();
    if (e < 0) fail_input("division by zero");
    return zero();
  }
  u64 n = q_ - 1;
  i64 em = e % i64(n);
  if (em < 0) em += i64(n);
  if (!log_.empty()) {
    u64 ee = (u64(log_[x.a]) * u64(em)) % n;
    return FE{this, exp_[ee], 1};
  }
  FE r = one(), b = x;
  u64 ee = u64(em);
  while (ee) {
    if (ee & 1) r = mul(r, b);
    b = mul(b, b);
    ee >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// FE forwarding

bool FE::is_zero() const { return a == 0; }
bool FE::is_one() const { return f->is_rational() ? (a == 1 && b == 1) : a == 1; }
FE FE::operator+(const FE& o) const { return f->add(*this, o); }
FE FE::operator-(const FE& o) const { return f->sub(*this, o); }
FE FE::operator-() const { return f->neg(*this); }
FE FE::operator*(const FE& o) const { return f->mul(*this, o); }
FE FE::operator/(const FE& o) const { return f->mul(*this, f->inv(o)); }
FE FE::inv() const { return f->inv(*this); }
FE FE::pow(std::int64_t e) const { return f->pow(*this, e); }

FE FE::frobenius(int j) const {
  if (f->is_rational()) return *this;
  FE r = *this;
  for (int i = 0; i < j; ++i) r = f->pow(r, f->p());
  return r;
}

FE FE::pth_root() const {
  if (f->is_rational()) fail_input("p-th root on the rationals");
  return frobenius(f->k() - 1);
}

std::vector<std::int64_t> FE::coeffs() const {
  if (f->is_rational()) fail_input("coeffs on the rationals");
  std::vector<i64> c(size_t(f->k()));
  i64 x = a;
  for (int i = 0; i < f->k(); ++i) {
    c[size_t(i)] = x % f->p();
    x /= f->p();
  }
  return c;
}

std::string FE::str() const {
  if (f->is_rational()) {
    std::ostringstream os;
    os << a;
    if (b != 1) os << "/" << b;
    return os.str();
  }
  if (f->k() == 1) return std::to_string(a);
  auto c = coeffs();
  std::ostringstream os;
  bool first = true;
  for (int i = f->k() - 1; i >= 0; --i) {
    if (!c[size_t(i)]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[size_t(i)] != 1) os << c[size_t(i)];
    if (i >= 1) {
      if (c[size_t(i)] != 1) os << "*";
      os << "g";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Embedding

namespace {
std::mutex g_emb_mu;
std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>>& emb_registry() {
  static std::map<std::pair<const Field*, const Field*>, std::unique_ptr<Embedding>> reg;
  return reg;
}
}  // namespace

Embedding::Embedding(const Field* from, const Field* to) : from_(from), to_(to) {
  if (from->is_rational() || to->is_rational()) fail_input("embeddings exist between finite fields only");
  if (from->p() != to->p() || to->k() % from->k() != 0)
    fail_input("no embedding " + from->name() + " -> " + to->name());
  if (from == to) {
    gen_pows_.push_back(to->one());
    return;
  }
  // least root of the small modulus in the big field
  int kf = from->k();
  std::vector<FE> mc;  // monic modulus coefficients in `to`, low first
  for (i64 c : from->modulus()) mc.push_back(to->from_int(c));
  mc.push_back(to->one());
  FE root = to->zero();
  bool found = false;
  if (kf == 1) {
    root = to->one();  // generator of F_p is 1; map is the prime-field inclusion
    found = true;
  } else {
    for (u64 idx = 0; idx < to->size(); ++idx) {
      FE x = to->from_index(idx);
      FE v = to->zero();
      for (int i = kf; i >= 0; --i) v = v * x + mc[size_t(i)];
      if (v.is_zero()) {
        root = x;
        found = true;
        break;
      }
    }
  }
  if (!found) fail_internal("modulus has no root in extension field");
  FE pw = to->one();
  for (int i = 0; i < kf; ++i) {
    gen_pows_.push_back(pw);
    pw = pw * root;
  }
}

FE Embedding::operator()(const FE& x) const {
  if (x.f != from_) fail_input("embedding applied to element of wrong field");
  if (from_ == to_) return x;
  auto c = x.coeffs();
  FE r = to_->zero();
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i]) r = r + to_->from_int(c[i]) * gen_pows_[i];
  return r;
}

const Embedding& Embedding::get(const Field* from, const Field* to) {
  std::lock_guard<std::mutex> lk(g_emb_mu);
  auto key = std::make_pair(from, to);
  auto& reg = emb_registry();
  auto it = reg.find(key);
  if (it == reg.end()) it = reg.emplace(key, std::unique_ptr<Embedding>(new Embedding(from, to))).first;
  return *it->second;
}

FE embed(const FE& x, const Field* to) {
  if (x.f == to) return x;
  return Embedding::get(x.f, to)(x);
}

int minimal_level(const FE& x, int k0) {
  const Field* f = x.f;
  if (f->is_rational()) return 1;
  if (f->k() % k0 != 0) fail_input("element field is not a tower extension of the base");
  int K = f->k() / k0;
  for (int j = 1; j <= K; ++j) {
    if (K % j) continue;
    if (x.frobenius(j * k0) == x) return j;
  }
  fail_internal("frobenius orbit did not close");
}

FE project_down(const FE& x, const Field* sub) {
  const Field* big = x.f;
  if (sub == big) return x;
  if (sub->is_rational() || big->is_rational())
    fail_input("projection between distinct fields needs positive characteristic");
  if (sub->p() != big->p() || big->k() % sub->k() != 0)
    fail_input("target is not a subfield");
  std::int64_t p = big->p();
  int ks = sub->k(), kb = big->k();
  const Embedding& emb = Embedding::get(sub, big);

  // basis images as columns; solve for x's coordinates over F_p
  std::vector<std::vector<std::int64_t>> col;
  col.resize(size_t(ks));
  for (int i = 0; i < ks; ++i) {
    std::vector<std::int64_t> e(size_t(ks), 0);
    e[size_t(i)] = 1;
    col[size_t(i)] = emb(sub->from_coeffs(e)).coeffs();
  }
  std::vector<std::int64_t> rhs = x.coeffs();

  std::vector<std::vector<std::int64_t>> m(size_t(kb), std::vector<std::int64_t>(size_t(ks) + 1, 0));
  for (int r = 0; r < kb; ++r) {
    for (int c = 0; c < ks; ++c) m[size_t(r)][size_t(c)] = col[size_t(c)][size_t(r)];
    m[size_t(r)][size_t(ks)] = rhs[size_t(r)];
  }
  auto inv_mod = [&](std::int64_t a) {
    std::int64_t r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int row = 0;
  std::vector<int> pivot_col(size_t(kb), -1);
  for (int c = 0; c < ks && row < kb; ++c) {
    int pr = -1;
    for (int r = row; r < kb; ++r)
      if (m[size_t(r)][size_t(c)] % p != 0) { pr = r; break; }
    if (pr < 0) continue;
    std::swap(m[size_t(row)], m[size_t(pr)]);
    std::int64_t iv = inv_mod(((m[size_t(row)][size_t(c)] % p) + p) % p);
    for (auto& v : m[size_t(row)]) v = ((v % p) * iv % p + p) % p;
    for (int r = 0; r < kb; ++r) {
      if (r == row) continue;
      std::int64_t f = ((m[size_t(r)][size_t(c)] % p) + p) % p;
      if (!f) continue;
      for (int c2 = 0; c2 <= ks; ++c2)
        m[size_t(r)][size_t(c2)] = ((m[size_t(r)][size_t(c2)] - f * m[size_t(row)][size_t(c2)]) % p + p) % p;
    }
    pivot_col[size_t(row)] = c;
    ++row;
  }
  for (int r = row; r < kb; ++r)
    if (m[size_t(r)][size_t(ks)] % p != 0) fail_input("element does not lie in the subfield");
  std::vector<std::int64_t> c_out(size_t(ks), 0);
  for (int r = 0; r < row; ++r) c_out[size_t(pivot_col[size_t(r)])] = m[size_t(r)][size_t(ks)];
  FE y = sub->from_coeffs(c_out);
  if (emb(y) != x) fail_internal("subfield projection round trip failed");
  return y;
}

const Field* join(const Field* a, const Field* b) {
  if (a == b) return a;
  if (a->is_rational() || b->is_rational()) {
    if (a->is_rational() && b->is_rational()) return a;
    fail_input("no common extension of the rationals and a finite field");
  }
  if (a->p() != b->p()) fail_input("fields of different characteristic have no join");
  int ka = a->k(), kb = b->k();
  int g = std::gcd(ka, kb);
  return Field::make(a->p(), ka / g * kb).get();
}

}  // namespace galcurve
