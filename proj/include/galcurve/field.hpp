#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "galcurve/util.hpp"

namespace galcurve {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// One element of a fixed field.  For p > 0 the payload `a` is the canonical
// integer encoding sum(c_i p^i) of the coefficient vector c over F_p; for the
// rationals (p = 0) the element is the reduced fraction a/b, b > 0.
// Elements keep a raw pointer to their field; fields are interned and live for
// the whole process, so the pointer never dangles.
struct FE {
  const Field* f = nullptr;
  std::int64_t a = 0;
  std::int64_t b = 1;

  bool same_field(const FE& o) const { return f == o.f; }
  bool operator==(const FE& o) const { return f == o.f && a == o.a && b == o.b; }
  bool operator!=(const FE& o) const { return !(*this == o); }
  // canonical deterministic order within one field
  bool operator<(const FE& o) const { return a != o.a ? a < o.a : b < o.b; }

  bool is_zero() const;
  bool is_one() const;
  FE operator+(const FE& o) const;
  FE operator-(const FE& o) const;
  FE operator-() const;
  FE operator*(const FE& o) const;
  FE operator/(const FE& o) const;
  FE inv() const;
  FE pow(std::int64_t e) const;      // e may be negative for nonzero elements
  FE frobenius(int j = 1) const;     // x -> x^{p^j}
  FE pth_root() const;               // unique p-th root (finite fields)
  std::vector<std::int64_t> coeffs() const;  // length k over F_p
  std::string str() const;           // "g^2+2" style rendering
};

// F_{p^k} represented as F_p[t]/(m) with m the lexicographically first monic
// irreducible of degree k (coefficient tuples compared high degree first), or
// an explicitly supplied modulus.  p = 0, k = 1 is the rationals; everything
// except plain arithmetic refuses that degenerate case.
//
// Fields are interned: make() with equal parameters returns the same object,
// so pointer equality is field equality.  Instances are immutable and thread
// safe after construction.
class Field {
public:
  static FieldPtr make(std::int64_t p, int k);
  static FieldPtr make(std::int64_t p, int k, const std::vector<std::int64_t>& modulus_low);
  static FieldPtr rationals();

  std::int64_t p() const { return p_; }
  int k() const { return k_; }
  bool is_rational() const { return p_ == 0; }
  // number of elements; 0 for the rationals
  std::uint64_t size() const { return q_; }
  // low coefficients c_0..c_{k-1} of the monic modulus t^k + c_{k-1}t^{k-1} + ... + c_0
  const std::vector<std::int64_t>& modulus() const { return mod_; }
  std::string name() const;  // "F_9", "F_{3^4}", "Q"

  FE zero() const { return FE{this, 0, 1}; }
  FE one() const;
  FE gen() const;  // the class of t; requires k > 1
  FE from_int(std::int64_t n) const;
  FE from_index(std::uint64_t idx) const;
  FE from_coeffs(const std::vector<std::int64_t>& c) const;
  FE from_ratio(std::int64_t num, std::int64_t den) const;

  // element with the given payload assumed valid (internal fast path)
  FE elem(std::int64_t a) const { return FE{this, a, 1}; }

  FE add(const FE& x, const FE& y) const;
  FE sub(const FE& x, const FE& y) const;
  FE neg(const FE& x) const;
  FE mul(const FE& x, const FE& y) const;
  FE inv(const FE& x) const;
  FE pow(const FE& x, std::int64_t e) const;

  // largest field size for which towers are still built
  static constexpr std::uint64_t kMaxSize = std::uint64_t(1) << 22;

private:
  Field(std::int64_t p, int k, std::vector<std::int64_t> mod);
  void build_tables();

  std::int64_t p_ = 0;
  int k_ = 1;
  std::uint64_t q_ = 0;
  std::vector<std::int64_t> mod_;
  // reduction rows: digits of t^{k+i} mod m for i in [0, k-1)
  std::vector<std::vector<std::int64_t>> red_;
  // discrete log tables for |F| <= kMaxTable (index <-> generator power)
  static constexpr std::uint64_t kMaxTable = std::uint64_t(1) << 20;
  std::vector<std::int32_t> log_;   // log_[idx] for idx >= 1
  std::vector<std::int32_t> exp_;   // exp_[e] for e in [0, q-1)

  std::int64_t mul_raw(std::int64_t x, std::int64_t y) const;  // schoolbook
  friend struct FE;
};

// Deterministic embedding F_{p^a} -> F_{p^b} for a | b: the generator of the
// small field is sent to the lexicographically least root of its modulus in
// the big field.  Embeddings are cached process-wide.
class Embedding {
public:
  const Field* from() const { return from_; }
  const Field* to() const { return to_; }
  FE operator()(const FE& x) const;

  static const Embedding& get(const Field* from, const Field* to);

private:
  Embedding(const Field* from, const Field* to);
  const Field* from_;
  const Field* to_;
  std::vector<FE> gen_pows_;  // images of t^0..t^{k_from-1}
};

// Convenience: map x into `to` (identity when the fields coincide).
FE embed(const FE& x, const Field* to);

// Minimal j such that x is fixed by Frobenius^(j*k0) where the base field has
// degree k0 over F_p; i.e. the level of x in the tower over F_{p^k0}.
// x lives in F_{p^{k0*K}}; the result divides K.
int minimal_level(const FE& x, int k0);

// x rewritten as an element of sub.  Requires sub's degree to divide the
// degree of x's field; errors when x does not lie in the embedded subfield.
FE project_down(const FE& x, const Field* sub);

// Smallest standard field containing copies of both a and b.
const Field* join(const Field* a, const Field* b);

}  // namespace galcurve
