#pragma once

// Independent naive reimplementations used as oracles by the test suites.
// Everything here is deliberately simple-minded: exhaustive scans and
// schoolbook arithmetic, sharing no algorithmic path with the library.

#include <cstdint>
#include <functional>
#include <vector>

#include "galcurve/field.hpp"

namespace oracles {

using galcurve::FE;
using galcurve::Field;
using Digits = std::vector<std::int64_t>;  // poly over F_p, low degree first

inline std::int64_t omod(std::int64_t x, std::int64_t p) {
  x %= p;
  return x < 0 ? x + p : x;
}

inline void otrim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Digits omul(const Digits& a, const Digits& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = omod(r[i + j] + a[i] * b[j], p);
  otrim(r);
  return r;
}

inline Digits osub(Digits a, const Digits& b, std::int64_t p) {
  a.resize(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = omod(a[i] - b[i], p);
  otrim(a);
  return a;
}

// remainder of a by monic b
inline Digits orem(Digits a, const Digits& b, std::int64_t p) {
  std::int64_t lcinv = 1;
  for (std::int64_t t = 1; t < p; ++t)
    if (omod(t * b.back(), p) == 1) lcinv = t;
  while (a.size() >= b.size() && !a.empty()) {
    std::int64_t c = omod(a.back() * lcinv, p);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] = omod(a[i + shift] - c * b[i], p);
    otrim(a);
  }
  return a;
}

// monic gcd by repeated remainders
inline Digits gcd_fp(Digits a, Digits b, std::int64_t p) {
  otrim(a);
  otrim(b);
  while (!b.empty()) {
    Digits r = orem(a, b, p);
    a = b;
    b = r;
  }
  if (!a.empty() && a.back() != 1) {
    std::int64_t lcinv = 1;
    for (std::int64_t t = 1; t < p; ++t)
      if (omod(t * a.back(), p) == 1) lcinv = t;
    for (auto& c : a) c = omod(c * lcinv, p);
  }
  return a;
}

// decode integer to monic polynomial of degree k: t^k + digits(enc)
inline Digits monic_from_enc(std::uint64_t enc, int k, std::int64_t p) {
  Digits f(size_t(k) + 1, 0);
  for (int i = 0; i < k; ++i) {
    f[size_t(i)] = std::int64_t(enc % std::uint64_t(p));
    enc /= std::uint64_t(p);
  }
  f[size_t(k)] = 1;
  return f;
}

// trial-division irreducibility: divide by every monic polynomial of degree
// 1..k/2
inline bool irreducible_by_trial_division(const Digits& f, std::int64_t p) {
  int k = int(f.size()) - 1;
  for (int dd = 1; dd <= k / 2; ++dd) {
    std::uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= std::uint64_t(p);
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      Digits g = monic_from_enc(enc, dd, p);
      if (orem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// first monic irreducible of degree k in integer-encoding order
inline Digits lex_first_irreducible(std::int64_t p, int k) {
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) q *= std::uint64_t(p);
  for (std::uint64_t enc = 0; enc < q; ++enc) {
    Digits f = monic_from_enc(enc, k, p);
    if (irreducible_by_trial_division(f, p)) return f;
  }
  return {};
}

// all elements x of F with pred(x), by exhaustive scan
inline std::vector<FE> scan_field(const Field* F, const std::function<bool(const FE&)>& pred) {
  std::vector<FE> out;
  for (std::uint64_t i = 0; i < F->size(); ++i) {
    FE x = F->from_index(i);
    if (pred(x)) out.push_back(x);
  }
  return out;
}

}  // namespace oracles
