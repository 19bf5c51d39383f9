// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/kpoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dmod {

KPoly::KPoly(FieldPtr k, std::vector<Elem> cs) : K(std::move(k)), c(std::move(cs)) {
  while (!c.empty() && K->is_zero(c.back())) c.pop_back();
}

Elem KPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return K->zero();
  return c[static_cast<size_t>(i)];
}

namespace kp {

KPoly zero(const FieldPtr& K) { return KPoly(K, {}); }
KPoly constant(const FieldPtr& K, const Elem& c) { return KPoly(K, {c}); }
KPoly x(const FieldPtr& K) { return KPoly(K, {K->zero(), K->one()}); }

KPoly add(const KPoly& a, const KPoly& b) {
  const Field& K = *a.K;
  size_t n = std::max(a.c.size(), b.c.size());
  std::vector<Elem> r(n, K.zero());
  for (size_t i = 0; i < n; ++i) {
    if (i < a.c.size() && i < b.c.size())
      r[i] = K.add(a.c[i], b.c[i]);
    else
      r[i] = i < a.c.size() ? a.c[i] : b.c[i];
  }
  return KPoly(a.K, std::move(r));
}

KPoly neg(const KPoly& a) {
  std::vector<Elem> r;
  for (auto& e : a.c) r.push_back(a.K->neg(e));
  return KPoly(a.K, std::move(r));
}

KPoly sub(const KPoly& a, const KPoly& b) { return add(a, neg(b)); }

KPoly mul(const KPoly& a, const KPoly& b) {
  const Field& K = *a.K;
  if (a.c.empty() || b.c.empty()) return zero(a.K);
  std::vector<Elem> r(a.c.size() + b.c.size() - 1, K.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (K.is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      if (!K.is_zero(b.c[j])) r[i + j] = K.add(r[i + j], K.mul(a.c[i], b.c[j]));
  }
  return KPoly(a.K, std::move(r));
}

KPoly scale(const KPoly& a, const Elem& c) {
  std::vector<Elem> r;
  for (auto& e : a.c) r.push_back(a.K->mul(e, c));
  return KPoly(a.K, std::move(r));
}

KPoly monic(const KPoly& a) {
  if (a.c.empty()) return a;
  return scale(a, a.K->inv(a.lead()));
}

void divmod(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r) {
  if (b.c.empty()) throw std::domain_error("polynomial division by zero");
  const Field& K = *a.K;
  std::vector<Elem> rem = a.c;
  int db = b.deg();
  if (a.deg() < db) {
    q = zero(a.K);
    r = a;
    return;
  }
  std::vector<Elem> quot(static_cast<size_t>(a.deg() - db + 1), K.zero());
  Elem il = K.inv(b.lead());
  for (int k = a.deg(); k >= db; --k) {
    const Elem& top = rem[static_cast<size_t>(k)];
    if (K.is_zero(top)) continue;
    Elem cq = K.mul(top, il);
    quot[static_cast<size_t>(k - db)] = cq;
    for (int i = 0; i <= db; ++i) {
      auto& slot = rem[static_cast<size_t>(k - db + i)];
      slot = i == db ? K.zero() : K.sub(slot, K.mul(cq, b.c[static_cast<size_t>(i)]));
    }
  }
  rem.resize(static_cast<size_t>(db));
  q = KPoly(a.K, std::move(quot));
  r = KPoly(a.K, std::move(rem));
}

KPoly div(const KPoly& a, const KPoly& b) {
  KPoly q, r;
  divmod(a, b, q, r);
  return q;
}

KPoly mod(const KPoly& a, const KPoly& b) {
  KPoly q, r;
  divmod(a, b, q, r);
  return r;
}

KPoly gcd(KPoly a, KPoly b) {
  while (!b.c.empty()) {
    KPoly r = mod(a, b);
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

KPoly pow(const KPoly& a, uint64_t n) {
  KPoly r = constant(a.K, a.K->one()), b = a;
  while (n) {
    if (n & 1) r = mul(r, b);
    n >>= 1;
    if (n) b = mul(b, b);
  }
  return r;
}

KPoly powmod(const KPoly& a, uint64_t n, const KPoly& m) {
  KPoly r = mod(constant(a.K, a.K->one()), m), b = mod(a, m);
  while (n) {
    if (n & 1) r = mod(mul(r, b), m);
    n >>= 1;
    if (n) b = mod(mul(b, b), m);
  }
  return r;
}

KPoly deriv(const KPoly& a) {
  std::vector<Elem> r;
  for (size_t i = 1; i < a.c.size(); ++i)
    r.push_back(a.K->scale(a.c[i], a.K->fq().from_int(static_cast<int64_t>(i))));
  return KPoly(a.K, std::move(r));
}

Elem eval(const KPoly& a, const Elem& v) {
  const Field& K = *a.K;
  Elem r = K.zero();
  for (size_t i = a.c.size(); i-- > 0;) r = K.add(K.mul(r, v), a.c[i]);
  return r;
}

KPoly compose(const KPoly& f, const KPoly& g) {
  KPoly r = zero(f.K);
  for (size_t i = f.c.size(); i-- > 0;) r = add(mul(r, g), constant(f.K, f.c[i]));
  return r;
}

Elem resultant(const KPoly& a0, const KPoly& b0) {
  const Field& K = *a0.K;
  if (a0.is_zero() || b0.is_zero()) return K.zero();
  KPoly a = a0, b = b0;
  Elem res = K.one();
  // res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r) where a = qb + r.
  while (true) {
    int da = a.deg(), db = b.deg();
    if (db == 0) return K.mul(res, K.pow(b.lead(), static_cast<uint64_t>(da)));
    KPoly r = mod(a, b);
    if (r.is_zero()) return K.zero();
    int dr = r.deg();
    if ((da % 2 == 1) && (db % 2 == 1)) res = K.neg(res);
    res = K.mul(res, K.pow(b.lead(), static_cast<uint64_t>(da - dr)));
    a = std::move(b);
    b = std::move(r);
  }
}

KPoly twist(const KPoly& a, long j) {
  std::vector<Elem> r;
  for (auto& e : a.c) r.push_back(a.K->twist(e, j));
  return KPoly(a.K, std::move(r));
}

namespace {

// a^{|K|} mod m, computed as n successive q-th powers.
KPoly pow_card(const KPoly& a, const KPoly& m) {
  KPoly r = mod(a, m);
  for (int i = 0; i < a.K->degree(); ++i) r = powmod(r, a.K->q(), m);
  return r;
}

KPoly pth_root(const KPoly& f) {
  const Field& K = *f.K;
  size_t p = K.fq().p();
  uint64_t e = K.size() / p;  // c^{|K|/p} is the p-th root of c
  std::vector<Elem> r;
  for (size_t i = 0; i < f.c.size(); i += p) r.push_back(K.pow(f.c[i], e));
  return KPoly(f.K, std::move(r));
}

void squarefree(const KPoly& f, int mult, std::vector<std::pair<KPoly, int>>& out) {
  if (f.deg() < 1) return;
  KPoly d = deriv(f);
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * static_cast<int>(f.K->fq().p()), out);
    return;
  }
  KPoly c = gcd(f, d), w = div(f, c);
  int i = 1;
  while (w.deg() > 0) {
    KPoly y = gcd(w, c), z = div(w, y);
    if (z.deg() > 0) out.push_back({monic(z), i * mult});
    ++i;
    w = y;
    c = div(c, y);
  }
  if (c.deg() > 0) squarefree(pth_root(c), mult * static_cast<int>(f.K->fq().p()), out);
}

void equal_degree(const KPoly& f, int d, std::mt19937_64& rng, std::vector<KPoly>& out) {
  int n = f.deg();
  if (n == d) {
    out.push_back(monic(f));
    return;
  }
  const Field& K = *f.K;
  while (true) {
    std::vector<Elem> ac;
    for (int i = 0; i < n; ++i) ac.push_back(K.element(rng() % K.size()));
    KPoly a(f.K, ac);
    if (a.deg() < 1) continue;
    KPoly b;
    if (K.fq().p() == 2) {
      unsigned steps = K.fq().e() * static_cast<unsigned>(K.degree() * d);
      KPoly s = a;
      b = a;
      for (unsigned i = 1; i < steps; ++i) {
        s = mod(mul(s, s), f);
        b = add(b, s);
      }
    } else {
      KPoly s = a, acc = a;
      for (int i = 1; i < d; ++i) {
        s = pow_card(s, f);
        acc = mod(mul(acc, s), f);
      }
      // acc is the norm to K; raise to (|K|-1)/2 by q-powers where possible.
      uint64_t h = (K.size() - 1) / 2;
      b = sub(powmod(acc, h, f), constant(f.K, K.one()));
    }
    KPoly g = gcd(b, f);
    if (g.deg() > 0 && g.deg() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(div(f, g), d, rng, out);
      return;
    }
  }
}

bool kpoly_less(const KPoly& a, const KPoly& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
  for (size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return elem_less(a.c[i], b.c[i]);
  return false;
}

}  // namespace

std::vector<std::pair<KPoly, int>> factor_finite(const KPoly& f) {
  if (!f.K->is_finite()) throw std::invalid_argument("factor_finite over infinite field");
  if (f.is_zero()) throw std::invalid_argument("factor of zero polynomial");
  std::vector<std::pair<KPoly, int>> sqf, out;
  squarefree(monic(f), 1, sqf);
  std::mt19937_64 rng(0x5eed5eedULL);
  for (auto& [g0, m] : sqf) {
    KPoly g = g0, h = x(f.K), X = x(f.K);
    for (int d = 1; g.deg() > 0; ++d) {
      if (2 * d > g.deg()) {
        out.push_back({monic(g), m});
        break;
      }
      h = pow_card(h, g);
      KPoly e = gcd(sub(h, X), g);
      if (e.deg() > 0) {
        std::vector<KPoly> parts;
        equal_degree(e, d, rng, parts);
        for (auto& p : parts) out.push_back({p, m});
        g = div(g, e);
        h = mod(h, g);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return kpoly_less(a.first, b.first);
    return a.second < b.second;
  });
  std::vector<std::pair<KPoly, int>> merged;
  for (auto& pr : out) {
    if (!merged.empty() && merged.back().first == pr.first)
      merged.back().second += pr.second;
    else
      merged.push_back(pr);
  }
  return merged;
}

bool is_irreducible_finite(const KPoly& f) {
  if (f.deg() < 1) return false;
  auto fac = factor_finite(f);
  return fac.size() == 1 && fac[0].second == 1;
}

std::vector<Elem> roots_finite(const KPoly& f) {
  std::vector<Elem> out;
  if (f.is_zero()) throw std::invalid_argument("roots of zero polynomial");
  if (f.deg() < 1) return out;
  // Restrict to the product of the linear factors first.
  KPoly X = x(f.K), g = monic(f);
  KPoly lin = gcd(sub(pow_card(X, g), X), g);
  if (lin.deg() < 1) return out;
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<KPoly> parts;
  equal_degree(lin, 1, rng, parts);
  for (auto& p : parts) out.push_back(f.K->neg(p.coeff(0)));
  std::sort(out.begin(), out.end(), elem_less);
  return out;
}

std::string render(const KPoly& a) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < a.c.size(); ++i) os << (i ? "," : "") << a.K->render(a.c[i]);
  os << ']';
  return os.str();
}

}  // namespace kp
}  // namespace dmod
