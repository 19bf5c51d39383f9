// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/drinfeld.hpp"

#include <numeric>

#include "dmod/kpoly.hpp"
#include "dmod/linalg.hpp"

namespace dmod {

DrinfeldModule::DrinfeldModule(SkewPoly phi_t) : phi_t_(std::move(phi_t)) {
  if (!phi_t_.field()) throw std::invalid_argument("Drinfeld module without base field");
  if (phi_t_.deg() < 1) throw std::invalid_argument("phi_t must have positive degree in tau");
}

SkewPoly phi_action(const DrinfeldModule& M, const FqPoly& a) {
  return act(M, a, SkewPoly::constant(M.field(), M.K().one()));
}

SkewPoly act(const DrinfeldModule& M, const FqPoly& a, const SkewPoly& u) {
  SkewPoly r(M.field());
  for (size_t i = a.size(); i-- > 0;) {
    r = skew::mul(M.phi_t(), r);
    if (a[i]) r = skew::add(r, skew::scale_const(u, a[i]));
  }
  return r;
}

Elem gamma_of(const DrinfeldModule& M, const FqPoly& a) {
  const Field& K = M.K();
  Elem g = M.gamma(), r = K.zero();
  for (size_t i = a.size(); i-- > 0;) r = K.add(K.mul(r, g), K.from_const(a[i]));
  return r;
}

FqPoly minpoly_over_fq(const Field& K, const Elem& u) {
  if (!K.is_finite()) throw std::invalid_argument("minpoly_over_fq needs a finite field");
  FieldPtr Kp(std::shared_ptr<const Field>{}, &K);  // non-owning alias
  KPoly m = kp::constant(Kp, K.one());
  Elem c = u;
  do {
    m = kp::mul(m, kp::sub(kp::x(Kp), kp::constant(Kp, c)));
    c = K.twist(c, 1);
  } while (c != u);
  FqPoly r;
  for (auto& e : m.c) {
    if (!K.is_const(e)) throw std::logic_error("conjugate product not over F_q");
    r.push_back(e.a.empty() ? 0 : e.a[0]);
  }
  return r;
}

ModuleInvariants invariants(const DrinfeldModule& M) {
  const Field& K = M.K();
  const ConstField& F = K.fq();
  ModuleInvariants inv;
  inv.rank = M.rank();
  Elem g = M.gamma();
  if (K.is_finite()) {
    inv.char_ideal = minpoly_over_fq(K, g);
  } else if (K.is_const(g)) {
    uint32_t c = g.a.empty() ? 0 : g.a[0];
    inv.char_ideal = {F.neg(c), 1};
  }
  inv.is_generic = inv.char_ideal.empty();
  if (!inv.is_generic) {
    long v = phi_action(M, inv.char_ideal).valuation();
    long d = fqp::deg(inv.char_ideal);
    long h = std::gcd(v, d);
    inv.height = {v / h, d / h};
    inv.is_ordinary = inv.height == Height{1, 1};
  }
  if (K.is_finite()) {
    inv.is_isotrivial = true;
  } else {
    // phi is isotrivial iff every x_i^{q^r - 1} / x_r^{q^i - 1} is constant.
    long r = M.rank();
    const Elem& xr = M.phi_t().lead();
    bool iso = true;
    uint64_t qr = 1;
    for (long i = 0; i < r; ++i) qr *= F.q();
    uint64_t qi = 1;
    for (long i = 0; i < r && iso; ++i, qi *= F.q()) {
      Elem xi = M.phi_t().coeff(i);
      if (K.is_zero(xi)) continue;
      Elem ratio = K.div(K.pow(xi, qr - 1), K.pow(xr, qi - 1));
      iso = K.is_const(ratio);
    }
    inv.is_isotrivial = iso;
  }
  return inv;
}

Elem Embedding::map(const Elem& u) const {
  if (from->same(*to)) return u;
  const Field& L = *to;
  Elem r = L.zero();
  auto c = from->coords(u);
  for (size_t k = c.size(); k-- > 0;) r = L.add(L.mul(r, gen_image), L.from_const(c[k]));
  return r;
}

Elem Embedding::preimage(const Elem& u) const {
  if (from->same(*to)) return u;
  const Field& K = *from;
  const Field& L = *to;
  const ConstField& F = K.fq();
  size_t n = static_cast<size_t>(K.degree()), N = static_cast<size_t>(L.degree());
  FqMat A(N, n);
  Elem p = L.one();
  for (size_t k = 0; k < n; ++k) {
    auto c = L.coords(p);
    for (size_t i = 0; i < N; ++i) A.at(i, k) = c[i];
    p = L.mul(p, gen_image);
  }
  auto x = la::solve(F, A, L.coords(u));
  if (!x) throw std::domain_error("element not in the image of the embedding");
  return K.from_coords(*x);
}

Embedding embed(const FieldPtr& K, const FieldPtr& L) {
  if (!K->is_finite() || !L->is_finite()) throw std::invalid_argument("embeddings need finite fields");
  if (K->same(*L)) return {K, L, K->gen()};
  if (L->degree() % K->degree() != 0) throw std::invalid_argument("degree does not divide");
  std::vector<Elem> c;
  for (auto a : K->modulus()) c.push_back(L->from_const(a));
  auto roots = kp::roots_finite(KPoly(L, c));
  if (roots.empty()) throw std::logic_error("modulus has no root in the extension");
  return {K, L, roots.front()};
}

Embedding extension(const FieldPtr& K, long m) {
  if (m == 1) return {K, K, K->gen()};
  FieldPtr L = Field::finite_default(K->fq_ptr(), static_cast<int>(K->degree() * m));
  return embed(K, L);
}

SkewPoly map_skew(const Embedding& e, const SkewPoly& u) {
  std::vector<Elem> c;
  for (auto& x : u.coeffs()) c.push_back(e.map(x));
  return SkewPoly(e.to, c);
}

DrinfeldModule base_change(const DrinfeldModule& M, const Embedding& e) {
  return DrinfeldModule(map_skew(e, M.phi_t()));
}

namespace {

// The additive polynomial sum u_i X^{q^i} of a skew polynomial.
KPoly additive(const SkewPoly& u) {
  const Field& K = u.K();
  uint64_t q = K.q(), e = 1;
  std::vector<Elem> c;
  for (long i = 0; i <= u.deg(); ++i, e *= q) {
    c.resize(e + 1, K.zero());
    c[e] = u.coeff(i);
  }
  return KPoly(u.field(), c);
}

}  // namespace

TorsionData torsion_splitting(const DrinfeldModule& M, const FqPoly& a0) {
  FqPoly a = a0;
  fqp::trim(a);
  if (a.empty()) throw std::invalid_argument("torsion of a = 0");
  const Field& K = M.K();
  if (!K.is_finite()) throw std::invalid_argument("torsion splitting needs a finite base field");
  const ConstField& F = K.fq();
  FqPoly chr = invariants(M).char_ideal;
  if (fqp::deg(fqp::gcd(F, a, chr)) > 0) throw InseparableError("a is not prime to the characteristic");
  TorsionData out;
  out.embedding = extension(M.field(), 1);
  if (fqp::deg(a) == 0) return out;
  KPoly f = kp::monic(additive(phi_action(M, a)));
  KPoly X = kp::x(M.field()), h = kp::mod(X, f);
  long N = 0;
  do {
    ++N;
    h = kp::powmod(h, K.size(), f);
    if (N > 100000) throw std::logic_error("torsion splitting degree not found");
  } while (h != kp::mod(X, f));
  out.extension_degree = N;
  out.embedding = extension(M.field(), N);
  const Field& L = *out.embedding.to;
  std::vector<Elem> c;
  for (auto& e : f.c) c.push_back(out.embedding.map(e));
  auto roots = kp::roots_finite(KPoly(out.embedding.to, c));
  size_t Ln = static_cast<size_t>(L.degree());
  FqMat acc(0, Ln);
  size_t rk = 0;
  for (auto& z : roots) {
    FqMat T(acc.rows + 1, Ln);
    std::copy(acc.a.begin(), acc.a.end(), T.a.begin());
    auto cz = L.coords(z);
    for (size_t j = 0; j < Ln; ++j) T.at(acc.rows, j) = cz[j];
    size_t r2 = la::rank(F, T);
    if (r2 > rk) {
      rk = r2;
      acc = std::move(T);
      out.basis.push_back(z);
    }
  }
  return out;
}

}  // namespace dmod
