// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/skew.hpp"

#include <sstream>
#include <stdexcept>

namespace dmod {

SkewPoly::SkewPoly(FieldPtr K, std::vector<Elem> c) : K_(std::move(K)), c_(std::move(c)) { trim(); }

SkewPoly SkewPoly::constant(FieldPtr K, const Elem& c) { return SkewPoly(std::move(K), {c}); }

SkewPoly SkewPoly::tau_power(FieldPtr K, long k) {
  std::vector<Elem> c(static_cast<size_t>(k) + 1, K->zero());
  c.back() = K->one();
  return SkewPoly(std::move(K), std::move(c));
}

void SkewPoly::trim() {
  while (!c_.empty() && K_->is_zero(c_.back())) c_.pop_back();
}

Elem SkewPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return K_->zero();
  return c_[static_cast<size_t>(i)];
}

long SkewPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!K_->is_zero(c_[i])) return static_cast<long>(i);
  return kNegInf;
}

bool SkewPoly::is_monic() const { return !c_.empty() && K_->is_one(c_.back()); }

std::string SkewPoly::render() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (K_->is_zero(c_[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << K_->render(c_[i]);
    if (i == 1) os << "*t^";
    if (i > 1) os << "*t^" << i;
  }
  return os.str();
}

namespace skew {

void check_same_field(const SkewPoly& u, const SkewPoly& v) {
  if (!u.field() || !v.field()) throw std::invalid_argument("skew polynomial without base field");
  if (!u.K().same(v.K())) throw std::invalid_argument("mismatched base fields");
}

SkewPoly add(const SkewPoly& u, const SkewPoly& v) {
  check_same_field(u, v);
  const Field& K = u.K();
  size_t n = std::max(u.coeffs().size(), v.coeffs().size());
  std::vector<Elem> c(n, K.zero());
  for (size_t i = 0; i < n; ++i) {
    if (i < u.coeffs().size() && i < v.coeffs().size())
      c[i] = K.add(u.coeffs()[i], v.coeffs()[i]);
    else if (i < u.coeffs().size())
      c[i] = u.coeffs()[i];
    else
      c[i] = v.coeffs()[i];
  }
  return SkewPoly(u.field(), std::move(c));
}

SkewPoly neg(const SkewPoly& u) {
  std::vector<Elem> c;
  c.reserve(u.coeffs().size());
  for (auto& x : u.coeffs()) c.push_back(u.K().neg(x));
  return SkewPoly(u.field(), std::move(c));
}

SkewPoly sub(const SkewPoly& u, const SkewPoly& v) { return add(u, neg(v)); }

SkewPoly mul(const SkewPoly& u, const SkewPoly& v) {
  check_same_field(u, v);
  const Field& K = u.K();
  if (u.is_zero() || v.is_zero()) return SkewPoly(u.field());
  size_t nu = u.coeffs().size(), nv = v.coeffs().size();
  std::vector<Elem> c(nu + nv - 1, K.zero());
  std::vector<Elem> tw = v.coeffs();  // v_j^{q^i}, advanced one twist per row
  for (size_t i = 0; i < nu; ++i) {
    if (i > 0)
      for (auto& x : tw) x = K.twist(x, 1);
    const Elem& a = u.coeffs()[i];
    if (K.is_zero(a)) continue;
    for (size_t j = 0; j < nv; ++j)
      if (!K.is_zero(tw[j])) c[i + j] = K.add(c[i + j], K.mul(a, tw[j]));
  }
  return SkewPoly(u.field(), std::move(c));
}

SkewPoly lscale(const Elem& c, const SkewPoly& u) {
  std::vector<Elem> r;
  r.reserve(u.coeffs().size());
  for (auto& x : u.coeffs()) r.push_back(u.K().mul(c, x));
  return SkewPoly(u.field(), std::move(r));
}

SkewPoly rscale(const SkewPoly& u, const Elem& c) {
  std::vector<Elem> r;
  r.reserve(u.coeffs().size());
  for (size_t i = 0; i < u.coeffs().size(); ++i)
    r.push_back(u.K().mul(u.coeffs()[i], u.K().twist(c, static_cast<long>(i))));
  return SkewPoly(u.field(), std::move(r));
}

SkewPoly scale_const(const SkewPoly& u, uint32_t c) {
  std::vector<Elem> r;
  r.reserve(u.coeffs().size());
  for (auto& x : u.coeffs()) r.push_back(u.K().scale(x, c));
  return SkewPoly(u.field(), std::move(r));
}

SkewPoly tau_mul(long k, const SkewPoly& u) {
  if (u.is_zero()) return u;
  std::vector<Elem> r(static_cast<size_t>(k), u.K().zero());
  for (auto& x : u.coeffs()) r.push_back(u.K().twist(x, k));
  return SkewPoly(u.field(), std::move(r));
}

SkewPoly monic(const SkewPoly& u) {
  if (u.is_zero()) return u;
  return lscale(u.K().inv(u.lead()), u);
}

DivMod right_divmod(const SkewPoly& u, const SkewPoly& v) {
  check_same_field(u, v);
  if (v.is_zero()) throw std::domain_error("right division by zero");
  const Field& K = u.K();
  long dv = v.deg();
  std::vector<Elem> rem = u.coeffs();
  long du = u.deg();
  std::vector<Elem> quot(du >= dv ? static_cast<size_t>(du - dv + 1) : 0, K.zero());
  // Twisted inverses of the leading coefficient and twisted copies of v, by shift k.
  for (long k = du - dv; k >= 0; --k) {
    const Elem& top = rem[static_cast<size_t>(k + dv)];
    if (K.is_zero(top)) continue;
    Elem c = K.div(top, K.twist(v.lead(), k));
    quot[static_cast<size_t>(k)] = c;
    for (long j = 0; j <= dv; ++j) {
      const Elem& vj = v.coeffs()[static_cast<size_t>(j)];
      if (K.is_zero(vj)) continue;
      auto& slot = rem[static_cast<size_t>(k + j)];
      slot = j == dv ? K.zero() : K.sub(slot, K.mul(c, K.twist(vj, k)));
    }
  }
  if (static_cast<long>(rem.size()) > dv) rem.resize(static_cast<size_t>(std::max(dv, 0L)));
  return {SkewPoly(u.field(), std::move(quot)), SkewPoly(u.field(), std::move(rem))};
}

SkewPoly right_rem(const SkewPoly& u, const SkewPoly& v) { return right_divmod(u, v).rem; }

bool right_divides(const SkewPoly& v, const SkewPoly& u) {
  if (v.is_zero()) return u.is_zero();
  return right_rem(u, v).is_zero();
}

SkewPoly gcrd(const std::vector<SkewPoly>& polys) {
  if (polys.empty()) throw std::invalid_argument("gcrd of empty set");
  SkewPoly g = polys[0];
  for (size_t i = 1; i < polys.size(); ++i) {
    check_same_field(g, polys[i]);
    SkewPoly a = g, b = polys[i];
    while (!b.is_zero()) {
      SkewPoly r = right_rem(a, b);
      // Keeping remainders monic bounds the growth of leading coefficients.
      a = std::move(b);
      b = monic(r);
    }
    g = a;
  }
  return monic(g);
}

SkewPoly lclm(const std::vector<SkewPoly>& polys) {
  if (polys.empty()) throw std::invalid_argument("lclm of empty set");
  const FieldPtr& Kp = polys[0].field();
  const Field& K = *Kp;
  for (auto& u : polys) {
    check_same_field(polys[0], u);
    if (u.is_zero()) return SkewPoly(Kp);
  }
  // L is a left multiple of u iff rem(L, u) = 0, and rem is left K-linear, so
  // the lclm is the first tau^k whose remainders depend on earlier ones.
  std::vector<SkewPoly> mods;
  for (auto& u : polys)
    if (u.deg() > 0) mods.push_back(monic(u));
  if (mods.empty()) return SkewPoly::constant(Kp, K.one());
  size_t dim = 0;
  for (auto& u : mods) dim += static_cast<size_t>(u.deg());

  std::vector<SkewPoly> cur;  // rem(tau^k, u_j)
  for (auto& u : mods) cur.push_back(right_rem(SkewPoly::constant(Kp, K.one()), u));

  struct Row {
    std::vector<Elem> vec;
    SkewPoly poly;
    size_t pivot;
  };
  std::vector<Row> rows;
  auto flatten = [&](const std::vector<SkewPoly>& rs) {
    std::vector<Elem> v;
    v.reserve(dim);
    for (size_t j = 0; j < mods.size(); ++j)
      for (long i = 0; i < mods[j].deg(); ++i) v.push_back(rs[j].coeff(i));
    return v;
  };
  for (size_t k = 0; k <= dim; ++k) {
    if (k > 0)
      for (size_t j = 0; j < mods.size(); ++j) cur[j] = right_rem(tau_mul(1, cur[j]), mods[j]);
    std::vector<Elem> v = flatten(cur);
    SkewPoly poly = SkewPoly::tau_power(Kp, static_cast<long>(k));
    for (auto& row : rows) {
      const Elem& x = v[row.pivot];
      if (K.is_zero(x)) continue;
      Elem c = K.div(x, row.vec[row.pivot]);
      for (size_t i = 0; i < dim; ++i)
        if (!K.is_zero(row.vec[i])) v[i] = K.sub(v[i], K.mul(c, row.vec[i]));
      poly = sub(poly, lscale(c, row.poly));
    }
    size_t piv = dim;
    for (size_t i = 0; i < dim; ++i)
      if (!K.is_zero(v[i])) {
        piv = i;
        break;
      }
    if (piv == dim) return monic(poly);
    rows.push_back({std::move(v), std::move(poly), piv});
  }
  throw std::logic_error("lclm degree bound exceeded");
}

Elem evaluate(const SkewPoly& u, const Elem& x) {
  const Field& K = u.K();
  Elem r = K.zero(), xp = x;
  for (size_t i = 0; i < u.coeffs().size(); ++i) {
    if (i > 0) xp = K.twist(xp, 1);
    r = K.add(r, K.mul(u.coeffs()[i], xp));
  }
  return r;
}

SkewPoly twist_coeffs(const SkewPoly& u, long j) {
  std::vector<Elem> r;
  r.reserve(u.coeffs().size());
  for (auto& x : u.coeffs()) r.push_back(u.K().twist(x, j));
  return SkewPoly(u.field(), std::move(r));
}

}  // namespace skew
}  // namespace dmod
