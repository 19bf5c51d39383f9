// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/field.hpp"

#include <sstream>
#include <stdexcept>

namespace dmod {

bool elem_less(const Elem& u, const Elem& v) {
  if (u.a != v.a) return fqp::less(u.a, v.a);
  return fqp::less(u.b, v.b);
}

FieldPtr Field::finite(ConstFieldPtr fq, const FqPoly& modulus) {
  const ConstField& F = *fq;
  FqPoly m = modulus;
  fqp::trim(m);
  if (fqp::deg(m) < 1 || m.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
  if (!fqp::is_irreducible(F, m)) throw std::invalid_argument("modulus is not irreducible");
  auto* f = new Field();
  f->kind_ = Kind::Finite;
  f->fq_ = std::move(fq);
  f->n_ = fqp::deg(m);
  f->mod_ = m;
  f->frob_.resize(f->n_);
  FqPoly zq = {0, 1};  // z^{q^j}
  for (int j = 0; j < f->n_; ++j) {
    auto& row = f->frob_[j];
    row.resize(f->n_);
    FqPoly cur = {1};
    for (int i = 0; i < f->n_; ++i) {
      row[i] = cur;
      cur = fqp::mulmod(F, cur, zq, m);
    }
    zq = fqp::powmod(F, zq, F.q(), m);
  }
  return FieldPtr(f);
}

FieldPtr Field::finite_default(ConstFieldPtr fq, int n) {
  FqPoly m = fqp::first_irreducible(*fq, n);
  return finite(std::move(fq), m);
}

FieldPtr Field::rational(ConstFieldPtr fq, char var) {
  auto* f = new Field();
  f->kind_ = Kind::Rational;
  f->fq_ = std::move(fq);
  f->var_ = var;
  return FieldPtr(f);
}

bool Field::same(const Field& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_ || fq_->q() != o.fq_->q()) return false;
  if (kind_ == Kind::Finite) return mod_ == o.mod_;
  return true;
}

Elem Field::zero() const {
  if (is_finite()) return {};
  return Elem{{}, {1}};
}

Elem Field::one() const { return from_const(1); }

Elem Field::from_const(uint32_t c) const {
  Elem e{fqp::constant(c), {}};
  if (!is_finite()) e.b = {1};
  return e;
}

Elem Field::gen() const {
  if (is_finite()) return from_poly({0, 1});
  return Elem{{0, 1}, {1}};
}

Elem Field::frac(const FqPoly& num, const FqPoly& den) const {
  if (is_finite()) {
    Elem n = from_poly(num), d = from_poly(den);
    return div(n, d);
  }
  if (den.empty()) throw std::domain_error("zero denominator");
  const ConstField& F = *fq_;
  FqPoly g = fqp::gcd(F, num, den);
  FqPoly n = fqp::div(F, num, g), d = fqp::div(F, den, g);
  uint32_t il = F.inv(d.back());
  if (n.empty()) return zero();
  return Elem{fqp::scale(F, n, il), fqp::scale(F, d, il)};
}

Elem Field::from_poly(const FqPoly& f) const {
  if (!is_finite()) return frac(f, {1});
  return Elem{fqp::mod(*fq_, f, mod_), {}};
}

bool Field::is_one(const Elem& u) const { return fqp::is_one(u.a) && (is_finite() || fqp::is_one(u.b)); }

bool Field::is_const(const Elem& u) const {
  return u.a.size() <= 1 && (is_finite() || fqp::is_one(u.b));
}

Elem Field::add(const Elem& u, const Elem& v) const {
  const ConstField& F = *fq_;
  if (is_finite()) return Elem{fqp::add(F, u.a, v.a), {}};
  if (u.a.empty()) return v;
  if (v.a.empty()) return u;
  if (u.b == v.b) return frac(fqp::add(F, u.a, v.a), u.b);
  FqPoly g = fqp::gcd(F, u.b, v.b);
  FqPoly ub = fqp::div(F, u.b, g), vb = fqp::div(F, v.b, g);
  FqPoly num = fqp::add(F, fqp::mul(F, u.a, vb), fqp::mul(F, v.a, ub));
  FqPoly den = fqp::mul(F, ub, v.b);
  if (num.empty()) return zero();
  // Only factors of g can be shared by num and den.
  FqPoly h = fqp::gcd(F, num, g);
  if (fqp::deg(h) > 0) {
    num = fqp::div(F, num, h);
    den = fqp::div(F, den, h);
  }
  uint32_t il = F.inv(den.back());
  return Elem{fqp::scale(F, num, il), fqp::scale(F, den, il)};
}

Elem Field::neg(const Elem& u) const { return Elem{fqp::neg(*fq_, u.a), u.b}; }

Elem Field::sub(const Elem& u, const Elem& v) const { return add(u, neg(v)); }

Elem Field::mul(const Elem& u, const Elem& v) const {
  const ConstField& F = *fq_;
  if (is_finite()) return Elem{fqp::mulmod(F, u.a, v.a, mod_), {}};
  if (u.a.empty() || v.a.empty()) return zero();
  FqPoly ua = u.a, ub = u.b, va = v.a, vb = v.b;
  if (!fqp::is_one(vb)) {
    FqPoly g1 = fqp::gcd(F, ua, vb);
    if (fqp::deg(g1) > 0) {
      ua = fqp::div(F, ua, g1);
      vb = fqp::div(F, vb, g1);
    }
  }
  if (!fqp::is_one(ub)) {
    FqPoly g2 = fqp::gcd(F, va, ub);
    if (fqp::deg(g2) > 0) {
      va = fqp::div(F, va, g2);
      ub = fqp::div(F, ub, g2);
    }
  }
  FqPoly num = fqp::mul(F, ua, va), den = fqp::mul(F, ub, vb);
  uint32_t il = F.inv(den.back());
  if (il != 1) {
    num = fqp::scale(F, num, il);
    den = fqp::scale(F, den, il);
  }
  return Elem{std::move(num), std::move(den)};
}

Elem Field::scale(const Elem& u, uint32_t c) const {
  if (c == 0) return zero();
  return Elem{fqp::scale(*fq_, u.a, c), u.b};
}

Elem Field::inv(const Elem& u) const {
  const ConstField& F = *fq_;
  if (u.a.empty()) throw std::domain_error("inverse of zero");
  if (is_finite()) {
    FqPoly s, t;
    FqPoly g = fqp::xgcd(F, u.a, mod_, s, t);
    (void)g;
    return Elem{fqp::mod(F, s, mod_), {}};
  }
  uint32_t il = F.inv(u.a.back());
  return Elem{fqp::scale(F, u.b, il), fqp::scale(F, u.a, il)};
}

Elem Field::pow(const Elem& u, uint64_t n) const {
  Elem r = one(), b = u;
  while (n) {
    if (n & 1) r = mul(r, b);
    n >>= 1;
    if (n) b = mul(b, b);
  }
  return r;
}

Elem Field::twist(const Elem& u, long j) const {
  if (u.a.empty() || j == 0) return u;
  if (j < 0) throw std::invalid_argument("negative twist");
  const ConstField& F = *fq_;
  if (is_finite()) {
    const auto& row = frob_[static_cast<size_t>(j % n_)];
    FqPoly r;
    for (size_t i = 0; i < u.a.size(); ++i)
      if (u.a[i]) r = fqp::add(F, r, fqp::scale(F, row[i], u.a[i]));
    return Elem{std::move(r), {}};
  }
  Elem r = u;
  for (long k = 0; k < j; ++k) {
    r.a = fqp::frobenius(F, r.a);
    r.b = fqp::frobenius(F, r.b);
  }
  return r;
}

std::vector<uint32_t> Field::coords(const Elem& u) const {
  if (!is_finite()) throw std::logic_error("coords on infinite field");
  std::vector<uint32_t> c(static_cast<size_t>(n_), 0);
  for (size_t i = 0; i < u.a.size(); ++i) c[i] = u.a[i];
  return c;
}

Elem Field::from_coords(const std::vector<uint32_t>& c) const {
  FqPoly a = c;
  fqp::trim(a);
  return Elem{std::move(a), {}};
}

uint64_t Field::size() const {
  if (!is_finite()) throw std::logic_error("size of infinite field");
  uint64_t s = 1;
  for (int i = 0; i < n_; ++i) s *= q();
  return s;
}

Elem Field::element(uint64_t k) const {
  std::vector<uint32_t> c(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    c[i] = static_cast<uint32_t>(k % q());
    k /= q();
  }
  return from_coords(c);
}

std::string Field::render(const Elem& u) const {
  if (is_finite()) {
    std::ostringstream os;
    os << '[';
    auto c = coords(u);
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
  }
  if (fqp::is_one(u.b)) return fqp::render(u.a);
  return fqp::render(u.a) + "/" + fqp::render(u.b);
}

std::string Field::describe() const {
  std::ostringstream os;
  if (is_finite())
    os << "F_" << q() << "^" << n_ << " mod " << fqp::render(mod_);
  else
    os << "F_" << q() << "(" << var_ << ")";
  return os.str();
}

}  // namespace dmod
