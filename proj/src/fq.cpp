// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/fq.hpp"

#include <numeric>

namespace dmod {

namespace {

using Digits = std::vector<uint32_t>;

Digits to_digits(uint32_t a, uint32_t p, uint32_t e) {
  Digits d(e, 0);
  for (uint32_t i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

uint32_t from_digits(const Digits& d, uint32_t p) {
  uint32_t a = 0;
  for (size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Product of two digit vectors modulo the monic polynomial g of degree e.
Digits mul_mod(const Digits& a, const Digits& b, const Digits& g, uint32_t p) {
  size_t e = g.size() - 1;
  std::vector<uint64_t> prod(2 * e, 0);
  for (size_t i = 0; i < e; ++i)
    for (size_t j = 0; j < e; ++j) prod[i + j] += static_cast<uint64_t>(a[i]) * b[j];
  for (auto& v : prod) v %= p;
  for (size_t k = 2 * e - 1; k >= e; --k) {
    uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (size_t i = 0; i < e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - g[i]) * c) % p;
  }
  Digits r(e);
  for (size_t i = 0; i < e; ++i) r[i] = static_cast<uint32_t>(prod[i]);
  return r;
}

// Remainder of a modulo the monic b over F_p, both low degree first.
bool divides_mod_p(const Digits& b, Digits a, uint32_t p) {
  size_t db = b.size() - 1;
  while (a.size() > db) {
    uint32_t c = a.back();
    size_t shift = a.size() - 1 - db;
    for (size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<uint32_t>((a[shift + i] + static_cast<uint64_t>(p - b[i]) * c) % p);
    a.pop_back();
  }
  for (auto c : a)
    if (c) return false;
  return true;
}

bool irreducible_mod_p(const Digits& g, uint32_t p) {
  size_t n = g.size() - 1;
  for (size_t d = 1; 2 * d <= n; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t c = 0; c < count; ++c) {
      Digits b(d + 1, 0);
      uint64_t v = c;
      for (size_t i = 0; i < d; ++i) {
        b[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      b[d] = 1;
      if (divides_mod_p(b, g, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool prime_power(uint32_t q, uint32_t& p, uint32_t& e) {
  if (q < 2) return false;
  uint32_t f = 2;
  while (static_cast<uint64_t>(f) * f <= q && q % f != 0) ++f;
  if (q % f != 0) f = q;
  p = f;
  e = 0;
  while (q % f == 0) {
    q /= f;
    ++e;
  }
  return q == 1;
}

ConstField::ConstField(uint32_t q) {
  if (!prime_power(q, p_, e_)) throw std::invalid_argument("q is not a prime power");
  if (q > (1u << 16)) throw std::invalid_argument("q too large");
  q_ = q;
  if (e_ == 1) {
    mod_ = {0, 1};
    for (uint32_t g = 1; g < q_; ++g)
      if (multiplicative_order(g) == q_ - 1) {
        prim_ = g;
        break;
      }
    return;
  }
  // Lexicographically first monic irreducible of degree e over F_p.
  uint64_t count = 1;
  for (uint32_t i = 0; i < e_; ++i) count *= p_;
  for (uint64_t c = 0; c < count; ++c) {
    Digits g = to_digits(static_cast<uint32_t>(c), p_, e_);
    g.push_back(1);
    if (irreducible_mod_p(g, p_)) {
      mod_ = g;
      break;
    }
  }
  neg_.resize(q_);
  for (uint32_t a = 0; a < q_; ++a) {
    Digits d = to_digits(a, p_, e_);
    for (auto& x : d) x = (p_ - x) % p_;
    neg_[a] = from_digits(d, p_);
  }
  if (q_ <= 256) {
    add_.resize(static_cast<size_t>(q_) * q_);
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = 0; b < q_; ++b) add_[a * q_ + b] = add_digits(a, b);
  }
  log_.assign(q_, 0);
  exp_.assign(2 * q_, 0);
  for (uint32_t g = 2; g < q_; ++g) {
    Digits gd = to_digits(g, p_, e_), cur = to_digits(1, p_, e_);
    std::vector<uint32_t> seen;
    seen.reserve(q_);
    uint32_t order = 0;
    do {
      seen.push_back(from_digits(cur, p_));
      cur = mul_mod(cur, gd, mod_, p_);
      ++order;
    } while (from_digits(cur, p_) != 1 && order < q_);
    if (order == q_ - 1) {
      prim_ = g;
      for (uint32_t k = 0; k < q_ - 1; ++k) {
        exp_[k] = seen[k];
        exp_[k + q_ - 1] = seen[k];
        log_[seen[k]] = k;
      }
      break;
    }
  }
}

uint32_t ConstField::add_digits(uint32_t a, uint32_t b) const {
  uint32_t r = 0, m = 1;
  for (uint32_t i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * m;
    a /= p_;
    b /= p_;
    m *= p_;
  }
  return r;
}

uint32_t ConstField::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (e_ == 1) return pow(a, p_ - 2);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t ConstField::pow(uint32_t a, uint64_t n) const {
  uint32_t r = 1, b = a;
  while (n) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

uint32_t ConstField::multiplicative_order(uint32_t a) const {
  if (a == 0) throw std::domain_error("order of zero");
  uint32_t n = q_ - 1, ord = n;
  for (uint32_t f = 2; f <= n; ++f) {
    if (n % f) continue;
    while (n % f == 0) n /= f;
    while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
  }
  return ord;
}

ConstFieldPtr make_const_field(uint32_t q) { return std::make_shared<const ConstField>(q); }

}  // namespace dmod
