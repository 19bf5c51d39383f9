// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/fqpoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dmod::fqp {

FqPoly add(const ConstField& F, const FqPoly& a, const FqPoly& b) {
  const FqPoly& big = a.size() >= b.size() ? a : b;
  const FqPoly& small = a.size() >= b.size() ? b : a;
  FqPoly r = big;
  for (size_t i = 0; i < small.size(); ++i) r[i] = F.add(r[i], small[i]);
  trim(r);
  return r;
}

FqPoly neg(const ConstField& F, const FqPoly& a) {
  FqPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.neg(a[i]);
  return r;
}

FqPoly sub(const ConstField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r = a;
  if (r.size() < b.size()) r.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

FqPoly scale(const ConstField& F, const FqPoly& a, uint32_t c) {
  if (c == 0) return {};
  FqPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

namespace {

// Schoolbook product over a prime field, reducing once per output slot.
void mul_prime(uint32_t p, const uint32_t* a, size_t na, const uint32_t* b, size_t nb, uint32_t* out) {
  const uint64_t limit = (~uint64_t{0}) - static_cast<uint64_t>(p) * p;
  std::vector<uint64_t> acc(na + nb - 1, 0);
  for (size_t i = 0; i < na; ++i) {
    uint64_t ai = a[i];
    if (!ai) continue;
    for (size_t j = 0; j < nb; ++j) {
      uint64_t v = acc[i + j] + ai * b[j];
      if (v > limit) v %= p;
      acc[i + j] = v;
    }
  }
  for (size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<uint32_t>(acc[k] % p);
}

void mul_general(const ConstField& F, const uint32_t* a, size_t na, const uint32_t* b, size_t nb,
                 uint32_t* out) {
  std::fill(out, out + na + nb - 1, 0);
  for (size_t i = 0; i < na; ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < nb; ++j)
      if (b[j]) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
}

constexpr size_t kKaratsuba = 48;

void mul_rec(const ConstField& F, const uint32_t* a, size_t na, const uint32_t* b, size_t nb, uint32_t* out);

// Karatsuba on equal-length halves; falls back to schoolbook for short or unbalanced inputs.
void mul_rec(const ConstField& F, const uint32_t* a, size_t na, const uint32_t* b, size_t nb, uint32_t* out) {
  if (na < kKaratsuba || nb < kKaratsuba || na != nb) {
    if (na != nb && na >= kKaratsuba && nb >= kKaratsuba) {
      // Split the longer operand into chunks of the shorter length.
      const uint32_t* L = na > nb ? a : b;
      const uint32_t* S = na > nb ? b : a;
      size_t nl = std::max(na, nb), ns = std::min(na, nb);
      std::fill(out, out + na + nb - 1, 0);
      std::vector<uint32_t> tmp(2 * ns - 1);
      for (size_t off = 0; off < nl; off += ns) {
        size_t len = std::min(ns, nl - off);
        mul_rec(F, L + off, len, S, ns, tmp.data());
        for (size_t k = 0; k < len + ns - 1; ++k) out[off + k] = F.add(out[off + k], tmp[k]);
      }
      return;
    }
    if (F.e() == 1)
      mul_prime(F.p(), a, na, b, nb, out);
    else
      mul_general(F, a, na, b, nb, out);
    return;
  }
  size_t n = na, h = n / 2, hi = n - h;
  std::vector<uint32_t> z0(2 * h - 1), z2(2 * hi - 1), sa(hi), sb(hi), z1(2 * hi - 1);
  mul_rec(F, a, h, b, h, z0.data());
  mul_rec(F, a + h, hi, b + h, hi, z2.data());
  for (size_t i = 0; i < hi; ++i) {
    sa[i] = a[h + i];
    sb[i] = b[h + i];
    if (i < h) {
      sa[i] = F.add(sa[i], a[i]);
      sb[i] = F.add(sb[i], b[i]);
    }
  }
  mul_rec(F, sa.data(), hi, sb.data(), hi, z1.data());
  for (size_t k = 0; k < z0.size(); ++k) z1[k] = F.sub(z1[k], z0[k]);
  for (size_t k = 0; k < z2.size(); ++k) z1[k] = F.sub(z1[k], z2[k]);
  std::fill(out, out + 2 * n - 1, 0);
  for (size_t k = 0; k < z0.size(); ++k) out[k] = z0[k];
  for (size_t k = 0; k < z2.size(); ++k) out[2 * h + k] = F.add(out[2 * h + k], z2[k]);
  for (size_t k = 0; k < z1.size(); ++k) out[h + k] = F.add(out[h + k], z1[k]);
}

}  // namespace

FqPoly mul(const ConstField& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1);
  mul_rec(F, a.data(), a.size(), b.data(), b.size(), r.data());
  trim(r);
  return r;
}

FqPoly shift(const FqPoly& a, size_t k) {
  if (a.empty()) return {};
  FqPoly r(a.size() + k, 0);
  std::copy(a.begin(), a.end(), r.begin() + k);
  return r;
}

void divmod(const ConstField& F, const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  r = a;
  if (a.size() < b.size()) {
    q.clear();
    return;
  }
  size_t db = b.size() - 1;
  q.assign(a.size() - db, 0);
  uint32_t il = F.inv(b.back());
  for (size_t k = a.size(); k-- > db;) {
    uint32_t c = r[k];
    if (!c) continue;
    c = F.mul(c, il);
    q[k - db] = c;
    uint32_t nc = F.neg(c);
    for (size_t i = 0; i <= db; ++i) r[k - db + i] = F.add(r[k - db + i], F.mul(nc, b[i]));
  }
  r.resize(db);
  trim(r);
  trim(q);
}

FqPoly div(const ConstField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly q, r;
  divmod(F, a, b, q, r);
  return q;
}

FqPoly mod(const ConstField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly q, r;
  divmod(F, a, b, q, r);
  return r;
}

FqPoly monic(const ConstField& F, const FqPoly& a) {
  if (a.empty()) return {};
  return scale(F, a, F.inv(a.back()));
}

FqPoly gcd(const ConstField& F, FqPoly a, FqPoly b) {
  while (!b.empty()) {
    FqPoly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

FqPoly xgcd(const ConstField& F, const FqPoly& a, const FqPoly& b, FqPoly& s, FqPoly& t) {
  FqPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    FqPoly q, r;
    divmod(F, r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    FqPoly s2 = sub(F, s0, mul(F, q, s1));
    FqPoly t2 = sub(F, t0, mul(F, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = {};
    t = {};
    return {};
  }
  uint32_t il = F.inv(r0.back());
  s = scale(F, s0, il);
  t = scale(F, t0, il);
  return scale(F, r0, il);
}

FqPoly lcm(const ConstField& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  return monic(F, mul(F, div(F, a, gcd(F, a, b)), b));
}

FqPoly pow(const ConstField& F, const FqPoly& a, uint64_t n) {
  FqPoly r = {1}, b = a;
  while (n) {
    if (n & 1) r = mul(F, r, b);
    n >>= 1;
    if (n) b = mul(F, b, b);
  }
  return r;
}

FqPoly mulmod(const ConstField& F, const FqPoly& a, const FqPoly& b, const FqPoly& m) {
  return mod(F, mul(F, a, b), m);
}

FqPoly powmod(const ConstField& F, const FqPoly& a, uint64_t n, const FqPoly& m) {
  FqPoly r = mod(F, {1}, m), b = mod(F, a, m);
  while (n) {
    if (n & 1) r = mulmod(F, r, b, m);
    n >>= 1;
    if (n) b = mulmod(F, b, b, m);
  }
  return r;
}

FqPoly frobmod(const ConstField& F, const FqPoly& a, unsigned k, const FqPoly& m) {
  FqPoly r = mod(F, a, m);
  for (unsigned i = 0; i < k; ++i) r = powmod(F, r, F.q(), m);
  return r;
}

uint32_t eval(const ConstField& F, const FqPoly& a, uint32_t x) {
  uint32_t r = 0;
  for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

FqPoly deriv(const ConstField& F, const FqPoly& a) {
  if (a.size() <= 1) return {};
  FqPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_int(static_cast<int64_t>(i)));
  trim(r);
  return r;
}

FqPoly frobenius(const ConstField& F, const FqPoly& a) {
  // Coefficients are fixed by c -> c^q, so f^q = f(x^q).
  if (a.empty()) return {};
  size_t q = F.q();
  FqPoly r((a.size() - 1) * q + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) r[i * q] = a[i];
  return r;
}

FqPoly compose(const ConstField& F, const FqPoly& f, const FqPoly& g) {
  FqPoly r;
  for (size_t i = f.size(); i-- > 0;) r = add(F, mul(F, r, g), constant(f[i]));
  return r;
}

bool is_irreducible(const ConstField& F, const FqPoly& f) {
  int n = deg(f);
  if (n < 1) return false;
  if (n == 1) return true;
  FqPoly g = monic(F, f), x = {0, 1};
  // Rabin: x^{q^n} = x mod g and gcd(x^{q^{n/l}} - x, g) = 1 for primes l | n.
  std::vector<int> primes;
  for (int m = n, l = 2; m > 1; ++l)
    if (m % l == 0) {
      primes.push_back(l);
      while (m % l == 0) m /= l;
    }
  for (int l : primes) {
    FqPoly h = sub(F, frobmod(F, x, n / l, g), x);
    if (deg(gcd(F, h, g)) > 0) return false;
  }
  return sub(F, frobmod(F, x, n, g), x).empty();
}

namespace {

FqPoly pth_root_poly(const ConstField& F, const FqPoly& f) {
  size_t p = F.p();
  FqPoly r((f.size() - 1) / p + 1, 0);
  for (size_t i = 0; i < f.size(); i += p) r[i / p] = F.pth_root(f[i]);
  trim(r);
  return r;
}

void squarefree(const ConstField& F, FqPoly f, int mult, std::vector<std::pair<FqPoly, int>>& out) {
  if (deg(f) < 1) return;
  FqPoly d = deriv(F, f);
  if (d.empty()) {
    squarefree(F, pth_root_poly(F, f), mult * static_cast<int>(F.p()), out);
    return;
  }
  FqPoly c = gcd(F, f, d), w = div(F, f, c);
  int i = 1;
  while (deg(w) > 0) {
    FqPoly y = gcd(F, w, c), z = div(F, w, y);
    if (deg(z) > 0) out.push_back({monic(F, z), i * mult});
    ++i;
    w = y;
    c = div(F, c, y);
  }
  if (deg(c) > 0) squarefree(F, pth_root_poly(F, c), mult * static_cast<int>(F.p()), out);
}

// Split a squarefree product of irreducibles of degree d.
void equal_degree(const ConstField& F, const FqPoly& f, int d, std::mt19937_64& rng,
                  std::vector<FqPoly>& out) {
  int n = deg(f);
  if (n == d) {
    out.push_back(monic(F, f));
    return;
  }
  while (true) {
    FqPoly a(n);
    for (auto& c : a) c = static_cast<uint32_t>(rng() % F.q());
    trim(a);
    if (deg(a) < 1) continue;
    FqPoly b;
    if (F.p() == 2) {
      // Absolute trace to F_2 of F_{q^d}.
      unsigned steps = F.e() * static_cast<unsigned>(d);
      FqPoly s = a;
      b = a;
      for (unsigned i = 1; i < steps; ++i) {
        s = mulmod(F, s, s, f);
        b = add(F, b, s);
      }
    } else {
      // Norm to F_q followed by the quadratic character.
      FqPoly s = a, acc = a;
      for (int i = 1; i < d; ++i) {
        s = powmod(F, s, F.q(), f);
        acc = mulmod(F, acc, s, f);
      }
      b = sub(F, powmod(F, acc, (F.q() - 1) / 2, f), {1});
    }
    FqPoly g = gcd(F, b, f);
    if (deg(g) > 0 && deg(g) < n) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, div(F, f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FqPoly, int>> factor(const ConstField& F, const FqPoly& f) {
  if (f.empty()) throw std::invalid_argument("factor of zero polynomial");
  std::vector<std::pair<FqPoly, int>> sqf, out;
  squarefree(F, monic(F, f), 1, sqf);
  std::mt19937_64 rng(0x5eed5eedULL);
  for (auto& [g0, m] : sqf) {
    FqPoly g = g0, h = {0, 1}, x = {0, 1};
    for (int d = 1; deg(g) > 0; ++d) {
      if (2 * d > deg(g)) {
        out.push_back({monic(F, g), m});
        break;
      }
      h = powmod(F, h, F.q(), g);
      FqPoly e = gcd(F, sub(F, h, x), g);
      if (deg(e) > 0) {
        std::vector<FqPoly> parts;
        equal_degree(F, e, d, rng, parts);
        for (auto& pp : parts) out.push_back({pp, m});
        g = div(F, g, e);
        h = mod(F, h, g);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return less(a.first, b.first);
    return a.second < b.second;
  });
  // Merge equal factors produced by different squarefree layers.
  std::vector<std::pair<FqPoly, int>> merged;
  for (auto& pr : out) {
    if (!merged.empty() && merged.back().first == pr.first)
      merged.back().second += pr.second;
    else
      merged.push_back(pr);
  }
  return merged;
}

uint64_t order_of_x(const ConstField& F, const FqPoly& g) {
  int n = deg(g);
  uint64_t N = 1;
  for (int i = 0; i < n; ++i) N *= F.q();
  N -= 1;
  uint64_t ord = N, m = N;
  FqPoly x = {0, 1};
  std::vector<uint64_t> primes;
  for (uint64_t l = 2; l * l <= m; ++l)
    if (m % l == 0) {
      primes.push_back(l);
      while (m % l == 0) m /= l;
    }
  if (m > 1) primes.push_back(m);
  for (uint64_t l : primes)
    while (ord % l == 0 && is_one(powmod(F, x, ord / l, g))) ord /= l;
  return ord;
}

bool less(const FqPoly& a, const FqPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

FqPoly monic_from_index(const ConstField& F, int d, uint64_t k) {
  FqPoly f(static_cast<size_t>(d) + 1, 0);
  // Constant term varies slowest so that the order matches less().
  for (int i = d - 1; i >= 0; --i) {
    f[i] = static_cast<uint32_t>(k % F.q());
    k /= F.q();
  }
  f[d] = 1;
  return f;
}

std::vector<FqPoly> monic_irreducibles(const ConstField& F, int d) {
  uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= F.q();
  std::vector<FqPoly> out;
  for (uint64_t k = 0; k < count; ++k) {
    FqPoly f = monic_from_index(F, d, k);
    if (is_irreducible(F, f)) out.push_back(f);
  }
  return out;
}

FqPoly first_irreducible(const ConstField& F, int d) {
  uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= F.q();
  for (uint64_t k = 0; k < count; ++k) {
    FqPoly f = monic_from_index(F, d, k);
    if (is_irreducible(F, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::string render(const FqPoly& a) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  if (a.empty()) os << '0';
  os << ']';
  return os.str();
}

}  // namespace dmod::fqp
