// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace dmod {
namespace ax {

void trim(APolyX& f) {
  while (!f.empty() && f.back().empty()) f.pop_back();
}

int deg(const APolyX& f) { return static_cast<int>(f.size()) - 1; }

bool is_monic(const APolyX& f) { return !f.empty() && fqp::is_one(f.back()); }

APolyX mul(const ConstField& F, const APolyX& a, const APolyX& b) {
  if (a.empty() || b.empty()) return {};
  APolyX r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      if (!a[i].empty() && !b[j].empty()) r[i + j] = fqp::add(F, r[i + j], fqp::mul(F, a[i], b[j]));
  trim(r);
  return r;
}

APolyX pow(const ConstField& F, const APolyX& a, int e) {
  APolyX r = {{1}};
  for (int i = 0; i < e; ++i) r = mul(F, r, a);
  return r;
}

KPoly to_kpoly(const FieldPtr& Ft, const APolyX& f) {
  std::vector<Elem> c;
  for (auto& a : f) c.push_back(Ft->frac(a, {1}));
  return KPoly(Ft, std::move(c));
}

APolyX from_kpoly(const KPoly& f) {
  APolyX r;
  for (auto& e : f.c) {
    if (!fqp::is_one(e.b)) throw std::domain_error("coefficient is not a polynomial");
    r.push_back(e.a);
  }
  trim(r);
  return r;
}

std::string render(const APolyX& f) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << fqp::render(f[i]);
  os << ']';
  return os.str();
}

}  // namespace ax

std::vector<std::pair<KPoly, int>> poly_factor(const KPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("poly_factor: zero input");
  return kp::factor_finite(f);
}

namespace {

// All monic divisors of f from its factorization.
std::vector<FqPoly> monic_divisors(const ConstField& F, const FqPoly& f) {
  std::vector<FqPoly> out = {{1}};
  if (fqp::deg(f) < 1) return out;
  for (auto& [g, e] : fqp::factor(F, f)) {
    std::vector<FqPoly> next;
    for (auto& d : out) {
      FqPoly cur = d;
      for (int k = 0; k <= e; ++k) {
        next.push_back(cur);
        cur = fqp::mul(F, cur, g);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<Elem> rational_roots(const KPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots: zero input");
  const Field& K = *f.K;
  if (K.is_finite()) throw std::invalid_argument("rational_roots expects F_q(x) coefficients");
  const ConstField& F = K.fq();
  FqPoly L = {1};
  for (auto& e : f.c)
    if (!e.a.empty()) L = fqp::lcm(F, L, e.b);
  std::vector<FqPoly> g;
  for (auto& e : f.c) g.push_back(e.a.empty() ? FqPoly{} : fqp::mul(F, e.a, fqp::div(F, L, e.b)));
  std::vector<Elem> roots;
  size_t low = 0;
  while (g[low].empty()) ++low;
  if (low > 0) roots.push_back(K.zero());
  FqPoly c0 = g[low], cn = g.back();
  if (g.size() - low > 1) {
    auto nums = monic_divisors(F, c0), dens = monic_divisors(F, cn);
    std::set<std::pair<FqPoly, FqPoly>> seen;
    for (auto& a : nums)
      for (auto& b : dens) {
        if (fqp::deg(fqp::gcd(F, a, b)) > 0) continue;
        for (uint32_t u = 1; u < F.q(); ++u) {
          Elem rho = K.frac(fqp::scale(F, a, u), b);
          if (!seen.insert({rho.a, rho.b}).second) continue;
          if (K.is_zero(kp::eval(f, rho))) roots.push_back(rho);
        }
      }
  }
  std::sort(roots.begin(), roots.end(), elem_less);
  return roots;
}

KPoly det_bareiss(std::vector<std::vector<KPoly>> M) {
  size_t n = M.size();
  if (n == 0) throw std::invalid_argument("empty determinant");
  const FieldPtr& K = M[0][0].K;
  KPoly prev = kp::constant(K, K->one());
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      size_t s = k + 1;
      while (s < n && M[s][k].is_zero()) ++s;
      if (s == n) return kp::zero(K);
      std::swap(M[s], M[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        KPoly v = kp::sub(kp::mul(M[i][j], M[k][k]), kp::mul(M[i][k], M[k][j]));
        M[i][j] = kp::div(v, prev);
      }
      M[i][k] = kp::zero(K);
    }
    prev = M[k][k];
  }
  KPoly d = M[n - 1][n - 1];
  return negate ? kp::neg(d) : d;
}

KPoly resultant_y(const std::vector<KPoly>& A, const std::vector<KPoly>& B) {
  size_t m = A.size() - 1, n = B.size() - 1, N = m + n;
  const FieldPtr& K = A[0].K;
  std::vector<std::vector<KPoly>> S(N, std::vector<KPoly>(N, kp::zero(K)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k <= m; ++k) S[i][i + k] = A[m - k];
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k <= n; ++k) S[n + i][i + k] = B[n - k];
  return det_bareiss(S);
}

bool irreducible_over_ft(const ConstFieldPtr& fq, const APolyX& f0) {
  APolyX f = f0;
  ax::trim(f);
  int n = ax::deg(f);
  if (n < 1) return false;
  if (n == 1) return true;
  FieldPtr Ft = Field::rational(fq, 't');
  KPoly kf = ax::to_kpoly(Ft, f);
  if (!rational_roots(kf).empty()) return false;
  if (n <= 3) return true;
  const ConstField& F = *fq;
  // Eisenstein at a prime dividing the constant term.
  for (auto& [pi, e] : fqp::factor(F, f[0])) {
    if (e != 1 || fqp::mod(F, f.back(), pi).empty()) continue;
    bool all = true;
    for (int k = 1; k < n && all; ++k) all = fqp::mod(F, f[static_cast<size_t>(k)], pi).empty();
    if (all) return true;
  }
  // Degree patterns at unramified places: the possible degrees of a proper
  // factor must be subset sums of every pattern.
  std::vector<bool> possible(static_cast<size_t>(n) + 1, true);
  int checked = 0;
  for (int d = 1; d <= 4 && checked < 40; ++d) {
    for (auto& pi : fqp::monic_irreducibles(F, d)) {
      if (fqp::mod(F, f.back(), pi).empty()) continue;
      FieldPtr R = Field::finite(fq, pi);
      std::vector<Elem> c;
      for (auto& a : f) c.push_back(R->from_poly(a));
      KPoly fr(R, c);
      auto fac = kp::factor_finite(fr);
      bool sqfree = true;
      for (auto& pr : fac) sqfree = sqfree && pr.second == 1;
      if (!sqfree) continue;
      std::vector<bool> sums(static_cast<size_t>(n) + 1, false);
      sums[0] = true;
      for (auto& pr : fac)
        for (int s = n; s >= pr.first.deg(); --s)
          if (sums[static_cast<size_t>(s - pr.first.deg())]) sums[static_cast<size_t>(s)] = true;
      for (int s = 1; s < n; ++s) possible[static_cast<size_t>(s)] = possible[static_cast<size_t>(s)] && sums[static_cast<size_t>(s)];
      ++checked;
      bool any = false;
      for (int s = 1; s < n; ++s) any = any || possible[static_cast<size_t>(s)];
      if (!any) return true;
      if (checked >= 40) break;
    }
  }
  throw ScopeError("irreducibility over F_q(t) not certified for degree > 3");
}

KPoly conjugate_power_product(const ConstFieldPtr& fq, const APolyX& P, long m) {
  FieldPtr Ft = Field::rational(fq, 't');
  std::vector<KPoly> A, B(static_cast<size_t>(m) + 1, kp::zero(Ft));
  for (auto& a : P) A.push_back(kp::constant(Ft, Ft->frac(a, {1})));
  B[0] = kp::x(Ft);
  B[static_cast<size_t>(m)] = kp::constant(Ft, Ft->from_const(Ft->fq().neg(1)));
  return kp::monic(resultant_y(A, B));
}

APolyX minpoly_of_power(const ConstFieldPtr& fq, const APolyX& P, long m) {
  FieldPtr Ft = Field::rational(fq, 't');
  const Field& K = *Ft;
  KPoly kP = ax::to_kpoly(Ft, P);
  int n = kP.deg();
  KPoly y = kp::powmod(kp::x(Ft), static_cast<uint64_t>(m), kP);
  struct Row {
    std::vector<Elem> vec;
    std::vector<Elem> comb;  // combination of y^0..y^k
    size_t pivot;
  };
  std::vector<Row> rows;
  KPoly cur = kp::constant(Ft, K.one());
  for (int k = 0; k <= n; ++k) {
    if (k > 0) cur = kp::mod(kp::mul(cur, y), kP);
    std::vector<Elem> v(static_cast<size_t>(n), K.zero());
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = cur.coeff(i);
    std::vector<Elem> comb(static_cast<size_t>(k) + 1, K.zero());
    comb[static_cast<size_t>(k)] = K.one();
    for (auto& row : rows) {
      const Elem& x = v[row.pivot];
      if (K.is_zero(x)) continue;
      Elem c = K.div(x, row.vec[row.pivot]);
      for (size_t i = 0; i < v.size(); ++i) v[i] = K.sub(v[i], K.mul(c, row.vec[i]));
      for (size_t i = 0; i < row.comb.size(); ++i) comb[i] = K.sub(comb[i], K.mul(c, row.comb[i]));
    }
    size_t piv = v.size();
    for (size_t i = 0; i < v.size(); ++i)
      if (!K.is_zero(v[i])) {
        piv = i;
        break;
      }
    if (piv == v.size()) return ax::from_kpoly(KPoly(Ft, comb));
    rows.push_back({std::move(v), std::move(comb), piv});
  }
  throw std::logic_error("minpoly_of_power: no dependency found");
}

StablePower stable_power_exponent(const ConstFieldPtr& fq, const APolyX& P0in) {
  const ConstField& F = *fq;
  APolyX P = P0in;
  ax::trim(P);
  if (!ax::is_monic(P)) throw std::invalid_argument("stable_power_exponent: polynomial must be monic");
  if (ax::deg(P) < 1) throw std::invalid_argument("stable_power_exponent: degree must be positive");
  if (P[0].empty()) throw std::invalid_argument("stable_power_exponent: x = 0 rejected");
  if (!irreducible_over_ft(fq, P)) throw std::invalid_argument("stable_power_exponent: reducible input");
  StablePower out;
  // Strip the largest p-power P(X) = Q(X^{p^i}).
  long pp = 1;
  while (true) {
    long next = pp * static_cast<long>(F.p());
    bool ok = true;
    for (size_t k = 0; k < P.size() && ok; ++k)
      if (!P[k].empty() && k % static_cast<size_t>(next) != 0) ok = false;
    if (!ok) break;
    pp = next;
  }
  APolyX Q0;
  for (size_t k = 0; k < P.size(); k += static_cast<size_t>(pp)) Q0.push_back(P[k]);
  out.p_power = pp;
  long m0 = 1;
  int r = ax::deg(Q0);
  if (r > 1) {
    FieldPtr Ft = Field::rational(fq, 't');
    const Field& K = *Ft;
    std::vector<KPoly> A, B;
    for (size_t k = 0; k < Q0.size(); ++k) {
      A.push_back(kp::constant(Ft, K.frac(Q0[k], {1})));
      std::vector<Elem> c(k + 1, K.zero());
      c[k] = K.frac(Q0[k], {1});
      B.push_back(KPoly(Ft, c));
    }
    KPoly R = resultant_y(A, B);
    KPoly lin = kp::sub(kp::x(Ft), kp::constant(Ft, K.one()));
    for (int i = 0; i < r; ++i) {
      KPoly q, rem;
      kp::divmod(R, lin, q, rem);
      if (!rem.is_zero()) throw std::logic_error("ratio polynomial not divisible by (X-1)^r");
      R = q;
    }
    KPoly Q = kp::monic(R);
    // Product of the factors of Q defined over the constant field.
    int dq = Q.deg();
    long L = 1;
    for (int k = 1; k <= dq; ++k) L = std::lcm(L, static_cast<long>(k));
    KPoly h = kp::mod(kp::x(Ft), Q);
    for (long k = 0; k < L; ++k) h = kp::powmod(h, F.q(), Q);
    KPoly G = kp::gcd(kp::sub(h, kp::x(Ft)), Q);
    FqPoly g;
    for (auto& e : G.c) {
      if (!K.is_const(e)) throw std::logic_error("constant-field factor with non-constant coefficient");
      g.push_back(e.a.empty() ? 0 : e.a[0]);
    }
    fqp::trim(g);
    if (fqp::deg(g) > 0)
      for (auto& [fac, mult] : fqp::factor(F, g)) {
        (void)mult;
        out.unit_factors.push_back(fac);
        m0 = std::lcm(m0, static_cast<long>(fqp::order_of_x(F, fac)));
      }
  }
  out.m = pp * m0;
  out.minpoly = minpoly_of_power(fq, P, out.m);
  out.degree = ax::deg(out.minpoly);
  return out;
}

}  // namespace dmod
