// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/endomorphism.hpp"

#include <algorithm>

#include "dmod/kpoly.hpp"

namespace dmod {

namespace {

// Coefficient columns (length len) of a list of skew polynomials.
std::vector<std::vector<Elem>> columns(const Field& K, const std::vector<SkewPoly>& polys, long len) {
  std::vector<std::vector<Elem>> cols;
  cols.reserve(polys.size());
  for (auto& u : polys) {
    std::vector<Elem> c(static_cast<size_t>(len), K.zero());
    for (long i = 0; i <= u.deg() && i < len; ++i) c[static_cast<size_t>(i)] = u.coeff(i);
    if (u.deg() >= len) throw std::logic_error("column length too small");
    cols.push_back(std::move(c));
  }
  return cols;
}

// Solve sum x_j cols[j] = rhs over F_q.
std::optional<std::vector<uint32_t>> solve_fq(const Field& K, std::vector<std::vector<Elem>> cols,
                                              const std::vector<Elem>& rhs) {
  size_t n = cols.size();
  cols.push_back(rhs);
  FqMat E = la::expand(K, cols);
  FqMat A(E.rows, n);
  std::vector<uint32_t> b(E.rows);
  for (size_t i = 0; i < E.rows; ++i) {
    for (size_t j = 0; j < n; ++j) A.at(i, j) = E.at(i, j);
    b[i] = E.at(i, n);
  }
  return la::solve(K.fq(), A, b);
}

long max_deg(const std::vector<SkewPoly>& polys) {
  long d = 0;
  for (auto& u : polys) d = std::max(d, u.deg());
  return d;
}

SkewPoly spow(const SkewPoly& u, long k) {
  SkewPoly r = SkewPoly::constant(u.field(), u.K().one());
  for (long i = 0; i < k; ++i) r = skew::mul(r, u);
  return r;
}

}  // namespace

std::vector<SkewPoly> intertwiners_of_degree(const DrinfeldModule& phi, const DrinfeldModule& psi, long d) {
  const FieldPtr& Kp = phi.field();
  const Field& K = *Kp;
  if (!K.is_finite()) throw std::invalid_argument("degree-d spaces need a finite base field");
  if (!K.same(psi.K())) throw std::invalid_argument("mismatched base fields");
  if (d < 0) return {};
  size_t n = static_cast<size_t>(K.degree());
  std::vector<SkewPoly> imgs;
  for (long i = 0; i <= d; ++i)
    for (size_t k = 0; k < n; ++k) {
      std::vector<Elem> c(static_cast<size_t>(i) + 1, K.zero());
      std::vector<uint32_t> co(n, 0);
      co[k] = 1;
      c.back() = K.from_coords(co);
      SkewPoly u(Kp, c);
      imgs.push_back(skew::sub(skew::mul(u, phi.phi_t()), skew::mul(psi.phi_t(), u)));
    }
  long len = d + std::max(phi.rank(), psi.rank()) + 1;
  auto ker = la::kernel(K.fq(), la::expand(K, columns(K, imgs, len)));
  std::vector<SkewPoly> out;
  for (auto& v : ker) {
    std::vector<Elem> c;
    for (long i = 0; i <= d; ++i) {
      std::vector<uint32_t> co(v.begin() + static_cast<long>(i * n), v.begin() + static_cast<long>((i + 1) * n));
      c.push_back(K.from_coords(co));
    }
    out.emplace_back(Kp, c);
  }
  // Lowest degree first, then coefficient order.
  std::stable_sort(out.begin(), out.end(), [](const SkewPoly& a, const SkewPoly& b) { return a.deg() < b.deg(); });
  return out;
}

std::vector<SkewPoly> endos_of_degree(const DrinfeldModule& M, long d) { return intertwiners_of_degree(M, M, d); }

bool is_endomorphism(const DrinfeldModule& M, const SkewPoly& f) {
  return skew::mul(f, M.phi_t()) == skew::mul(M.phi_t(), f);
}

SkewPoly eval_apoly(const DrinfeldModule& M, const APolyX& P, const SkewPoly& f) {
  SkewPoly r(M.field());
  for (size_t i = P.size(); i-- > 0;) r = skew::add(skew::mul(r, f), phi_action(M, P[i]));
  return r;
}

APolyX endo_minpoly(const DrinfeldModule& M, const SkewPoly& f) {
  if (!is_endomorphism(M, f)) throw std::invalid_argument("not an endomorphism");
  if (f.is_zero()) return {{}, {1}};
  const Field& K = M.K();
  const ConstField& F = K.fq();
  long r = M.rank(), D = f.deg();
  for (long k = 1; k <= r; ++k) {
    if (r % k != 0 || (k * D) % r != 0) continue;
    // f^k + sum_{i<k} phi_{a_i} f^i = 0 with deg a_i <= (k - i) D / r.
    std::vector<SkewPoly> cols;
    std::vector<std::pair<long, long>> idx;
    SkewPoly fi = SkewPoly::constant(M.field(), K.one());
    for (long i = 0; i < k; ++i) {
      long b = (k - i) * D / r;
      SkewPoly u = fi;
      for (long j = 0; j <= b; ++j) {
        cols.push_back(u);
        idx.emplace_back(i, j);
        u = skew::mul(M.phi_t(), u);
      }
      fi = skew::mul(fi, f);
    }
    SkewPoly top = skew::neg(fi);
    long len = std::max(max_deg(cols), top.deg()) + 1;
    auto x = solve_fq(K, columns(K, cols, len), columns(K, {top}, len)[0]);
    if (!x) continue;
    APolyX P(static_cast<size_t>(k) + 1);
    P[static_cast<size_t>(k)] = {1};
    for (size_t c = 0; c < idx.size(); ++c) {
      auto [i, j] = idx[c];
      auto& a = P[static_cast<size_t>(i)];
      if (a.size() <= static_cast<size_t>(j)) a.resize(static_cast<size_t>(j) + 1, 0);
      a[static_cast<size_t>(j)] = (*x)[c];
    }
    for (auto& a : P) fqp::trim(a);
    if (!eval_apoly(M, P, f).is_zero()) throw std::logic_error("minimal polynomial check failed");
    (void)F;
    return P;
  }
  throw std::logic_error("no minimal polynomial within the degree bounds");
}

CharPolyFrob frobenius_minpoly_data(const DrinfeldModule& M) {
  const Field& K = M.K();
  if (!K.is_finite()) throw std::invalid_argument("Frobenius needs a finite base field");
  CharPolyFrob c;
  c.n = K.degree();
  c.min_poly = endo_minpoly(M, SkewPoly::tau_power(M.field(), c.n));
  c.d = ax::deg(c.min_poly);
  c.e = M.rank() / c.d;
  c.char_poly = ax::pow(K.fq(), c.min_poly, static_cast<int>(c.e));
  return c;
}

long stabilizing_exponent(const DrinfeldModule& M) {
  auto c = frobenius_minpoly_data(M);
  return stable_power_exponent(M.K().fq_ptr(), c.min_poly).m;
}

CharPolyFrob frobenius_charpoly(const DrinfeldModule& M) {
  auto c = frobenius_minpoly_data(M);
  auto sp = stable_power_exponent(M.K().fq_ptr(), c.min_poly);
  c.endring_commutative = M.rank() / sp.degree == 1;
  return c;
}

OrthogonalBasis empty_basis(const SkewPoly& act, OrthogonalBasis::Kind kind, long m) {
  OrthogonalBasis B;
  B.kind = kind;
  B.ext_degree = m;
  B.act = act;
  return B;
}

SkewPoly act_power(const OrthogonalBasis& B, long k, const SkewPoly& u) {
  SkewPoly r = u;
  for (long i = 0; i < k; ++i) r = skew::mul(B.act, r);
  return r;
}

SkewPoly act_poly(const OrthogonalBasis& B, const FqPoly& a, const SkewPoly& u) {
  SkewPoly r(B.field());
  for (size_t i = a.size(); i-- > 0;) {
    r = skew::mul(B.act, r);
    if (a[i]) r = skew::add(r, skew::scale_const(u, a[i]));
  }
  return r;
}

SkewPoly combination(const OrthogonalBasis& B, const std::vector<FqPoly>& a) {
  SkewPoly r(B.field());
  for (size_t i = 0; i < B.elems.size() && i < a.size(); ++i) r = skew::add(r, act_poly(B, a[i], B.elems[i]));
  return r;
}

namespace {

// Leading coefficient of psi_{t^k} u for deg u + k delta = D.
Elem lead_at(const OrthogonalBasis& B, const SkewPoly& u, long D) {
  const Field& K = *B.field();
  long k = (D - u.deg()) / B.delta();
  Elem c = u.lead();
  for (long i = 0; i < k; ++i) c = K.mul(B.act.lead(), K.twist(c, B.delta()));
  return c;
}

bool fq_independent(const Field& K, const std::vector<Elem>& v) {
  if (v.empty()) return true;
  std::vector<std::vector<Elem>> cols;
  for (auto& e : v) cols.push_back({e});
  return la::kernel(K.fq(), la::expand(K, cols)).empty();
}

}  // namespace

bool orthogonality_certificate(const OrthogonalBasis& B) {
  long delta = B.delta();
  for (long cls = 0; cls < delta; ++cls) {
    long D = kNegInf;
    for (auto& m : B.elems) {
      if (m.is_zero()) return false;
      if (m.deg() % delta == cls) D = std::max(D, m.deg());
    }
    if (D == kNegInf) continue;
    std::vector<Elem> lam;
    for (auto& m : B.elems)
      if (m.deg() % delta == cls) lam.push_back(lead_at(B, m, D));
    if (!fq_independent(*B.field(), lam)) return false;
  }
  return true;
}

Reduction orth_reduce(const OrthogonalBasis& B, const SkewPoly& f) {
  const Field& K = *B.field();
  long delta = B.delta();
  Reduction R{f, std::vector<FqPoly>(B.elems.size())};
  while (!R.rem.is_zero()) {
    long D = R.rem.deg();
    std::vector<size_t> cand;
    std::vector<std::vector<Elem>> cols;
    for (size_t i = 0; i < B.elems.size(); ++i) {
      long Di = B.elems[i].deg();
      if (Di <= D && (D - Di) % delta == 0) {
        cand.push_back(i);
        cols.push_back({lead_at(B, B.elems[i], D)});
      }
    }
    if (cand.empty()) break;
    auto x = solve_fq(K, cols, {R.rem.lead()});
    if (!x) break;
    for (size_t c = 0; c < cand.size(); ++c) {
      uint32_t a = (*x)[c];
      if (!a) continue;
      size_t i = cand[c];
      long k = (D - B.elems[i].deg()) / delta;
      R.rem = skew::sub(R.rem, skew::scale_const(act_power(B, k, B.elems[i]), a));
      FqPoly& co = R.coeffs[i];
      if (co.size() <= static_cast<size_t>(k)) co.resize(static_cast<size_t>(k) + 1, 0);
      co[static_cast<size_t>(k)] = K.fq().add(co[static_cast<size_t>(k)], a);
    }
    if (R.rem.deg() >= D) throw std::logic_error("orthogonal reduction did not lower the degree");
  }
  for (auto& c : R.coeffs) fqp::trim(c);
  return R;
}

std::optional<std::vector<FqPoly>> orth_membership(const OrthogonalBasis& B, const SkewPoly& f) {
  if (f.field() && !f.K().same(*B.field())) throw std::invalid_argument("incompatible fields");
  std::vector<FqPoly> out(B.elems.size());
  if (f.is_zero()) return out;
  const Field& K = *B.field();
  long D = f.deg(), delta = B.delta();
  std::vector<SkewPoly> cols;
  std::vector<std::pair<size_t, long>> idx;
  for (size_t i = 0; i < B.elems.size(); ++i) {
    SkewPoly u = B.elems[i];
    for (long j = 0; B.elems[i].deg() + j * delta <= D; ++j) {
      cols.push_back(u);
      idx.emplace_back(i, j);
      u = skew::mul(B.act, u);
    }
  }
  if (cols.empty()) return std::nullopt;
  auto x = solve_fq(K, columns(K, cols, D + 1), columns(K, {f}, D + 1)[0]);
  if (!x) return std::nullopt;
  for (size_t c = 0; c < idx.size(); ++c) {
    auto [i, j] = idx[c];
    auto& a = out[i];
    if (a.size() <= static_cast<size_t>(j)) a.resize(static_cast<size_t>(j) + 1, 0);
    a[static_cast<size_t>(j)] = (*x)[c];
  }
  for (auto& a : out) fqp::trim(a);
  return out;
}

void orth_insert(OrthogonalBasis& B, const SkewPoly& f) {
  std::vector<SkewPoly> work = {f};
  long delta = B.delta();
  for (long guard = 0; !work.empty(); ++guard) {
    if (guard > 100000) throw std::logic_error("orthogonal insertion did not terminate");
    auto it = std::min_element(work.begin(), work.end(),
                               [](const SkewPoly& a, const SkewPoly& b) { return a.deg() < b.deg(); });
    SkewPoly g = orth_reduce(B, *it).rem;
    work.erase(it);
    if (g.is_zero()) continue;
    long D = g.deg();
    std::vector<SkewPoly> keep;
    for (auto& m : B.elems) {
      if (m.deg() > D && (m.deg() - D) % delta == 0)
        work.push_back(m);
      else
        keep.push_back(m);
    }
    keep.push_back(g);
    B.elems = std::move(keep);
  }
  std::stable_sort(B.elems.begin(), B.elems.end(), [](const SkewPoly& a, const SkewPoly& b) { return a.deg() < b.deg(); });
}

OrthogonalBasis orth_extend(const OrthogonalBasis& B, const std::vector<SkewPoly>& new_elems) {
  if (!orthogonality_certificate(B)) throw std::invalid_argument("input basis is not orthogonal");
  OrthogonalBasis out = B;
  for (auto& f : new_elems) orth_insert(out, f);
  return out;
}

OrthogonalBasis sweep_to_rank(const DrinfeldModule& phi, const DrinfeldModule& psi, long target_rank,
                              OrthogonalBasis::Kind kind, long max_degree) {
  OrthogonalBasis B = empty_basis(psi.phi_t(), kind);
  for (long d = 0; d <= max_degree; ++d) {
    for (auto& u : intertwiners_of_degree(phi, psi, d))
      if (u.deg() == d) orth_insert(B, u);
    if (static_cast<long>(B.elems.size()) >= target_rank) break;
  }
  return B;
}

OrthogonalBasis end_ring_finite(const DrinfeldModule& M) {
  auto c = frobenius_minpoly_data(M);
  long target = c.d * c.e * c.e;
  OrthogonalBasis B = sweep_to_rank(M, M, target, OrthogonalBasis::Kind::End, 8 * M.rank() * target + 8);
  if (static_cast<long>(B.elems.size()) != target) throw std::logic_error("endomorphism sweep fell short of the rank");
  return B;
}

SepEnd end_ring_sep(const DrinfeldModule& M) {
  auto c = frobenius_minpoly_data(M);
  SepEnd out;
  auto sp = stable_power_exponent(M.K().fq_ptr(), c.min_poly);
  out.m = sp.m;
  out.embedding = extension(M.field(), out.m);
  DrinfeldModule Mm = base_change(M, out.embedding);
  long dm = sp.degree, em = M.rank() / dm;
  long target = dm * em * em;
  out.basis = sweep_to_rank(Mm, Mm, target, OrthogonalBasis::Kind::End, 8 * M.rank() * target + 8);
  if (static_cast<long>(out.basis.elems.size()) != target)
    throw std::logic_error("separable endomorphism sweep fell short of the rank");
  out.basis.ext_degree = out.m;
  return out;
}

OrthogonalBasis end_ring_invariants(const DrinfeldModule& M, const SepEnd& sep) {
  const ConstField& F = M.K().fq();
  if (sep.m == 1) {
    OrthogonalBasis B = sep.basis;
    B.ext_degree = 1;
    return B;
  }
  const OrthogonalBasis& B = sep.basis;
  size_t n = B.elems.size();
  long nK = M.K().degree();
  AMat G(n, std::vector<FqPoly>(n));
  for (size_t i = 0; i < n; ++i) {
    auto co = orth_membership(B, skew::twist_coeffs(B.elems[i], nK));
    if (!co) throw std::logic_error("basis is not Galois stable");
    for (size_t k = 0; k < n; ++k) G[k][i] = (*co)[k];
  }
  for (size_t i = 0; i < n; ++i) G[i][i] = fqp::sub(F, G[i][i], {1});
  auto ker = ala::kernel(F, G, n);
  OrthogonalBasis out = empty_basis(M.phi_t(), OrthogonalBasis::Kind::End);
  for (auto& v : ker) {
    SkewPoly u = combination(B, v);
    std::vector<Elem> c;
    for (auto& e : u.coeffs()) c.push_back(sep.embedding.preimage(e));
    orth_insert(out, SkewPoly(M.field(), c));
  }
  return out;
}

RingPresentation multiplication_table(const OrthogonalBasis& B) {
  if (B.kind != OrthogonalBasis::Kind::End) throw std::invalid_argument("multiplication table needs an End basis");
  const ConstField& F = B.field()->fq();
  RingPresentation R;
  R.basis = B;
  size_t n = B.elems.size();
  R.table.assign(n, std::vector<std::vector<FqPoly>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto co = orth_membership(B, skew::mul(B.elems[i], B.elems[j]));
      if (!co) throw std::logic_error("product left the module");
      R.table[i][j] = *co;
    }
  // z = sum a_i m_i is central iff sum_i a_i (T_ij - T_ji) = 0 for all j.
  AMat C;
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      std::vector<FqPoly> row(n);
      for (size_t i = 0; i < n; ++i) row[i] = fqp::sub(F, R.table[i][j][k], R.table[j][i][k]);
      bool nz = false;
      for (auto& e : row) nz = nz || !e.empty();
      if (nz) C.push_back(row);
    }
  R.center = ala::kernel(F, C, n);
  return R;
}

namespace {

// A[s]/(P) is integrally closed for the accepted quadratic shapes.
void check_normal(const ConstField& F, const APolyX& P) {
  if (ax::deg(P) != 2) throw std::invalid_argument("normality check supports quadratic minimal polynomials only");
  const FqPoly &b = P[1], &c = P[0];
  auto squarefree = [&](const FqPoly& g) {
    if (g.empty()) return false;
    for (auto& pr : fqp::factor(F, g))
      if (pr.second > 1) return false;
    return true;
  };
  if (F.p() != 2) {
    // discriminant b^2 - 4c
    FqPoly disc = fqp::sub(F, fqp::mul(F, b, b), fqp::scale(F, c, F.from_int(4)));
    if (!squarefree(disc)) throw std::invalid_argument("A[f] is not integrally closed (discriminant not squarefree)");
    return;
  }
  if (!b.empty()) {
    if (fqp::deg(b) != 0) throw std::invalid_argument("A[f] normality undecided: non-constant linear coefficient");
    return;
  }
  FqPoly dc = fqp::deriv(F, c);
  if (fqp::deg(dc) != 0) throw std::invalid_argument("A[f] is not integrally closed or undecided (X^2 + c with c' not a unit)");
}

}  // namespace

GoingUpResult going_up(const DrinfeldModule& M, const SkewPoly& f) {
  const ConstField& F = M.K().fq();
  APolyX P = endo_minpoly(M, f);
  if (ax::deg(P) <= 1) throw std::invalid_argument("scalar endomorphism");
  check_normal(F, P);
  GoingUpResult R;
  R.minpoly = P;
  R.phi_s = f;
  R.h = SkewPoly::constant(M.field(), M.K().one());
  R.h_dual = R.h;
  R.a = {1};
  R.rank_prime = M.rank() / ax::deg(P);
  bool linear_in_t = fqp::deg(P[0]) == 1;
  for (size_t i = 1; i < P.size(); ++i) linear_in_t = linear_in_t && fqp::deg(P[i]) <= 0;
  if (linear_in_t) {
    // P = h(s) + c t, so t = -h(s)/c.
    uint32_t c = P[0][1];
    FqPoly g(P.size(), 0);
    g[0] = P[0][0];
    for (size_t i = 1; i < P.size(); ++i) g[i] = P[i].empty() ? 0 : P[i][0];
    g = fqp::scale(F, g, F.neg(F.inv(c)));
    fqp::trim(g);
    R.t_in_s = g;
    DrinfeldModule Ms(f);
    if (phi_action(Ms, g) != M.phi_t()) throw std::logic_error("going-up module does not restrict to phi");
    R.module_in_s = Ms;
  }
  return R;
}

}  // namespace dmod
