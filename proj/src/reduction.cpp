// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "dmod/kpoly.hpp"

namespace dmod {

namespace {

void require_rational(const DrinfeldModule& M) {
  if (M.K().is_finite()) throw std::invalid_argument("reduction needs the base field F_q(x)");
}

long height_of(const Elem& u) {
  return std::max(fqp::deg(u.a), fqp::deg(u.b));
}

}  // namespace

ReductionModel good_model(const DrinfeldModule& M) {
  require_rational(M);
  const ConstField& F = M.K().fq();
  FqPoly den = {1};
  for (auto& c : M.phi_t().coeffs())
    if (!c.a.empty()) den = fqp::lcm(F, den, c.b);
  FqPoly bad = fqp::monic(F, fqp::mul(F, den, M.phi_t().lead().a));
  return ReductionModel{M, bad};
}

bool is_good_place(const ReductionModel& model, const FqPoly& pi) {
  return !fqp::mod(model.M.K().fq(), model.bad_denominator, pi).empty();
}

PlaceIterator::PlaceIterator(const ReductionModel& model) : model_(&model) {}

FqPoly PlaceIterator::next() {
  const ConstField& F = model_->M.K().fq();
  for (;;) {
    uint64_t count = 1;
    for (int i = 0; i < degree_; ++i) count *= F.q();
    if (index_ >= count) {
      ++degree_;
      index_ = 0;
      if (degree_ > 24) throw std::runtime_error("place enumeration overflow");
      continue;
    }
    FqPoly f = fqp::monic_from_index(F, degree_, index_++);
    if (!fqp::is_irreducible(F, f) || !is_good_place(*model_, f)) continue;
    ++visited_;
    return f;
  }
}

std::vector<FqPoly> good_places(const ReductionModel& model, size_t count) {
  PlaceIterator it(model);
  std::vector<FqPoly> out;
  while (out.size() < count) out.push_back(it.next());
  return out;
}

FieldPtr residue_field(const ConstFieldPtr& fq, const FqPoly& pi) { return Field::finite(fq, pi); }

Elem reduce_elem(const Field& k, const FqPoly& pi, const Elem& u) {
  const ConstField& F = k.fq();
  if (u.a.empty()) return k.zero();
  FqPoly b = fqp::mod(F, u.b, pi);
  if (b.empty()) throw std::invalid_argument("element is not integral at the place " + fqp::render(pi));
  return k.mul(k.from_poly(u.a), k.inv(k.from_poly(b)));
}

DrinfeldModule reduce_at(const ReductionModel& model, const FqPoly& pi) {
  if (!is_good_place(model, pi)) throw std::invalid_argument("bad place " + fqp::render(pi));
  FieldPtr k = residue_field(model.M.K().fq_ptr(), pi);
  std::vector<Elem> c;
  for (auto& e : model.M.phi_t().coeffs()) c.push_back(reduce_elem(*k, pi, e));
  return DrinfeldModule(SkewPoly(k, c));
}

SkewPoly reduce_endo(const ReductionModel& model, const FqPoly& pi, const SkewPoly& f) {
  FieldPtr k = residue_field(model.M.K().fq_ptr(), pi);
  std::vector<Elem> c;
  for (auto& e : f.coeffs()) c.push_back(reduce_elem(*k, pi, e));
  return SkewPoly(k, c);
}

Elem adjoint_trace(const FieldPtr& Ft, const APolyX& char_poly) {
  int r = ax::deg(char_poly);
  if (r < 1) throw std::invalid_argument("constant characteristic polynomial");
  auto c = [&](int i) { return Ft->frac(char_poly[static_cast<size_t>(i)], {1}); };
  if (char_poly[0].empty()) throw std::invalid_argument("characteristic polynomial with zero constant term");
  return Ft->div(Ft->mul(c(1), c(r - 1)), c(0));
}

PlaceData place_frobenius_data(const ReductionModel& model, const FqPoly& pi) {
  PlaceData P{pi, reduce_at(model, pi), {}, {}, false, {}, nullptr};
  P.frob = frobenius_charpoly(P.residue_module);
  auto inv = invariants(P.residue_module);
  P.char_ideal = inv.char_ideal;
  P.is_ordinary = inv.is_ordinary;
  P.trace_field = Field::rational(model.M.K().fq_ptr(), 't');
  P.adjoint_trace = adjoint_trace(P.trace_field, P.frob.char_poly);
  if (P.is_ordinary && (P.frob.d != P.residue_module.rank() || !P.frob.endring_commutative))
    throw std::logic_error("ordinary reduction with a non-separable Frobenius field");
  return P;
}

OrdinaryPair two_ordinary_distinct(const ReductionModel& model, long place_budget) {
  PlaceIterator it(model);
  std::optional<PlaceData> first;
  while (it.visited() < place_budget) {
    FqPoly pi = it.next();
    PlaceData P = place_frobenius_data(model, pi);
    if (!P.is_ordinary) continue;
    if (!first) {
      first = std::move(P);
    } else if (P.char_ideal != first->char_ideal) {
      return OrdinaryPair{std::move(*first), std::move(P), it.visited()};
    }
  }
  std::ostringstream os;
  os << "no two ordinary places with distinct characteristic after " << it.visited() << " places";
  if (first) os << " (first ordinary place " << fqp::render(first->place) << ")";
  throw BudgetExhausted(os.str());
}

std::optional<SkewPoly> lift_from_constant_coeff(const DrinfeldModule& M, const Elem& u0) {
  require_rational(M);
  const Field& K = M.K();
  auto inv = invariants(M);
  if (!inv.is_generic) throw std::invalid_argument("lifting needs generic characteristic");
  const FieldPtr& Kp = M.field();
  if (K.is_zero(u0)) return SkewPoly(Kp);
  Elem x0 = M.gamma();
  long N = height_of(x0);
  long r = M.rank();
  // deg u <= r h(u0) / h(x0): the norm of u0 to F_q(x0) has degree at most h(u0).
  long D = r * height_of(u0) / N;
  std::vector<Elem> u = {u0};
  auto x = [&](long i) { return M.phi_t().coeff(i); };
  for (long n = 1; n <= D; ++n) {
    Elem s = K.zero();
    for (long l = 0; l < n; ++l) {
      long i = n - l;
      if (i > r) continue;
      s = K.add(s, K.sub(K.mul(u[static_cast<size_t>(l)], K.twist(x(i), l)), K.mul(x(i), K.twist(u[static_cast<size_t>(l)], i))));
    }
    Elem den = K.sub(K.twist(x0, n), x0);
    u.push_back(K.neg(K.div(s, den)));
  }
  SkewPoly f(Kp, u);
  if (!is_endomorphism(M, f)) return std::nullopt;
  return f;
}

namespace {

bool has_root_in_ft(const FieldPtr& Ft, const std::vector<Elem>& coeffs) {
  return !rational_roots(KPoly(Ft, coeffs)).empty();
}

// Splitting degrees of P modulo a place, or empty if P is not separable there.
std::vector<int> splitting_type(const ConstFieldPtr& fq, const APolyX& P, const FqPoly& pi) {
  const ConstField& F = *fq;
  if (fqp::mod(F, P.back(), pi).empty()) return {};
  FieldPtr R = Field::finite(fq, pi);
  std::vector<Elem> c;
  for (auto& a : P) c.push_back(R->from_poly(a));
  KPoly f(R, c);
  std::vector<int> degs;
  for (auto& [g, e] : kp::factor_finite(f)) {
    if (e != 1) return {};
    degs.push_back(g.deg());
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace

bool linear_disjoint(const ConstFieldPtr& fq, const APolyX& P1, const APolyX& P2) {
  int d1 = ax::deg(P1), d2 = ax::deg(P2);
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("linear_disjoint: constant polynomial");
  if (d1 > 3 || d2 > 3) throw ScopeError("linear_disjoint is implemented for degree <= 3");
  for (auto* P : {&P1, &P2})
    if (!irreducible_over_ft(fq, *P)) throw std::invalid_argument("linear_disjoint: reducible input");
  if (d1 == 1 || d2 == 1 || d1 != d2) return true;
  const ConstField& F = *fq;
  FieldPtr Ft = Field::rational(fq, 't');
  if (d1 == 2) {
    auto co = [&](const APolyX& P, int i) { return Ft->div(Ft->frac(P[static_cast<size_t>(i)], {1}), Ft->frac(P[2], {1})); };
    Elem b1 = co(P1, 1), c1 = co(P1, 0), b2 = co(P2, 1), c2 = co(P2, 0);
    if (F.p() != 2) {
      Elem four = Ft->from_const(4 % F.p());
      Elem D1 = Ft->sub(Ft->mul(b1, b1), Ft->mul(four, c1));
      Elem D2 = Ft->sub(Ft->mul(b2, b2), Ft->mul(four, c2));
      return !has_root_in_ft(Ft, {Ft->neg(Ft->mul(D1, D2)), Ft->zero(), Ft->one()});
    }
    bool s1 = !Ft->is_zero(b1), s2 = !Ft->is_zero(b2);
    if (s1 != s2) return true;
    if (!s1) return !has_root_in_ft(Ft, {Ft->mul(c1, c2), Ft->zero(), Ft->one()});
    Elem w = Ft->add(Ft->div(c1, Ft->mul(b1, b1)), Ft->div(c2, Ft->mul(b2, b2)));
    return !has_root_in_ft(Ft, {w, Ft->one(), Ft->one()});
  }
  // Two cubics: isomorphic fields give equal splitting types at every
  // place where both are separable.
  if (P1 == P2) return false;
  int checked = 0;
  for (int d = 1; d <= 6 && checked < 200; ++d)
    for (auto& pi : fqp::monic_irreducibles(F, d)) {
      if (++checked > 200) break;
      auto a = splitting_type(fq, P1, pi), b = splitting_type(fq, P2, pi);
      if (!a.empty() && !b.empty() && a != b) return true;
    }
  throw ScopeError("linear disjointness of the two cubics is undecided");
}

namespace {

APolyX stable_minpoly(const PlaceData& P) {
  return stable_power_exponent(P.residue_module.K().fq_ptr(), P.frob.min_poly).minpoly;
}

KPoly specialize(const DrinfeldModule& M, const APolyX& P) {
  std::vector<Elem> c;
  for (auto& a : P) c.push_back(gamma_of(M, a));
  return KPoly(M.field(), c);
}

struct LiftResult {
  std::vector<SkewPoly> lifts;
  std::vector<APolyX> unresolved;
  bool all_lifted = true;
};

// Lift every non-scalar basis element of End at the place through the
// constant coefficients of its minimal polynomial.
LiftResult lift_place_basis(const DrinfeldModule& M, const PlaceData& P) {
  LiftResult out;
  OrthogonalBasis Bk = end_ring_finite(P.residue_module);
  for (auto& m : Bk.elems) {
    if (m.deg() <= 0) continue;
    APolyX Pm = endo_minpoly(P.residue_module, m);
    if (ax::deg(Pm) < 2) continue;
    bool lifted = false;
    auto roots = rational_roots(specialize(M, Pm));
    if (roots.empty()) out.unresolved.push_back(Pm);
    for (auto& rho : roots)
      if (auto u = lift_from_constant_coeff(M, rho)) {
        out.lifts.push_back(*u);
        lifted = true;
      }
    out.all_lifted = out.all_lifted && lifted;
  }
  return out;
}

// Subtract F_q-constants from positive-degree elements so the constant
// coefficient is smallest in the representative order.
SkewPoly normalize_constant(const SkewPoly& m) {
  const Field& K = m.K();
  SkewPoly best = m;
  for (uint32_t c = 1; c < K.q(); ++c) {
    SkewPoly cand = skew::sub(m, SkewPoly::constant(m.field(), K.from_const(c)));
    if (elem_less(cand.coeff(0), best.coeff(0))) best = cand;
  }
  return best;
}

void normalize_constants(OrthogonalBasis& B) {
  const Field& K = *B.field();
  bool has_one = false;
  for (auto& m : B.elems) has_one = has_one || (m.deg() == 0 && K.is_one(m.coeff(0)));
  if (!has_one) return;
  for (auto& m : B.elems)
    if (m.deg() > 0) m = normalize_constant(m);
}

void close_under_products(OrthogonalBasis& B, long max_rank) {
  for (bool grew = true; grew;) {
    grew = false;
    auto elems = B.elems;
    for (auto& a : elems)
      for (auto& b : elems) {
        SkewPoly ab = skew::mul(a, b);
        if (orth_membership(B, ab)) continue;
        orth_insert(B, ab);
        grew = true;
        if (static_cast<long>(B.elems.size()) > max_rank) throw std::logic_error("endomorphism ring exceeds the rank");
      }
  }
}

}  // namespace

GenericEnd end_ring_generic_rational(const DrinfeldModule& M, long place_budget) {
  require_rational(M);
  if (!invariants(M).is_generic) throw std::invalid_argument("generic characteristic required");
  ReductionModel model = good_model(M);
  GenericEnd G{empty_basis(M.phi_t()), two_ordinary_distinct(model, place_budget), {}, false};
  orth_insert(G.basis, SkewPoly::constant(M.field(), M.K().one()));
  if (M.rank() > 1) {
    LiftResult L = lift_place_basis(M, G.places.first);
    for (auto& u : L.lifts) orth_insert(G.basis, u);
    close_under_products(G.basis, M.rank());
    G.extension_candidates = L.unresolved;
    if (M.rank() <= 3) {
      G.disjoint_frobenius =
          linear_disjoint(M.K().fq_ptr(), stable_minpoly(G.places.first), stable_minpoly(G.places.second));
    }
  } else {
    G.disjoint_frobenius = true;
  }
  normalize_constants(G.basis);
  return G;
}

GoingUpReport going_up_driver(const DrinfeldModule& M, long step_budget) {
  require_rational(M);
  if (M.rank() != 2) throw ScopeError("the going-up driver handles rank 2");
  if (!invariants(M).is_generic) throw std::invalid_argument("generic characteristic required");
  ReductionModel model = good_model(M);
  struct Outcome {
    bool end_is_a = false;
    std::optional<SkewPoly> f;
    std::string note;
  };
  PlaceIterator pa(model), pb(model);
  auto search = [&]() -> std::optional<Outcome> {
    FqPoly pi = pa.next();
    PlaceData P = place_frobenius_data(model, pi);
    if (!P.is_ordinary) return std::nullopt;
    LiftResult L = lift_place_basis(M, P);
    for (auto& u : L.lifts)
      if (u.deg() > 0) return Outcome{false, normalize_constant(u), "endomorphism lifted at place " + fqp::render(pi)};
    return std::nullopt;
  };
  std::vector<PlaceData> seen;
  auto certify = [&]() -> std::optional<Outcome> {
    FqPoly pi = pb.next();
    PlaceData P = place_frobenius_data(model, pi);
    if (!P.is_ordinary) return std::nullopt;
    APolyX mp = stable_minpoly(P);
    for (auto& Q : seen)
      if (Q.char_ideal != P.char_ideal && linear_disjoint(M.K().fq_ptr(), stable_minpoly(Q), mp))
        return Outcome{true, std::nullopt,
                       "disjoint Frobenius fields at " + fqp::render(Q.place) + " and " + fqp::render(pi)};
    seen.push_back(std::move(P));
    return std::nullopt;
  };
  auto v = race<Outcome>(search, certify, step_budget);
  GoingUpReport R;
  R.steps_a = v.steps_a;
  R.steps_b = v.steps_b;
  if (!v.resolved()) {
    std::ostringstream os;
    os << "budget exhausted: search " << v.steps_a << " steps, certificate " << v.steps_b << " steps";
    throw BudgetExhausted(os.str());
  }
  R.resolved = true;
  R.end_is_a = v.payload->end_is_a;
  R.note = v.payload->note;
  if (v.payload->f) R.result = going_up(M, *v.payload->f);
  return R;
}

}  // namespace dmod
