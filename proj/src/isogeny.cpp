// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/isogeny.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dmod/linalg.hpp"

namespace dmod {

const char* status_name(IsogenyVerdict::Status s) {
  switch (s) {
    case IsogenyVerdict::Status::Isogenous:
      return "Isogenous";
    case IsogenyVerdict::Status::NotIsogenous:
      return "NotIsogenous";
    default:
      return "Unknown";
  }
}

void check_comparable(const DrinfeldModule& phi, const DrinfeldModule& psi) {
  if (!phi.K().same(psi.K())) throw PreconditionError("modules over different base fields");
  if (phi.rank() != psi.rank()) throw PreconditionError("modules of different rank");
  if (phi.K().is_finite()) {
    if (invariants(phi).char_ideal != invariants(psi).char_ideal) throw PreconditionError("different characteristic ideals");
  } else if (phi.gamma() != psi.gamma()) {
    throw PreconditionError("different characteristic homomorphisms");
  }
}

std::vector<SkewPoly> isogenies_of_degree(const DrinfeldModule& phi, const DrinfeldModule& psi, long d) {
  check_comparable(phi, psi);
  return intertwiners_of_degree(phi, psi, d);
}

namespace {

bool witness_less(const Field& K, const SkewPoly& a, const SkewPoly& b) {
  bool ma = K.is_one(a.lead()), mb = K.is_one(b.lead());
  if (ma != mb) return ma;
  for (long i = 0; i <= a.deg(); ++i) {
    Elem x = a.coeff(i), y = b.coeff(i);
    if (x != y) return elem_less(x, y);
  }
  return false;
}

}  // namespace

std::optional<SkewPoly> normalized_witness(const Field& K, const std::vector<SkewPoly>& basis) {
  if (basis.empty()) return std::nullopt;
  long d = kNegInf;
  for (auto& u : basis) d = std::max(d, u.deg());
  std::vector<SkewPoly> top;
  for (auto& u : basis)
    if (u.deg() == d) top.push_back(u);
  // All q^k combinations when small, otherwise the basis itself.
  uint64_t q = K.q(), total = 1;
  bool small = true;
  for (size_t i = 0; i < top.size() && small; ++i) {
    total *= q;
    small = total <= 4096;
  }
  std::optional<SkewPoly> best;
  auto consider = [&](const SkewPoly& u) {
    if (u.deg() != d) return;
    if (!best || witness_less(K, u, *best)) best = u;
  };
  if (!small) {
    for (auto& u : top) consider(u);
    return best;
  }
  for (uint64_t k = 1; k < total; ++k) {
    SkewPoly u(basis[0].field());
    uint64_t r = k;
    for (auto& b : top) {
      uint32_t c = static_cast<uint32_t>(r % q);
      r /= q;
      if (c) u = skew::add(u, skew::scale_const(b, c));
    }
    consider(u);
  }
  return best;
}

IsogenyVerdict are_isogenous(const DrinfeldModule& phi, const DrinfeldModule& psi) {
  check_comparable(phi, psi);
  if (!phi.K().is_finite()) throw std::invalid_argument("are_isogenous needs a finite base field");
  IsogenyVerdict v;
  auto a = frobenius_minpoly_data(phi), b = frobenius_minpoly_data(psi);
  if (a.char_poly != b.char_poly) {
    v.status = IsogenyVerdict::Status::NotIsogenous;
    v.cert_phi = a.char_poly;
    v.cert_psi = b.char_poly;
    v.report = "Frobenius characteristic polynomials differ";
    return v;
  }
  long r = phi.rank();
  long cap = 8 * r * r * r + 8;
  for (long d = 0; d <= cap; ++d) {
    ++v.steps_a;
    auto sols = intertwiners_of_degree(phi, psi, d);
    if (sols.empty()) continue;
    v.status = IsogenyVerdict::Status::Isogenous;
    v.witness = normalized_witness(phi.K(), sols);
    v.report = "witness found by degree search";
    return v;
  }
  v.report = "equal Frobenius data but no witness within the degree cap";
  return v;
}

IsogenyVerdict are_isogenous_sep(const DrinfeldModule& phi, const DrinfeldModule& psi) {
  IsogenyVerdict over_k = are_isogenous(phi, psi);
  if (over_k.status == IsogenyVerdict::Status::Isogenous) return over_k;
  const ConstField& F = phi.K().fq();
  FqPoly p0 = invariants(phi).char_ideal;
  FqPoly p;
  for (int d = 1; p.empty(); ++d)
    for (auto& g : fqp::monic_irreducibles(F, d))
      if (g != p0) {
        p = g;
        break;
      }
  long n1 = torsion_splitting(phi, p).extension_degree;
  long n2 = torsion_splitting(psi, p).extension_degree;
  long N = std::lcm(n1, n2);
  Embedding e = extension(phi.field(), N);
  IsogenyVerdict v = are_isogenous(base_change(phi, e), base_change(psi, e));
  v.extension_degree = N;
  std::ostringstream os;
  os << v.report << " over the degree-" << N << " extension split by the " << fqp::render(p) << "-torsion";
  v.report = os.str();
  return v;
}

namespace {

// F_q-basis of {u : deg_tau u <= d, coefficients polynomials in x of degree <= N}.
std::vector<SkewPoly> polynomial_intertwiners(const DrinfeldModule& phi, const DrinfeldModule& psi, long d, long N) {
  const FieldPtr& Kp = phi.field();
  const Field& K = *Kp;
  std::vector<std::vector<Elem>> cols;
  long len = d + phi.rank() + 1;
  std::vector<SkewPoly> gens;
  for (long i = 0; i <= d; ++i)
    for (long k = 0; k <= N; ++k) {
      std::vector<Elem> c(static_cast<size_t>(i) + 1, K.zero());
      c.back() = K.frac(fqp::monomial(1, static_cast<size_t>(k)), {1});
      SkewPoly u(Kp, c);
      SkewPoly img = skew::sub(skew::mul(u, phi.phi_t()), skew::mul(psi.phi_t(), u));
      std::vector<Elem> col(static_cast<size_t>(len), K.zero());
      for (long j = 0; j <= img.deg(); ++j) col[static_cast<size_t>(j)] = img.coeff(j);
      cols.push_back(std::move(col));
      gens.push_back(std::move(u));
    }
  auto ker = la::kernel(K.fq(), la::expand(K, cols));
  std::vector<SkewPoly> out;
  for (auto& v : ker) {
    SkewPoly u(Kp);
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j]) u = skew::add(u, skew::scale_const(gens[j], v[j]));
    out.push_back(u);
  }
  return out;
}

APolyX char_poly_at(const ReductionModel& model, const FqPoly& pi) {
  return frobenius_minpoly_data(reduce_at(model, pi)).char_poly;
}

}  // namespace

IsogenyVerdict are_isogenous_rational(const DrinfeldModule& phi, const DrinfeldModule& psi,
                                      const RationalBudgets& budgets) {
  check_comparable(phi, psi);
  if (phi.K().is_finite()) throw std::invalid_argument("are_isogenous_rational needs the base field F_q(x)");
  struct Found {
    std::optional<SkewPoly> witness;
    FqPoly place;
    APolyX a, b;
  };
  long d = 0;
  auto search = [&]() -> std::optional<Found> {
    if (d > budgets.witness_degree) return std::nullopt;
    auto sols = polynomial_intertwiners(phi, psi, d++, budgets.witness_degree);
    if (sols.empty()) return std::nullopt;
    return Found{normalized_witness(phi.K(), sols), {}, {}, {}};
  };
  ReductionModel mphi = good_model(phi), mpsi = good_model(psi);
  PlaceIterator places(mphi);
  long examined = 0;
  auto compare = [&]() -> std::optional<Found> {
    if (examined >= budgets.places) return std::nullopt;
    FqPoly pi = places.next();
    ++examined;
    if (!is_good_place(mpsi, pi)) return std::nullopt;
    APolyX a = char_poly_at(mphi, pi), b = char_poly_at(mpsi, pi);
    if (a == b) return std::nullopt;
    return Found{std::nullopt, pi, a, b};
  };
  auto race_v = race<Found>(search, compare, budgets.steps);
  IsogenyVerdict v;
  v.steps_a = race_v.steps_a;
  v.steps_b = race_v.steps_b;
  if (!race_v.resolved()) {
    std::ostringstream os;
    os << "budgets exhausted: witness degree " << budgets.witness_degree << ", " << examined << " places compared";
    v.report = os.str();
    return v;
  }
  if (race_v.winner == 0) {
    v.status = IsogenyVerdict::Status::Isogenous;
    v.witness = race_v.payload->witness;
    v.report = "verified witness";
  } else {
    v.status = IsogenyVerdict::Status::NotIsogenous;
    v.place = race_v.payload->place;
    v.cert_phi = race_v.payload->a;
    v.cert_psi = race_v.payload->b;
    v.report = "reductions differ at " + fqp::render(race_v.payload->place);
  }
  return v;
}

HomModule hom_module(const DrinfeldModule& phi, const DrinfeldModule& psi, bool sep) {
  if (!phi.K().is_finite()) throw std::invalid_argument("hom_module needs a finite base field");
  HomModule H{sep ? are_isogenous_sep(phi, psi) : are_isogenous(phi, psi), 1,
              empty_basis(psi.phi_t(), OrthogonalBasis::Kind::Hom)};
  if (H.verdict.status != IsogenyVerdict::Status::Isogenous) return H;
  long target = 0;
  DrinfeldModule a = phi, b = psi;
  if (!sep) {
    target = static_cast<long>(end_ring_finite(phi).elems.size());
  } else {
    SepEnd S = end_ring_sep(phi);
    target = static_cast<long>(S.basis.elems.size());
    H.ext_degree = std::lcm(S.m, H.verdict.extension_degree);
    Embedding e = extension(phi.field(), H.ext_degree);
    a = base_change(phi, e);
    b = base_change(psi, e);
  }
  H.basis = sweep_to_rank(a, b, target, OrthogonalBasis::Kind::Hom, 8 * phi.rank() * target + 8);
  H.basis.ext_degree = H.ext_degree;
  if (static_cast<long>(H.basis.elems.size()) != target) throw std::logic_error("Hom sweep fell short of the rank");
  return H;
}

}  // namespace dmod
