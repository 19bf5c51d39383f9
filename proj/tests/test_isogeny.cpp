// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/isogeny.hpp"
#include "doctest.h"

using namespace dmod;

namespace {

using Status = IsogenyVerdict::Status;

FieldPtr F2() { return Field::finite_default(make_const_field(2), 1); }
FieldPtr F4() { return Field::finite_default(make_const_field(2), 2); }

DrinfeldModule bits(const FieldPtr& K, std::initializer_list<int> b) {
  std::vector<Elem> c;
  for (int x : b) c.push_back(K->from_const(static_cast<uint32_t>(x)));
  return DrinfeldModule(SkewPoly(K, c));
}

// w + tau^2 and w^2 + tau^2 over F_4.
DrinfeldModule twist_a() {
  auto K = F4();
  return DrinfeldModule(SkewPoly(K, {K->gen(), K->zero(), K->one()}));
}
DrinfeldModule twist_b() {
  auto K = F4();
  return DrinfeldModule(SkewPoly(K, {K->mul(K->gen(), K->gen()), K->zero(), K->one()}));
}

FieldPtr F3x() { return Field::rational(make_const_field(3), 'x'); }

DrinfeldModule cm_module(const FieldPtr& K) {
  return DrinfeldModule(SkewPoly(K, {K->frac({0, 0, 1}, {1}), K->frac({0, 1, 0, 1}, {1}), K->one()}));
}

bool intertwines(const DrinfeldModule& phi, const DrinfeldModule& psi, const SkewPoly& u) {
  return skew::mul(u, phi.phi_t()) == skew::mul(psi.phi_t(), u);
}

}  // namespace

TEST_CASE("isogenies of bounded degree") {
  auto M = bits(F2(), {1, 1, 1});
  auto id = isogenies_of_degree(M, M, 0);
  REQUIRE(id.size() == 1);
  CHECK(id[0] == SkewPoly::constant(M.field(), M.K().one()));
  auto sols = isogenies_of_degree(twist_a(), twist_b(), 1);
  REQUIRE_FALSE(sols.empty());
  auto tau = SkewPoly::tau_power(F4(), 1);
  CHECK(intertwines(twist_a(), twist_b(), tau));
  CHECK(normalized_witness(*F4(), sols) == tau);
  auto N = bits(F2(), {1, 0, 1});
  CHECK(isogenies_of_degree(M, N, 4).empty());
  CHECK_THROWS_AS(isogenies_of_degree(M, bits(F2(), {0, 1, 1}), 1), PreconditionError);
}

TEST_CASE("isogeny over a finite field") {
  auto M = bits(F2(), {1, 1, 1}), N = bits(F2(), {1, 0, 1});
  auto v = are_isogenous(M, N);
  CHECK(v.status == Status::NotIsogenous);
  CHECK(*v.cert_phi == APolyX{{1, 1}, {1}, {1}});
  CHECK(*v.cert_psi == APolyX{{1, 1}, {}, {1}});
  CHECK(*v.cert_phi != *v.cert_psi);
  auto w = are_isogenous(twist_a(), twist_b());
  CHECK(w.status == Status::Isogenous);
  CHECK(*w.witness == SkewPoly::tau_power(F4(), 1));
  auto s = are_isogenous(M, M);
  CHECK(*s.witness == SkewPoly::constant(M.field(), M.K().one()));
  // Symmetry of the decision.
  std::vector<std::pair<DrinfeldModule, DrinfeldModule>> pairs = {{M, N}, {twist_a(), twist_b()}, {M, M}};
  for (auto& [a, b] : pairs) {
    auto x = are_isogenous(a, b), y = are_isogenous(b, a);
    CHECK(x.status == y.status);
    if (x.witness) CHECK(intertwines(a, b, *x.witness));
    if (y.witness) CHECK(intertwines(b, a, *y.witness));
  }
}

TEST_CASE("isogeny over the separable closure") {
  auto M = bits(F2(), {1, 1, 1}), N = bits(F2(), {1, 0, 1});
  auto v = are_isogenous_sep(M, N);
  CHECK(v.status == Status::NotIsogenous);
  CHECK(v.extension_degree == 6);
  CHECK(*v.cert_phi != *v.cert_psi);
  auto w = are_isogenous_sep(twist_a(), twist_b());
  CHECK(w.status == Status::Isogenous);
  CHECK(w.extension_degree == 1);
  CHECK(are_isogenous_sep(N, N).status == Status::Isogenous);
}

TEST_CASE("Hom modules") {
  auto M = bits(F2(), {1, 1, 1}), N = bits(F2(), {1, 0, 1});
  CHECK(hom_module(M, N).basis.elems.empty());
  auto H = hom_module(M, M);
  auto E = end_ring_finite(M);
  CHECK(H.basis.elems == E.elems);
  auto T = hom_module(twist_a(), twist_b());
  auto Ea = end_ring_finite(twist_a());
  CHECK(T.basis.elems.size() == Ea.elems.size());
  CHECK(orthogonality_certificate(T.basis));
  auto tau = SkewPoly::tau_power(F4(), 1);
  for (auto& u : T.basis.elems) {
    CHECK(intertwines(twist_a(), twist_b(), u));
    // u = e tau with e in End(psi).
    auto dm = skew::right_divmod(u, tau);
    if (u.deg() >= 1 && dm.rem.is_zero()) CHECK(is_endomorphism(twist_b(), dm.quot));
  }
  // Composition closure: Hom(psi, phi) Hom(phi, psi) lies in End(phi).
  auto back = hom_module(twist_b(), twist_a());
  for (auto& u : T.basis.elems)
    for (auto& v : back.basis.elems) CHECK(orth_membership(Ea, skew::mul(v, u)));
  auto S = hom_module(N, N, true);
  CHECK(S.basis.elems.size() == 4);
  CHECK(S.ext_degree == 2);
}

TEST_CASE("isogeny over F_q(x)") {
  auto K = F3x();
  auto phi = cm_module(K);
  auto self = are_isogenous_rational(phi, phi);
  CHECK(self.status == Status::Isogenous);
  CHECK(*self.witness == SkewPoly::constant(K, K->one()));
  // x phi x^{-1}.
  Elem c = K->gen();
  std::vector<Elem> co;
  for (long i = 0; i <= 2; ++i) co.push_back(K->div(K->mul(c, phi.phi_t().coeff(i)), K->twist(c, i)));
  DrinfeldModule conj(SkewPoly(K, co));
  auto v = are_isogenous_rational(phi, conj);
  CHECK(v.status == Status::Isogenous);
  CHECK(*v.witness == SkewPoly::constant(K, c));
  CHECK(v.steps_a == 1);
  DrinfeldModule pert(SkewPoly(K, {K->frac({0, 0, 1}, {1}), K->frac({0, 1, 0, 1}, {1}), K->gen()}));
  auto n = are_isogenous_rational(phi, pert);
  CHECK(n.status == Status::NotIsogenous);
  REQUIRE(n.place);
  auto a = frobenius_minpoly_data(reduce_at(good_model(phi), *n.place)).char_poly;
  auto b = frobenius_minpoly_data(reduce_at(good_model(pert), *n.place)).char_poly;
  CHECK(a == *n.cert_phi);
  CHECK(b == *n.cert_psi);
  CHECK(a != b);
  DrinfeldModule other(SkewPoly(K, {K->gen(), K->one(), K->one()}));
  CHECK_THROWS_AS(are_isogenous_rational(phi, other), PreconditionError);
  RationalBudgets tiny{0, 1, 2};
  DrinfeldModule far(SkewPoly(K, {K->frac({0, 0, 1}, {1}), K->frac({0, 1, 0, 1}, {1}), K->frac({0, 0, 0, 0, 1}, {1})}));
  auto u = are_isogenous_rational(phi, far, tiny);
  CHECK(u.steps_a + u.steps_b <= 2);
}
