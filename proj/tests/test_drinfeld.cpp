// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/drinfeld.hpp"
#include "dmod/kpoly.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace dmod;

namespace {

FieldPtr F2() { return Field::finite_default(make_const_field(2), 1); }

SkewPoly S(const FieldPtr& K, std::initializer_list<int> bits) {
  std::vector<Elem> c;
  for (int b : bits) c.push_back(K->from_const(static_cast<uint32_t>(b)));
  return SkewPoly(K, c);
}

// x^2 + (x + x^3) tau + tau^2 over F_3(x).
DrinfeldModule cm_module() {
  auto K = Field::rational(make_const_field(3), 'x');
  return DrinfeldModule(SkewPoly(K, {K->frac({0, 0, 1}, {1}), K->frac({0, 1, 0, 1}, {1}), K->one()}));
}

}  // namespace

TEST_CASE("phi action") {
  auto K = F2();
  DrinfeldModule C(S(K, {1, 1}));
  CHECK(phi_action(C, {1, 1}) == S(K, {0, 1}));
  CHECK(phi_action(C, {1}) == S(K, {1}));
  DrinfeldModule M(S(K, {1, 1, 1}));
  SkewPoly p2 = phi_action(M, {0, 0, 1});
  CHECK(p2 == skew::mul(M.phi_t(), M.phi_t()));
  auto dm = skew::right_divmod(p2, M.phi_t());
  CHECK(dm.rem.is_zero());
  CHECK(dm.quot == M.phi_t());
  CHECK_THROWS(DrinfeldModule(S(K, {1})));
}

TEST_CASE("phi is a ring homomorphism") {
  std::mt19937_64 rng(3);
  auto K = Field::finite_default(make_const_field(3), 2);
  DrinfeldModule M(testutil::rand_skew(K, rng, 2));
  const ConstField& F = K->fq();
  for (int it = 0; it < 20; ++it) {
    FqPoly a = testutil::rand_fqpoly(F, rng, 3), b = testutil::rand_fqpoly(F, rng, 3);
    CHECK(phi_action(M, fqp::add(F, a, b)) == skew::add(phi_action(M, a), phi_action(M, b)));
    CHECK(phi_action(M, fqp::mul(F, a, b)) == skew::mul(phi_action(M, a), phi_action(M, b)));
    if (!a.empty()) CHECK(phi_action(M, a).deg() == M.rank() * fqp::deg(a));
    CHECK(phi_action(M, a).coeff(0) == gamma_of(M, a));
  }
}

TEST_CASE("invariants of fixtures") {
  auto K = F2();
  auto c = invariants(DrinfeldModule(S(K, {1, 1})));
  CHECK(c.rank == 1);
  CHECK(c.char_ideal == FqPoly{1, 1});
  CHECK(c.height == Height{1, 1});
  CHECK(c.is_ordinary);
  CHECK(c.is_isotrivial);
  CHECK_FALSE(c.is_generic);
  auto s = invariants(DrinfeldModule(S(K, {1, 0, 1})));
  CHECK(s.rank == 2);
  CHECK(s.char_ideal == FqPoly{1, 1});
  CHECK(s.height == Height{2, 1});
  CHECK_FALSE(s.is_ordinary);
  auto g = invariants(cm_module());
  CHECK(g.rank == 2);
  CHECK(g.is_generic);
  CHECK(g.char_ideal.empty());
  CHECK_FALSE(g.is_isotrivial);
}

TEST_CASE("special characteristic over a larger field") {
  // gamma = w in F_4, characteristic ideal t^2 + t + 1.
  auto K = Field::finite_default(make_const_field(2), 2);
  DrinfeldModule M(SkewPoly(K, {K->gen(), K->zero(), K->one()}));
  auto inv = invariants(M);
  CHECK(inv.char_ideal == FqPoly{1, 1, 1});
  CHECK(K->is_zero(gamma_of(M, inv.char_ideal)));
  CHECK(inv.height.num >= inv.height.den);
  // Isotriviality over F_q(x): a constant-coefficient module is isotrivial.
  auto R = Field::rational(make_const_field(2), 'x');
  auto iso = invariants(DrinfeldModule(SkewPoly(R, {R->one(), R->one(), R->one()})));
  CHECK(iso.is_isotrivial);
  // x^3 tau^2 + 1: x_0^3 / x_2^0 constant, ratio for i = 1 absent, so isotrivial.
  auto tw = invariants(DrinfeldModule(SkewPoly(R, {R->one(), R->zero(), R->frac({0, 0, 0, 1}, {1})})));
  CHECK(tw.is_isotrivial);
  auto nt = invariants(DrinfeldModule(SkewPoly(R, {R->one(), R->gen(), R->one()})));
  CHECK_FALSE(nt.is_isotrivial);
}

TEST_CASE("torsion splitting") {
  auto K = F2();
  DrinfeldModule C(S(K, {1, 1}));
  auto tc = torsion_splitting(C, {0, 1});
  CHECK(tc.extension_degree == 1);
  CHECK(tc.basis.size() == 1);
  DrinfeldModule M(S(K, {1, 1, 1}));
  auto tm = torsion_splitting(M, {0, 1});
  CHECK(tm.extension_degree == 3);
  CHECK(tm.basis.size() == 2);
  // Every basis vector is a root of phi_t(X) = X^4 + X^2 + X.
  SkewPoly pt = map_skew(tm.embedding, M.phi_t());
  for (auto& z : tm.basis) CHECK(tm.embedding.to->is_zero(skew::evaluate(pt, z)));
  auto tu = torsion_splitting(M, {1});
  CHECK(tu.extension_degree == 1);
  CHECK(tu.basis.empty());
  CHECK_THROWS_AS(torsion_splitting(M, {1, 1}), InseparableError);
  // Torsion count q^{r deg a} for a = t^2 + t + 1.
  auto t2 = torsion_splitting(M, {1, 1, 1});
  CHECK(t2.basis.size() == 4);
}

TEST_CASE("embeddings and base change") {
  auto F = make_const_field(2);
  auto K = Field::finite_default(F, 2);
  auto e = extension(K, 3);
  CHECK(e.to->degree() == 6);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Elem a = testutil::rand_elem(*K, rng), b = testutil::rand_elem(*K, rng);
    CHECK(e.map(K->mul(a, b)) == e.to->mul(e.map(a), e.map(b)));
    CHECK(e.map(K->add(a, b)) == e.to->add(e.map(a), e.map(b)));
    CHECK(e.map(K->twist(a, 1)) == e.to->twist(e.map(a), 1));
    CHECK(e.preimage(e.map(a)) == a);
  }
  DrinfeldModule M(SkewPoly(K, {K->gen(), K->zero(), K->one()}));
  DrinfeldModule M6 = base_change(M, e);
  CHECK(M6.rank() == 2);
  CHECK(invariants(M6).char_ideal == invariants(M).char_ideal);
}
