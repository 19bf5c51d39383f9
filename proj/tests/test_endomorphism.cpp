// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/endomorphism.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace dmod;

namespace {

FieldPtr F2() { return Field::finite_default(make_const_field(2), 1); }
FieldPtr F4() { return Field::finite_default(make_const_field(2), 2); }

SkewPoly S(const FieldPtr& K, std::initializer_list<int> c) {
  std::vector<Elem> v;
  for (int b : c) v.push_back(K->from_const(static_cast<uint32_t>(b)));
  return SkewPoly(K, v);
}

DrinfeldModule cm_module() {
  auto K = Field::rational(make_const_field(3), 'x');
  return DrinfeldModule(SkewPoly(K, {K->frac({0, 0, 1}, {1}), K->frac({0, 1, 0, 1}, {1}), K->one()}));
}

// w^2 tau^2 over F_4: Frobenius tau^2 = w phi_t has a cube-root-of-unity ratio.
DrinfeldModule cube_root_module() {
  auto K = F4();
  Elem w = K->gen();
  return DrinfeldModule(SkewPoly(K, {K->zero(), K->zero(), K->mul(w, w)}));
}

// The law deg(sum a_i m_i) = max deg(a_i m_i) on random tuples.
void check_orthogonal_law(const OrthogonalBasis& B, int samples, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ConstField& F = B.field()->fq();
  for (int s = 0; s < samples; ++s) {
    std::vector<FqPoly> a;
    long expect = kNegInf;
    for (auto& m : B.elems) {
      a.push_back(testutil::rand_fqpoly(F, rng, 3));
      if (!a.back().empty()) expect = std::max(expect, fqp::deg(a.back()) * B.delta() + m.deg());
    }
    CHECK(combination(B, a).deg() == expect);
  }
}

}  // namespace

TEST_CASE("endomorphisms of bounded degree") {
  auto K = F2();
  DrinfeldModule C(S(K, {1, 1}));
  auto e2 = endos_of_degree(C, 2);
  CHECK(e2.size() == 3);
  for (auto& u : e2) CHECK(is_endomorphism(C, u));
  auto K4 = F4();
  DrinfeldModule W(SkewPoly(K4, {K4->gen(), K4->zero(), K4->one()}));
  auto w1 = endos_of_degree(W, 1);
  CHECK(w1.size() == 2);  // the constants F_4, while tau does not commute
  for (auto& u : w1) CHECK(u.deg() == 0);
  CHECK_FALSE(is_endomorphism(W, SkewPoly::tau_power(K4, 1)));
  auto w0 = endos_of_degree(W, 0);
  CHECK(w0.size() >= 1);
}

TEST_CASE("minimal polynomials of endomorphisms") {
  auto K = F2();
  DrinfeldModule M(S(K, {1, 1, 1}));
  APolyX P = endo_minpoly(M, SkewPoly::tau_power(K, 1));
  CHECK(P == APolyX{{1, 1}, {1}, {1}});
  CHECK(eval_apoly(M, P, SkewPoly::tau_power(K, 1)).is_zero());
  CHECK(irreducible_over_ft(K->fq_ptr(), P));
  // Scalars: phi_{t^2+1} has minimal polynomial X - (t^2 + 1).
  APolyX Ps = endo_minpoly(M, phi_action(M, {1, 0, 1}));
  CHECK(Ps == APolyX{{1, 0, 1}, {1}});
  CHECK(endo_minpoly(M, SkewPoly(K)) == APolyX{{}, {1}});
  CHECK_THROWS(endo_minpoly(DrinfeldModule(SkewPoly(F4(), {F4()->gen(), F4()->zero(), F4()->one()})),
                            SkewPoly::tau_power(F4(), 1)));
  DrinfeldModule cm = cm_module();
  const Field& R = cm.K();
  SkewPoly f(cm.field(), {R.gen(), R.one()});
  CHECK(skew::mul(f, f) == cm.phi_t());
  CHECK(endo_minpoly(cm, f) == APolyX{{0, 2}, {}, {1}});
}

TEST_CASE("Frobenius characteristic polynomials") {
  auto K = F2();
  auto a = frobenius_charpoly(DrinfeldModule(S(K, {1, 1, 1})));
  CHECK(a.min_poly == APolyX{{1, 1}, {1}, {1}});
  CHECK(a.char_poly == a.min_poly);
  CHECK(a.d == 2);
  CHECK(a.e == 1);
  CHECK(a.endring_commutative);
  auto b = frobenius_charpoly(DrinfeldModule(S(K, {1, 0, 1})));
  CHECK(b.min_poly == APolyX{{1, 1}, {}, {1}});
  CHECK(b.d == 2);
  CHECK(b.e == 1);
  // tau^2 = phi_{t+1} is central over F_4, so the geometric ring is a quaternion order.
  CHECK_FALSE(b.endring_commutative);
  auto c = frobenius_charpoly(DrinfeldModule(S(K, {1, 1})));
  CHECK(c.min_poly == APolyX{{1, 1}, {1}});
  CHECK(c.d == 1);
  // char_poly(Frob) = 0 by independent skew evaluation.
  std::vector<DrinfeldModule> mods = {DrinfeldModule(S(K, {1, 1, 1})), DrinfeldModule(S(K, {1, 0, 1})), cube_root_module()};
  for (auto& M : mods) {
    auto cp = frobenius_charpoly(M);
    CHECK(eval_apoly(M, cp.char_poly, SkewPoly::tau_power(M.field(), cp.n)).is_zero());
    CHECK(cp.d * cp.e == M.rank());
  }
}

TEST_CASE("stabilizing exponent") {
  auto K = F2();
  CHECK(stabilizing_exponent(DrinfeldModule(S(K, {1, 1, 1}))) == 1);
  CHECK(stabilizing_exponent(DrinfeldModule(S(K, {1, 1}))) == 1);
  CHECK(stabilizing_exponent(cube_root_module()) == 3);
  auto cr = frobenius_charpoly(cube_root_module());
  CHECK(cr.min_poly == APolyX{{0, 0, 1}, {0, 1}, {1}});
}

TEST_CASE("end ring over the base field") {
  auto K = F2();
  DrinfeldModule M(S(K, {1, 1, 1}));
  auto B = end_ring_finite(M);
  REQUIRE(B.elems.size() == 2);
  CHECK(B.elems[0].deg() == 0);
  CHECK(B.elems[1].deg() == 1);
  CHECK(orthogonality_certificate(B));
  check_orthogonal_law(B, 200, 1);
  auto BC = end_ring_finite(DrinfeldModule(S(K, {1, 1})));
  REQUIRE(BC.elems.size() == 1);
  CHECK(BC.elems[0].deg() == 0);
  // Cross-oracle for w + tau^2 over F_4: sweep to the rank bound against a deep sweep.
  auto K4 = F4();
  DrinfeldModule W(SkewPoly(K4, {K4->gen(), K4->zero(), K4->one()}));
  auto BW = end_ring_finite(W);
  CHECK(orthogonality_certificate(BW));
  for (auto& u : endos_of_degree(W, 6)) CHECK(orth_membership(BW, u).has_value());
  check_orthogonal_law(BW, 100, 2);
}

TEST_CASE("orthogonal membership and extension") {
  auto K = F2();
  DrinfeldModule M(S(K, {1, 1, 1}));
  auto B = end_ring_finite(M);
  auto co = orth_membership(B, S(K, {0, 1, 1}));
  REQUIRE(co.has_value());
  CHECK((*co)[0] == FqPoly{1, 1});
  CHECK((*co)[1].empty());
  auto c1 = orth_membership(B, B.elems[0]);
  REQUIRE(c1.has_value());
  CHECK((*c1)[0] == FqPoly{1});
  // tau^3 against the reduction oracle and against brute-force expansion.
  SkewPoly t3 = SkewPoly::tau_power(K, 3);
  auto c3 = orth_membership(B, t3);
  auto r3 = orth_reduce(B, t3);
  CHECK(c3.has_value() == r3.rem.is_zero());
  bool brute = false;
  for (uint32_t i = 0; i < 16; ++i) {
    FqPoly a = {i & 1, (i >> 1) & 1}, b = {(i >> 2) & 1, (i >> 3) & 1};
    fqp::trim(a);
    fqp::trim(b);
    if (combination(B, {a, b}) == t3) brute = true;
  }
  CHECK(brute == c3.has_value());
  if (c3) CHECK(combination(B, *c3) == t3);
  // Extension steps.
  OrthogonalBasis E = empty_basis(M.phi_t());
  E = orth_extend(E, {S(K, {1})});
  REQUIRE(E.elems.size() == 1);
  E = orth_extend(E, {S(K, {0, 1}), S(K, {1, 1})});
  REQUIRE(E.elems.size() == 2);
  CHECK(E.elems[1] == S(K, {0, 1}));
  auto same = orth_extend(E, {S(K, {1, 1, 1})});
  CHECK(same.elems == E.elems);
  OrthogonalBasis bad = empty_basis(M.phi_t());
  bad.elems = {S(K, {1}), S(K, {0, 0, 1})};
  CHECK_FALSE(orthogonality_certificate(bad));
  CHECK_THROWS(orth_extend(bad, {}));
}

TEST_CASE("end ring over the separable closure and Galois invariants") {
  auto K = F2();
  auto s1 = end_ring_sep(DrinfeldModule(S(K, {1, 1, 1})));
  CHECK(s1.m == 1);
  CHECK(s1.basis.elems.size() == 2);
  auto sc = end_ring_sep(DrinfeldModule(S(K, {1, 1})));
  CHECK(sc.basis.elems.size() == 1);
  // tau^2 + 1: Frob^2 = phi_{t+1}, geometric rank d e^2 = 1 * 4.
  auto s2 = end_ring_sep(DrinfeldModule(S(K, {1, 0, 1})));
  CHECK(s2.m == 2);
  CHECK(s2.basis.elems.size() == 4);
  CHECK(orthogonality_certificate(s2.basis));
  check_orthogonal_law(s2.basis, 100, 3);
  DrinfeldModule CR = cube_root_module();
  auto s3 = end_ring_sep(CR);
  CHECK(s3.m == 3);
  CHECK(s3.basis.elems.size() == 4);
  auto inv = end_ring_invariants(CR, s3);
  auto direct = end_ring_finite(CR);
  CHECK(inv.elems.size() == 2);
  CHECK(direct.elems.size() == 2);
  for (auto& u : inv.elems) CHECK(orth_membership(direct, u).has_value());
  for (auto& u : direct.elems) CHECK(orth_membership(inv, u).has_value());
  auto triv = end_ring_invariants(DrinfeldModule(S(K, {1, 1})), sc);
  CHECK(triv.elems.size() == 1);
}

TEST_CASE("multiplication tables") {
  auto K = F2();
  auto R = multiplication_table(end_ring_finite(DrinfeldModule(S(K, {1, 1, 1}))));
  REQUIRE(R.table.size() == 2);
  CHECK(R.table[1][1] == std::vector<FqPoly>{{1, 1}, {1}});
  CHECK(R.table[0][1] == std::vector<FqPoly>{{}, {1}});
  CHECK(R.center.size() == 2);
  auto R1 = multiplication_table(end_ring_finite(DrinfeldModule(S(K, {1, 1}))));
  CHECK(R1.table[0][0] == std::vector<FqPoly>{{1}});
  // Non-commutative ring over F_4: center is a proper submodule.
  auto s2 = end_ring_sep(DrinfeldModule(S(K, {1, 0, 1})));
  auto Rq = multiplication_table(s2.basis);
  CHECK(Rq.center.size() == 1);
  // Associativity spot check on the table.
  const ConstField& F = K->fq();
  size_t n = Rq.table.size();
  auto mulv = [&](const std::vector<FqPoly>& x, const std::vector<FqPoly>& y) {
    std::vector<FqPoly> z(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
          z[k] = fqp::add(F, z[k], fqp::mul(F, fqp::mul(F, x[i], y[j]), Rq.table[i][j][k]));
    return z;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<FqPoly> ei(n), ej(n), ek(n);
      ei[i] = {1};
      ej[j] = {1};
      ek[(i + j) % n] = {1};
      CHECK(mulv(mulv(ei, ej), ek) == mulv(ei, mulv(ej, ek)));
    }
}

TEST_CASE("going up") {
  DrinfeldModule cm = cm_module();
  const Field& R = cm.K();
  SkewPoly f(cm.field(), {R.gen(), R.one()});
  auto g = going_up(cm, f);
  CHECK(g.rank_prime == 1);
  CHECK(g.h.deg() == 0);
  CHECK(skew::mul(g.h_dual, g.h) == phi_action(cm, g.a));
  REQUIRE(g.module_in_s.has_value());
  CHECK(g.module_in_s->rank() == 1);
  CHECK(phi_action(*g.module_in_s, *g.t_in_s) == cm.phi_t());
  CHECK_THROWS_AS(going_up(cm, phi_action(cm, {1, 1})), std::invalid_argument);
  auto K = F2();
  DrinfeldModule M(S(K, {1, 1, 1}));
  auto g2 = going_up(M, SkewPoly::tau_power(K, 1));
  CHECK(g2.minpoly == APolyX{{1, 1}, {1}, {1}});
  CHECK(M.rank() == 2 * g2.rank_prime);
  REQUIRE(g2.t_in_s.has_value());
  CHECK(*g2.t_in_s == FqPoly{1, 1, 1});
}
