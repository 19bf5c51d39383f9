// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DMOD_ENDOMORPHISM_HPP
#define DMOD_ENDOMORPHISM_HPP

#include <optional>
#include <vector>

#include "dmod/algebra.hpp"
#include "dmod/drinfeld.hpp"
#include "dmod/linalg.hpp"

namespace dmod {

// F_q-basis of {u : deg u <= d, u phi_t = psi_t u}; finite base field.
std::vector<SkewPoly> intertwiners_of_degree(const DrinfeldModule& phi, const DrinfeldModule& psi, long d);
std::vector<SkewPoly> endos_of_degree(const DrinfeldModule& M, long d);

bool is_endomorphism(const DrinfeldModule& M, const SkewPoly& f);

// Minimal polynomial over F_q(t) of an endomorphism, with A-coefficients.
APolyX endo_minpoly(const DrinfeldModule& M, const SkewPoly& f);
// P(f) with coefficients acting through phi.
SkewPoly eval_apoly(const DrinfeldModule& M, const APolyX& P, const SkewPoly& f);

struct CharPolyFrob {
  APolyX min_poly;
  APolyX char_poly;
  long d = 1, e = 1;
  long n = 1;  // Frob = tau^n
  bool endring_commutative = true;
};

// Frobenius tau^n data without the commutativity flag (needs the stable exponent).
CharPolyFrob frobenius_minpoly_data(const DrinfeldModule& M);
CharPolyFrob frobenius_charpoly(const DrinfeldModule& M);
long stabilizing_exponent(const DrinfeldModule& M);

// An orthogonal basis of an F_q[t]-module of morphisms phi -> psi with the
// action a.u = psi_a u (phi = psi for End).
struct OrthogonalBasis {
  enum class Kind { End, Hom };
  Kind kind = Kind::End;
  long ext_degree = 1;
  SkewPoly act;  // psi_t over the coefficient field
  std::vector<SkewPoly> elems;

  const FieldPtr& field() const { return act.field(); }
  long delta() const { return act.deg(); }
};

OrthogonalBasis empty_basis(const SkewPoly& act, OrthogonalBasis::Kind kind = OrthogonalBasis::Kind::End, long m = 1);

// psi_{t^k} u for the basis action.
SkewPoly act_power(const OrthogonalBasis& B, long k, const SkewPoly& u);
SkewPoly act_poly(const OrthogonalBasis& B, const FqPoly& a, const SkewPoly& u);
SkewPoly combination(const OrthogonalBasis& B, const std::vector<FqPoly>& a);

// Leading coefficients are F_q-independent within each degree class mod delta.
bool orthogonality_certificate(const OrthogonalBasis& B);

struct Reduction {
  SkewPoly rem;
  std::vector<FqPoly> coeffs;
};
// Greedy reduction by leading terms: f = sum a_i m_i + rem, where rem has a
// leading term independent of the basis leading terms (or rem = 0).
Reduction orth_reduce(const OrthogonalBasis& B, const SkewPoly& f);

// Membership by the bounded linear system deg(a_i) delta + deg m_i <= deg f.
std::optional<std::vector<FqPoly>> orth_membership(const OrthogonalBasis& B, const SkewPoly& f);

// Add morphisms to B keeping it orthogonal; the module spanned grows by the new elements.
void orth_insert(OrthogonalBasis& B, const SkewPoly& f);
OrthogonalBasis orth_extend(const OrthogonalBasis& B, const std::vector<SkewPoly>& new_elems);

OrthogonalBasis end_ring_finite(const DrinfeldModule& M);
// Degree sweep over the coefficient field of psi until the module reaches the given rank.
OrthogonalBasis sweep_to_rank(const DrinfeldModule& phi, const DrinfeldModule& psi, long target_rank,
                              OrthogonalBasis::Kind kind, long max_degree);

struct SepEnd {
  long m = 1;
  Embedding embedding;  // K -> K_m
  OrthogonalBasis basis;
};
SepEnd end_ring_sep(const DrinfeldModule& M);

// Gal(K_m/K)-invariants of a basis over K_m, returned over K.
OrthogonalBasis end_ring_invariants(const DrinfeldModule& M, const SepEnd& sep);

struct RingPresentation {
  OrthogonalBasis basis;
  // table[i][j] = coefficients of m_i m_j.
  std::vector<std::vector<std::vector<FqPoly>>> table;
  // A-basis of the center, as coefficient vectors.
  std::vector<std::vector<FqPoly>> center;
};
RingPresentation multiplication_table(const OrthogonalBasis& B);

struct GoingUpResult {
  APolyX minpoly;        // A' = A[s]/(P(s))
  SkewPoly phi_s;        // phi'_s = f
  SkewPoly h, h_dual;    // h' h = phi_a
  FqPoly a;
  long rank_prime = 1;
  std::optional<FqPoly> t_in_s;  // t = g(s) when A' = F_q[s]
  std::optional<DrinfeldModule> module_in_s;
};
GoingUpResult going_up(const DrinfeldModule& M, const SkewPoly& f);

}  // namespace dmod

#endif  // DMOD_ENDOMORPHISM_HPP
