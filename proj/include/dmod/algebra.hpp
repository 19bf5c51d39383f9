// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DMOD_ALGEBRA_HPP
#define DMOD_ALGEBRA_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dmod/field.hpp"
#include "dmod/fqpoly.hpp"
#include "dmod/kpoly.hpp"

namespace dmod {

// A specific scope limitation was hit; distinct from malformed input.
struct ScopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial in X with coefficients in A = F_q[t], index = power of X.
using APolyX = std::vector<FqPoly>;

namespace ax {

void trim(APolyX& f);
int deg(const APolyX& f);
bool is_monic(const APolyX& f);
APolyX mul(const ConstField& F, const APolyX& a, const APolyX& b);
APolyX pow(const ConstField& F, const APolyX& a, int e);
// Coefficients embedded into F_q(t) (a rational field with variable t).
KPoly to_kpoly(const FieldPtr& Ft, const APolyX& f);
// Back from F_q(t); throws if a coefficient is not a polynomial.
APolyX from_kpoly(const KPoly& f);
std::string render(const APolyX& f);

}  // namespace ax

// Factor a nonzero polynomial over a finite field.
std::vector<std::pair<KPoly, int>> poly_factor(const KPoly& f);

// All roots in F_q(x) of a nonzero polynomial with coefficients in F_q(x).
std::vector<Elem> rational_roots(const KPoly& f);

// Determinant of a square matrix with entries in K[X] by fraction-free elimination.
KPoly det_bareiss(std::vector<std::vector<KPoly>> M);

// Res_Y(A, B) for A, B in K[X][Y], given as coefficient lists in Y of K[X]-polynomials.
KPoly resultant_y(const std::vector<KPoly>& A, const std::vector<KPoly>& B);

// Irreducibility over F_q(t) of a polynomial with A-coefficients. Exact for
// degree <= 3; for larger degree certified by reduction patterns or rejected.
bool irreducible_over_ft(const ConstFieldPtr& fq, const APolyX& f);

struct StablePower {
  long m = 1;
  APolyX minpoly;  // minimal polynomial of x^m over F_q(t)
  int degree = 1;
  long p_power = 1;                 // inseparable part stripped first
  std::vector<FqPoly> unit_factors;  // constant-field factors of the ratio polynomial
};

// For x with the given monic irreducible minimal polynomial over F_q(t), find m
// with F(x^m) contained in every F(x^n).
StablePower stable_power_exponent(const ConstFieldPtr& fq, const APolyX& minpoly);

// The product of (X - sigma_i(x)^m) over the conjugates, as a polynomial over F_q(t).
KPoly conjugate_power_product(const ConstFieldPtr& fq, const APolyX& minpoly, long m);

// Minimal polynomial over F_q(t) of X^m modulo the irreducible P.
APolyX minpoly_of_power(const ConstFieldPtr& fq, const APolyX& P, long m);

}  // namespace dmod

#endif  // DMOD_ALGEBRA_HPP
