// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DMOD_KPOLY_HPP
#define DMOD_KPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "dmod/field.hpp"

namespace dmod {

// Commutative polynomial over a Field, low degree first, trimmed.
struct KPoly {
  FieldPtr K;
  std::vector<Elem> c;

  KPoly() = default;
  KPoly(FieldPtr k, std::vector<Elem> cs);
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Elem& lead() const { return c.back(); }
  Elem coeff(int i) const;
  bool operator==(const KPoly& o) const { return c == o.c; }
  bool operator!=(const KPoly& o) const { return c != o.c; }
};

namespace kp {

KPoly zero(const FieldPtr& K);
KPoly constant(const FieldPtr& K, const Elem& c);
KPoly x(const FieldPtr& K);  // the variable X
KPoly add(const KPoly& a, const KPoly& b);
KPoly sub(const KPoly& a, const KPoly& b);
KPoly neg(const KPoly& a);
KPoly mul(const KPoly& a, const KPoly& b);
KPoly scale(const KPoly& a, const Elem& c);
KPoly monic(const KPoly& a);
void divmod(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r);
KPoly div(const KPoly& a, const KPoly& b);
KPoly mod(const KPoly& a, const KPoly& b);
KPoly gcd(KPoly a, KPoly b);
KPoly pow(const KPoly& a, uint64_t n);
KPoly powmod(const KPoly& a, uint64_t n, const KPoly& m);
KPoly deriv(const KPoly& a);
Elem eval(const KPoly& a, const Elem& v);
KPoly compose(const KPoly& f, const KPoly& g);
// Resultant via the Euclidean algorithm over K.
Elem resultant(const KPoly& a, const KPoly& b);
// Apply c -> c^{q^j} to the coefficients.
KPoly twist(const KPoly& a, long j);

// Factorization over a finite field K: monic irreducible factors with multiplicities,
// ordered by degree then coefficient lex order. Deterministic.
std::vector<std::pair<KPoly, int>> factor_finite(const KPoly& f);
bool is_irreducible_finite(const KPoly& f);
// Distinct roots in a finite field K, sorted.
std::vector<Elem> roots_finite(const KPoly& f);

std::string render(const KPoly& a);

}  // namespace kp
}  // namespace dmod

#endif  // DMOD_KPOLY_HPP
