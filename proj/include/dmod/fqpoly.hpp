// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DMOD_FQPOLY_HPP
#define DMOD_FQPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "dmod/fq.hpp"

namespace dmod {

// Dense univariate polynomial over F_q, low degree first, no trailing zeros.
// Used for A = F_q[t] as well as for numerators/denominators over F_q(x).
using FqPoly = std::vector<uint32_t>;

namespace fqp {

inline void trim(FqPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const FqPoly& f) { return static_cast<int>(f.size()) - 1; }
inline bool is_zero(const FqPoly& f) { return f.empty(); }
inline uint32_t lead(const FqPoly& f) { return f.empty() ? 0 : f.back(); }
inline FqPoly constant(uint32_t c) { return c ? FqPoly{c} : FqPoly{}; }
inline FqPoly monomial(uint32_t c, size_t k) {
  if (!c) return {};
  FqPoly f(k + 1, 0);
  f[k] = c;
  return f;
}
inline bool is_one(const FqPoly& f) { return f.size() == 1 && f[0] == 1; }

FqPoly add(const ConstField& F, const FqPoly& a, const FqPoly& b);
FqPoly sub(const ConstField& F, const FqPoly& a, const FqPoly& b);
FqPoly neg(const ConstField& F, const FqPoly& a);
FqPoly scale(const ConstField& F, const FqPoly& a, uint32_t c);
FqPoly mul(const ConstField& F, const FqPoly& a, const FqPoly& b);
FqPoly shift(const FqPoly& a, size_t k);
// a = q*b + r with deg r < deg b; b nonzero.
void divmod(const ConstField& F, const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r);
FqPoly div(const ConstField& F, const FqPoly& a, const FqPoly& b);
FqPoly mod(const ConstField& F, const FqPoly& a, const FqPoly& b);
FqPoly monic(const ConstField& F, const FqPoly& a);
FqPoly gcd(const ConstField& F, FqPoly a, FqPoly b);
// g = s*a + t*b with g monic gcd.
FqPoly xgcd(const ConstField& F, const FqPoly& a, const FqPoly& b, FqPoly& s, FqPoly& t);
FqPoly lcm(const ConstField& F, const FqPoly& a, const FqPoly& b);
FqPoly pow(const ConstField& F, const FqPoly& a, uint64_t n);
FqPoly mulmod(const ConstField& F, const FqPoly& a, const FqPoly& b, const FqPoly& m);
FqPoly powmod(const ConstField& F, const FqPoly& a, uint64_t n, const FqPoly& m);
// a^{q^k} mod m by k successive q-th powers.
FqPoly frobmod(const ConstField& F, const FqPoly& a, unsigned k, const FqPoly& m);
uint32_t eval(const ConstField& F, const FqPoly& a, uint32_t x);
FqPoly deriv(const ConstField& F, const FqPoly& a);
// f(x) -> f(x^q); this is the q-power map on F_q[x].
FqPoly frobenius(const ConstField& F, const FqPoly& a);
// f(g(x)).
FqPoly compose(const ConstField& F, const FqPoly& f, const FqPoly& g);

bool is_irreducible(const ConstField& F, const FqPoly& f);
// Monic irreducible factors with multiplicities, ordered by (degree, lex).
std::vector<std::pair<FqPoly, int>> factor(const ConstField& F, const FqPoly& f);
// Multiplicative order of x modulo the irreducible g with g(0) != 0.
uint64_t order_of_x(const ConstField& F, const FqPoly& g);

// Total order used for canonical enumeration: degree, then coefficient
// vectors compared lexicographically from the constant term upward.
bool less(const FqPoly& a, const FqPoly& b);
// The k-th monic polynomial of degree d in that order.
FqPoly monic_from_index(const ConstField& F, int d, uint64_t k);
// All monic irreducibles of degree d, in order.
std::vector<FqPoly> monic_irreducibles(const ConstField& F, int d);
// First monic irreducible of degree d.
FqPoly first_irreducible(const ConstField& F, int d);

std::string render(const FqPoly& a);

}  // namespace fqp
}  // namespace dmod

#endif  // DMOD_FQPOLY_HPP
