// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DMOD_FIELD_HPP
#define DMOD_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "dmod/fq.hpp"
#include "dmod/fqpoly.hpp"

namespace dmod {

// An element of a Field. For a finite field F_q[z]/(modulus) only `a` is used and
// holds the reduced representative in z. For F_q(x) the element is a/b with b monic
// and gcd(a, b) = 1; zero is a = {} and b = {1}.
struct Elem {
  FqPoly a;
  FqPoly b;
  bool operator==(const Elem& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Elem& o) const { return !(*this == o); }
};

// Lexicographic total order on representatives, used for deterministic tie-breaks.
bool elem_less(const Elem& u, const Elem& v);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Either a finite extension F_{q^n} of F_q given by a monic irreducible modulus,
// or the rational function field F_q(var).
class Field {
 public:
  enum class Kind { Finite, Rational };

  static FieldPtr finite(ConstFieldPtr fq, const FqPoly& modulus);
  // F_{q^n} with the first monic irreducible of degree n in canonical order.
  static FieldPtr finite_default(ConstFieldPtr fq, int n);
  static FieldPtr rational(ConstFieldPtr fq, char var = 'x');

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const ConstField& fq() const { return *fq_; }
  const ConstFieldPtr& fq_ptr() const { return fq_; }
  uint32_t q() const { return fq_->q(); }
  // Degree over F_q; 0 for F_q(x).
  int degree() const { return n_; }
  const FqPoly& modulus() const { return mod_; }
  char var() const { return var_; }
  bool same(const Field& o) const;

  Elem zero() const;
  Elem one() const;
  Elem from_const(uint32_t c) const;
  // The generator z of a finite field, or x for F_q(x).
  Elem gen() const;
  // Rational function num/den, normalized.
  Elem frac(const FqPoly& num, const FqPoly& den) const;
  // Finite field element from its polynomial in z (reduced mod the modulus).
  Elem from_poly(const FqPoly& f) const;

  bool is_zero(const Elem& u) const { return u.a.empty(); }
  bool is_one(const Elem& u) const;
  bool is_const(const Elem& u) const;  // lies in F_q
  Elem add(const Elem& u, const Elem& v) const;
  Elem sub(const Elem& u, const Elem& v) const;
  Elem neg(const Elem& u) const;
  Elem mul(const Elem& u, const Elem& v) const;
  Elem scale(const Elem& u, uint32_t c) const;
  Elem inv(const Elem& u) const;
  Elem div(const Elem& u, const Elem& v) const { return mul(u, inv(v)); }
  Elem pow(const Elem& u, uint64_t n) const;
  // u^{q^j}.
  Elem twist(const Elem& u, long j) const;

  // Coordinates over F_q in the basis 1, z, ..., z^{n-1} (finite only).
  std::vector<uint32_t> coords(const Elem& u) const;
  Elem from_coords(const std::vector<uint32_t>& c) const;
  // Number of elements (finite only, may overflow for large fields).
  uint64_t size() const;
  // Element with index k in 0..size()-1, coordinates are the base-q digits of k.
  Elem element(uint64_t k) const;

  std::string render(const Elem& u) const;
  std::string describe() const;

 private:
  Field() = default;
  Kind kind_ = Kind::Finite;
  ConstFieldPtr fq_;
  int n_ = 0;
  FqPoly mod_;
  char var_ = 'x';
  // frob_[j][i] = z^{i q^j} mod modulus for 0 <= j < n.
  std::vector<std::vector<FqPoly>> frob_;
};

}  // namespace dmod

#endif  // DMOD_FIELD_HPP
