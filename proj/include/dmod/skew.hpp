// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DMOD_SKEW_HPP
#define DMOD_SKEW_HPP

#include <limits>
#include <string>
#include <vector>

#include "dmod/field.hpp"

namespace dmod {

// Degree of the zero skew polynomial; compares below every genuine degree.
constexpr long kNegInf = std::numeric_limits<long>::min() / 4;

// Twisted polynomial sum c[i] tau^i over K with tau c = c^q tau.
class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(FieldPtr K) : K_(std::move(K)) {}
  SkewPoly(FieldPtr K, std::vector<Elem> c);

  static SkewPoly constant(FieldPtr K, const Elem& c);
  static SkewPoly tau_power(FieldPtr K, long k);  // tau^k

  const FieldPtr& field() const { return K_; }
  const Field& K() const { return *K_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  long deg() const { return c_.empty() ? kNegInf : static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of tau^i (zero outside the support).
  Elem coeff(long i) const;
  const Elem& lead() const { return c_.back(); }
  // Lowest index with nonzero coefficient; kNegInf for zero.
  long valuation() const;
  bool is_monic() const;

  bool operator==(const SkewPoly& o) const { return c_ == o.c_; }
  bool operator!=(const SkewPoly& o) const { return !(*this == o); }

  std::string render() const;

 private:
  void trim();
  FieldPtr K_;
  std::vector<Elem> c_;
};

namespace skew {

SkewPoly add(const SkewPoly& u, const SkewPoly& v);
SkewPoly sub(const SkewPoly& u, const SkewPoly& v);
SkewPoly neg(const SkewPoly& u);
SkewPoly mul(const SkewPoly& u, const SkewPoly& v);
// c * u and u * c for a scalar c.
SkewPoly lscale(const Elem& c, const SkewPoly& u);
SkewPoly rscale(const SkewPoly& u, const Elem& c);
// c * u for c in F_q.
SkewPoly scale_const(const SkewPoly& u, uint32_t c);
// tau^k * u.
SkewPoly tau_mul(long k, const SkewPoly& u);
SkewPoly monic(const SkewPoly& u);

struct DivMod {
  SkewPoly quot, rem;
};
// u = quot * v + rem with deg rem < deg v.
DivMod right_divmod(const SkewPoly& u, const SkewPoly& v);
SkewPoly right_rem(const SkewPoly& u, const SkewPoly& v);
bool right_divides(const SkewPoly& v, const SkewPoly& u);

// Monic greatest common right divisor; zero when all inputs are zero.
SkewPoly gcrd(const std::vector<SkewPoly>& polys);
// Monic least common left multiple; zero when some input is zero.
SkewPoly lclm(const std::vector<SkewPoly>& polys);

// Evaluate as the additive map X -> sum c_i X^{q^i}.
Elem evaluate(const SkewPoly& u, const Elem& x);
// Apply c -> c^{q^j} to every coefficient.
SkewPoly twist_coeffs(const SkewPoly& u, long j);

void check_same_field(const SkewPoly& u, const SkewPoly& v);

}  // namespace skew
}  // namespace dmod

#endif  // DMOD_SKEW_HPP
