// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DMOD_DRINFELD_HPP
#define DMOD_DRINFELD_HPP

#include <stdexcept>
#include <vector>

#include "dmod/field.hpp"
#include "dmod/skew.hpp"

namespace dmod {

// a is not prime to the characteristic, so phi_a is inseparable.
struct InseparableError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Drinfeld F_q[t]-module given by phi_t over a finite field or F_q(x).
class DrinfeldModule {
 public:
  explicit DrinfeldModule(SkewPoly phi_t);
  const FieldPtr& field() const { return phi_t_.field(); }
  const Field& K() const { return phi_t_.K(); }
  const SkewPoly& phi_t() const { return phi_t_; }
  long rank() const { return phi_t_.deg(); }
  Elem gamma() const { return phi_t_.coeff(0); }

 private:
  SkewPoly phi_t_;
};

// phi_a by Horner in phi_t.
SkewPoly phi_action(const DrinfeldModule& M, const FqPoly& a);
// phi_a applied on the left of u, i.e. phi_a * u.
SkewPoly act(const DrinfeldModule& M, const FqPoly& a, const SkewPoly& u);
// gamma(a) = a evaluated at the constant coefficient of phi_t.
Elem gamma_of(const DrinfeldModule& M, const FqPoly& a);

struct Height {
  long num = 0, den = 1;
  bool operator==(const Height& o) const { return num == o.num && den == o.den; }
};

struct ModuleInvariants {
  long rank = 0;
  FqPoly char_ideal;  // monic generator; empty in generic characteristic
  Height height;      // special characteristic only
  bool is_generic = false;
  bool is_ordinary = false;
  bool is_isotrivial = false;
};

// Minimal polynomial over F_q of an element of a finite field.
FqPoly minpoly_over_fq(const Field& K, const Elem& u);

ModuleInvariants invariants(const DrinfeldModule& M);

// An F_q-embedding K -> L of finite fields, fixed by the image of the generator.
struct Embedding {
  FieldPtr from, to;
  Elem gen_image;
  Elem map(const Elem& u) const;
  // u in L lying in the image; throws otherwise.
  Elem preimage(const Elem& u) const;
};

// The first root (in element order) of the modulus of K inside L.
Embedding embed(const FieldPtr& K, const FieldPtr& L);
// The degree-m extension of K (degree over F_q is deg(K) m) with its embedding.
Embedding extension(const FieldPtr& K, long m);
SkewPoly map_skew(const Embedding& e, const SkewPoly& u);
DrinfeldModule base_change(const DrinfeldModule& M, const Embedding& e);

struct TorsionData {
  long extension_degree = 1;  // over K
  Embedding embedding;        // K -> K_N
  std::vector<Elem> basis;    // F_q-basis of phi[a](K_N)
};

TorsionData torsion_splitting(const DrinfeldModule& M, const FqPoly& a);

}  // namespace dmod

#endif  // DMOD_DRINFELD_HPP
