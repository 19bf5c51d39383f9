// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DMOD_REDUCTION_HPP
#define DMOD_REDUCTION_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmod/endomorphism.hpp"

namespace dmod {

struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReductionModel {
  DrinfeldModule M;
  FqPoly bad_denominator;  // monic
};

ReductionModel good_model(const DrinfeldModule& M);
bool is_good_place(const ReductionModel& model, const FqPoly& pi);

// Monic irreducibles by (degree, lex) order, skipping bad places.
class PlaceIterator {
 public:
  explicit PlaceIterator(const ReductionModel& model);
  FqPoly next();
  long visited() const { return visited_; }

 private:
  const ReductionModel* model_;
  int degree_ = 1;
  uint64_t index_ = 0;
  long visited_ = 0;
};

std::vector<FqPoly> good_places(const ReductionModel& model, size_t count);

// Residue field F_q[x]/(pi) and reduction of elements integral at pi.
FieldPtr residue_field(const ConstFieldPtr& fq, const FqPoly& pi);
Elem reduce_elem(const Field& k, const FqPoly& pi, const Elem& u);

DrinfeldModule reduce_at(const ReductionModel& model, const FqPoly& pi);
SkewPoly reduce_endo(const ReductionModel& model, const FqPoly& pi, const SkewPoly& f);

struct PlaceData {
  FqPoly place;
  DrinfeldModule residue_module;
  CharPolyFrob frob;
  FqPoly char_ideal;
  bool is_ordinary = false;
  Elem adjoint_trace;  // in F_q(t)
  FieldPtr trace_field;
};

// a_1 a_{r-1} / a_0 for a monic char poly X^r + ... + a_0, in F_q(t).
Elem adjoint_trace(const FieldPtr& Ft, const APolyX& char_poly);

PlaceData place_frobenius_data(const ReductionModel& model, const FqPoly& pi);

struct OrdinaryPair {
  PlaceData first, second;
  long places_visited = 0;
};
OrdinaryPair two_ordinary_distinct(const ReductionModel& model, long place_budget);

// The endomorphism with constant coefficient u0, if any.
std::optional<SkewPoly> lift_from_constant_coeff(const DrinfeldModule& M, const Elem& u0);

// Irreducible P1, P2 over F_q(t) of degree <= 3 define linearly disjoint extensions.
bool linear_disjoint(const ConstFieldPtr& fq, const APolyX& P1, const APolyX& P2);

struct GenericEnd {
  OrthogonalBasis basis;
  OrdinaryPair places;
  // Minimal polynomials of reduced endomorphisms with no root in F_q(x).
  std::vector<APolyX> extension_candidates;
  bool disjoint_frobenius = false;
};
GenericEnd end_ring_generic_rational(const DrinfeldModule& M, long place_budget);

// Deterministic alternating scheduler: one step of A then one of B per round.
template <class T>
struct RaceVerdict {
  std::optional<T> payload;
  int winner = -1;  // 0 = A, 1 = B
  long steps_a = 0, steps_b = 0;
  bool resolved() const { return payload.has_value(); }
};

template <class T>
RaceVerdict<T> race(const std::function<std::optional<T>()>& a, const std::function<std::optional<T>()>& b,
                    long step_budget) {
  RaceVerdict<T> v;
  while (v.steps_a + v.steps_b + 2 <= step_budget) {
    std::optional<T> ra = a();
    ++v.steps_a;
    std::optional<T> rb = b();
    ++v.steps_b;
    if (ra) {
      v.payload = std::move(ra);
      v.winner = 0;
      return v;
    }
    if (rb) {
      v.payload = std::move(rb);
      v.winner = 1;
      return v;
    }
  }
  return v;
}

struct GoingUpReport {
  bool resolved = false;
  bool end_is_a = false;  // End_K = A, so A' = A
  std::optional<GoingUpResult> result;
  long steps_a = 0, steps_b = 0;
  std::string note;
};
// Rank-2 driver over F_q(x): race an endomorphism search against a
// disjointness certificate for the Frobenius fields.
GoingUpReport going_up_driver(const DrinfeldModule& M, long step_budget);

}  // namespace dmod

#endif  // DMOD_REDUCTION_HPP
