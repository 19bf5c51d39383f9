// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DMOD_ISOGENY_HPP
#define DMOD_ISOGENY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmod/reduction.hpp"

namespace dmod {

// The two modules do not share characteristic and rank.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IsogenyVerdict {
  enum class Status { Isogenous, NotIsogenous, Unknown };
  Status status = Status::Unknown;
  std::optional<SkewPoly> witness;
  // Unequal characteristic polynomials, at `place` when the base is F_q(x).
  std::optional<APolyX> cert_phi, cert_psi;
  std::optional<FqPoly> place;
  long extension_degree = 1;  // witness lives over K_n
  long steps_a = 0, steps_b = 0;
  std::string report;
};

const char* status_name(IsogenyVerdict::Status s);

void check_comparable(const DrinfeldModule& phi, const DrinfeldModule& psi);

std::vector<SkewPoly> isogenies_of_degree(const DrinfeldModule& phi, const DrinfeldModule& psi, long d);

// Minimal degree, leading coefficient 1 when attainable, then lex smallest.
std::optional<SkewPoly> normalized_witness(const Field& K, const std::vector<SkewPoly>& basis);

IsogenyVerdict are_isogenous(const DrinfeldModule& phi, const DrinfeldModule& psi);
IsogenyVerdict are_isogenous_sep(const DrinfeldModule& phi, const DrinfeldModule& psi);

struct RationalBudgets {
  long witness_degree = 16;
  long places = 64;
  long steps = 10000;
};
IsogenyVerdict are_isogenous_rational(const DrinfeldModule& phi, const DrinfeldModule& psi,
                                      const RationalBudgets& budgets = {});

struct HomModule {
  IsogenyVerdict verdict;
  long ext_degree = 1;
  OrthogonalBasis basis;
};
HomModule hom_module(const DrinfeldModule& phi, const DrinfeldModule& psi, bool sep = false);

}  // namespace dmod

#endif  // DMOD_ISOGENY_HPP
