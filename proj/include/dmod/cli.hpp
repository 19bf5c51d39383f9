// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DMOD_CLI_HPP
#define DMOD_CLI_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmod/isogeny.hpp"

namespace dmod::cli {

enum ExitCode { kOk = 0, kParse = 2, kScope = 3, kPrecondition = 4 };

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int l, int c, const std::string& msg) : std::runtime_error(msg), line(l), col(c) {}
};

// Flat key=value document:
//   q = 3
//   field = rational | rational:<var> | finite:<n> | finite:<n>:[m0,...,mn]
//   phi_t = [c0, c1, ...]      coefficients in canonical rendering
//   psi_t = [...]              optional second module
//   seed, degree_budget, place_budget, step_budget  optional integers
struct Document {
  ConstFieldPtr fq;
  FieldPtr K;
  std::optional<DrinfeldModule> phi, psi;
  long seed = 0;
  std::map<std::string, long> options;
};

Document parse_document(const std::string& text);

// Inverse of Field::render and SkewPoly::render.
Elem parse_elem(const Field& K, const std::string& s);
SkewPoly parse_skew(const FieldPtr& K, const std::string& s);

// t^2+2t+1 and X^2+X+(t+1) style renderings.
std::string pretty_apoly(const FqPoly& a, char var = 't');
std::string pretty_apolyx(const APolyX& f);

struct CommandOptions {
  bool sep = false;
  std::optional<long> degree_budget, place_budget, step_budget;
  std::optional<long> budget, witness_degree, places, survey;
};

struct CommandResult {
  int exit_code = kOk;
  std::string out, err;
};

extern const std::vector<std::string> kCommands;

CommandResult run_command(const std::string& name, const std::string& text, const CommandOptions& opts = {});

// Galois image classification tags.
enum class GaloisTag { GenericOpenCentralizer, IsotrivialProcyclic, SpecialNonIsotrivial };
const char* tag_name(GaloisTag t);
GaloisTag galois_tag(const DrinfeldModule& M);

}  // namespace dmod::cli

#endif  // DMOD_CLI_HPP
