// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DMOD_LINALG_HPP
#define DMOD_LINALG_HPP

#include <optional>
#include <vector>

#include "dmod/field.hpp"
#include "dmod/fqpoly.hpp"

namespace dmod {

// Dense matrix over F_q, row major.
struct FqMat {
  size_t rows = 0, cols = 0;
  std::vector<uint32_t> a;
  FqMat() = default;
  FqMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
  uint32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
  uint32_t at(size_t i, size_t j) const { return a[i * cols + j]; }
};

namespace la {

// In-place reduced row echelon form; returns pivot columns.
std::vector<size_t> rref(const ConstField& F, FqMat& M);
size_t rank(const ConstField& F, FqMat M);
// Basis of {x : M x = 0}, each vector of length M.cols, in a canonical order
// (free columns ascending, RREF back substitution).
std::vector<std::vector<uint32_t>> kernel(const ConstField& F, FqMat M);
// Some x with M x = b, or nullopt.
std::optional<std::vector<uint32_t>> solve(const ConstField& F, const FqMat& M, const std::vector<uint32_t>& b);

// Expand K-linear conditions with F_q-unknowns into F_q rows. cols[j][i] is the
// coefficient of unknown j in condition i, so the F_q solutions of
// sum_j x_j cols[j][i] = 0 (all i) are the kernel of the result.
FqMat expand(const Field& K, const std::vector<std::vector<Elem>>& cols);

}  // namespace la

// Matrix over A = F_q[t].
using AMat = std::vector<std::vector<FqPoly>>;

namespace ala {

AMat identity(size_t n);
AMat mul(const ConstField& F, const AMat& X, const AMat& Y);
// Invariant factors (monic, divisibility chain) of the Smith form; length = rank.
std::vector<FqPoly> elementary_divisors(const ConstField& F, AMat M);
// Basis of the A-module {b in A^n : M b = 0}, n = number of columns.
std::vector<std::vector<FqPoly>> kernel(const ConstField& F, const AMat& M, size_t ncols);
// Smith form U M V = D with transforms.
void smith(const ConstField& F, AMat& M, AMat& U, AMat& V);

}  // namespace ala
}  // namespace dmod

#endif  // DMOD_LINALG_HPP
