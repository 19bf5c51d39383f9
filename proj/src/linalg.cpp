// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#include "dmod/linalg.hpp"

#include <stdexcept>

namespace dmod {
namespace la {

std::vector<size_t> rref(const ConstField& F, FqMat& M) {
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < M.cols && r < M.rows; ++c) {
    size_t s = r;
    while (s < M.rows && M.at(s, c) == 0) ++s;
    if (s == M.rows) continue;
    if (s != r)
      for (size_t j = 0; j < M.cols; ++j) std::swap(M.at(s, j), M.at(r, j));
    uint32_t il = F.inv(M.at(r, c));
    for (size_t j = c; j < M.cols; ++j) M.at(r, j) = F.mul(M.at(r, j), il);
    for (size_t i = 0; i < M.rows; ++i) {
      if (i == r) continue;
      uint32_t f = M.at(i, c);
      if (!f) continue;
      uint32_t nf = F.neg(f);
      for (size_t j = c; j < M.cols; ++j)
        if (M.at(r, j)) M.at(i, j) = F.add(M.at(i, j), F.mul(nf, M.at(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

size_t rank(const ConstField& F, FqMat M) { return rref(F, M).size(); }

std::vector<std::vector<uint32_t>> kernel(const ConstField& F, FqMat M) {
  auto piv = rref(F, M);
  std::vector<bool> is_piv(M.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<uint32_t>> out;
  for (size_t f = 0; f < M.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<uint32_t> v(M.cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(M.at(r, f));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<uint32_t>> solve(const ConstField& F, const FqMat& M, const std::vector<uint32_t>& b) {
  FqMat A(M.rows, M.cols + 1);
  for (size_t i = 0; i < M.rows; ++i) {
    for (size_t j = 0; j < M.cols; ++j) A.at(i, j) = M.at(i, j);
    A.at(i, M.cols) = b[i];
  }
  auto piv = rref(F, A);
  if (!piv.empty() && piv.back() == M.cols) return std::nullopt;
  std::vector<uint32_t> x(M.cols, 0);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = A.at(r, M.cols);
  return x;
}

FqMat expand(const Field& K, const std::vector<std::vector<Elem>>& cols) {
  const ConstField& F = K.fq();
  size_t nc = cols.size();
  size_t nr = nc ? cols[0].size() : 0;
  if (K.is_finite()) {
    size_t n = static_cast<size_t>(K.degree());
    FqMat M(nr * n, nc);
    for (size_t j = 0; j < nc; ++j)
      for (size_t i = 0; i < nr; ++i) {
        const FqPoly& a = cols[j][i].a;
        for (size_t k = 0; k < a.size(); ++k) M.at(i * n + k, j) = a[k];
      }
    return M;
  }
  // Clear denominators row by row, then read off coefficients of x^k.
  std::vector<std::vector<FqPoly>> nums(nr, std::vector<FqPoly>(nc));
  std::vector<size_t> height(nr, 0);
  size_t total = 0;
  for (size_t i = 0; i < nr; ++i) {
    FqPoly L = {1};
    for (size_t j = 0; j < nc; ++j)
      if (!cols[j][i].a.empty()) L = fqp::lcm(F, L, cols[j][i].b);
    size_t h = 0;
    for (size_t j = 0; j < nc; ++j) {
      const Elem& e = cols[j][i];
      if (e.a.empty()) continue;
      nums[i][j] = fqp::mul(F, e.a, fqp::div(F, L, e.b));
      h = std::max(h, nums[i][j].size());
    }
    height[i] = h;
    total += h;
  }
  FqMat M(total, nc);
  size_t base = 0;
  for (size_t i = 0; i < nr; ++i) {
    for (size_t j = 0; j < nc; ++j)
      for (size_t k = 0; k < nums[i][j].size(); ++k) M.at(base + k, j) = nums[i][j][k];
    base += height[i];
  }
  return M;
}

}  // namespace la

namespace ala {

AMat identity(size_t n) {
  AMat I(n, std::vector<FqPoly>(n));
  for (size_t i = 0; i < n; ++i) I[i][i] = {1};
  return I;
}

AMat mul(const ConstField& F, const AMat& X, const AMat& Y) {
  size_t m = X.size(), k = Y.size(), n = k ? Y[0].size() : 0;
  AMat Z(m, std::vector<FqPoly>(n));
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (X[i][l].empty()) continue;
      for (size_t j = 0; j < n; ++j)
        if (!Y[l][j].empty()) Z[i][j] = fqp::add(F, Z[i][j], fqp::mul(F, X[i][l], Y[l][j]));
    }
  return Z;
}

namespace {

void row_axpy(const ConstField& F, AMat& M, size_t dst, size_t src, const FqPoly& q) {
  // row_dst -= q * row_src
  for (size_t j = 0; j < M[dst].size(); ++j)
    if (!M[src][j].empty()) M[dst][j] = fqp::sub(F, M[dst][j], fqp::mul(F, q, M[src][j]));
}

void col_axpy(const ConstField& F, AMat& M, size_t dst, size_t src, const FqPoly& q) {
  for (size_t i = 0; i < M.size(); ++i)
    if (!M[i][src].empty()) M[i][dst] = fqp::sub(F, M[i][dst], fqp::mul(F, q, M[i][src]));
}

}  // namespace

void smith(const ConstField& F, AMat& M, AMat& U, AMat& V) {
  size_t m = M.size(), n = m ? M[0].size() : 0;
  U = identity(m);
  V = identity(n);
  for (size_t k = 0; k < std::min(m, n); ++k) {
    while (true) {
      size_t bi = m, bj = n;
      int bd = -1;
      for (size_t i = k; i < m; ++i)
        for (size_t j = k; j < n; ++j)
          if (!M[i][j].empty() && (bd < 0 || fqp::deg(M[i][j]) < bd)) {
            bd = fqp::deg(M[i][j]);
            bi = i;
            bj = j;
          }
      if (bd < 0) return;
      if (bi != k) {
        std::swap(M[bi], M[k]);
        std::swap(U[bi], U[k]);
      }
      if (bj != k) {
        for (auto& row : M) std::swap(row[bj], row[k]);
        for (auto& row : V) std::swap(row[bj], row[k]);
      }
      bool clean = true;
      for (size_t i = k + 1; i < m; ++i) {
        if (M[i][k].empty()) continue;
        FqPoly q = fqp::div(F, M[i][k], M[k][k]);
        row_axpy(F, M, i, k, q);
        row_axpy(F, U, i, k, q);
        if (!M[i][k].empty()) clean = false;
      }
      for (size_t j = k + 1; j < n; ++j) {
        if (M[k][j].empty()) continue;
        FqPoly q = fqp::div(F, M[k][j], M[k][k]);
        col_axpy(F, M, j, k, q);
        col_axpy(F, V, j, k, q);
        if (!M[k][j].empty()) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (size_t i = k + 1; i < m && divides; ++i)
        for (size_t j = k + 1; j < n; ++j)
          if (!M[i][j].empty() && !fqp::mod(F, M[i][j], M[k][k]).empty()) {
            // Fold row i into row k; the next pass reduces the new remainder.
            for (size_t jj = 0; jj < n; ++jj) M[k][jj] = fqp::add(F, M[k][jj], M[i][jj]);
            for (size_t jj = 0; jj < m; ++jj) U[k][jj] = fqp::add(F, U[k][jj], U[i][jj]);
            divides = false;
            break;
          }
      if (divides) break;
    }
    uint32_t il = F.inv(M[k][k].back());
    if (il != 1) {
      for (auto& e : M[k]) e = fqp::scale(F, e, il);
      for (auto& e : U[k]) e = fqp::scale(F, e, il);
    }
  }
}

std::vector<FqPoly> elementary_divisors(const ConstField& F, AMat M) {
  AMat U, V;
  smith(F, M, U, V);
  std::vector<FqPoly> d;
  for (size_t k = 0; k < std::min(M.size(), M.empty() ? 0 : M[0].size()); ++k) {
    if (M[k][k].empty()) break;
    d.push_back(M[k][k]);
  }
  return d;
}

std::vector<std::vector<FqPoly>> kernel(const ConstField& F, const AMat& M0, size_t ncols) {
  if (M0.empty()) {
    std::vector<std::vector<FqPoly>> out;
    for (size_t j = 0; j < ncols; ++j) {
      std::vector<FqPoly> v(ncols);
      v[j] = {1};
      out.push_back(v);
    }
    return out;
  }
  AMat M = M0, U, V;
  smith(F, M, U, V);
  size_t r = 0;
  while (r < std::min(M.size(), ncols) && !M[r][r].empty()) ++r;
  std::vector<std::vector<FqPoly>> out;
  for (size_t j = r; j < ncols; ++j) {
    std::vector<FqPoly> v(ncols);
    for (size_t i = 0; i < ncols; ++i) v[i] = V[i][j];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ala
}  // namespace dmod
