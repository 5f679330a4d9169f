// Copyright 2026 The qmagic authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "qmagic/errors.hpp"

namespace qmagic {

/// Arithmetic over the prime field F_q for an odd prime q.
/// Residues are always kept as canonical representatives in [0, q).
class PrimeField {
 public:
  explicit PrimeField(int q);

  int q() const { return q_; }

  int add(int a, int b) const { return reduce(a + b); }
  int sub(int a, int b) const { return reduce(a - b); }
  int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
  int neg(int a) const { return reduce(-a); }
  int inv(int a) const;
  /// 2^{-1} = (q+1)/2 for odd prime q.
  int inv2() const { return (q_ + 1) / 2; }
  int pow(int a, long long e) const;

  /// Canonical representative in [0, q).
  int reduce(long long a) const {
    int r = static_cast<int>(a % q_);
    return r < 0 ? r + q_ : r;
  }

 private:
  int q_;
};

/// A vector of residues mod q. Plain storage; operations live in free
/// functions taking the field explicitly.
using FVector = std::vector<int>;

/// A dense matrix over F_q, row-major.
struct FMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> data;

  FMatrix() = default;
  FMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}

  int& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  static FMatrix identity(int n);
  bool operator==(const FMatrix& o) const = default;
};

FMatrix mat_mul(const PrimeField& f, const FMatrix& a, const FMatrix& b);
FMatrix mat_transpose(const FMatrix& a);
FVector mat_vec(const PrimeField& f, const FMatrix& a, const FVector& v);

/// Reduces `m` in place to row-reduced echelon form; returns the rank.
int rref(const PrimeField& f, FMatrix& m);

/// Standard symplectic form [u, v] = sum_i (m_i q_i - n_i p_i) in the
/// interleaved layout u = (m_1, n_1, ..., m_N, n_N).
int symplectic_form(const PrimeField& f, const FVector& u, const FVector& v);

/// Dot product u . v mod q.
int dot(const PrimeField& f, const FVector& u, const FVector& v);

/// Enumerates every dim_sub-dimensional subspace of F_q^{dim_ambient} exactly
/// once, as canonical row-reduced basis matrices. Guarded by
/// q^{dim_ambient} <= 10^7.
std::vector<FMatrix> enumerate_subspaces(const PrimeField& f, int dim_ambient,
                                         int dim_sub);

/// Basis of the nullspace {x : M x = 0}, one row per basis vector.
FMatrix nullspace_basis(const PrimeField& f, const FMatrix& m);

/// One solution of A x = b; throws ConfigError if inconsistent.
FVector solve_linear(const PrimeField& f, const FMatrix& a, const FVector& b);

/// Gaussian binomial coefficient [n choose k]_q as a double (test oracle aid).
double gaussian_binomial(int q, int n, int k);

/// Lists all q^rank elements spanned by the rows of `basis`.
std::vector<FVector> span_elements(const PrimeField& f, const FMatrix& basis);

}  // namespace qmagic
