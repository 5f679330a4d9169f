// Copyright 2026 The qmagic authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmagic/fq.hpp"

#include <cmath>

namespace qmagic {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(int q) : q_(q) {
  if (!is_prime(q) || q < 3)
    throw ConfigError("PrimeField: q must be an odd prime >= 3, got " +
                      std::to_string(q));
}

int PrimeField::inv(int a) const {
  a = reduce(a);
  if (a == 0) throw ConfigError("PrimeField::inv: non-invertible element 0");
  return pow(a, q_ - 2);
}

int PrimeField::pow(int a, long long e) const {
  a = reduce(a);
  long long r = 1, b = a;
  while (e > 0) {
    if (e & 1) r = (r * b) % q_;
    b = (b * b) % q_;
    e >>= 1;
  }
  return static_cast<int>(r);
}

FMatrix FMatrix::identity(int n) {
  FMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FMatrix mat_mul(const PrimeField& f, const FMatrix& a, const FMatrix& b) {
  if (a.cols != b.rows) throw ConfigError("mat_mul: dimension mismatch");
  FMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      int aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        c.at(i, j) = f.reduce(c.at(i, j) + static_cast<long long>(aik) * b.at(k, j));
    }
  return c;
}

FMatrix mat_transpose(const FMatrix& a) {
  FMatrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

FVector mat_vec(const PrimeField& f, const FMatrix& a, const FVector& v) {
  if (a.cols != static_cast<int>(v.size()))
    throw ConfigError("mat_vec: dimension mismatch");
  FVector r(a.rows, 0);
  for (int i = 0; i < a.rows; ++i) {
    long long s = 0;
    for (int j = 0; j < a.cols; ++j) s += static_cast<long long>(a.at(i, j)) * v[j];
    r[i] = f.reduce(s);
  }
  return r;
}

int rref(const PrimeField& f, FMatrix& m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
    int iv = f.inv(m.at(rank, col));
    for (int c = 0; c < m.cols; ++c) m.at(rank, c) = f.mul(m.at(rank, c), iv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      int factor = m.at(r, col);
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

int symplectic_form(const PrimeField& f, const FVector& u, const FVector& v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw ConfigError("symplectic_form: vectors must have equal even dimension");
  long long s = 0;
  for (size_t i = 0; i + 1 < u.size(); i += 2) {
    // u = (..., m_i, n_i, ...), v = (..., p_i, q_i, ...)
    s += static_cast<long long>(u[i]) * v[i + 1] -
         static_cast<long long>(u[i + 1]) * v[i];
  }
  return f.reduce(s);
}

int dot(const PrimeField& f, const FVector& u, const FVector& v) {
  if (u.size() != v.size()) throw ConfigError("dot: dimension mismatch");
  long long s = 0;
  for (size_t i = 0; i < u.size(); ++i) s += static_cast<long long>(u[i]) * v[i];
  return f.reduce(s);
}

std::vector<FMatrix> enumerate_subspaces(const PrimeField& f, int dim_ambient,
                                         int dim_sub) {
  if (dim_sub < 0 || dim_sub > dim_ambient)
    throw ConfigError("enumerate_subspaces: invalid dimensions");
  double total = std::pow(static_cast<double>(f.q()), dim_ambient);
  if (total > 1e7)
    throw GuardError("enumerate_subspaces: q^dim_ambient exceeds 10^7");

  std::vector<FMatrix> out;
  if (dim_sub == 0) {
    out.emplace_back(0, dim_ambient);
    return out;
  }

  // Enumerate RREF matrices directly: choose pivot columns, then fill the
  // free entries (right of each pivot, excluding pivot columns).
  std::vector<int> pivots(dim_sub);
  // Iterate over pivot column combinations.
  std::vector<int> comb(dim_sub);
  for (int i = 0; i < dim_sub; ++i) comb[i] = i;
  const int q = f.q();
  while (true) {
    // Free positions: (row r, col c) with c > pivots[r], c not a pivot column.
    std::vector<std::pair<int, int>> free_pos;
    std::vector<bool> is_pivot(dim_ambient, false);
    for (int c : comb) is_pivot[c] = true;
    for (int r = 0; r < dim_sub; ++r)
      for (int c = comb[r] + 1; c < dim_ambient; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(r, c);

    long long nfill = 1;
    for (size_t i = 0; i < free_pos.size(); ++i) nfill *= q;
    for (long long fill = 0; fill < nfill; ++fill) {
      FMatrix m(dim_sub, dim_ambient);
      for (int r = 0; r < dim_sub; ++r) m.at(r, comb[r]) = 1;
      long long rem = fill;
      for (auto [r, c] : free_pos) {
        m.at(r, c) = static_cast<int>(rem % q);
        rem /= q;
      }
      out.push_back(std::move(m));
    }

    // Next combination.
    int i = dim_sub - 1;
    while (i >= 0 && comb[i] == dim_ambient - dim_sub + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < dim_sub; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

FMatrix nullspace_basis(const PrimeField& f, const FMatrix& m) {
  FMatrix r = m;
  int rank = rref(f, r);
  // Identify pivot columns.
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(m.cols, false);
  for (int row = 0, col = 0; row < rank; ++row) {
    while (col < m.cols && r.at(row, col) == 0) ++col;
    pivot_col.push_back(col);
    is_pivot[col] = true;
  }
  FMatrix basis(m.cols - rank, m.cols);
  int bi = 0;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    basis.at(bi, free_col) = 1;
    for (int row = 0; row < rank; ++row)
      basis.at(bi, pivot_col[row]) = f.neg(r.at(row, free_col));
    ++bi;
  }
  return basis;
}

FVector solve_linear(const PrimeField& f, const FMatrix& a, const FVector& b) {
  if (a.rows != static_cast<int>(b.size()))
    throw ConfigError("solve_linear: dimension mismatch");
  FMatrix aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  int rank = rref(f, aug);
  FVector x(a.cols, 0);
  for (int row = 0; row < rank; ++row) {
    int col = 0;
    while (col <= a.cols && aug.at(row, col) == 0) ++col;
    if (col == a.cols) throw ConfigError("solve_linear: inconsistent system");
    x[col] = aug.at(row, a.cols);
  }
  return x;
}

double gaussian_binomial(int q, int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i)
    r *= (std::pow(q, n - i) - 1.0) / (std::pow(q, i + 1) - 1.0);
  return r;
}

std::vector<FVector> span_elements(const PrimeField& f, const FMatrix& basis) {
  const int q = f.q();
  long long count = 1;
  for (int i = 0; i < basis.rows; ++i) count *= q;
  std::vector<FVector> out;
  out.reserve(count);
  for (long long idx = 0; idx < count; ++idx) {
    FVector v(basis.cols, 0);
    long long rem = idx;
    for (int r = 0; r < basis.rows; ++r) {
      int c = static_cast<int>(rem % q);
      rem /= q;
      if (c == 0) continue;
      for (int j = 0; j < basis.cols; ++j)
        v[j] = f.reduce(v[j] + static_cast<long long>(c) * basis.at(r, j));
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qmagic
