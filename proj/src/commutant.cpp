// Copyright 2026 The qmagic authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmagic/commutant.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "qmagic/clifford.hpp"

namespace qmagic {

namespace {

// B((x|y), (x'|y')) = x.x' - y.y'; symmetric, so total isotropy of a span
// follows from pairwise plus self conditions (odd characteristic).
int difference_form(const PrimeField& f, const FVector& u, const FVector& v) {
  const int t = static_cast<int>(u.size()) / 2;
  long long s = 0;
  for (int i = 0; i < t; ++i) s += static_cast<long long>(u[i]) * v[i];
  for (int i = t; i < 2 * t; ++i) s -= static_cast<long long>(u[i]) * v[i];
  return f.reduce(s);
}

FMatrix rows_to_matrix(const std::vector<FVector>& rows, int cols) {
  FMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  return m;
}

std::string matrix_key(const FMatrix& m) {
  std::ostringstream os;
  for (int v : m.data) os << v << ",";
  return os.str();
}

}  // namespace

bool is_stochastic_lagrangian(const PrimeField& field, int t,
                              const FMatrix& basis) {
  if (basis.cols != 2 * t) return false;
  FMatrix r = basis;
  if (rref(field, r) != t) return false;
  // (1|1) in T.
  FMatrix with_ones(basis.rows + 1, basis.cols);
  for (int i = 0; i < basis.rows; ++i)
    for (int c = 0; c < basis.cols; ++c) with_ones.at(i, c) = basis.at(i, c);
  for (int c = 0; c < basis.cols; ++c) with_ones.at(basis.rows, c) = 1;
  if (rref(field, with_ones) != t) return false;
  // x.x = y.y for every span element.
  for (const FVector& v : span_elements(field, basis))
    if (difference_form(field, v, v) != 0) return false;
  return true;
}

std::vector<StochasticLagrangian> enumerate_sigma(const PrimeField& field,
                                                  int t) {
  const int q = field.q();
  if (std::pow(static_cast<double>(q), t) > 1e5)
    throw GuardError("enumerate_sigma: q^t exceeds 1e5 guard");

  const int dim = 2 * t;
  std::set<std::string> seen_partial;
  std::set<std::string> seen_final;
  std::vector<StochasticLagrangian> out;

  std::vector<FVector> basis;
  FVector ones(dim, 1);
  basis.push_back(ones);

  auto recurse = [&](auto&& self, std::vector<FVector>& rows) -> void {
    FMatrix canon = rows_to_matrix(rows, dim);
    int rank = rref(field, canon);
    if (rank != static_cast<int>(rows.size()))
      throw NumericsError("enumerate_sigma: dependent basis rows");
    std::string key = matrix_key(canon);
    if (!seen_partial.insert(key).second) return;
    if (rank == t) {
      if (seen_final.insert(key).second) {
        StochasticLagrangian s;
        s.t = t;
        s.basis = canon;
        out.push_back(std::move(s));
      }
      return;
    }
    // Candidates: B-orthogonal to all current rows, self-isotropic, and
    // outside the current span.
    FMatrix cons(rank, dim);
    for (int r = 0; r < rank; ++r)
      for (int c = 0; c < dim; ++c)
        cons.at(r, c) = c < t ? canon.at(r, c) : field.neg(canon.at(r, c));
    FMatrix null = nullspace_basis(field, cons);
    for (const FVector& v : span_elements(field, null)) {
      if (difference_form(field, v, v) != 0) continue;
      // Skip vectors already in the span (rank would not grow).
      FMatrix stacked(rank + 1, dim);
      for (int r = 0; r < rank; ++r)
        for (int c = 0; c < dim; ++c) stacked.at(r, c) = canon.at(r, c);
      for (int c = 0; c < dim; ++c) stacked.at(rank, c) = v[c];
      if (rref(field, stacked) != rank + 1) continue;
      rows.push_back(v);
      self(self, rows);
      rows.pop_back();
    }
  };
  recurse(recurse, basis);

  std::sort(out.begin(), out.end(),
            [](const StochasticLagrangian& a, const StochasticLagrangian& b) {
              return a.basis.data < b.basis.data;
            });
  for (const auto& s : out)
    if (!is_stochastic_lagrangian(field, t, s.basis))
      throw NumericsError("enumerate_sigma: produced invalid subspace");
  return out;
}

Matrix r_operator(const PrimeField& field, const StochasticLagrangian& T) {
  const int q = field.q();
  const long long d = ipow(q, T.t);
  if (d > 4000) throw GuardError("r_operator: q^t exceeds 4000 guard");
  Matrix r = Matrix::Zero(d, d);
  for (const FVector& v : span_elements(field, T.basis)) {
    long long x = 0, y = 0;
    for (int i = 0; i < T.t; ++i) {
      x = x * q + v[i];
      y = y * q + v[T.t + i];
    }
    r(x, y) += 1.0;
  }
  return r;
}

int gram_distance(const PrimeField& field, const StochasticLagrangian& a,
                  const StochasticLagrangian& b) {
  if (a.t != b.t) throw ConfigError("gram_distance: replica counts differ");
  const int t = a.t;
  FMatrix stacked(2 * t, 2 * t);
  for (int r = 0; r < t; ++r)
    for (int c = 0; c < 2 * t; ++c) {
      stacked.at(r, c) = a.basis.at(r, c);
      stacked.at(t + r, c) = b.basis.at(r, c);
    }
  int dim_cap = 2 * t - rref(field, stacked);

  // Independent route: common span elements number exactly q^{dim_cap}.
  std::set<FVector> span_a;
  for (const FVector& v : span_elements(field, a.basis)) span_a.insert(v);
  long long common = 0;
  for (const FVector& v : span_elements(field, b.basis))
    if (span_a.count(v)) ++common;
  if (common != ipow(field.q(), dim_cap))
    throw NumericsError("gram_distance: intersection count mismatch");
  return t - dim_cap;
}

bool is_stochastic_orthogonal(const PrimeField& field, const FMatrix& o) {
  if (o.rows != o.cols) return false;
  if (mat_mul(field, mat_transpose(o), o) != FMatrix::identity(o.rows))
    return false;
  FVector ones(o.rows, 1);
  return mat_vec(field, o, ones) == ones;
}

StochasticLagrangian graph_subspace(const PrimeField& field, const FMatrix& o) {
  if (!is_stochastic_orthogonal(field, o))
    throw ConfigError("graph_subspace: matrix is not stochastic orthogonal");
  const int t = o.rows;
  FMatrix basis(t, 2 * t);
  for (int j = 0; j < t; ++j) {
    for (int i = 0; i < t; ++i) basis.at(j, i) = o.at(i, j);  // column O e_j
    basis.at(j, t + j) = 1;
  }
  rref(field, basis);
  StochasticLagrangian s;
  s.t = t;
  s.basis = basis;
  if (!is_stochastic_lagrangian(field, t, basis))
    throw NumericsError("graph_subspace: graph is not stochastic Lagrangian");
  return s;
}

FMatrix anti_identity(const PrimeField& field, int two_n) {
  if (two_n % 2 != 0) throw ConfigError("anti_identity: replica count is odd");
  const int n = two_n / 2;
  if (n % field.q() == 0)
    throw ConfigError("anti_identity: n not invertible mod q");
  int ninv = field.inv(n % field.q());
  // Ibar = n^{-1} 1 1^T - I.
  FMatrix m(two_n, two_n);
  for (int i = 0; i < two_n; ++i)
    for (int j = 0; j < two_n; ++j)
      m.at(i, j) = field.sub(ninv, i == j ? 1 : 0);
  return m;
}

FMatrix sre_spin(const PrimeField& field, int two_n) {
  if (two_n % 2 != 0) throw ConfigError("sre_spin: replica count is odd");
  const int n = two_n / 2;
  if (n % field.q() == 0) throw ConfigError("sre_spin: n not invertible mod q");
  int ninv = field.inv(n % field.q());
  auto sgn = [&](int i) { return i < n ? 1 : field.neg(1); };
  FMatrix m(two_n, two_n);
  for (int i = 0; i < two_n; ++i)
    for (int j = 0; j < two_n; ++j) {
      int outer = field.mul(ninv, field.mul(sgn(i), sgn(j)));
      m.at(i, j) = field.sub(i == j ? 1 : 0, outer);
    }
  return m;
}

FMatrix multi_swap(int two_n) {
  if (two_n % 2 != 0) throw ConfigError("multi_swap: replica count is odd");
  const int n = two_n / 2;
  std::vector<int> images(two_n);
  for (int i = 0; i < n; ++i) {
    images[i] = i + n;
    images[i + n] = i;
  }
  return permutation_matrix(images);
}

FMatrix permutation_matrix(const std::vector<int>& images) {
  const int t = static_cast<int>(images.size());
  FMatrix m(t, t);
  std::vector<bool> hit(t, false);
  for (int j = 0; j < t; ++j) {
    if (images[j] < 0 || images[j] >= t || hit[images[j]])
      throw ConfigError("permutation_matrix: images are not a bijection");
    hit[images[j]] = true;
    m.at(images[j], j) = 1;
  }
  return m;
}

Eigen::MatrixXd clifford_weingarten(
    const PrimeField& field, const std::vector<StochasticLagrangian>& ts) {
  const int n = static_cast<int>(ts.size());
  if (n == 0) throw ConfigError("clifford_weingarten: empty subspace list");
  if (n > 500) throw GuardError("clifford_weingarten: more than 500 subspaces");
  const double bigq = static_cast<double>(field.q()) * field.q();
  const int t = ts[0].t;
  Eigen::MatrixXd gram(n, n);
  for (int b = 0; b < n; ++b)
    for (int c = b; c < n; ++c) {
      double g = std::pow(bigq, t - gram_distance(field, ts[b], ts[c]));
      gram(b, c) = g;
      gram(c, b) = g;
    }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
  if (!lu.isInvertible())
    throw NumericsError("clifford_weingarten: singular Gram matrix");
  Eigen::MatrixXd wg = lu.solve(Eigen::MatrixXd::Identity(n, n));
  double residual = (gram * wg - Eigen::MatrixXd::Identity(n, n))
                        .cwiseAbs()
                        .maxCoeff();
  if (residual > 1e-10)
    throw NumericsError("clifford_weingarten: inverse residual " +
                        std::to_string(residual));
  return wg;
}

double commutant_commutator_norm(const PrimeField& field,
                                 const StochasticLagrangian& T,
                                 const Matrix& v) {
  Matrix r = r_operator(field, T);
  Matrix vt = kron_power(v, T.t);
  return (vt * r - r * vt).cwiseAbs().maxCoeff();
}

double verify_commutant(const PrimeField& field, int t, int samples,
                        std::mt19937_64& rng) {
  auto sigmas = enumerate_sigma(field, t);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    CliffordElement c = random_clifford(field, 1, rng);
    const Matrix& v = c.unitary(field);
    for (const auto& T : sigmas)
      worst = std::max(worst, commutant_commutator_norm(field, T, v));
  }
  return worst;
}

}  // namespace qmagic
