// Copyright 2026 The qmagic authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qmagic/fq.hpp"
#include "qmagic/state.hpp"

namespace qmagic {

/// A t-dimensional subspace T of F_q^{2t} whose elements (x|y) satisfy
/// x.x = y.y and which contains (1,...,1 | 1,...,1). Basis rows are kept in
/// canonical row-reduced form so equality of subspaces is equality of bases.
struct StochasticLagrangian {
  int t = 0;
  FMatrix basis;  // t x 2t

  bool operator==(const StochasticLagrangian& o) const = default;
};

/// Checks the defining conditions exhaustively over all q^rank span elements.
bool is_stochastic_lagrangian(const PrimeField& field, int t,
                              const FMatrix& basis);

/// Complete, duplicate-free enumeration of the subspaces above, in a
/// deterministic order. Guarded: q^t <= 1e5 intermediate span scans.
std::vector<StochasticLagrangian> enumerate_sigma(const PrimeField& field,
                                                  int t);

/// r(T) = sum_{(x,y) in T} |x><y| on (C^q)^{ox t}. Guard: q^t <= 4000.
Matrix r_operator(const PrimeField& field, const StochasticLagrangian& T);

/// |T_a, T_b| = t - dim(T_a cap T_b); the rank computation is cross-checked
/// against a direct count of common span elements.
int gram_distance(const PrimeField& field, const StochasticLagrangian& a,
                  const StochasticLagrangian& b);

/// A t x t matrix O over F_q with O^T O = I and O 1 = 1.
bool is_stochastic_orthogonal(const PrimeField& field, const FMatrix& o);

/// The graph subspace T_O = {(O y, y)} as a canonical StochasticLagrangian.
StochasticLagrangian graph_subspace(const PrimeField& field, const FMatrix& o);

/// Distinguished elements of O_{2n}(q); all require 2n replicas.
/// Anti-identity: n^{-1} 1 1^T - I. Requires gcd(n, q) = 1.
FMatrix anti_identity(const PrimeField& field, int two_n);
/// SRE spin: I - n^{-1} s s^T with s = (1..1, -1..-1). Requires gcd(n, q) = 1.
FMatrix sre_spin(const PrimeField& field, int two_n);
/// Multi-swap: the permutation matrix exchanging replica i and n + i.
FMatrix multi_swap(int two_n);
/// Permutation matrix for images[] (column j maps to row images[j]).
FMatrix permutation_matrix(const std::vector<int>& images);

/// Generalized Weingarten matrix: inverse of the Gram matrix
/// G(b, c) = Q^{t - |T_b, T_c|}, Q = q^2, over the given subspace list.
/// Guard: at most 500 subspaces. Residual of the inverse identity is
/// asserted below 1e-10.
Eigen::MatrixXd clifford_weingarten(const PrimeField& field,
                                    const std::vector<StochasticLagrangian>& ts);

/// Max-norm of [r(T), V^{ox t}] for a single-qudit unitary V.
double commutant_commutator_norm(const PrimeField& field,
                                 const StochasticLagrangian& T,
                                 const Matrix& v);

/// Samples `samples` random single-qudit Cliffords and checks the commutator
/// norm stays below 1e-9 for every enumerated T. Returns the worst norm seen.
double verify_commutant(const PrimeField& field, int t, int samples,
                        std::mt19937_64& rng);

}  // namespace qmagic
