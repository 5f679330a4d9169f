// Copyright 2026 The qmagic authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "qmagic/fq.hpp"
#include "qmagic/state.hpp"

namespace qmagic {

/// A point u in F_q^{2N}, interleaved layout (m_1, n_1, ..., m_N, n_N).
struct PhasePoint {
  FVector u;

  int n_qudits() const { return static_cast<int>(u.size()) / 2; }
};

/// Cached q-th root of unity table: powers[k] = exp(2 pi i k / q).
class RootTable {
 public:
  explicit RootTable(int q);
  Complex power(long long k) const {
    int r = static_cast<int>(k % q_);
    return powers_[r < 0 ? r + q_ : r];
  }
  int q() const { return q_; }

 private:
  int q_;
  std::vector<Complex> powers_;
};

/// Single-qudit displacement operator T_(m,n) = w^{-2^{-1} m n} Z^m X^n.
Matrix displacement_op(const PrimeField& f, int m, int n);

/// N-qudit displacement operator (tensor product per qudit).
Matrix displacement_op(const PrimeField& f, const PhasePoint& pp);

/// Phase point operator A_u = T_u A_0 T_u^dagger, tensor over qudits.
/// A_(m,n)[a][b] = w^{m(a-b)} iff a + b = 2n (mod q).
Matrix phase_point_op(const PrimeField& f, const PhasePoint& pp);

void validate_density(const Matrix& rho, double tol = kDefaultTol);

/// W_rho(u) = q^{-N} Tr[A_u rho]; A_u applied as a permutation with phases,
/// never materialized.
double wigner_function(const PrimeField& f, const Matrix& rho,
                       const PhasePoint& pp, double tol = kDefaultTol);

/// Full Wigner table over all q^{2N} phase points, ordered by the mixed-radix
/// index of (m_1, n_1, ..., m_N, n_N) with m_1 most significant.
std::vector<double> wigner_table(const PrimeField& f, const Matrix& rho,
                                 int n_qudits, double tol = kDefaultTol);
/// Serial reference implementation of the same kernel (kept for testing and
/// benchmarking against the parallel one).
std::vector<double> wigner_table_serial(const PrimeField& f, const Matrix& rho,
                                        int n_qudits, double tol = kDefaultTol);

PhasePoint phase_point_from_index(const PrimeField& f, int n_qudits,
                                  long long index);
long long phase_point_to_index(const PrimeField& f, const PhasePoint& pp);

struct MagicMeasures {
  double one_norm = 0.0;
  double sum_negativity = 0.0;
  double mana = 0.0;
};

MagicMeasures magic_measures(const PrimeField& f, const Matrix& rho,
                             int n_qudits, double tol = kDefaultTol);
MagicMeasures magic_measures_from_table(const std::vector<double>& table);

/// Weyl (characteristic) function chi_rho(u) = Tr[T_u rho].
Complex weyl_function(const PrimeField& f, const Matrix& rho,
                      const PhasePoint& pp);

/// Stabilizer 2-entropy M_2 = -log[ sum_u |chi|^4 / (d_A Tr rho^2) ].
double sre_m2(const PrimeField& f, const Matrix& rho, int n_qudits);

/// Renyi Wigner moment sum_u |W(u)|^{2n} from the exact table.
double wigner_moment(const std::vector<double>& table, int n);

enum class MomentKind { kPhasePoint, kDisplacement };

/// Single-qudit replica moment operator:
///   kPhasePoint:   A^(2n) = sum_u A_u^{x 2n}
///   kDisplacement: T^(2n) = sum_u T_u^{x n} (x) T_u^{dagger x n}
/// Guard: q^{2n} <= 4000 rows.
Matrix moment_operator(const PrimeField& f, MomentKind kind, int n);

}  // namespace qmagic
