// Copyright 2026 The qmagic authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <random>

#include "qmagic/fq.hpp"
#include "qmagic/phasespace.hpp"
#include "qmagic/state.hpp"

namespace qmagic {

/// 2m x 2m matrix over F_q satisfying F^T J F = J in the interleaved layout.
struct SymplecticMatrix {
  FMatrix f;

  int n_qudits() const { return f.rows / 2; }
};

/// The symplectic Gram matrix J (block diag of [[0,1],[-1,0]] mod q).
FMatrix symplectic_gram(const PrimeField& field, int m);

bool is_symplectic(const PrimeField& field, const FMatrix& f);

/// Uniform sample from Sp(2m, F_q): images of the canonical basis pairs are
/// drawn uniformly among valid extensions, recursing on the symplectic
/// complement.
SymplecticMatrix random_symplectic(const PrimeField& field, int m,
                                   std::mt19937_64& rng);

/// Unitary implementing a symplectic F (up to global phase) composed with a
/// Pauli displacement: U = T_shift U_F with U_F T_u U_F^dag proportional to
/// T_{Fu}. Built from the joint eigenbasis of the image of the Z-type
/// stabilizer group.
Matrix symplectic_to_unitary(const PrimeField& field, const SymplecticMatrix& f,
                             const PhasePoint& shift);

struct CliffordElement {
  SymplecticMatrix f;
  PhasePoint pauli_shift;

  const Matrix& unitary(const PrimeField& field) const;

 private:
  mutable std::optional<Matrix> cached_;
};

/// Uniform over the Clifford group modulo global phase: uniform symplectic
/// times uniform Pauli shift.
CliffordElement random_clifford(const PrimeField& field, int m,
                                std::mt19937_64& rng);

/// All elements of Sp(2, q) = SL(2, q), by brute force. Guarded to q <= 11.
std::vector<SymplecticMatrix> enumerate_sp2(const PrimeField& field);

/// Orbit of |0> under all single-qudit Cliffords, deduplicated up to global
/// phase; exactly q(q+1) stabilizer states. Guarded to q <= 7.
std::vector<Vector> stabilizer_orbit(const PrimeField& field);

}  // namespace qmagic
