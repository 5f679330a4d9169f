// Copyright 2026 The qmagic authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <random>
#include <vector>

#include "qmagic/errors.hpp"

namespace qmagic {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Subset of site indices 0..N-1.
using Region = std::vector<int>;

/// Memory guard for state vectors (q^N amplitudes).
inline constexpr long long kMaxAmplitudes = 3'000'000;
/// Guard for reduced density matrices (q^{|A|} rows).
inline constexpr long long kMaxReducedDim = 4096;
/// Guard for enumerating measurement outcomes (q^{|R|} branches).
inline constexpr long long kMaxEnumeratedOutcomes = 2187;

long long ipow(long long base, int exp);

/// Pure state of N qudits of dimension q. Site 0 is the most significant
/// digit: basis index = sum_i x_i q^{N-1-i}.
struct DenseState {
  int q = 0;
  int n_sites = 0;
  Vector amps;

  DenseState() = default;
  DenseState(int q_, int n_sites_);

  long long dim() const { return amps.size(); }
  /// |0...0>.
  static DenseState zero_state(int q, int n_sites);
  void check_norm(double tol = kDefaultTol) const;
};

void validate_region(const Region& r, int n_sites);
Region region_complement(const Region& r, int n_sites);

/// Applies a two-qudit gate (q^2 x q^2, ordered as |x_i x_j>) to sites (i, j).
void apply_two_qudit_gate(DenseState& state, const Matrix& gate, int i, int j);

/// Applies a single-qudit gate to one site.
void apply_single_qudit_gate(DenseState& state, const Matrix& gate, int site);

/// One brickwork layer: even layers couple (0,1),(2,3),...; odd layers couple
/// (1,2),(3,4),.... Open boundary, no wraparound. The supplier is called once
/// per gate, left site passed for bookkeeping.
void brickwork_layer(DenseState& state, int layer_parity,
                     const std::function<Matrix(int left_site)>& gate_supplier);

/// Reduced density matrix of the region (ordered by the region's site order).
Matrix reduced_density(const DenseState& state, const Region& region);

struct Entropies {
  double von_neumann = 0.0;
  double renyi2 = 0.0;
};

/// Entropies of a density matrix from its eigenvalues, with 0 log 0 = 0.
Entropies entropies(const Matrix& rho, double tol = kDefaultTol);
double renyi_entropy(const Matrix& rho, int n);

/// Haar-random unitary: QR of a complex Ginibre matrix with phase-fixed
/// diagonal of R.
Matrix haar_unitary(int dim, std::mt19937_64& rng);

/// Kronecker product and its t-fold power.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_power(const Matrix& a, int t);

struct MeasurementOutcome {
  double probability = 0.0;
  std::vector<int> outcome;  // one digit per measured site
  DenseState post_state;
};

enum class MeasureMode { kEnumerate, kSample };
enum class MeasureBasis { kComputational, kHaarRandom };

/// Measures every site of R. In enumerate mode all outcomes with nonzero
/// probability are returned (Born weights, sum 1); in sample mode one outcome
/// is drawn. haar_random basis first applies an independent single-qudit Haar
/// unitary to each site of R.
std::vector<MeasurementOutcome> measure_region(const DenseState& state,
                                               const Region& region,
                                               MeasureMode mode,
                                               MeasureBasis basis,
                                               std::mt19937_64& rng);

/// Replaces the |0> content of region M by maximal entanglement with |M|
/// fresh reference sites appended at the end. Requires the input amplitudes
/// to be supported on x_M = 0.
DenseState attach_reference(const DenseState& state, const Region& m);

}  // namespace qmagic
