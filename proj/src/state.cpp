// Copyright 2026 The qmagic authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmagic/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace qmagic {

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

DenseState::DenseState(int q_, int n_sites_) : q(q_), n_sites(n_sites_) {
  long long d = ipow(q, n_sites);
  if (d > kMaxAmplitudes)
    throw GuardError("DenseState: q^N = " + std::to_string(d) +
                     " exceeds amplitude guard");
  amps = Vector::Zero(d);
}

DenseState DenseState::zero_state(int q, int n_sites) {
  DenseState s(q, n_sites);
  s.amps(0) = 1.0;
  return s;
}

void DenseState::check_norm(double tol) const {
  double n = amps.norm();
  if (std::abs(n - 1.0) > tol)
    throw NumericsError("DenseState: norm deviates from 1 by " +
                        std::to_string(std::abs(n - 1.0)));
}

void validate_region(const Region& r, int n_sites) {
  std::set<int> seen;
  for (int s : r) {
    if (s < 0 || s >= n_sites)
      throw ConfigError("region site out of range: " + std::to_string(s));
    if (!seen.insert(s).second)
      throw ConfigError("region has duplicate site: " + std::to_string(s));
  }
}

Region region_complement(const Region& r, int n_sites) {
  std::vector<bool> in(n_sites, false);
  for (int s : r) in[s] = true;
  Region out;
  for (int i = 0; i < n_sites; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

void apply_two_qudit_gate(DenseState& state, const Matrix& gate, int i, int j) {
  const int q = state.q;
  if (i == j) throw ConfigError("apply_two_qudit_gate: site collision");
  if (gate.rows() != q * q || gate.cols() != q * q)
    throw ConfigError("apply_two_qudit_gate: gate must be q^2 x q^2");
  if ((gate.adjoint() * gate - Matrix::Identity(q * q, q * q)).cwiseAbs().maxCoeff() >
      1e-8)
    throw ConfigError("apply_two_qudit_gate: gate is not unitary");
  validate_region({i, j}, state.n_sites);

  const long long stride_i = ipow(q, state.n_sites - 1 - i);
  const long long stride_j = ipow(q, state.n_sites - 1 - j);
  const long long dim = state.dim();
  Vector scratch(q * q);
  std::vector<bool> done(dim, false);
  for (long long base = 0; base < dim; ++base) {
    if (done[base]) continue;
    long long di = (base / stride_i) % q;
    long long dj = (base / stride_j) % q;
    if (di != 0 || dj != 0) continue;
    // base has zeros at sites i and j; loop the q^2 block.
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        long long idx = base + a * stride_i + b * stride_j;
        scratch(a * q + b) = state.amps(idx);
        done[idx] = true;
      }
    Vector out = gate * scratch;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        state.amps(base + a * stride_i + b * stride_j) = out(a * q + b);
  }
}

void apply_single_qudit_gate(DenseState& state, const Matrix& gate, int site) {
  const int q = state.q;
  if (gate.rows() != q || gate.cols() != q)
    throw ConfigError("apply_single_qudit_gate: gate must be q x q");
  validate_region({site}, state.n_sites);
  const long long stride = ipow(q, state.n_sites - 1 - site);
  const long long dim = state.dim();
  Vector scratch(q);
  for (long long base = 0; base < dim; ++base) {
    if ((base / stride) % q != 0) continue;
    for (int a = 0; a < q; ++a) scratch(a) = state.amps(base + a * stride);
    Vector out = gate * scratch;
    for (int a = 0; a < q; ++a) state.amps(base + a * stride) = out(a);
  }
}

void brickwork_layer(DenseState& state, int layer_parity,
                     const std::function<Matrix(int)>& gate_supplier) {
  if (state.n_sites < 2) throw ConfigError("brickwork_layer: need N >= 2");
  int start = (layer_parity % 2 == 0) ? 0 : 1;
  for (int left = start; left + 1 < state.n_sites; left += 2)
    apply_two_qudit_gate(state, gate_supplier(left), left, left + 1);
}

Matrix reduced_density(const DenseState& state, const Region& region) {
  validate_region(region, state.n_sites);
  const int q = state.q;
  long long da = ipow(q, static_cast<int>(region.size()));
  if (da > kMaxReducedDim)
    throw GuardError("reduced_density: q^|A| exceeds guard");
  Region rest = region_complement(region, state.n_sites);
  long long db = ipow(q, static_cast<int>(rest.size()));

  std::vector<long long> stride(state.n_sites);
  for (int s = 0; s < state.n_sites; ++s)
    stride[s] = ipow(q, state.n_sites - 1 - s);

  auto index_of = [&](const Region& sites, long long packed) {
    long long idx = 0;
    for (int k = static_cast<int>(sites.size()) - 1; k >= 0; --k) {
      idx += (packed % q) * stride[sites[k]];
      packed /= q;
    }
    return idx;
  };

  Matrix rho = Matrix::Zero(da, da);
  for (long long b = 0; b < db; ++b) {
    long long off = index_of(rest, b);
    for (long long x = 0; x < da; ++x) {
      Complex ax = state.amps(off + index_of(region, x));
      if (ax == Complex(0, 0)) continue;
      for (long long y = 0; y < da; ++y)
        rho(x, y) += ax * std::conj(state.amps(off + index_of(region, y)));
    }
  }
  return rho;
}

Entropies entropies(const Matrix& rho, double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  Entropies e;
  double p2 = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double p = es.eigenvalues()(i);
    if (p < -1e-8)
      throw NumericsError("entropies: negative eigenvalue " + std::to_string(p));
    if (p > tol) e.von_neumann -= p * std::log(p);
    p2 += p * p;
  }
  e.renyi2 = -std::log(p2);
  return e;
}

double renyi_entropy(const Matrix& rho, int n) {
  if (n < 2) throw ConfigError("renyi_entropy: need n >= 2");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double p = std::max(0.0, es.eigenvalues()(i));
    s += std::pow(p, n);
  }
  return std::log(s) / (1.0 - n);
}

Matrix haar_unitary(int dim, std::mt19937_64& rng) {
  if (dim < 2) throw ConfigError("haar_unitary: dim >= 2 required");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix qmat = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal phases so the distribution is exactly Haar.
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    Complex phase = (std::abs(d) > 0) ? d / std::abs(d) : Complex(1, 0);
    qmat.col(j) *= phase;
  }
  return qmat;
}

std::vector<MeasurementOutcome> measure_region(const DenseState& state,
                                               const Region& region,
                                               MeasureMode mode,
                                               MeasureBasis basis,
                                               std::mt19937_64& rng) {
  validate_region(region, state.n_sites);
  const int q = state.q;
  long long n_outcomes = ipow(q, static_cast<int>(region.size()));
  if (mode == MeasureMode::kEnumerate && n_outcomes > kMaxEnumeratedOutcomes)
    throw GuardError(
        "measure_region: q^|R| exceeds enumeration guard; use sample mode");

  DenseState working = state;
  if (basis == MeasureBasis::kHaarRandom) {
    for (int s : region)
      apply_single_qudit_gate(working, haar_unitary(q, rng), s);
  }

  std::vector<long long> stride(region.size());
  for (size_t k = 0; k < region.size(); ++k)
    stride[k] = ipow(q, state.n_sites - 1 - region[k]);

  auto digits_of = [&](long long idx) {
    std::vector<int> d(region.size());
    for (size_t k = 0; k < region.size(); ++k)
      d[k] = static_cast<int>((idx / stride[k]) % q);
    return d;
  };
  auto packed_of = [&](const std::vector<int>& d) {
    long long p = 0;
    for (size_t k = 0; k < region.size(); ++k) p = p * q + d[k];
    return p;
  };

  // Born weights per outcome.
  std::vector<double> prob(n_outcomes, 0.0);
  for (long long idx = 0; idx < working.dim(); ++idx) {
    double a2 = std::norm(working.amps(idx));
    if (a2 == 0.0) continue;
    prob[packed_of(digits_of(idx))] += a2;
  }

  auto build_post = [&](long long packed) {
    MeasurementOutcome out;
    out.probability = prob[packed];
    out.outcome.resize(region.size());
    long long rem = packed;
    for (int k = static_cast<int>(region.size()) - 1; k >= 0; --k) {
      out.outcome[k] = static_cast<int>(rem % q);
      rem /= q;
    }
    out.post_state = working;
    double inv_norm = 1.0 / std::sqrt(out.probability);
    for (long long idx = 0; idx < working.dim(); ++idx) {
      if (packed_of(digits_of(idx)) != packed)
        out.post_state.amps(idx) = 0.0;
      else
        out.post_state.amps(idx) *= inv_norm;
    }
    return out;
  };

  std::vector<MeasurementOutcome> results;
  if (mode == MeasureMode::kEnumerate) {
    double total = 0.0;
    for (long long p = 0; p < n_outcomes; ++p) {
      if (prob[p] < 1e-14) continue;
      results.push_back(build_post(p));
      total += prob[p];
    }
    if (std::abs(total - 1.0) > kDefaultTol)
      throw NumericsError("measure_region: outcome probabilities sum to " +
                          std::to_string(total));
  } else {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double r = unif(rng), acc = 0.0;
    long long chosen = n_outcomes - 1;
    for (long long p = 0; p < n_outcomes; ++p) {
      acc += prob[p];
      if (r <= acc) {
        chosen = p;
        break;
      }
    }
    results.push_back(build_post(chosen));
  }
  return results;
}

DenseState attach_reference(const DenseState& state, const Region& m) {
  validate_region(m, state.n_sites);
  const int q = state.q;
  const int nm = static_cast<int>(m.size());
  DenseState out(q, state.n_sites + nm);  // guard enforced by ctor

  std::vector<long long> stride(state.n_sites);
  for (int s = 0; s < state.n_sites; ++s)
    stride[s] = ipow(q, state.n_sites - 1 - s);

  // Input must be supported on x_M = 0 so that it factorizes as phi (x) |0>_M.
  for (long long idx = 0; idx < state.dim(); ++idx) {
    bool m_zero = true;
    for (int s : m)
      if ((idx / stride[s]) % q != 0) m_zero = false;
    if (!m_zero && std::abs(state.amps(idx)) > kDefaultTol)
      throw ConfigError(
          "attach_reference: state must be |0> on region M before attaching");
  }

  std::vector<long long> new_stride(out.n_sites);
  for (int s = 0; s < out.n_sites; ++s)
    new_stride[s] = ipow(q, out.n_sites - 1 - s);

  double amp_scale = 1.0 / std::sqrt(static_cast<double>(ipow(q, nm)));
  long long n_bell = ipow(q, nm);
  for (long long idx = 0; idx < state.dim(); ++idx) {
    Complex a = state.amps(idx);
    if (a == Complex(0, 0)) continue;
    // Expand site digits into the enlarged register.
    for (long long bell = 0; bell < n_bell; ++bell) {
      long long new_idx = 0;
      long long rem = bell;
      std::vector<int> j(nm);
      for (int k = nm - 1; k >= 0; --k) {
        j[k] = static_cast<int>(rem % q);
        rem /= q;
      }
      for (int s = 0; s < state.n_sites; ++s) {
        int digit = static_cast<int>((idx / stride[s]) % q);
        new_idx += digit * new_stride[s];
      }
      for (int k = 0; k < nm; ++k) {
        new_idx += j[k] * new_stride[m[k]];              // circuit-side M
        new_idx += j[k] * new_stride[state.n_sites + k]; // reference copy
      }
      out.amps(new_idx) += a * amp_scale;
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix kron_power(const Matrix& a, int t) {
  if (t < 1) throw ConfigError("kron_power: t >= 1 required");
  Matrix out = a;
  for (int k = 1; k < t; ++k) out = kron(out, a);
  return out;
}

}  // namespace qmagic
