// Copyright 2026 The qmagic authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmagic/phasespace.hpp"

#include <cmath>
#include <numbers>

namespace qmagic {

RootTable::RootTable(int q) : q_(q), powers_(q) {
  for (int k = 0; k < q; ++k) {
    double theta = 2.0 * std::numbers::pi * k / q;
    powers_[k] = Complex(std::cos(theta), std::sin(theta));
  }
}

Matrix displacement_op(const PrimeField& f, int m, int n) {
  const int q = f.q();
  RootTable w(q);
  m = f.reduce(m);
  n = f.reduce(n);
  Matrix t = Matrix::Zero(q, q);
  int half_mn = f.mul(f.inv2(), f.mul(m, n));
  for (int b = 0; b < q; ++b) {
    int a = f.add(b, n);
    // w^{-2^{-1} m n} Z^m X^n acting on |b>.
    t(a, b) = w.power(f.sub(f.mul(m, a), half_mn));
  }
  return t;
}

Matrix displacement_op(const PrimeField& f, const PhasePoint& pp) {
  if (pp.u.size() % 2 != 0 || pp.u.empty())
    throw ConfigError("displacement_op: phase point must have even length");
  Matrix t = displacement_op(f, pp.u[0], pp.u[1]);
  for (int i = 1; i < pp.n_qudits(); ++i)
    t = kron(t, displacement_op(f, pp.u[2 * i], pp.u[2 * i + 1]));
  return t;
}

Matrix phase_point_op(const PrimeField& f, const PhasePoint& pp) {
  const int q = f.q();
  RootTable w(q);
  auto single = [&](int m, int n) {
    Matrix a = Matrix::Zero(q, q);
    for (int b = 0; b < q; ++b) {
      int row = f.sub(f.mul(2, n), b);
      a(row, b) = w.power(f.mul(m, f.sub(row, b)));
    }
    return a;
  };
  Matrix out = single(pp.u[0], pp.u[1]);
  for (int i = 1; i < pp.n_qudits(); ++i)
    out = kron(out, single(pp.u[2 * i], pp.u[2 * i + 1]));
  return out;
}

void validate_density(const Matrix& rho, double tol) {
  if (rho.rows() != rho.cols())
    throw ConfigError("density matrix must be square");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw ConfigError("density matrix is not Hermitian within tolerance");
  if (std::abs(rho.trace() - Complex(1, 0)) > tol)
    throw ConfigError("density matrix trace differs from 1");
}

namespace {

// Tr[A_u rho] = sum_b phase(b) rho(b, p(b)) where per qudit
// p(b_i) = 2 n_i - b_i and phase_i(b_i) = w^{2 m_i (n_i - b_i)}.
Complex trace_phase_point(const PrimeField& f, const RootTable& w,
                          const Matrix& rho, const FVector& u) {
  const int q = f.q();
  const int nq = static_cast<int>(u.size()) / 2;
  const long long d = rho.rows();
  // Per-site lookup of (mapped digit, phase exponent).
  std::vector<std::vector<int>> mapped(nq, std::vector<int>(q));
  std::vector<std::vector<int>> phase_exp(nq, std::vector<int>(q));
  for (int i = 0; i < nq; ++i) {
    int m = u[2 * i], n = u[2 * i + 1];
    for (int b = 0; b < q; ++b) {
      mapped[i][b] = f.sub(f.mul(2, n), b);
      phase_exp[i][b] = f.mul(2, f.mul(m, f.sub(n, b)));
    }
  }
  Complex tr(0, 0);
  for (long long b = 0; b < d; ++b) {
    long long p = 0;
    int e = 0;
    long long rem = b;
    for (int i = nq - 1; i >= 0; --i) {
      int digit = static_cast<int>(rem % q);
      rem /= q;
      long long site_stride = 1;
      for (int k = i + 1; k < nq; ++k) site_stride *= q;
      p += mapped[i][digit] * site_stride;
      e = f.add(e, phase_exp[i][digit]);
    }
    tr += w.power(e) * rho(b, p);
  }
  return tr;
}

double wigner_point_checked(const PrimeField& f, const RootTable& w,
                            const Matrix& rho, const FVector& u, int n_qudits,
                            double tol) {
  Complex tr = trace_phase_point(f, w, rho, u);
  double scale = 1.0 / static_cast<double>(ipow(f.q(), n_qudits));
  if (std::abs(tr.imag()) * scale > tol)
    throw NumericsError("wigner_function: imaginary residue " +
                        std::to_string(tr.imag() * scale));
  return tr.real() * scale;
}

}  // namespace

double wigner_function(const PrimeField& f, const Matrix& rho,
                       const PhasePoint& pp, double tol) {
  validate_density(rho, tol);
  const int nq = pp.n_qudits();
  if (rho.rows() != ipow(f.q(), nq))
    throw ConfigError("wigner_function: dimension mismatch with phase point");
  RootTable w(f.q());
  return wigner_point_checked(f, w, rho, pp.u, nq, tol);
}

PhasePoint phase_point_from_index(const PrimeField& f, int n_qudits,
                                  long long index) {
  PhasePoint pp;
  pp.u.assign(2 * n_qudits, 0);
  for (int k = 2 * n_qudits - 1; k >= 0; --k) {
    pp.u[k] = static_cast<int>(index % f.q());
    index /= f.q();
  }
  return pp;
}

long long phase_point_to_index(const PrimeField& f, const PhasePoint& pp) {
  long long idx = 0;
  for (int v : pp.u) idx = idx * f.q() + v;
  return idx;
}

std::vector<double> wigner_table_serial(const PrimeField& f, const Matrix& rho,
                                        int n_qudits, double tol) {
  validate_density(rho, tol);
  RootTable w(f.q());
  long long n_points = ipow(f.q(), 2 * n_qudits);
  std::vector<double> table(n_points);
  for (long long i = 0; i < n_points; ++i) {
    PhasePoint pp = phase_point_from_index(f, n_qudits, i);
    table[i] = wigner_point_checked(f, w, rho, pp.u, n_qudits, tol);
  }
  return table;
}

std::vector<double> wigner_table(const PrimeField& f, const Matrix& rho,
                                 int n_qudits, double tol) {
  validate_density(rho, tol);
  RootTable w(f.q());
  long long n_points = ipow(f.q(), 2 * n_qudits);
  std::vector<double> table(n_points);
  bool failed = false;
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n_points; ++i) {
    PhasePoint pp = phase_point_from_index(f, n_qudits, i);
    try {
      table[i] = wigner_point_checked(f, w, rho, pp.u, n_qudits, tol);
    } catch (const NumericsError&) {
      failed = true;
    }
  }
  if (failed)
    throw NumericsError("wigner_table: imaginary residue above tolerance");
  return table;
}

MagicMeasures magic_measures_from_table(const std::vector<double>& table) {
  MagicMeasures m;
  for (double v : table) m.one_norm += std::abs(v);
  m.sum_negativity = 0.5 * (m.one_norm - 1.0);
  m.mana = std::log(m.one_norm);
  return m;
}

MagicMeasures magic_measures(const PrimeField& f, const Matrix& rho,
                             int n_qudits, double tol) {
  return magic_measures_from_table(wigner_table(f, rho, n_qudits, tol));
}

Complex weyl_function(const PrimeField& f, const Matrix& rho,
                      const PhasePoint& pp) {
  const int q = f.q();
  RootTable w(q);
  const int nq = pp.n_qudits();
  const long long d = rho.rows();
  if (d != ipow(q, nq))
    throw ConfigError("weyl_function: dimension mismatch");
  // T_(m,n)[b+n][b] = w^{m b + 2^{-1} m n}; trace against rho picks
  // rho(b, b+n) per digit pattern.
  std::vector<std::vector<int>> mapped(nq, std::vector<int>(q));
  std::vector<std::vector<int>> phase_exp(nq, std::vector<int>(q));
  for (int i = 0; i < nq; ++i) {
    int m = pp.u[2 * i], n = pp.u[2 * i + 1];
    int half_mn = f.mul(f.inv2(), f.mul(m, n));
    for (int b = 0; b < q; ++b) {
      mapped[i][b] = f.add(b, n);
      phase_exp[i][b] = f.add(f.mul(m, f.add(b, n)), f.neg(half_mn));
    }
  }
  Complex tr(0, 0);
  for (long long b = 0; b < d; ++b) {
    long long p = 0;
    int e = 0;
    long long rem = b;
    for (int i = nq - 1; i >= 0; --i) {
      int digit = static_cast<int>(rem % q);
      rem /= q;
      long long site_stride = 1;
      for (int k = i + 1; k < nq; ++k) site_stride *= q;
      p += mapped[i][digit] * site_stride;
      e = f.add(e, phase_exp[i][digit]);
    }
    tr += w.power(e) * rho(b, p);
  }
  return tr;
}

double sre_m2(const PrimeField& f, const Matrix& rho, int n_qudits) {
  long long n_points = ipow(f.q(), 2 * n_qudits);
  double s4 = 0.0;
  for (long long i = 0; i < n_points; ++i) {
    PhasePoint pp = phase_point_from_index(f, n_qudits, i);
    double a = std::abs(weyl_function(f, rho, pp));
    s4 += a * a * a * a;
  }
  double purity = (rho * rho).trace().real();
  double denom = static_cast<double>(ipow(f.q(), n_qudits)) * purity;
  return -std::log(s4 / denom);
}

double wigner_moment(const std::vector<double>& table, int n) {
  double s = 0.0;
  for (double v : table) s += std::pow(std::abs(v), 2 * n);
  return s;
}

Matrix moment_operator(const PrimeField& f, MomentKind kind, int n) {
  const int q = f.q();
  long long dim = ipow(q, 2 * n);
  if (dim > 4000)
    throw GuardError("moment_operator: q^{2n} exceeds 4000-row guard");
  Matrix acc = Matrix::Zero(dim, dim);
  for (int m = 0; m < q; ++m)
    for (int nn = 0; nn < q; ++nn) {
      PhasePoint pp{{m, nn}};
      if (kind == MomentKind::kPhasePoint) {
        Matrix a = phase_point_op(f, pp);
        Matrix term = a;
        for (int k = 1; k < 2 * n; ++k) term = kron(term, a);
        acc += term;
      } else {
        Matrix t = displacement_op(f, m, nn);
        Matrix td = t.adjoint();
        Matrix term = t;
        for (int k = 1; k < n; ++k) term = kron(term, t);
        for (int k = 0; k < n; ++k) term = kron(term, td);
        acc += term;
      }
    }
  return acc;
}

}  // namespace qmagic
