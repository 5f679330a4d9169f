// Copyright 2026 The qmagic authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmagic/clifford.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace qmagic {

FMatrix symplectic_gram(const PrimeField& field, int m) {
  FMatrix j(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    j.at(2 * i, 2 * i + 1) = 1;
    j.at(2 * i + 1, 2 * i) = field.neg(1);
  }
  return j;
}

bool is_symplectic(const PrimeField& field, const FMatrix& f) {
  if (f.rows != f.cols || f.rows % 2 != 0) return false;
  int m = f.rows / 2;
  // Check [F e_i, F e_j] = [e_i, e_j] for all basis pairs.
  for (int i = 0; i < 2 * m; ++i)
    for (int j = i + 1; j < 2 * m; ++j) {
      FVector ci(2 * m), cj(2 * m);
      for (int r = 0; r < 2 * m; ++r) {
        ci[r] = f.at(r, i);
        cj[r] = f.at(r, j);
      }
      int expect = 0;
      if (i / 2 == j / 2 && i % 2 == 0 && j % 2 == 1) expect = 1;
      if (symplectic_form(field, ci, cj) != expect) return false;
    }
  return true;
}

namespace {

// Row vector r with r . x = [a, x].
FVector bracket_row(const FVector& a, const PrimeField& f) {
  FVector r(a.size());
  for (size_t i = 0; i + 1 < a.size(); i += 2) {
    r[i] = f.neg(a[i + 1]);
    r[i + 1] = a[i];
  }
  return r;
}

FVector random_combination(const PrimeField& f, const FMatrix& basis,
                           std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> coeff(0, f.q() - 1);
  FVector v(basis.cols, 0);
  while (true) {
    bool all_zero = true;
    std::fill(v.begin(), v.end(), 0);
    for (int r = 0; r < basis.rows; ++r) {
      int c = coeff(rng);
      if (c != 0) all_zero = false;
      for (int j = 0; j < basis.cols; ++j)
        v[j] = f.reduce(v[j] + static_cast<long long>(c) * basis.at(r, j));
    }
    if (!nonzero || !all_zero) return v;
    if (basis.rows == 0)
      throw NumericsError("random_combination: empty basis but nonzero needed");
  }
}

}  // namespace

SymplecticMatrix random_symplectic(const PrimeField& field, int m,
                                   std::mt19937_64& rng) {
  std::vector<FVector> us, vs;
  const int dim = 2 * m;
  for (int k = 0; k < m; ++k) {
    // Constraints: orthogonal (symplectically) to all chosen pairs.
    FMatrix cons(2 * k, dim);
    for (int j = 0; j < k; ++j) {
      FVector ru = bracket_row(us[j], field);
      FVector rv = bracket_row(vs[j], field);
      for (int c = 0; c < dim; ++c) {
        cons.at(2 * j, c) = ru[c];
        cons.at(2 * j + 1, c) = rv[c];
      }
    }
    FMatrix comp = nullspace_basis(field, cons);
    FVector u = random_combination(field, comp, rng, /*nonzero=*/true);

    // v: same orthogonality plus [u, v] = 1.
    FMatrix acons(2 * k + 1, dim);
    for (int r = 0; r < 2 * k; ++r)
      for (int c = 0; c < dim; ++c) acons.at(r, c) = cons.at(r, c);
    FVector ru = bracket_row(u, field);
    for (int c = 0; c < dim; ++c) acons.at(2 * k, c) = ru[c];
    FVector rhs(2 * k + 1, 0);
    rhs[2 * k] = 1;
    FVector particular = solve_linear(field, acons, rhs);
    FMatrix hom = nullspace_basis(field, acons);
    FVector shift = random_combination(field, hom, rng, /*nonzero=*/false);
    FVector v(dim);
    for (int c = 0; c < dim; ++c) v[c] = field.add(particular[c], shift[c]);

    us.push_back(std::move(u));
    vs.push_back(std::move(v));
  }

  SymplecticMatrix s;
  s.f = FMatrix(dim, dim);
  for (int k = 0; k < m; ++k)
    for (int r = 0; r < dim; ++r) {
      s.f.at(r, 2 * k) = us[k][r];
      s.f.at(r, 2 * k + 1) = vs[k][r];
    }
  if (!is_symplectic(field, s.f))
    throw NumericsError("random_symplectic: constructed matrix not symplectic");
  return s;
}

Matrix symplectic_to_unitary(const PrimeField& field, const SymplecticMatrix& f,
                             const PhasePoint& shift) {
  const int q = field.q();
  const int m = f.n_qudits();
  const long long d = ipow(q, m);
  if (d > 2048) throw GuardError("symplectic_to_unitary: q^m exceeds guard");
  if (!is_symplectic(field, f.f))
    throw ConfigError("symplectic_to_unitary: matrix is not symplectic");

  auto image_of = [&](const FVector& u) {
    return mat_vec(field, f.f, u);
  };
  auto displacement_of_vector = [&](const FVector& w) {
    PhasePoint pp{w};
    return displacement_op(field, pp);
  };

  // Projector onto the joint +1 eigenspace of {T_{F(c,0)}}: the image of the
  // Z-type stabilizer group of |0...0>.
  Matrix proj = Matrix::Zero(d, d);
  long long n_elems = ipow(q, m);
  for (long long e = 0; e < n_elems; ++e) {
    FVector u(2 * m, 0);
    long long rem = e;
    for (int k = m - 1; k >= 0; --k) {
      u[2 * k] = static_cast<int>(rem % q);  // Z component of site k
      rem /= q;
    }
    proj += displacement_of_vector(image_of(u));
  }
  proj /= static_cast<double>(n_elems);

  // phi_0: any nonzero column of the rank-1 projector.
  int best_col = 0;
  double best_norm = 0.0;
  for (int c = 0; c < d; ++c) {
    double n = proj.col(c).norm();
    if (n > best_norm) {
      best_norm = n;
      best_col = c;
    }
  }
  if (best_norm < 1e-9)
    throw NumericsError("symplectic_to_unitary: stabilizer projector vanished");
  Vector phi0 = proj.col(best_col) / best_norm;

  // phi_j = T_{F(0,j)} phi_0; exact intertwiner columns.
  Matrix u_f(d, d);
  for (long long j = 0; j < d; ++j) {
    FVector x_vec(2 * m, 0);
    long long rem = j;
    for (int k = m - 1; k >= 0; --k) {
      x_vec[2 * k + 1] = static_cast<int>(rem % q);  // X component of site k
      rem /= q;
    }
    u_f.col(j) = displacement_of_vector(image_of(x_vec)) * phi0;
  }

  Matrix u = displacement_op(field, shift) * u_f;
  if ((u.adjoint() * u - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-9)
    throw NumericsError("symplectic_to_unitary: intertwiner not unitary");
  return u;
}

const Matrix& CliffordElement::unitary(const PrimeField& field) const {
  if (!cached_) cached_ = symplectic_to_unitary(field, f, pauli_shift);
  return *cached_;
}

CliffordElement random_clifford(const PrimeField& field, int m,
                                std::mt19937_64& rng) {
  CliffordElement c;
  c.f = random_symplectic(field, m, rng);
  std::uniform_int_distribution<int> digit(0, field.q() - 1);
  c.pauli_shift.u.assign(2 * m, 0);
  for (int i = 0; i < 2 * m; ++i) c.pauli_shift.u[i] = digit(rng);
  return c;
}

std::vector<SymplecticMatrix> enumerate_sp2(const PrimeField& field) {
  const int q = field.q();
  if (q > 11) throw GuardError("enumerate_sp2: q exceeds guard");
  std::vector<SymplecticMatrix> out;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          if (field.sub(field.mul(a, d), field.mul(b, c)) != 1) continue;
          SymplecticMatrix s;
          s.f = FMatrix(2, 2);
          s.f.at(0, 0) = a;
          s.f.at(0, 1) = b;
          s.f.at(1, 0) = c;
          s.f.at(1, 1) = d;
          out.push_back(std::move(s));
        }
  return out;
}

std::vector<Vector> stabilizer_orbit(const PrimeField& field) {
  const int q = field.q();
  if (q > 7) throw GuardError("stabilizer_orbit: q exceeds guard");
  auto key_of = [&](const Vector& v) {
    // Normalize global phase against the first sizable component.
    int ref = 0;
    for (int i = 0; i < v.size(); ++i)
      if (std::abs(v(i)) > std::abs(v(ref))) ref = i;
    Complex phase = v(ref) / std::abs(v(ref));
    std::ostringstream os;
    for (int i = 0; i < v.size(); ++i) {
      Complex z = v(i) / phase;
      os << llround(z.real() * 1e6) << "," << llround(z.imag() * 1e6) << ";";
    }
    return os.str();
  };

  std::map<std::string, Vector> states;
  PhasePoint no_shift{{0, 0}};
  for (const auto& f : enumerate_sp2(field)) {
    Matrix u = symplectic_to_unitary(field, f, no_shift);
    Vector base = u.col(0);
    for (int m = 0; m < q; ++m)
      for (int n = 0; n < q; ++n) {
        Vector v = displacement_op(field, m, n) * base;
        states.emplace(key_of(v), v);
      }
  }
  std::vector<Vector> out;
  out.reserve(states.size());
  for (auto& [k, v] : states) out.push_back(std::move(v));
  return out;
}

}  // namespace qmagic
