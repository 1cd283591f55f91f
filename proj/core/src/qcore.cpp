// Copyright 2026 The Complementarity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "complementarity/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "complementarity/errors.hpp"

namespace complementarity {

ToleranceProfile ToleranceProfile::named(std::string_view name) {
  if (name == "strict") return strict();
  if (name == "tomographic") return tomographic();
  throw DomainError("unknown tolerance profile '" + std::string(name) +
                    "' (expected strict or tomographic)");
}

namespace qcore {
namespace {

void require_square_supported(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || !is_supported_dim(m.rows())) {
    std::ostringstream os;
    os << "unsupported operator shape " << m.rows() << "x" << m.cols()
       << " (expected 2x2, 4x4 or 8x8)";
    throw DimensionError(os.str());
  }
}

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(os.str());
  }
}

}  // namespace

bool is_supported_dim(Eigen::Index dim) {
  return dim == 2 || dim == 4 || dim == 8;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m, double tol) {
  require_square_supported(m);
  const double defect = hermiticity_defect(m);
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << "operator is not Hermitian (max |A - A^dagger| = " << defect
       << ", tolerance " << tol << ")";
    throw ValidationError(os.str());
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim) {
  return HermitianOperator(ComplexMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
  return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::squared() const {
  ComplexMatrix sq = m_ * m_;
  return HermitianOperator(0.5 * (sq + sq.adjoint()), Unchecked{});
}

HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator sum");
  return HermitianOperator(a.m_ + b.m_, HermitianOperator::Unchecked{});
}

HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator difference");
  return HermitianOperator(a.m_ - b.m_, HermitianOperator::Unchecked{});
}

HermitianOperator operator*(double s, const HermitianOperator& a) {
  return HermitianOperator(s * a.m_, HermitianOperator::Unchecked{});
}

HermitianOperator operator-(const HermitianOperator& a) {
  return HermitianOperator(-a.m_, HermitianOperator::Unchecked{});
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m, const ToleranceProfile& tol) {
  require_square_supported(m);
  const double defect = hermiticity_defect(m);
  if (!(defect <= tol.hermiticity)) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (max |rho - rho^dagger| = " << defect
       << ", tolerance " << tol.hermiticity << ")";
    throw ValidationError(os.str());
  }
  m_ = 0.5 * (m + m.adjoint());
  const double tr = m_.trace().real();
  if (!(std::abs(tr - 1.0) <= tol.trace)) {
    std::ostringstream os;
    os << "density matrix trace " << tr << " deviates from 1 by more than "
       << tol.trace;
    throw ValidationError(os.str());
  }
  min_eigenvalue_ = hermitian_eigenvalues(m_).minCoeff();
  eigenvalue_floor_ = tol.min_eigenvalue;
  if (min_eigenvalue_ < tol.min_eigenvalue) {
    std::ostringstream os;
    os << "density matrix has eigenvalue " << min_eigenvalue_
       << " below the floor " << tol.min_eigenvalue;
    throw ValidationError(os.str());
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "state vector is not normalised (norm " << norm << ")";
    throw ValidationError(os.str());
  }
  return DensityMatrix(psi * psi.adjoint());
}

HermitianOperator BlochObservable::as_operator() const {
  const double st = std::sin(theta);
  return st * std::cos(phi) * pauli(Pauli::X) + st * std::sin(phi) * pauli(Pauli::Y) +
         std::cos(theta) * pauli(Pauli::Z);
}

HermitianOperator BlochObservable::projector(int outcome) const {
  return spectral_projector(as_operator(), outcome);
}

HermitianOperator pauli(Pauli which) {
  using namespace std::complex_literals;
  ComplexMatrix m(2, 2);
  switch (which) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      // Y|H> = i|V>, Y|V> = -i|H>.
      m << 0, -1i, 1i, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return HermitianOperator(m);
}

HermitianOperator spectral_projector(const HermitianOperator& g, int outcome) {
  if (outcome != 1 && outcome != -1) {
    throw DomainError("binary outcome must be +1 or -1, got " + std::to_string(outcome));
  }
  return 0.5 * (HermitianOperator::identity(g.dim()) + static_cast<double>(outcome) * g);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    std::ostringstream os;
    os << "tensor expects two single-qubit operators, got dims " << a.dim() << " and "
       << b.dim();
    throw DimensionError(os.str());
  }
  return HermitianOperator(kron(a.matrix(), b.matrix()));
}

Complex trace_product(const ComplexMatrix& op, const DensityMatrix& rho) {
  require_same_dim(op.rows(), rho.dim(), "trace_product");
  // Tr[rho A] = sum_ij rho_ij A_ji
  return (rho.matrix().cwiseProduct(op.transpose())).sum();
}

double expectation(const HermitianOperator& op, const DensityMatrix& rho) {
  const Complex v = trace_product(op.matrix(), rho);
  if (std::abs(v.imag()) >= 1e-10) {
    std::ostringstream os;
    os << "expectation has imaginary residue " << v.imag();
    throw NumericalError(os.str());
  }
  return v.real();
}

double spread(const HermitianOperator& op, const DensityMatrix& rho) {
  const double mean = expectation(op, rho);
  const double var = expectation(op.squared(), rho) - mean * mean;
  if (var < -1e-12) {
    std::ostringstream os;
    os << "negative variance " << var;
    throw NumericalError(os.str());
  }
  return std::sqrt(std::max(0.0, var));
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.rows(), b.rows(), "commutator");
  return a * b - b * a;
}

double commutator_bound(const HermitianOperator& a, const HermitianOperator& b,
                        const DensityMatrix& rho) {
  require_same_dim(a.dim(), b.dim(), "commutator_bound");
  return std::abs(trace_product(commutator(a.matrix(), b.matrix()), rho));
}

HermitianOperator sandwich(const HermitianOperator& outer,
                           const HermitianOperator& inner) {
  require_same_dim(outer.dim(), inner.dim(), "sandwich");
  const ComplexMatrix m = outer.matrix() * inner.matrix() * outer.matrix();
  return HermitianOperator(0.5 * (m + m.adjoint()));
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

HermitianOperator psd_sqrt(const HermitianOperator& op) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix());
  Eigen::VectorXd ev = solver.eigenvalues();
  if (ev.minCoeff() < -1e-12) {
    std::ostringstream os;
    os << "psd_sqrt of an operator with eigenvalue " << ev.minCoeff();
    throw DomainError(os.str());
  }
  ev = ev.cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix& v = solver.eigenvectors();
  const ComplexMatrix root = v * ev.cast<Complex>().asDiagonal() * v.adjoint();
  return HermitianOperator(0.5 * (root + root.adjoint()));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho.dim(), sigma.dim(), "fidelity");
  // Tomographic states may carry tiny negative eigenvalues; clip for the root.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> rs(rho.matrix());
  const Eigen::VectorXd r = rs.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix sqrt_rho =
      rs.eigenvectors() * r.cast<Complex>().asDiagonal() * rs.eigenvectors().adjoint();
  ComplexMatrix inner = sqrt_rho * sigma.matrix() * sqrt_rho;
  inner = 0.5 * (inner + inner.adjoint());
  const Eigen::VectorXd ev = hermitian_eigenvalues(inner).cwiseMax(0.0);
  const double root_trace = ev.cwiseSqrt().sum();
  return root_trace * root_trace;
}

}  // namespace qcore
}  // namespace complementarity
