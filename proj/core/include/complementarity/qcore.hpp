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

// Small dense linear algebra for one and two polarisation qubits (plus one
// ancilla qubit for dilations).
//
// Conventions:
//   * Computational basis {|H>, |V>} with Z|H> = +|H>, Z|V> = -|V>.
//   * Two-qubit operators are ordered qubit 1 (the estimated system) as the
//     left Kronecker factor: index = 2 * q1 + q2.
//   * Dimensions 2, 4 and 8 are supported; 8 only arises when a binary
//     POVM is dilated onto an ancilla.

#pragma once

#include <complex>
#include <numbers>
#include <Eigen/Dense>

#include "complementarity/tolerance.hpp"

namespace complementarity::qcore {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr double kDefaultEqualityTol = 1e-10;

constexpr double degrees_to_radians(double deg) {
  return deg * std::numbers::pi / 180.0;
}

bool is_supported_dim(Eigen::Index dim);

/// Max-abs entrywise comparison. Shapes must agree.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tol = kDefaultEqualityTol);

/// Largest absolute entry of a - a^dagger.
double hermiticity_defect(const ComplexMatrix& a);

class HermitianOperator {
 public:
  /// Throws ValidationError if `m` is not Hermitian within `tol`, and
  /// DimensionError for unsupported shapes. The stored matrix is the
  /// symmetrised part (m + m^dagger) / 2.
  explicit HermitianOperator(const ComplexMatrix& m, double tol = 1e-12);

  static HermitianOperator identity(Eigen::Index dim);
  static HermitianOperator zero(Eigen::Index dim);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  HermitianOperator squared() const;

  friend HermitianOperator operator+(const HermitianOperator& a,
                                     const HermitianOperator& b);
  friend HermitianOperator operator-(const HermitianOperator& a,
                                     const HermitianOperator& b);
  friend HermitianOperator operator*(double s, const HermitianOperator& a);
  friend HermitianOperator operator-(const HermitianOperator& a);

 private:
  struct Unchecked {};
  HermitianOperator(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity against `tol`.
  /// Eigenvalues between `tol.min_eigenvalue` and -1e-10 are accepted but
  /// raise `positivity_warning()`.
  explicit DensityMatrix(const ComplexMatrix& m,
                         const ToleranceProfile& tol = ToleranceProfile::strict());

  /// |psi><psi| for a normalised state vector.
  static DensityMatrix pure(const StateVector& psi);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  double min_eigenvalue() const { return min_eigenvalue_; }
  /// Eigenvalue floor the state was validated against.
  double eigenvalue_floor() const { return eigenvalue_floor_; }
  /// True when the state is only approximately positive (tomographic noise).
  bool positivity_warning() const { return min_eigenvalue_ < -1e-10; }

 private:
  ComplexMatrix m_;
  double min_eigenvalue_ = 0.0;
  double eigenvalue_floor_ = 0.0;
};

/// Binary qubit observable sin(t)cos(p) X + sin(t)sin(p) Y + cos(t) Z.
struct BlochObservable {
  double theta = 0.0;  // radians
  double phi = 0.0;    // radians

  static BlochObservable from_degrees(double theta_deg, double phi_deg) {
    return {degrees_to_radians(theta_deg), degrees_to_radians(phi_deg)};
  }

  HermitianOperator as_operator() const;
  /// Spectral projector (1 + outcome * W) / 2 for outcome = +1 or -1.
  HermitianOperator projector(int outcome) const;
};

enum class Pauli { I, X, Y, Z };

HermitianOperator pauli(Pauli which);

/// (1 + outcome * g) / 2 for an observable with spectrum {+1, -1}.
HermitianOperator spectral_projector(const HermitianOperator& g, int outcome);

/// Kronecker product of any two matrices (left factor is the slow index).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// a (x) b for two single-qubit operators. Throws DimensionError otherwise.
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

/// Tr[rho op] for an arbitrary (not necessarily Hermitian) matrix.
Complex trace_product(const ComplexMatrix& op, const DensityMatrix& rho);

/// Tr[rho op]. Throws NumericalError if the imaginary residue exceeds 1e-10.
double expectation(const HermitianOperator& op, const DensityMatrix& rho);

/// (<G^2> - <G>^2)^{1/2}. Variances down to -1e-12 are clamped to zero;
/// anything lower throws NumericalError.
double spread(const HermitianOperator& op, const DensityMatrix& rho);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// c = |<[a, b]>|.
double commutator_bound(const HermitianOperator& a, const HermitianOperator& b,
                        const DensityMatrix& rho);

/// R A R for Hermitian R and A.
HermitianOperator sandwich(const HermitianOperator& outer,
                           const HermitianOperator& inner);

/// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

/// Principal square root of a positive semidefinite operator. Eigenvalues
/// down to -1e-12 are treated as zero.
HermitianOperator psd_sqrt(const HermitianOperator& op);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2; equals
/// <psi|rho|psi> when sigma is pure.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace complementarity::qcore
