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

#include "complementarity/oracle.hpp"

#include <cmath>
#include <sstream>

#include "complementarity/errors.hpp"

namespace complementarity::oracle {

using qcore::Complex;
using qcore::kron;

namespace {

const ComplexMatrix& id2() {
  static const ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  return m;
}

HermitianOperator hermitian(const ComplexMatrix& m) {
  return HermitianOperator(0.5 * (m + m.adjoint()), 1e-10);
}

// Layout: ancilla (x) qubit1 (x) qubit2.
HermitianOperator on_qubit1(const ComplexMatrix& op) {
  return hermitian(kron(id2(), kron(op, id2())));
}

HermitianOperator on_qubit2(const ComplexMatrix& op) {
  return hermitian(kron(id2(), kron(id2(), op)));
}

HermitianOperator on_ancilla_qubit1(const ComplexMatrix& op) { return hermitian(kron(op, id2())); }

ComplexMatrix ancilla_projector(int index) {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(index, index) = 1.0;
  return p;
}

void require_complete(const DilatedSystem& sys, const BinaryFamily& fam) {
  const ComplexMatrix sum = sys.get(fam.plus).matrix() + sys.get(fam.minus).matrix();
  const ComplexMatrix id = ComplexMatrix::Identity(sys.dim(), sys.dim());
  const double defect = (sum - id).cwiseAbs().maxCoeff();
  if (defect > 1e-12) {
    std::ostringstream os;
    os << "operator family {" << fam.plus << ", " << fam.minus
       << "} does not sum to the identity (defect " << defect << ")";
    throw DomainError(os.str());
  }
}

HermitianOperator weighted(const DilatedSystem& sys, const BinaryFamily& fam) {
  return fam.plus_value * sys.get(fam.plus) + fam.minus_value * sys.get(fam.minus);
}

}  // namespace

void DilatedSystem::add(std::string name, HermitianOperator op) {
  if (op.dim() != dim()) {
    std::ostringstream os;
    os << "operator '" << name << "' has dimension " << op.dim() << ", system has " << dim();
    throw DimensionError(os.str());
  }
  ops_.insert_or_assign(std::move(name), std::move(op));
}

const HermitianOperator& DilatedSystem::get(std::string_view name) const {
  const auto it = ops_.find(name);
  if (it == ops_.end()) {
    throw DomainError("operator '" + std::string(name) + "' is not registered");
  }
  return it->second;
}

bool DilatedSystem::contains(std::string_view name) const { return ops_.find(name) != ops_.end(); }

ComplexMatrix naimark_unitary(const HermitianOperator& e_plus, const HermitianOperator& e_minus) {
  if (e_plus.dim() != 2 || e_minus.dim() != 2) {
    throw DimensionError("naimark_unitary expects a qubit POVM");
  }
  ComplexMatrix v(4, 2);
  v.topRows(2) = qcore::psd_sqrt(e_plus).matrix();
  v.bottomRows(2) = qcore::psd_sqrt(e_minus).matrix();
  const double iso_defect =
      (v.adjoint() * v - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff();
  if (iso_defect > 1e-12) {
    throw DomainError("POVM elements do not sum to the identity");
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(v);
  const ComplexMatrix q = qr.householderQ();
  ComplexMatrix u(4, 4);
  u.leftCols(2) = v;
  u.rightCols(2) = q.rightCols(2);
  return u;
}

DilatedSystem epr_dilated_system(const DensityMatrix& rho, const EprOracleConfig& cfg) {
  if (rho.dim() != 4) throw DimensionError("epr_dilated_system expects a two-qubit state");
  using namespace std::complex_literals;
  ComplexMatrix x(2, 2), y(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -1i, 1i, 0;
  const ComplexMatrix x_plus = 0.5 * (id2() + x);
  const ComplexMatrix x_minus = 0.5 * (id2() - x);
  const ComplexMatrix y_plus = 0.5 * (id2() + y);
  const ComplexMatrix y_minus = 0.5 * (id2() - y);

  // Kraus operators of the slide, then Upsilon_y = sum_m M_m Y_y M_m.
  const ComplexMatrix m_r = std::sqrt(cfg.r_h) * x_plus + std::sqrt(cfg.r_v) * x_minus;
  const ComplexMatrix m_t =
      std::sqrt(1.0 - cfg.r_h) * x_plus + std::sqrt(1.0 - cfg.r_v) * x_minus;
  const ComplexMatrix ups_plus = m_r * y_plus * m_r + m_t * y_plus * m_t;
  const ComplexMatrix ups_minus = m_r * y_minus * m_r + m_t * y_minus * m_t;
  const ComplexMatrix u = naimark_unitary(hermitian(ups_plus), hermitian(ups_minus));

  ComplexMatrix anc0 = ancilla_projector(0);
  DilatedSystem sys(DensityMatrix(kron(anc0, rho.matrix())));

  const ComplexMatrix w = cfg.w.as_operator().matrix();
  const ComplexMatrix w_plus = 0.5 * (id2() + w);
  const ComplexMatrix w_minus = 0.5 * (id2() - w);

  sys.add("I", HermitianOperator::identity(8));
  sys.add("A", on_qubit1(x));
  sys.add("B", on_qubit1(y));
  sys.add("X+", on_qubit1(x_plus));
  sys.add("X-", on_qubit1(x_minus));
  sys.add("Y+", on_qubit1(y_plus));
  sys.add("Y-", on_qubit1(y_minus));
  sys.add("W", on_qubit2(w));
  sys.add("W+", on_qubit2(w_plus));
  sys.add("W-", on_qubit2(w_minus));
  sys.add("A_est", on_qubit2(cfg.f_plus * w_plus + cfg.f_minus * w_minus));

  const ComplexMatrix yest_plus = u.adjoint() * kron(ancilla_projector(0), id2()) * u;
  const ComplexMatrix yest_minus = u.adjoint() * kron(ancilla_projector(1), id2()) * u;
  sys.add("Yest+", on_ancilla_qubit1(yest_plus));
  sys.add("Yest-", on_ancilla_qubit1(yest_minus));
  sys.add("B_est", on_ancilla_qubit1(cfg.g_plus * yest_plus + cfg.g_minus * yest_minus));
  return sys;
}

double direct_inaccuracy(const DilatedSystem& sys, std::string_view target,
                         std::string_view estimator) {
  const HermitianOperator diff = sys.get(estimator) - sys.get(target);
  const double msq = qcore::expectation(diff.squared(), sys.state());
  return std::sqrt(std::max(0.0, msq));
}

estimate::QuasiDistribution direct_margenau_hill(const DilatedSystem& sys, const BinaryFamily& k,
                                                 const BinaryFamily& l) {
  require_complete(sys, k);
  require_complete(sys, l);
  estimate::QuasiDistribution q;
  for (int ko : {+1, -1}) {
    const ComplexMatrix& kk = sys.get(ko == 1 ? k.plus : k.minus).matrix();
    for (int lo : {+1, -1}) {
      const ComplexMatrix& ll = sys.get(lo == 1 ? l.plus : l.minus).matrix();
      const Complex v = qcore::trace_product(0.5 * (kk * ll + ll * kk), sys.state());
      q(ko, lo) = v.real();
    }
  }
  return q;
}

double mh_mean_square_deviation(const DilatedSystem& sys, const BinaryFamily& k,
                                const BinaryFamily& l) {
  const estimate::QuasiDistribution q = direct_margenau_hill(sys, k, l);
  double sum = 0.0;
  for (int ko : {+1, -1}) {
    const double kv = ko == 1 ? k.plus_value : k.minus_value;
    for (int lo : {+1, -1}) {
      const double lv = lo == 1 ? l.plus_value : l.minus_value;
      sum += (kv - lv) * (kv - lv) * q(ko, lo);
    }
  }
  return sum;
}

double direct_mean_square_deviation(const DilatedSystem& sys, const BinaryFamily& k,
                                    const BinaryFamily& l) {
  const HermitianOperator diff = weighted(sys, k) - weighted(sys, l);
  return qcore::expectation(diff.squared(), sys.state());
}

}  // namespace complementarity::oracle
