// Copyright 2026 The locclone Authors
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

/**
 * @file
 * Dense numerics for small multi-qubit registers: pure states, density
 * operators, partial trace / transpose, spectra and norms.
 *
 * Index convention: qubit 0 is the most significant bit of an amplitude
 * index. Two-register states (original + clone) concatenate the original
 * register first.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace locclone {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Eigenvalues above this count toward the support of an operator.
inline constexpr double kRankTol = 1e-10;
/// Hermiticity tolerance for operator construction.
inline constexpr double kHermitianTol = 1e-12;
/// Largest register handled by the dense routines.
inline constexpr int kMaxQubits = 12;

/// Raised for malformed inputs (bad lengths, bad qubit sets, bad weights).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class LocalGate;

/// Normalized pure state of n qubits.
class StateVector {
  public:
    /// Validates length and norm; renormalizes when within 1e-9 of unit norm.
    static StateVector from_amplitudes(const CVector &amplitudes);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(amps_.size());
    }
    [[nodiscard]] const CVector &amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t index) const {
        return amps_(static_cast<Eigen::Index>(index));
    }

  private:
    StateVector(int n_qubits, CVector amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    friend StateVector tensor(const StateVector &u, const StateVector &v);
    friend StateVector apply_circuit(const StateVector &state,
                                     std::span<const LocalGate> circuit);

    int n_qubits_;
    CVector amps_;
};

/// Hermitian, positive semidefinite, unit-trace operator on n qubits.
class DensityMatrix {
  public:
    /// Full validation: Hermitian, unit trace, smallest eigenvalue >= -1e-10.
    static DensityMatrix from_matrix(const CMatrix &entries);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(rho_.rows());
    }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return rho_; }

  private:
    DensityMatrix(int n_qubits, CMatrix rho)
        : n_qubits_(n_qubits), rho_(std::move(rho)) {}

    friend DensityMatrix density(const StateVector &state);
    friend DensityMatrix mix(std::span<const double> weights,
                             std::span<const DensityMatrix> dms);
    friend DensityMatrix partial_trace(const DensityMatrix &dm,
                                       std::span<const int> discard);

    int n_qubits_;
    CMatrix rho_;
};

/// Hermitian operator without trace or positivity requirements.
class HermitianOperator {
  public:
    explicit HermitianOperator(CMatrix entries);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(op_.rows());
    }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return op_; }

  private:
    CMatrix op_;
};

/// Split of n qubits into side A and a nonempty proper side B.
class Bipartition {
  public:
    Bipartition(int n_qubits, std::vector<int> side_b);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<int> &side_b() const noexcept {
        return side_b_;
    }
    [[nodiscard]] std::vector<int> side_a() const;
    [[nodiscard]] bool on_side_b(int qubit) const;

    /// e.g. "{1,2}|{3}" with 1-based labels, side A first.
    [[nodiscard]] std::string label() const;

    friend bool operator==(const Bipartition &, const Bipartition &) = default;

  private:
    int n_qubits_;
    std::vector<int> side_b_;  // sorted, 0-based
};

enum class CnotDirection { OriginalToClone, CloneToOriginal };

/// Gate that acts within one party's laboratory: either a single-qubit
/// unitary or the qubit-wise CNOT between original and clone registers.
class LocalGate {
  public:
    enum class Kind { SingleQubit, TransversalCnot };

    /// `target` indexes the full two-register state.
    static LocalGate single_qubit(int target, const Eigen::Matrix2cd &unitary,
                                  std::string name);
    static LocalGate transversal_cnot(CnotDirection direction);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] int target() const noexcept { return target_; }
    [[nodiscard]] const Eigen::Matrix2cd &unitary() const noexcept {
        return unitary_;
    }
    [[nodiscard]] CnotDirection direction() const noexcept { return dir_; }
    [[nodiscard]] const std::string &name() const noexcept { return name_; }

  private:
    LocalGate() = default;

    Kind kind_ = Kind::SingleQubit;
    int target_ = 0;
    Eigen::Matrix2cd unitary_ = Eigen::Matrix2cd::Identity();
    CnotDirection dir_ = CnotDirection::OriginalToClone;
    std::string name_;
};

// Common single-qubit matrices.
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd phase_gate(double angle);  // diag(1, e^{i angle})

StateVector make_pure(std::span<const Complex> amplitudes);
StateVector basis_state(int n_qubits, std::size_t index);
StateVector tensor(const StateVector &u, const StateVector &v);

/// Evolves a state on original+clone registers of equal size.
StateVector apply_circuit(const StateVector &state,
                          std::span<const LocalGate> circuit);

DensityMatrix density(const StateVector &state);
DensityMatrix mix(std::span<const double> weights,
                  std::span<const DensityMatrix> dms);
DensityMatrix partial_trace(const DensityMatrix &dm,
                            std::span<const int> discard);
HermitianOperator partial_transpose(const DensityMatrix &dm,
                                    const Bipartition &cut);
HermitianOperator partial_transpose(const HermitianOperator &op, int n_qubits,
                                    const Bipartition &cut);

/// Full real spectrum, descending.
std::vector<double> hermitian_spectrum(const HermitianOperator &op);
std::vector<double> hermitian_spectrum(const DensityMatrix &dm);
double trace_norm(const HermitianOperator &op);

/// Squared Schmidt coefficients across `cut`, descending; numerical zeros
/// (<= 1e-14) are dropped.
std::vector<double> schmidt_coefficients(const StateVector &state,
                                         const Bipartition &cut);

/// Dimension of the joint support of the operands: rank of their sum.
int support_span_dim(const DensityMatrix &a, const DensityMatrix &b,
                     double tol = kRankTol);
int support_span_dim(std::span<const DensityMatrix> dms, double tol = kRankTol);
int rank(const DensityMatrix &dm, double tol = kRankTol);

/// Largest entry magnitude of ab - ba.
double commutator_norm(const DensityMatrix &a, const DensityMatrix &b);

double fidelity_pure(const StateVector &u, const StateVector &v);

/// JSON array of [re, im] pairs.
std::string state_to_json(const StateVector &state);
StateVector state_from_json(std::string_view text);

}  // namespace locclone
