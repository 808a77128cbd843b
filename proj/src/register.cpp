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

#include "locclone/register.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace locclone {

namespace {

constexpr double kNormTol = 1e-9;
constexpr double kSchmidtZero = 1e-14;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    int bits = 0;
    while ((std::size_t{1} << bits) < n) {
        ++bits;
    }
    return bits;
}

// Bit of `index` holding qubit `q` in an n-qubit register.
std::size_t qubit_mask(int n_qubits, int q) {
    return std::size_t{1} << (n_qubits - 1 - q);
}

double max_hermitian_defect(const CMatrix &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_square(const CMatrix &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw InvalidArgument(fmt::format("{}: matrix must be square and nonempty", what));
    }
}

// Places the bits of `value` (MSB first) at the given qubit positions.
std::size_t scatter_bits(std::size_t value, std::span<const int> qubits,
                         int n_qubits) {
    std::size_t out = 0;
    const auto k = static_cast<int>(qubits.size());
    for (int t = 0; t < k; ++t) {
        if ((value >> (k - 1 - t)) & 1U) {
            out |= qubit_mask(n_qubits, qubits[static_cast<std::size_t>(t)]);
        }
    }
    return out;
}

std::vector<int> validated_subset(int n_qubits, std::span<const int> qubits,
                                  const char *what) {
    std::vector<int> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidArgument(fmt::format("{}: repeated qubit index", what));
    }
    for (int q : sorted) {
        if (q < 0 || q >= n_qubits) {
            throw InvalidArgument(
                fmt::format("{}: qubit {} out of range for {} qubits", what, q, n_qubits));
        }
    }
    if (sorted.empty() || static_cast<int>(sorted.size()) == n_qubits) {
        throw InvalidArgument(
            fmt::format("{}: qubit set must be a nonempty proper subset", what));
    }
    return sorted;
}

std::vector<int> complement(int n_qubits, std::span<const int> sorted_subset) {
    std::vector<int> rest;
    for (int q = 0; q < n_qubits; ++q) {
        if (!std::binary_search(sorted_subset.begin(), sorted_subset.end(), q)) {
            rest.push_back(q);
        }
    }
    return rest;
}

CMatrix transpose_side_b(const CMatrix &m, int n_qubits, const Bipartition &cut) {
    if (cut.n_qubits() != n_qubits) {
        throw InvalidArgument("partial_transpose: cut does not match register size");
    }
    std::size_t mask = 0;
    for (int q : cut.side_b()) {
        mask |= qubit_mask(n_qubits, q);
    }
    const auto dim = static_cast<std::size_t>(m.rows());
    CMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const std::size_t r2 = (r & ~mask) | (c & mask);
            const std::size_t c2 = (c & ~mask) | (r & mask);
            out(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2)) =
                m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

std::vector<double> descending_eigenvalues(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver failed to converge");
    }
    const auto &ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

StateVector StateVector::from_amplitudes(const CVector &amplitudes) {
    const auto len = static_cast<std::size_t>(amplitudes.size());
    if (!is_power_of_two(len) || len < 2) {
        throw InvalidArgument(
            fmt::format("state length {} is not a power of two >= 2", len));
    }
    const int n = log2_exact(len);
    if (n > kMaxQubits) {
        throw InvalidArgument(fmt::format("{} qubits exceeds the dense limit", n));
    }
    const double norm = amplitudes.norm();
    if (norm == 0.0) {
        throw InvalidArgument("zero vector is not a state");
    }
    if (std::abs(norm - 1.0) > kNormTol) {
        throw InvalidArgument(fmt::format("state norm {} is not 1", norm));
    }
    return StateVector(n, amplitudes / norm);
}

DensityMatrix DensityMatrix::from_matrix(const CMatrix &entries) {
    require_square(entries, "density matrix");
    const auto dim = static_cast<std::size_t>(entries.rows());
    if (!is_power_of_two(dim) || dim < 2) {
        throw InvalidArgument("density matrix dimension is not a power of two");
    }
    if (max_hermitian_defect(entries) > kHermitianTol) {
        throw InvalidArgument("density matrix is not Hermitian");
    }
    if (std::abs(entries.trace() - Complex(1.0)) > kHermitianTol) {
        throw InvalidArgument("density matrix trace is not 1");
    }
    const auto spectrum = descending_eigenvalues(entries);
    if (spectrum.back() < -kRankTol) {
        throw InvalidArgument("density matrix is not positive semidefinite");
    }
    return DensityMatrix(log2_exact(dim), entries);
}

HermitianOperator::HermitianOperator(CMatrix entries) : op_(std::move(entries)) {
    require_square(op_, "hermitian operator");
    if (max_hermitian_defect(op_) > kHermitianTol) {
        throw InvalidArgument("operator is not Hermitian");
    }
}

Bipartition::Bipartition(int n_qubits, std::vector<int> side_b)
    : n_qubits_(n_qubits) {
    if (n_qubits < 2) {
        throw InvalidArgument("a bipartition needs at least two qubits");
    }
    side_b_ = validated_subset(n_qubits, side_b, "bipartition");
}

std::vector<int> Bipartition::side_a() const { return complement(n_qubits_, side_b_); }

bool Bipartition::on_side_b(int qubit) const {
    return std::binary_search(side_b_.begin(), side_b_.end(), qubit);
}

std::string Bipartition::label() const {
    auto one_based = [](const std::vector<int> &qs) {
        std::vector<int> out;
        out.reserve(qs.size());
        for (int q : qs) {
            out.push_back(q + 1);
        }
        return out;
    };
    return fmt::format("{{{}}}|{{{}}}", fmt::join(one_based(side_a()), ","),
                       fmt::join(one_based(side_b_), ","));
}

LocalGate LocalGate::single_qubit(int target, const Eigen::Matrix2cd &unitary,
                                  std::string name) {
    if (target < 0) {
        throw InvalidArgument("gate target must be nonnegative");
    }
    const double defect =
        (unitary.adjoint() * unitary - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    if (defect > kHermitianTol) {
        throw InvalidArgument(fmt::format("gate {} is not unitary", name));
    }
    LocalGate g;
    g.kind_ = Kind::SingleQubit;
    g.target_ = target;
    g.unitary_ = unitary;
    g.name_ = std::move(name);
    return g;
}

LocalGate LocalGate::transversal_cnot(CnotDirection direction) {
    LocalGate g;
    g.kind_ = Kind::TransversalCnot;
    g.dir_ = direction;
    g.name_ = "CNOT";
    return g;
}

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

Eigen::Matrix2cd phase_gate(double angle) {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, std::polar(1.0, angle);
    return m;
}

StateVector make_pure(std::span<const Complex> amplitudes) {
    CVector v(static_cast<Eigen::Index>(amplitudes.size()));
    std::copy(amplitudes.begin(), amplitudes.end(), v.data());
    return StateVector::from_amplitudes(v);
}

StateVector basis_state(int n_qubits, std::size_t index) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw InvalidArgument("basis_state: bad qubit count");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) {
        throw InvalidArgument("basis_state: index out of range");
    }
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector::from_amplitudes(v);
}

StateVector tensor(const StateVector &u, const StateVector &v) {
    if (u.n_qubits() + v.n_qubits() > kMaxQubits) {
        throw InvalidArgument("tensor: result exceeds the dense limit");
    }
    const auto du = u.amps_.size();
    const auto dv = v.amps_.size();
    CVector out(du * dv);
    for (Eigen::Index x = 0; x < du; ++x) {
        out.segment(x * dv, dv) = u.amps_(x) * v.amps_;
    }
    return StateVector(u.n_qubits() + v.n_qubits(), std::move(out));
}

StateVector apply_circuit(const StateVector &state,
                          std::span<const LocalGate> circuit) {
    const int n = state.n_qubits();
    CVector amps = state.amplitudes();
    const auto dim = static_cast<std::size_t>(amps.size());
    for (const auto &gate : circuit) {
        if (gate.kind() == LocalGate::Kind::SingleQubit) {
            if (gate.target() >= n) {
                throw InvalidArgument(fmt::format(
                    "gate target {} out of range for {} qubits", gate.target(), n));
            }
            const std::size_t mask = qubit_mask(n, gate.target());
            const auto &u = gate.unitary();
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & mask) {
                    continue;
                }
                const auto i0 = static_cast<Eigen::Index>(i);
                const auto i1 = static_cast<Eigen::Index>(i | mask);
                const Complex a0 = amps(i0);
                const Complex a1 = amps(i1);
                amps(i0) = u(0, 0) * a0 + u(0, 1) * a1;
                amps(i1) = u(1, 0) * a0 + u(1, 1) * a1;
            }
            continue;
        }
        if (n % 2 != 0) {
            throw InvalidArgument("transversal CNOT needs two registers of equal size");
        }
        const int m = n / 2;
        for (int q = 0; q < m; ++q) {
            const bool forward = gate.direction() == CnotDirection::OriginalToClone;
            const std::size_t ctrl = qubit_mask(n, forward ? q : q + m);
            const std::size_t targ = qubit_mask(n, forward ? q + m : q);
            for (std::size_t i = 0; i < dim; ++i) {
                // swap each pair once, from its target-bit-clear member
                if ((i & ctrl) && !(i & targ)) {
                    std::swap(amps(static_cast<Eigen::Index>(i)),
                              amps(static_cast<Eigen::Index>(i | targ)));
                }
            }
        }
    }
    return StateVector(n, std::move(amps));
}

DensityMatrix density(const StateVector &state) {
    const auto &v = state.amplitudes();
    return DensityMatrix(state.n_qubits(), v * v.adjoint());
}

DensityMatrix mix(std::span<const double> weights,
                  std::span<const DensityMatrix> dms) {
    if (weights.size() != dms.size() || dms.empty()) {
        throw InvalidArgument("mix: need one weight per operand");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw InvalidArgument("mix: weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvalidArgument("mix: weights must sum to 1");
    }
    const auto dim = dms.front().rho_.rows();
    CMatrix acc = CMatrix::Zero(dim, dim);
    for (std::size_t t = 0; t < dms.size(); ++t) {
        if (dms[t].rho_.rows() != dim) {
            throw InvalidArgument("mix: dimension mismatch");
        }
        acc += weights[t] * dms[t].rho_;
    }
    return DensityMatrix(dms.front().n_qubits(), std::move(acc));
}

DensityMatrix partial_trace(const DensityMatrix &dm, std::span<const int> discard) {
    const int n = dm.n_qubits();
    const auto gone = validated_subset(n, discard, "partial_trace");
    const auto keep = complement(n, gone);
    const std::size_t dk = std::size_t{1} << keep.size();
    const std::size_t dg = std::size_t{1} << gone.size();

    std::vector<std::size_t> keep_idx(dk);
    std::vector<std::size_t> gone_idx(dg);
    for (std::size_t t = 0; t < dk; ++t) {
        keep_idx[t] = scatter_bits(t, keep, n);
    }
    for (std::size_t t = 0; t < dg; ++t) {
        gone_idx[t] = scatter_bits(t, gone, n);
    }

    const auto &rho = dm.rho_;
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::size_t r = 0; r < dk; ++r) {
        for (std::size_t c = 0; c < dk; ++c) {
            Complex sum = 0.0;
            for (std::size_t g : gone_idx) {
                sum += rho(static_cast<Eigen::Index>(keep_idx[r] | g),
                           static_cast<Eigen::Index>(keep_idx[c] | g));
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = sum;
        }
    }
    return DensityMatrix(static_cast<int>(keep.size()), std::move(out));
}

HermitianOperator partial_transpose(const DensityMatrix &dm, const Bipartition &cut) {
    return HermitianOperator(transpose_side_b(dm.matrix(), dm.n_qubits(), cut));
}

HermitianOperator partial_transpose(const HermitianOperator &op, int n_qubits,
                                    const Bipartition &cut) {
    if (op.dim() != (std::size_t{1} << n_qubits)) {
        throw InvalidArgument("partial_transpose: operator size does not match qubit count");
    }
    return HermitianOperator(transpose_side_b(op.matrix(), n_qubits, cut));
}

std::vector<double> hermitian_spectrum(const HermitianOperator &op) {
    return descending_eigenvalues(op.matrix());
}

std::vector<double> hermitian_spectrum(const DensityMatrix &dm) {
    return descending_eigenvalues(dm.matrix());
}

double trace_norm(const HermitianOperator &op) {
    const auto spectrum = hermitian_spectrum(op);
    return std::accumulate(spectrum.begin(), spectrum.end(), 0.0,
                           [](double acc, double x) { return acc + std::abs(x); });
}

std::vector<double> schmidt_coefficients(const StateVector &state,
                                         const Bipartition &cut) {
    const int n = state.n_qubits();
    if (cut.n_qubits() != n) {
        throw InvalidArgument("schmidt_coefficients: cut does not match register size");
    }
    const auto side_a = cut.side_a();
    const auto &side_b = cut.side_b();
    const std::size_t da = std::size_t{1} << side_a.size();
    const std::size_t db = std::size_t{1} << side_b.size();

    CMatrix psi(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(db));
    for (std::size_t a = 0; a < da; ++a) {
        const std::size_t ia = scatter_bits(a, side_a, n);
        for (std::size_t b = 0; b < db; ++b) {
            psi(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                state[ia | scatter_bits(b, side_b, n)];
        }
    }
    Eigen::JacobiSVD<CMatrix> svd(psi);
    std::vector<double> out;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
        const double s = svd.singularValues()(k);
        if (s * s > kSchmidtZero) {
            out.push_back(s * s);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

int rank(const DensityMatrix &dm, double tol) {
    const auto spectrum = hermitian_spectrum(dm);
    return static_cast<int>(
        std::count_if(spectrum.begin(), spectrum.end(), [tol](double x) { return x > tol; }));
}

int support_span_dim(std::span<const DensityMatrix> dms, double tol) {
    if (dms.empty()) {
        return 0;
    }
    const auto dim = dms.front().matrix().rows();
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (const auto &d : dms) {
        if (d.matrix().rows() != dim) {
            throw InvalidArgument("support_span_dim: dimension mismatch");
        }
        sum += d.matrix();
    }
    const auto spectrum = descending_eigenvalues(sum);
    return static_cast<int>(
        std::count_if(spectrum.begin(), spectrum.end(), [tol](double x) { return x > tol; }));
}

int support_span_dim(const DensityMatrix &a, const DensityMatrix &b, double tol) {
    const std::vector<DensityMatrix> pair{a, b};
    return support_span_dim(std::span<const DensityMatrix>(pair), tol);
}

double commutator_norm(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw InvalidArgument("commutator_norm: dimension mismatch");
    }
    const CMatrix c = a.matrix() * b.matrix() - b.matrix() * a.matrix();
    return c.cwiseAbs().maxCoeff();
}

double fidelity_pure(const StateVector &u, const StateVector &v) {
    if (u.n_qubits() != v.n_qubits()) {
        throw InvalidArgument("fidelity_pure: qubit count mismatch");
    }
    return std::norm(u.amplitudes().dot(v.amplitudes()));
}

std::string state_to_json(const StateVector &state) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < state.dim(); ++k) {
        arr.push_back({state[k].real(), state[k].imag()});
    }
    return arr.dump();
}

StateVector state_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InvalidArgument(fmt::format("state JSON: {}", e.what()));
    }
    if (!doc.is_array()) {
        throw InvalidArgument("state JSON must be an array of [re, im] pairs");
    }
    std::vector<Complex> amps;
    amps.reserve(doc.size());
    for (const auto &entry : doc) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw InvalidArgument("state JSON entries must be [re, im] number pairs");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return make_pure(amps);
}

}  // namespace locclone
