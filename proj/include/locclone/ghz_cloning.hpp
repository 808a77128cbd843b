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
 * Local cloning of canonical GHZ states with a known GHZ blank.
 *
 * A cloning circuit acts on six qubits: the three-qubit original followed by
 * the three-qubit blank. Party k holds original qubit k and clone qubit k, so
 * a transversal CNOT and single-qubit gates are all local operations.
 *
 * Circuits are built from three layers:
 *   1. relabeling of the blank to |Psi_{0,0,0}> (X on clone qubits 2/3, Z on
 *      clone qubit 1),
 *   2. one transversal CNOT,
 *   3. corrections on the clone register.
 * With an original->clone CNOT the clone of |Psi_{p,i,j}> comes out as
 * |Psi_{0,i,j}>; the missing sign (-1)^p is restored by diagonal phases
 * diag(1, e^{i z_k}) on the clone qubits, chosen so that
 *   z_1 + (1 - 2i) z_2 + (1 - 2j) z_3 = pi p   (mod 2 pi)
 * for every member. With a clone->original CNOT the clone comes out as
 * |Psi_{p,0,0}> and X^i, X^j on clone qubits 2 and 3 finish the copy; that
 * only works when all members share (i, j).
 */

#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "locclone/catalog.hpp"
#include "locclone/register.hpp"

namespace locclone {

/// Fidelity a synthesized clone must reach: 1 - kCloneFidelityTol.
inline constexpr double kCloneFidelityTol = 1e-9;

class NoCircuitFound : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Triple judged clonable by the cut criterion but synthesis failed.
class InconsistentVerdict : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

struct CloningCircuit {
    std::vector<LocalGate> layers;
    GhzLabel blank;

    /// One gate per line: "CNOT orig->clone" or "GATE S clone:2".
    [[nodiscard]] std::string listing() const;
    /// True when every gate is a single-qubit gate or a transversal CNOT.
    [[nodiscard]] bool is_local() const;
};

CloningCircuit synthesize_cloner(std::span<const GhzLabel> states,
                                 GhzLabel blank = {});

/// Fidelity of the circuit's output with |Psi_s> (x) |Psi_s>, per state.
std::map<GhzLabel, double> verify_cloner(const CloningCircuit &circuit,
                                         std::span<const GhzLabel> states);

/// Fidelity of the original register alone with |Psi_s>, per state.
std::map<GhzLabel, double> original_fidelities(const CloningCircuit &circuit,
                                               std::span<const GhzLabel> states);

/// A single-qubit cut across which the three states look like three Bell
/// states: pairwise orthogonal, confined to a 2x2 subspace and each
/// maximally entangled. Cuts are tried with qubit 3, 2, then 1 on side B.
std::optional<Bipartition> bell_triple_cut(std::span<const GhzLabel> triple);

/// Label form of the same test for the cut with `side_b_qubit` (1-based)
/// alone. For qubit 3: all share i, and two share j with different p.
bool bell_label_pattern(std::span<const GhzLabel> triple, int side_b_qubit);

struct TripleVerdict {
    bool clonable = false;
    std::optional<Bipartition> witness_cut;
    std::optional<CloningCircuit> circuit;
};

TripleVerdict triple_clonability(std::span<const GhzLabel> triple);

std::vector<std::array<GhzLabel, 2>> all_ghz_pairs();    // 28, lexicographic
std::vector<std::array<GhzLabel, 3>> all_ghz_triples();  // 56, lexicographic

}  // namespace locclone
