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
 * No-go audit for local cloning of W-basis pairs.
 *
 * For a pair (W_m, W_n) and a qubit k, the two-qubit reductions
 * rho^m = Tr_k P[W_m] and rho^n = Tr_k P[W_n] span a joint support of
 * dimension 2, 3 or 4. A pair is
 *   - category A if some k gives dimension 2,
 *   - category B if none gives 2 but some k gives 3,
 *   - category C otherwise, witnessed by a k with [rho^m, rho^n] != 0.
 * The witness k defines the two-lab split: qubits {i, j} of original and
 * blank in lab A, qubit k of both in lab B. Negativity across that split is
 * compared for the cloner's input (equal mixture of W_m, W_n with a W blank)
 * and its ideal output; an increase rules the cloner out.
 *
 * Qubit indices k are 1-based throughout this header.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "locclone/catalog.hpp"
#include "locclone/measures.hpp"
#include "locclone/register.hpp"

namespace locclone {

class StructureMismatch : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The W-class parameter point of the W state itself; it has no
/// insufficiency certificate.
class WStatePoint : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

enum class PairCategory { A, B, C };
enum class BForm { I, II };

std::string to_string(PairCategory c);
std::string to_string(BForm f);

struct PairClassification {
    WBasisIndex m;
    WBasisIndex n;
    PairCategory category;
    /// Qubit placed in lab B. Ties resolve to the largest k.
    int witness_k;
    /// Smallest joint support dimension over k.
    int span_dim;
    std::array<int, 3> span_dims;        // indexed by k - 1
    std::array<double, 3> commutators;   // max |[rho^m, rho^n]| entry, by k - 1
};

PairClassification classify_pair(WBasisIndex m, WBasisIndex n);

/// All 28 unordered pairs, sorted by (m, n).
std::vector<PairClassification> classify_all_pairs();

struct BTypeForm {
    BForm form;
    /// Weight of the shared lab-A direction in both reductions.
    double shared_direction_weight;
    double weight_m;
    double weight_n;
};

/// Requires a B-type pair with `k` giving joint support dimension 3.
BTypeForm btype_form(WBasisIndex m, WBasisIndex n, int k);

/// Schmidt data of both states in a common lab-B basis {e_0, e_1}, where e_0
/// is the lower-weight direction of W_m.
struct TwoLevelStructure {
    int k;
    std::array<double, 2> weights_m;
    std::array<double, 2> weights_n;
    /// <a^m_b | a^n_c> for normalized lab-A vectors a^x_b = <e_b| W_x>.
    std::array<std::array<Complex, 2>, 2> overlaps;
    /// Largest deviation from the expected structure.
    double residual;
};

/// Confirms the A-type pattern: weights {1/3, 2/3} in both states with the
/// lab-A directions attached to opposite lab-B vectors. Throws
/// StructureMismatch when (m, n) is not A-type at k or the pattern fails.
TwoLevelStructure atype_structure(WBasisIndex m, WBasisIndex n, int k);

/// Confirms the C-type pattern at the pair's noncommuting witness: swapped
/// weights, |<0|0'>| = 1/sqrt(2), <0|0'> = -<1|1'>, <0|1'> = <0'|1> = 0.
TwoLevelStructure ctype_structure(WBasisIndex m, WBasisIndex n);

struct ClonerIO {
    DensityMatrix rho_in;
    DensityMatrix rho_out;
    Bipartition cut;
};

/// rho_in  = 1/2 P[W_m (x) W_blank] + 1/2 P[W_n (x) W_blank],
/// rho_out = 1/2 P[W_m (x) W_m] + 1/2 P[W_n (x) W_n],
/// cut puts qubit k of both registers on side B.
ClonerIO cloner_io(WBasisIndex m, WBasisIndex n, int k, WBasisIndex blank);

struct AuditRecord {
    WBasisIndex m;
    WBasisIndex n;
    PairCategory category;
    int witness_k;
    std::optional<BForm> form;
    double negativity_in;
    double negativity_out;
    WBasisIndex blank;
};

/// Negativities of the cloner's input and output across the witness split.
/// Defined for every pair; only B and C pairs are covered by the no-go
/// argument.
AuditRecord negativity_audit(WBasisIndex m, WBasisIndex n,
                             WBasisIndex blank = WBasisIndex(1));

struct ReferenceNegativity {
    double in;
    double out;
};

/// Reference negativities for blank W1, one pair per form: B/I, B/II and C.
std::optional<ReferenceNegativity> reference_negativity(PairCategory category,
                                                        std::optional<BForm> form);

struct InsufficiencyCertificate {
    WClassParams params;
    int cut_index;
    double blank_entropy_bits;
    double required_bits;
};

/// Cut where a non-W W-class blank carries less entanglement than a W state.
InsufficiencyCertificate blank_insufficiency(const WClassParams &params);

struct ScanViolation {
    double a, b, c, d;
    int cut_index;
    double entropy_bits;
};

struct ScanReport {
    double step;
    double exclusion_radius;
    std::uint64_t seed;
    std::size_t points_tested = 0;
    std::size_t points_excluded = 0;
    std::vector<ScanViolation> violations;
    /// Largest min-cut entropy among tested points outside the exclusion ball.
    double max_min_cut_entropy = 0.0;
    std::size_t cross_checks = 0;
    double max_cross_check_error = 0.0;
    /// Cut entropies (cuts 1, 2, 3) at a = b = c = 1/3.
    std::array<double, 3> w_point_entropies{};
};

/// Grid a, b, c in {step, 2 step, ...} with a + b + c <= 1. Points within L1
/// distance `exclusion_radius` of the W point are skipped. About one point in
/// a hundred (seeded) is re-evaluated through explicit partial traces.
ScanReport lemma_scan(double step, double exclusion_radius, std::uint64_t seed = 0);

}  // namespace locclone
