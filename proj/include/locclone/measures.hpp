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

#pragma once

#include <utility>

#include "locclone/catalog.hpp"
#include "locclone/register.hpp"

namespace locclone {

/// Binary entropy of the {1/3, 2/3} split, in bits. A W state has exactly
/// this much entanglement across each of its three single-qubit cuts.
double w_threshold_bits();

struct CutEntropyResult {
    Bipartition cut;
    double entropy_bits;
};

/// Shannon entropy (base 2) of a probability list; 0 log 0 = 0.
double entropy_bits(std::span<const double> probabilities);

CutEntropyResult cut_entropy(const StateVector &state, const Bipartition &cut);

/// ||rho^{T_B}||_1 - 1, with rounding noise just below zero reported as 0.
double negativity(const DensityMatrix &dm, const Bipartition &cut);

/// The single-qubit cut of a three-qubit state: qubit `cut_index` (1-based)
/// alone on side B.
Bipartition single_qubit_cut(int cut_index);

struct CutSpectrum {
    double minus;
    double plus;
};

/// Closed-form marginal spectrum of a W-class state across cut 1, 2 or 3:
/// (1 -/+ sqrt((1 - 2x)^2 + 4xd)) / 2 with x = c, b, a respectively.
CutSpectrum wclass_cut_spectrum(const WClassParams &params, int cut_index);

struct MinCutEntropy {
    int cut_index;
    double entropy_bits;
};

/// Least entangled single-qubit cut; ties resolve to the lowest index.
MinCutEntropy wclass_min_cut_entropy(const WClassParams &params);

}  // namespace locclone
