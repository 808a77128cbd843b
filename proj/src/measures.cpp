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

#include "locclone/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

namespace locclone {

namespace {
constexpr double kNegativityClamp = 1e-12;
}  // namespace

double w_threshold_bits() {
    static const double value = -(1.0 / 3.0) * std::log2(1.0 / 3.0) -
                                (2.0 / 3.0) * std::log2(2.0 / 3.0);
    return value;
}

double entropy_bits(std::span<const double> probabilities) {
    double h = 0.0;
    for (double p : probabilities) {
        if (p > 0.0) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

CutEntropyResult cut_entropy(const StateVector &state, const Bipartition &cut) {
    const auto lambdas = schmidt_coefficients(state, cut);
    return {cut, std::max(0.0, entropy_bits(lambdas))};
}

double negativity(const DensityMatrix &dm, const Bipartition &cut) {
    const double n = trace_norm(partial_transpose(dm, cut)) - 1.0;
    if (n < 0.0 && n > -kNegativityClamp) {
        return 0.0;
    }
    return n;
}

Bipartition single_qubit_cut(int cut_index) {
    if (cut_index < 1 || cut_index > 3) {
        throw InvalidArgument(fmt::format("cut index {} outside 1..3", cut_index));
    }
    return Bipartition(3, {cut_index - 1});
}

CutSpectrum wclass_cut_spectrum(const WClassParams &params, int cut_index) {
    double x = 0.0;
    switch (cut_index) {
    case 1: x = params.c(); break;
    case 2: x = params.b(); break;
    case 3: x = params.a(); break;
    default:
        throw InvalidArgument(fmt::format("cut index {} outside 1..3", cut_index));
    }
    const double d = std::max(params.d(), 0.0);
    const double radicand = (1.0 - 2.0 * x) * (1.0 - 2.0 * x) + 4.0 * x * d;
    const double r = std::min(std::sqrt(std::max(radicand, 0.0)), 1.0);
    return {(1.0 - r) / 2.0, (1.0 + r) / 2.0};
}

MinCutEntropy wclass_min_cut_entropy(const WClassParams &params) {
    MinCutEntropy best{0, 0.0};
    for (int k = 1; k <= 3; ++k) {
        const auto s = wclass_cut_spectrum(params, k);
        const std::array<double, 2> probs{s.minus, s.plus};
        const double h = entropy_bits(probs);
        if (best.cut_index == 0 || h < best.entropy_bits) {
            best = {k, h};
        }
    }
    return best;
}

}  // namespace locclone
