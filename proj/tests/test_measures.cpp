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

#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <array>
#include <random>

#include "locclone/measures.hpp"
#include "oracles.hpp"

using namespace locclone;

namespace {

StateVector from_oracle(const oracle::Vec &v) { return StateVector::from_amplitudes(v); }

double binary_entropy(double p) {
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

WClassParams random_params(std::mt19937_64 &rng) {
    // Uniform on the simplex a + b + c + d = 1 via sorted uniforms.
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (true) {
        std::array<double, 3> cuts{u(rng), u(rng), u(rng)};
        std::sort(cuts.begin(), cuts.end());
        const double a = cuts[0];
        const double b = cuts[1] - cuts[0];
        const double c = cuts[2] - cuts[1];
        if (a > 1e-9 && b > 1e-9 && c > 1e-9) {
            return {a, b, c};
        }
    }
}

}  // namespace

TEST_CASE("threshold constant") {
    CHECK(std::abs(w_threshold_bits() - 0.9182958340544896) < 1e-12);
    CHECK(std::abs(w_threshold_bits() - binary_entropy(1.0 / 3.0)) < 1e-15);
}

TEST_CASE("cut_entropy") {
    const auto prod = tensor(basis_state(1, 1), basis_state(2, 2));
    CHECK(cut_entropy(prod, Bipartition(3, {0})).entropy_bits == 0.0);

    for (const auto &label : all_ghz_labels()) {
        for (int k = 0; k < 3; ++k) {
            CHECK(std::abs(cut_entropy(ghz(label), Bipartition(3, {k})).entropy_bits - 1.0) < 1e-12);
        }
    }
    const auto w = w_class(WClassParams(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0));
    CHECK(cut_entropy(w, single_qubit_cut(1)).entropy_bits == doctest::Approx(0.9182958).epsilon(1e-7));

    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const auto psi = from_oracle(oracle::random_state(16, rng));
        const double h = cut_entropy(psi, Bipartition(4, {0, 1})).entropy_bits;
        CHECK(h >= 0.0);
        CHECK(h <= 2.0 + 1e-12);
    }
}

TEST_CASE("negativity") {
    const auto prod = tensor(basis_state(1, 0), basis_state(1, 1));
    CHECK(negativity(density(prod), Bipartition(2, {1})) == 0.0);

    const std::vector<Complex> bell{1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)};
    CHECK(negativity(density(make_pure(bell)), Bipartition(2, {1})) == doctest::Approx(1.0).epsilon(1e-12));

    // (sqrt(1/3) + sqrt(2/3))^2 - 1 = 2 sqrt(2) / 3
    const double w1 = negativity(density(w_basis(WBasisIndex(1))), single_qubit_cut(3));
    CHECK(std::abs(w1 - 2.0 * std::sqrt(2.0) / 3.0) < 1e-9);
}

TEST_CASE("negativity of pure states matches the Schmidt formula") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto psi = oracle::random_state(16, rng);
        const std::vector<int> side_b{1, 3};
        const Bipartition cut(4, side_b);
        Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::marginal_of_pure(psi, 4, {0, 2}));
        double root_sum = 0.0;
        for (int k = 0; k < 4; ++k) {
            root_sum += std::sqrt(std::max(es.eigenvalues()(k), 0.0));
        }
        const double expected = root_sum * root_sum - 1.0;
        CHECK(std::abs(negativity(density(from_oracle(psi)), cut) - expected) < 1e-10);
    }
}

TEST_CASE("negativity is invariant under local unitaries") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const auto psi = oracle::random_state(16, rng);
        const oracle::Vec phi = psi;
        const oracle::Vec psi2 = oracle::random_state(16, rng);
        const oracle::Mat rho = 0.5 * (phi * phi.adjoint() + psi2 * psi2.adjoint());
        // side A = qubits 0,1; side B = qubits 2,3
        const oracle::Mat u = oracle::kron(oracle::random_unitary(4, rng), oracle::random_unitary(4, rng));
        const oracle::Mat rotated = u * rho * u.adjoint();
        const Bipartition cut(4, {2, 3});
        const double before = negativity(DensityMatrix::from_matrix(rho), cut);
        const double after = negativity(DensityMatrix::from_matrix(0.5 * (rotated + rotated.adjoint())), cut);
        CHECK(std::abs(before - after) < 1e-10);
        const double by_oracle = oracle::trace_norm(oracle::partial_transpose(rho, 4, {2, 3})) - 1.0;
        CHECK(std::abs(before - std::max(by_oracle, 0.0)) < 1e-10);
    }
}

TEST_CASE("wclass_cut_spectrum") {
    const WClassParams w(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
    const auto s1 = wclass_cut_spectrum(w, 1);
    CHECK(s1.minus == doctest::Approx(1.0 / 3.0));
    CHECK(s1.plus == doctest::Approx(2.0 / 3.0));

    const auto s = wclass_cut_spectrum(WClassParams(0.25, 0.25, 0.5), 1);
    CHECK(s.minus == doctest::Approx(0.5));
    CHECK(s.plus == doctest::Approx(0.5));

    CHECK_THROWS_AS(wclass_cut_spectrum(w, 0), InvalidArgument);
    CHECK_THROWS_AS(wclass_cut_spectrum(w, 4), InvalidArgument);
}

TEST_CASE("wclass_cut_spectrum agrees with explicit marginals (cut/parameter mapping)") {
    std::mt19937_64 rng(41);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto params = random_params(rng);
        const auto psi = w_class(params).amplitudes();
        for (int k = 1; k <= 3; ++k) {
            const auto want = oracle::eig2(oracle::marginal_of_pure(psi, 3, {k - 1}));
            const auto got = wclass_cut_spectrum(params, k);
            worst = std::max({worst, std::abs(got.minus - want[0]), std::abs(got.plus - want[1])});
            CHECK(got.minus + got.plus == doctest::Approx(1.0));
            CHECK(got.minus >= 0.0);
            CHECK(got.plus <= 1.0);
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("wclass_min_cut_entropy") {
    const auto at_w = wclass_min_cut_entropy(WClassParams(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0));
    CHECK(at_w.cut_index == 1);
    CHECK(std::abs(at_w.entropy_bits - w_threshold_bits()) < 1e-12);

    CHECK(wclass_min_cut_entropy(WClassParams(0.6, 0.2, 0.2)).entropy_bits < 0.9182958);
    CHECK(wclass_min_cut_entropy(WClassParams(0.333, 0.333, 0.333)).entropy_bits < w_threshold_bits());

    // (0.6, 0.2, 0.2): cut 3 is governed by a = 0.6, d = 0
    const auto r = wclass_min_cut_entropy(WClassParams(0.6, 0.2, 0.2));
    CHECK(r.cut_index == 1);  // b and c tie at 0.2; lowest index wins
    CHECK(r.entropy_bits == doctest::Approx(binary_entropy(0.2)));
}

TEST_CASE("inequality pair forces the W point") {
    // Cut 1 spectrum inside [1/3, 2/3] implies 1/3 <= c <= 2/3 on a grid of (c, d).
    for (int ic = 1; ic < 100; ++ic) {
        for (int id = 0; ic + id < 100; ++id) {
            const double c = ic / 100.0;
            const double d = id / 100.0;
            const double rest = 1.0 - c - d;
            const WClassParams p(rest / 2, rest / 2, c);
            const auto s = wclass_cut_spectrum(p, 1);
            if (s.minus >= 1.0 / 3.0 - 1e-12 && s.plus <= 2.0 / 3.0 + 1e-12) {
                CHECK(c >= 1.0 / 3.0 - 1e-12);
                CHECK(c <= 2.0 / 3.0 + 1e-12);
            }
        }
    }
    // a, b, c >= 1/3 with a + b + c <= 1 leaves only a = b = c = 1/3.
    int count = 0;
    for (int ia = 0; ia <= 300; ++ia) {
        for (int ib = 0; ia + ib <= 300; ++ib) {
            for (int ic = 0; ia + ib + ic <= 300; ++ic) {
                if (ia >= 100 && ib >= 100 && ic >= 100) {
                    ++count;
                    CHECK(ia == 100);
                    CHECK(ib == 100);
                    CHECK(ic == 100);
                }
            }
        }
    }
    CHECK(count == 1);
}
