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

#include "locclone/catalog.hpp"
#include "oracles.hpp"

using namespace locclone;
using oracle::ket;

TEST_CASE("ghz basis") {
    const double r = 1.0 / std::sqrt(2.0);
    const oracle::Vec g000 = r * (ket("000") + ket("111"));
    const oracle::Vec g101 = r * (ket("001") - ket("110"));
    CHECK((ghz({0, 0, 0}).amplitudes() - g000).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((ghz({1, 0, 1}).amplitudes() - g101).cwiseAbs().maxCoeff() < 1e-15);

    const auto labels = all_ghz_labels();
    oracle::Mat stacked(8, 8);
    for (std::size_t a = 0; a < 8; ++a) {
        stacked.col(static_cast<Eigen::Index>(a)) = ghz(labels[a]).amplitudes();
    }
    const oracle::Mat gram = stacked.adjoint() * stacked;
    CHECK((gram - oracle::Mat::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(Eigen::FullPivLU<oracle::Mat>(stacked).rank() == 8);

    CHECK_THROWS_AS(ghz({2, 0, 0}), InvalidArgument);
}

TEST_CASE("ghz bit flips relabel i and j") {
    for (int p = 0; p < 2; ++p) {
        const auto base = ghz({p, 0, 0}).amplitudes();
        const oracle::Vec flip_i = oracle::embed(oracle::Mat(Eigen::Matrix2cd{{0, 1}, {1, 0}}), 1, 3) * base;
        const oracle::Vec flip_j = oracle::embed(oracle::Mat(Eigen::Matrix2cd{{0, 1}, {1, 0}}), 2, 3) * base;
        CHECK(std::norm(flip_i.dot(ghz({p, 1, 0}).amplitudes())) == doctest::Approx(1.0));
        CHECK(std::norm(flip_j.dot(ghz({p, 0, 1}).amplitudes())) == doctest::Approx(1.0));
    }
}

TEST_CASE("GhzLabel parsing") {
    CHECK(GhzLabel::parse("1,0,1") == GhzLabel{1, 0, 1});
    CHECK(GhzLabel::parse("0,1,1").str() == "0,1,1");
    CHECK_THROWS_AS(GhzLabel::parse("1,0"), InvalidArgument);
    CHECK_THROWS_AS(GhzLabel::parse("1,2,0"), InvalidArgument);
    CHECK_THROWS_AS(GhzLabel::parse("a,b,c"), InvalidArgument);
}

TEST_CASE("w basis") {
    const double r = 1.0 / std::sqrt(3.0);
    CHECK((w_basis(WBasisIndex(1)).amplitudes() - r * (ket("001") + ket("100") + ket("111")))
              .cwiseAbs()
              .maxCoeff() < 1e-15);
    CHECK((w_basis(WBasisIndex(3)).amplitudes() - r * (ket("001") - ket("100") + ket("010")))
              .cwiseAbs()
              .maxCoeff() < 1e-15);
    CHECK((w_basis(WBasisIndex(8)).amplitudes() - r * (ket("101") - ket("110") + ket("000")))
              .cwiseAbs()
              .maxCoeff() < 1e-15);

    oracle::Mat stacked(8, 8);
    for (int m = 1; m <= 8; ++m) {
        stacked.col(m - 1) = w_basis(WBasisIndex(m)).amplitudes();
    }
    CHECK(((stacked.adjoint() * stacked) - oracle::Mat::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(WBasisIndex(0), InvalidArgument);
    CHECK_THROWS_AS(WBasisIndex(9), InvalidArgument);
    CHECK(WBasisIndex::parse("W7").value() == 7);
    CHECK(WBasisIndex::parse("3").value() == 3);
    CHECK_THROWS_AS(WBasisIndex::parse("W"), InvalidArgument);
    CHECK_THROWS_AS(WBasisIndex::parse("W12"), InvalidArgument);
}

TEST_CASE("w class") {
    const double r = 1.0 / std::sqrt(3.0);
    const auto w = w_class(WClassParams(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0));
    CHECK((w.amplitudes() - r * (ket("001") + ket("010") + ket("100"))).cwiseAbs().maxCoeff() < 1e-15);

    const WClassParams quarter(0.25, 0.25, 0.25);
    CHECK(quarter.d() == doctest::Approx(0.25));
    CHECK(std::abs(w_class(quarter)[0b000] - Complex(0.5)) < 1e-15);

    CHECK_THROWS_AS(WClassParams(0.0, 0.5, 0.5), InvalidArgument);
    CHECK_THROWS_AS(WClassParams(0.5, 0.5, 0.5), InvalidArgument);
    CHECK_THROWS_AS(WClassParams::parse("0.5,0.2"), InvalidArgument);
    CHECK_THROWS_AS(WClassParams::parse("0.5,0.2,x"), InvalidArgument);
    const auto parsed = WClassParams::parse("0.5,0.2,0.2");
    CHECK(parsed.d() == doctest::Approx(0.1));
}
