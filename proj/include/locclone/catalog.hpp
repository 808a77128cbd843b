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

#include <array>
#include <compare>
#include <string>
#include <string_view>

#include "locclone/register.hpp"

namespace locclone {

/// Label (p, i, j) of the canonical GHZ state
/// (|0 i j> + (-1)^p |1 ~i ~j>) / sqrt(2).
struct GhzLabel {
    int p = 0;
    int i = 0;
    int j = 0;

    /// Throws InvalidArgument unless every field is 0 or 1.
    void validate() const;
    [[nodiscard]] std::string str() const;  // "p,i,j"
    static GhzLabel parse(std::string_view text);

    friend auto operator<=>(const GhzLabel &, const GhzLabel &) = default;
};

/// The eight canonical labels in lexicographic (p, i, j) order.
std::array<GhzLabel, 8> all_ghz_labels();

/// Index 1..8 into the orthonormal W basis.
class WBasisIndex {
  public:
    explicit WBasisIndex(int n);

    [[nodiscard]] int value() const noexcept { return n_; }
    [[nodiscard]] std::string str() const;  // "W3"
    static WBasisIndex parse(std::string_view text);

    friend auto operator<=>(const WBasisIndex &, const WBasisIndex &) = default;

  private:
    int n_;
};

/// Parameters of sqrt(a)|001> + sqrt(b)|010> + sqrt(c)|100> + sqrt(d)|000>,
/// with d = 1 - (a + b + c) derived on demand.
class WClassParams {
  public:
    WClassParams(double a, double b, double c);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] double c() const noexcept { return c_; }
    [[nodiscard]] double d() const noexcept { return 1.0 - (a_ + b_ + c_); }

    static WClassParams parse(std::string_view text);  // "a,b,c"

  private:
    double a_;
    double b_;
    double c_;
};

StateVector ghz(const GhzLabel &label);
StateVector w_basis(WBasisIndex n);
StateVector w_class(const WClassParams &params);

}  // namespace locclone
