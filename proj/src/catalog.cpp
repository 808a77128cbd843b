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

#include "locclone/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include <fmt/format.h>

namespace locclone {

namespace {

struct SignedKet {
    int sign;
    unsigned index;  // 3-bit basis index, qubit 1 most significant
};

// Each W-basis state is an equal-weight sum of three signed kets.
constexpr std::array<std::array<SignedKet, 3>, 8> kWBasisTerms{{
    {{{+1, 0b001}, {+1, 0b100}, {+1, 0b111}}},
    {{{+1, 0b011}, {+1, 0b101}, {+1, 0b110}}},
    {{{+1, 0b001}, {-1, 0b100}, {+1, 0b010}}},
    {{{+1, 0b011}, {-1, 0b101}, {+1, 0b000}}},
    {{{+1, 0b001}, {-1, 0b010}, {-1, 0b111}}},
    {{{+1, 0b011}, {-1, 0b000}, {-1, 0b110}}},
    {{{+1, 0b100}, {-1, 0b111}, {+1, 0b010}}},
    {{{+1, 0b101}, {-1, 0b110}, {+1, 0b000}}},
}};

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(',', start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

int parse_bit(std::string_view tok, std::string_view whole) {
    if (tok == "0") {
        return 0;
    }
    if (tok == "1") {
        return 1;
    }
    throw InvalidArgument(fmt::format("GHZ label '{}': fields must be 0 or 1", whole));
}

double parse_real(std::string_view tok, std::string_view whole) {
    try {
        std::size_t used = 0;
        const std::string s(tok);
        const double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception &) {
        throw InvalidArgument(fmt::format("W-class params '{}': bad number '{}'", whole, tok));
    }
}

}  // namespace

void GhzLabel::validate() const {
    for (int bit : {p, i, j}) {
        if (bit != 0 && bit != 1) {
            throw InvalidArgument(fmt::format("GHZ label ({},{},{}) has a non-bit field", p, i, j));
        }
    }
}

std::string GhzLabel::str() const { return fmt::format("{},{},{}", p, i, j); }

GhzLabel GhzLabel::parse(std::string_view text) {
    const auto parts = split_commas(text);
    if (parts.size() != 3) {
        throw InvalidArgument(fmt::format("GHZ label '{}' must be p,i,j", text));
    }
    return {parse_bit(parts[0], text), parse_bit(parts[1], text), parse_bit(parts[2], text)};
}

std::array<GhzLabel, 8> all_ghz_labels() {
    std::array<GhzLabel, 8> out{};
    for (int k = 0; k < 8; ++k) {
        out[static_cast<std::size_t>(k)] = {(k >> 2) & 1, (k >> 1) & 1, k & 1};
    }
    return out;
}

WBasisIndex::WBasisIndex(int n) : n_(n) {
    if (n < 1 || n > 8) {
        throw InvalidArgument(fmt::format("W basis index {} outside 1..8", n));
    }
}

std::string WBasisIndex::str() const { return fmt::format("W{}", n_); }

WBasisIndex WBasisIndex::parse(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == 'W' || digits.front() == 'w')) {
        digits.remove_prefix(1);
    }
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        throw InvalidArgument(fmt::format("W basis label '{}' must be W1..W8", text));
    }
    return WBasisIndex(n);
}

WClassParams::WClassParams(double a, double b, double c) : a_(a), b_(b), c_(c) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0)) {
        throw InvalidArgument("W-class params: a, b, c must be > 0");
    }
    if (a + b + c > 1.0 + 1e-12) {
        throw InvalidArgument("W-class params: a + b + c must not exceed 1");
    }
}

WClassParams WClassParams::parse(std::string_view text) {
    const auto parts = split_commas(text);
    if (parts.size() != 3) {
        throw InvalidArgument(fmt::format("W-class params '{}' must be a,b,c", text));
    }
    return {parse_real(parts[0], text), parse_real(parts[1], text), parse_real(parts[2], text)};
}

StateVector ghz(const GhzLabel &label) {
    label.validate();
    const unsigned first = static_cast<unsigned>((label.i << 1) | label.j);
    const unsigned second = 0b100U | (~first & 0b011U);
    CVector v = CVector::Zero(8);
    const double amp = 1.0 / std::sqrt(2.0);
    v(first) = amp;
    v(second) = label.p == 0 ? amp : -amp;
    return StateVector::from_amplitudes(v);
}

StateVector w_basis(WBasisIndex n) {
    CVector v = CVector::Zero(8);
    const double amp = 1.0 / std::sqrt(3.0);
    for (const auto &term : kWBasisTerms[static_cast<std::size_t>(n.value() - 1)]) {
        v(term.index) = term.sign * amp;
    }
    return StateVector::from_amplitudes(v);
}

StateVector w_class(const WClassParams &params) {
    CVector v = CVector::Zero(8);
    v(0b001) = std::sqrt(params.a());
    v(0b010) = std::sqrt(params.b());
    v(0b100) = std::sqrt(params.c());
    v(0b000) = std::sqrt(std::max(params.d(), 0.0));
    return StateVector::from_amplitudes(v);
}

}  // namespace locclone
