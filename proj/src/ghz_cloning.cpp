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

#include "locclone/ghz_cloning.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include <fmt/format.h>

namespace locclone {

namespace {

constexpr int kRegister = 3;
constexpr double kPhaseEps = 1e-12;

int clone_target(int qubit_1based) { return kRegister + qubit_1based - 1; }

void validate_set(std::span<const GhzLabel> states, std::size_t lo, std::size_t hi) {
    if (states.size() < lo || states.size() > hi) {
        throw InvalidArgument(
            fmt::format("expected {}..{} GHZ labels, got {}", lo, hi, states.size()));
    }
    std::set<GhzLabel> seen;
    for (const auto &s : states) {
        s.validate();
        if (!seen.insert(s).second) {
            throw InvalidArgument(fmt::format("GHZ label {} repeated", s.str()));
        }
    }
}

std::vector<LocalGate> blank_relabeling(const GhzLabel &blank) {
    std::vector<LocalGate> gates;
    if (blank.i == 1) {
        gates.push_back(LocalGate::single_qubit(clone_target(2), pauli_x(), "X"));
    }
    if (blank.j == 1) {
        gates.push_back(LocalGate::single_qubit(clone_target(3), pauli_x(), "X"));
    }
    if (blank.p == 1) {
        gates.push_back(LocalGate::single_qubit(clone_target(1), pauli_z(), "Z"));
    }
    return gates;
}

// Canonical name for diag(1, e^{i angle}); empty for the identity.
std::string phase_name(double angle) {
    const double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(angle, two_pi);
    if (a < 0) {
        a += two_pi;
    }
    const double quarter = a / (std::numbers::pi / 2.0);
    const double nearest = std::round(quarter);
    if (std::abs(quarter - nearest) < kPhaseEps) {
        switch (static_cast<int>(nearest) % 4) {
        case 0: return "";
        case 1: return "S";
        case 2: return "Z";
        case 3: return "Sdg";
        }
    }
    return fmt::format("P({:.12g})", a);
}

// Solves  z1 + (1-2i) z2 + (1-2j) z3 = pi p  for all members by Gaussian
// elimination; free unknowns are set to zero. nullopt when inconsistent.
std::optional<std::array<double, 3>> solve_phases(std::span<const GhzLabel> states) {
    std::vector<std::array<double, 4>> rows;
    for (const auto &s : states) {
        rows.push_back({1.0, 1.0 - 2.0 * s.i, 1.0 - 2.0 * s.j, std::numbers::pi * s.p});
    }
    std::array<int, 3> pivot_row{-1, -1, -1};
    std::size_t next = 0;
    for (int col = 0; col < 3 && next < rows.size(); ++col) {
        std::size_t best = next;
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (std::abs(rows[r][col]) > std::abs(rows[best][col])) {
                best = r;
            }
        }
        if (std::abs(rows[best][col]) < kPhaseEps) {
            continue;
        }
        std::swap(rows[best], rows[next]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next) {
                continue;
            }
            const double f = rows[r][col] / rows[next][col];
            for (int c = 0; c < 4; ++c) {
                rows[r][c] -= f * rows[next][c];
            }
        }
        pivot_row[col] = static_cast<int>(next);
        ++next;
    }
    for (std::size_t r = next; r < rows.size(); ++r) {
        if (std::abs(rows[r][3]) > 1e-9) {
            return std::nullopt;
        }
    }
    std::array<double, 3> z{0.0, 0.0, 0.0};
    for (int col = 0; col < 3; ++col) {
        if (pivot_row[col] >= 0) {
            const auto &row = rows[static_cast<std::size_t>(pivot_row[col])];
            z[col] = row[3] / row[col];
        }
    }
    return z;
}

bool passes(const CloningCircuit &c, std::span<const GhzLabel> states) {
    const auto fid = verify_cloner(c, states);
    return std::all_of(fid.begin(), fid.end(),
                       [](const auto &kv) { return kv.second >= 1.0 - kCloneFidelityTol; });
}

bool all_share_bits(std::span<const GhzLabel> states) {
    return std::all_of(states.begin(), states.end(), [&](const GhzLabel &s) {
        return s.i == states.front().i && s.j == states.front().j;
    });
}

bool pairwise_distinct_bits(std::span<const GhzLabel> states) {
    for (std::size_t a = 0; a < states.size(); ++a) {
        for (std::size_t b = a + 1; b < states.size(); ++b) {
            if (states[a].i == states[b].i && states[a].j == states[b].j) {
                return false;
            }
        }
    }
    return true;
}

struct CatalogGate {
    const char *name;
    Eigen::Matrix2cd matrix;
};

std::array<CatalogGate, 5> correction_catalog() {
    const double half_pi = std::numbers::pi / 2.0;
    return {{{"I", Eigen::Matrix2cd::Identity()},
             {"X", pauli_x()},
             {"Z", pauli_z()},
             {"S", phase_gate(half_pi)},
             {"Sdg", phase_gate(-half_pi)}}};
}

std::optional<CloningCircuit> catalog_search(std::span<const GhzLabel> states,
                                             const GhzLabel &blank) {
    const auto catalog = correction_catalog();
    for (auto dir : {CnotDirection::OriginalToClone, CnotDirection::CloneToOriginal}) {
        for (std::size_t g1 = 0; g1 < catalog.size(); ++g1) {
            for (std::size_t g2 = 0; g2 < catalog.size(); ++g2) {
                for (std::size_t g3 = 0; g3 < catalog.size(); ++g3) {
                    CloningCircuit c{blank_relabeling(blank), blank};
                    c.layers.push_back(LocalGate::transversal_cnot(dir));
                    const std::array<std::size_t, 3> pick{g1, g2, g3};
                    for (int q = 1; q <= 3; ++q) {
                        const auto &g = catalog[pick[static_cast<std::size_t>(q - 1)]];
                        if (std::string_view(g.name) != "I") {
                            c.layers.push_back(
                                LocalGate::single_qubit(clone_target(q), g.matrix, g.name));
                        }
                    }
                    if (passes(c, states)) {
                        return c;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::string CloningCircuit::listing() const {
    std::string out;
    for (const auto &g : layers) {
        if (g.kind() == LocalGate::Kind::TransversalCnot) {
            out += g.direction() == CnotDirection::OriginalToClone ? "CNOT orig->clone\n"
                                                                   : "CNOT clone->orig\n";
            continue;
        }
        const bool is_clone = g.target() >= kRegister;
        out += fmt::format("GATE {} {}:{}\n", g.name(), is_clone ? "clone" : "orig",
                           g.target() % kRegister + 1);
    }
    return out;
}

bool CloningCircuit::is_local() const {
    return std::all_of(layers.begin(), layers.end(), [](const LocalGate &g) {
        return g.kind() == LocalGate::Kind::TransversalCnot ||
               (g.target() >= 0 && g.target() < 2 * kRegister);
    });
}

CloningCircuit synthesize_cloner(std::span<const GhzLabel> states, GhzLabel blank) {
    validate_set(states, 2, 3);
    blank.validate();

    if (all_share_bits(states)) {
        CloningCircuit c{blank_relabeling(blank), blank};
        c.layers.push_back(LocalGate::transversal_cnot(CnotDirection::CloneToOriginal));
        if (states.front().i == 1) {
            c.layers.push_back(LocalGate::single_qubit(clone_target(2), pauli_x(), "X"));
        }
        if (states.front().j == 1) {
            c.layers.push_back(LocalGate::single_qubit(clone_target(3), pauli_x(), "X"));
        }
        if (passes(c, states)) {
            return c;
        }
    } else if (pairwise_distinct_bits(states)) {
        if (const auto z = solve_phases(states)) {
            CloningCircuit c{blank_relabeling(blank), blank};
            c.layers.push_back(LocalGate::transversal_cnot(CnotDirection::OriginalToClone));
            for (int q = 1; q <= 3; ++q) {
                const double angle = (*z)[static_cast<std::size_t>(q - 1)];
                const auto name = phase_name(angle);
                if (!name.empty()) {
                    c.layers.push_back(
                        LocalGate::single_qubit(clone_target(q), phase_gate(angle), name));
                }
            }
            if (passes(c, states)) {
                return c;
            }
        }
    }
    if (auto found = catalog_search(states, blank)) {
        return std::move(*found);
    }
    std::vector<std::string> names;
    for (const auto &s : states) {
        names.push_back("(" + s.str() + ")");
    }
    throw NoCircuitFound(fmt::format("no verified local cloning circuit for {{{}}}",
                                     fmt::join(names, " ")));
}

std::map<GhzLabel, double> verify_cloner(const CloningCircuit &circuit,
                                         std::span<const GhzLabel> states) {
    const auto blank = ghz(circuit.blank);
    std::map<GhzLabel, double> out;
    for (const auto &s : states) {
        const auto psi = ghz(s);
        const auto result = apply_circuit(tensor(psi, blank), circuit.layers);
        out[s] = fidelity_pure(result, tensor(psi, psi));
    }
    return out;
}

std::map<GhzLabel, double> original_fidelities(const CloningCircuit &circuit,
                                               std::span<const GhzLabel> states) {
    const auto blank = ghz(circuit.blank);
    const std::array<int, 3> clone_qubits{3, 4, 5};
    std::map<GhzLabel, double> out;
    for (const auto &s : states) {
        const auto psi = ghz(s);
        const auto result = apply_circuit(tensor(psi, blank), circuit.layers);
        const auto reduced = partial_trace(density(result), clone_qubits);
        const auto &v = psi.amplitudes();
        out[s] = std::real(v.dot(reduced.matrix() * v));
    }
    return out;
}

std::optional<Bipartition> bell_triple_cut(std::span<const GhzLabel> triple) {
    validate_set(triple, 3, 3);
    std::vector<StateVector> states;
    for (const auto &s : triple) {
        states.push_back(ghz(s));
    }
    for (std::size_t a = 0; a < states.size(); ++a) {
        for (std::size_t b = a + 1; b < states.size(); ++b) {
            if (fidelity_pure(states[a], states[b]) > kCloneFidelityTol) {
                return std::nullopt;
            }
        }
    }
    for (int side_b : {2, 1, 0}) {
        const Bipartition cut(3, {side_b});
        const auto side_a = cut.side_a();
        std::vector<DensityMatrix> on_a;
        std::vector<DensityMatrix> on_b;
        bool maximal = true;
        for (const auto &psi : states) {
            const auto rho = density(psi);
            on_a.push_back(partial_trace(rho, cut.side_b()));
            on_b.push_back(partial_trace(rho, side_a));
            const auto lambdas = schmidt_coefficients(psi, cut);
            maximal = maximal && lambdas.size() == 2 &&
                      std::abs(lambdas[0] - 0.5) < kCloneFidelityTol &&
                      std::abs(lambdas[1] - 0.5) < kCloneFidelityTol;
        }
        if (maximal && support_span_dim(on_a) == 2 && support_span_dim(on_b) == 2) {
            return cut;
        }
    }
    return std::nullopt;
}

bool bell_label_pattern(std::span<const GhzLabel> triple, int side_b_qubit) {
    validate_set(triple, 3, 3);
    auto shared_key = [&](const GhzLabel &s) {
        switch (side_b_qubit) {
        case 3: return s.i;
        case 2: return s.j;
        case 1: return s.i ^ s.j;
        default: throw InvalidArgument("side_b_qubit must be 1, 2 or 3");
        }
    };
    auto pair_key = [&](const GhzLabel &s) { return side_b_qubit == 2 ? s.i : s.j; };

    const int key = shared_key(triple[0]);
    if (!std::all_of(triple.begin(), triple.end(),
                     [&](const GhzLabel &s) { return shared_key(s) == key; })) {
        return false;
    }
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = a + 1; b < 3; ++b) {
            if (pair_key(triple[a]) == pair_key(triple[b]) && triple[a].p != triple[b].p) {
                return true;
            }
        }
    }
    return false;
}

TripleVerdict triple_clonability(std::span<const GhzLabel> triple) {
    TripleVerdict verdict;
    verdict.witness_cut = bell_triple_cut(triple);
    if (verdict.witness_cut) {
        return verdict;
    }
    try {
        verdict.circuit = synthesize_cloner(triple);
    } catch (const NoCircuitFound &e) {
        throw InconsistentVerdict(
            fmt::format("no Bell-type cut exists but synthesis failed: {}", e.what()));
    }
    verdict.clonable = true;
    return verdict;
}

std::vector<std::array<GhzLabel, 2>> all_ghz_pairs() {
    const auto labels = all_ghz_labels();
    std::vector<std::array<GhzLabel, 2>> out;
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            out.push_back({labels[a], labels[b]});
        }
    }
    return out;
}

std::vector<std::array<GhzLabel, 3>> all_ghz_triples() {
    const auto labels = all_ghz_labels();
    std::vector<std::array<GhzLabel, 3>> out;
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            for (std::size_t c = b + 1; c < labels.size(); ++c) {
                out.push_back({labels[a], labels[b], labels[c]});
            }
        }
    }
    return out;
}

}  // namespace locclone
