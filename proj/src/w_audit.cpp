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

#include "locclone/w_audit.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

namespace locclone {

namespace {

constexpr double kCommutatorTol = 1e-10;
constexpr double kStructureTol = 1e-9;
constexpr double kLemmaSlack = 1e-12;

void check_k(int k) {
    if (k < 1 || k > 3) {
        throw InvalidArgument(fmt::format("qubit index k = {} outside 1..3", k));
    }
}

std::vector<int> other_qubits(int k) {
    std::vector<int> out;
    for (int q = 0; q < 3; ++q) {
        if (q != k - 1) {
            out.push_back(q);
        }
    }
    return out;
}

// Two-qubit reduction with qubit k traced out.
DensityMatrix reduction(WBasisIndex w, int k) {
    const std::array<int, 1> gone{k - 1};
    return partial_trace(density(w_basis(w)), gone);
}

std::string pair_name(WBasisIndex m, WBasisIndex n) {
    return fmt::format("({},{})", m.str(), n.str());
}

// Lab-A vector <e|_k |psi> for a single-qubit vector e on qubit k.
Eigen::Vector4cd contract_qubit(const StateVector &psi, int k, const Eigen::Vector2cd &e) {
    const auto side_a = other_qubits(k);
    Eigen::Vector4cd out = Eigen::Vector4cd::Zero();
    for (unsigned t = 0; t < 4; ++t) {
        unsigned base = 0;
        if (t & 0b10U) {
            base |= 1U << (2 - side_a[0]);
        }
        if (t & 0b01U) {
            base |= 1U << (2 - side_a[1]);
        }
        for (unsigned x = 0; x < 2; ++x) {
            const unsigned idx = base | (x << (2 - (k - 1)));
            out(t) += std::conj(e(x)) * psi[idx];
        }
    }
    return out;
}

TwoLevelStructure two_level(WBasisIndex m, WBasisIndex n, int k, double &n_offdiag) {
    const auto psi_m = w_basis(m);
    const auto psi_n = w_basis(n);
    const auto rest = other_qubits(k);
    const auto marginal_m = partial_trace(density(psi_m), rest);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(marginal_m.matrix());
    const Eigen::Matrix2cd basis = solver.eigenvectors();  // ascending weight

    TwoLevelStructure s{};
    s.k = k;
    std::array<Eigen::Vector4cd, 2> am;
    std::array<Eigen::Vector4cd, 2> an;
    for (int b = 0; b < 2; ++b) {
        am[b] = contract_qubit(psi_m, k, basis.col(b));
        an[b] = contract_qubit(psi_n, k, basis.col(b));
        s.weights_m[b] = am[b].squaredNorm();
        s.weights_n[b] = an[b].squaredNorm();
    }
    n_offdiag = std::abs(an[0].dot(an[1]));
    for (int b = 0; b < 2; ++b) {
        am[b].normalize();
        an[b].normalize();
    }
    for (int b = 0; b < 2; ++b) {
        for (int c = 0; c < 2; ++c) {
            s.overlaps[b][c] = am[b].dot(an[c]);
        }
    }
    return s;
}

double weight_defect(const TwoLevelStructure &s) {
    return std::max({std::abs(s.weights_m[0] - 1.0 / 3.0), std::abs(s.weights_m[1] - 2.0 / 3.0),
                     std::abs(s.weights_n[0] - 2.0 / 3.0), std::abs(s.weights_n[1] - 1.0 / 3.0)});
}

CutSpectrum direct_cut_spectrum(const StateVector &psi, int cut_index) {
    const auto marginal = partial_trace(density(psi), other_qubits(cut_index));
    const auto ev = hermitian_spectrum(marginal);  // descending
    return {ev[1], ev[0]};
}

}  // namespace

std::string to_string(PairCategory c) {
    switch (c) {
    case PairCategory::A: return "A";
    case PairCategory::B: return "B";
    case PairCategory::C: return "C";
    }
    return "?";
}

std::string to_string(BForm f) { return f == BForm::I ? "I" : "II"; }

PairClassification classify_pair(WBasisIndex m, WBasisIndex n) {
    if (m == n) {
        throw InvalidArgument(fmt::format("pair {} repeats a state", pair_name(m, n)));
    }
    PairClassification out{m, n, PairCategory::C, 0, 5, {}, {}};
    for (int k = 1; k <= 3; ++k) {
        const auto rm = reduction(m, k);
        const auto rn = reduction(n, k);
        out.span_dims[k - 1] = support_span_dim(rm, rn);
        out.commutators[k - 1] = commutator_norm(rm, rn);
        out.span_dim = std::min(out.span_dim, out.span_dims[k - 1]);
    }
    auto largest_k = [&](auto pred) {
        for (int k = 3; k >= 1; --k) {
            if (pred(k)) {
                return k;
            }
        }
        return 0;
    };
    if (out.span_dim == 2) {
        out.category = PairCategory::A;
        out.witness_k = largest_k([&](int k) { return out.span_dims[k - 1] == 2; });
    } else if (out.span_dim == 3) {
        out.category = PairCategory::B;
        out.witness_k = largest_k([&](int k) { return out.span_dims[k - 1] == 3; });
    } else {
        out.category = PairCategory::C;
        out.witness_k = largest_k([&](int k) {
            return out.span_dims[k - 1] == 4 && out.commutators[k - 1] > kCommutatorTol;
        });
        if (out.witness_k == 0) {
            throw StructureMismatch(
                fmt::format("pair {} has no noncommuting full-span cut", pair_name(m, n)));
        }
    }
    return out;
}

std::vector<PairClassification> classify_all_pairs() {
    std::vector<PairClassification> out;
    for (int m = 1; m <= 8; ++m) {
        for (int n = m + 1; n <= 8; ++n) {
            out.push_back(classify_pair(WBasisIndex(m), WBasisIndex(n)));
        }
    }
    return out;
}

BTypeForm btype_form(WBasisIndex m, WBasisIndex n, int k) {
    check_k(k);
    const auto cls = classify_pair(m, n);
    if (cls.category != PairCategory::B || cls.span_dims[k - 1] != 3) {
        throw StructureMismatch(
            fmt::format("pair {} is not B-type with k = {}", pair_name(m, n), k));
    }
    const auto rm = reduction(m, k);
    const auto rn = reduction(n, k);

    auto support = [](const DensityMatrix &rho) {
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix());
        std::vector<Eigen::Index> cols;
        for (Eigen::Index c = 0; c < solver.eigenvalues().size(); ++c) {
            if (solver.eigenvalues()(c) > kRankTol) {
                cols.push_back(c);
            }
        }
        CMatrix basis(rho.matrix().rows(), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t t = 0; t < cols.size(); ++t) {
            basis.col(static_cast<Eigen::Index>(t)) = solver.eigenvectors().col(cols[t]);
        }
        return basis;
    };
    const CMatrix sm = support(rm);
    const CMatrix sn = support(rn);

    // x with sm * x_m = sn * x_n  <=>  [sm, -sn] x = 0
    CMatrix stacked(sm.rows(), sm.cols() + sn.cols());
    stacked << sm, -sn;
    Eigen::JacobiSVD<CMatrix> svd(stacked, Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    std::vector<Eigen::Index> null_cols;
    for (Eigen::Index c = 0; c < stacked.cols(); ++c) {
        const double s = c < sv.size() ? sv(c) : 0.0;
        if (s < kStructureTol) {
            null_cols.push_back(c);
        }
    }
    if (null_cols.size() != 1) {
        throw StructureMismatch(fmt::format("pair {}: supports share {} directions, expected 1",
                                            pair_name(m, n), null_cols.size()));
    }
    const CVector x = svd.matrixV().col(null_cols.front());
    CVector v = sm * x.head(sm.cols());
    v.normalize();

    BTypeForm out{};
    out.weight_m = std::real(v.dot(rm.matrix() * v));
    out.weight_n = std::real(v.dot(rn.matrix() * v));
    out.shared_direction_weight = 0.5 * (out.weight_m + out.weight_n);
    auto near = [](double a, double b) { return std::abs(a - b) < kStructureTol; };
    if (near(out.weight_m, 2.0 / 3.0) && near(out.weight_n, 2.0 / 3.0)) {
        out.form = BForm::I;
    } else if (near(out.weight_m, 1.0 / 3.0) && near(out.weight_n, 1.0 / 3.0)) {
        out.form = BForm::II;
    } else {
        throw StructureMismatch(fmt::format("pair {}: shared direction weights {:.12g}, {:.12g}",
                                            pair_name(m, n), out.weight_m, out.weight_n));
    }
    return out;
}

TwoLevelStructure atype_structure(WBasisIndex m, WBasisIndex n, int k) {
    check_k(k);
    const auto cls = classify_pair(m, n);
    if (cls.category != PairCategory::A || cls.span_dims[k - 1] != 2) {
        throw StructureMismatch(
            fmt::format("pair {} is not A-type with k = {}", pair_name(m, n), k));
    }
    double n_offdiag = 0.0;
    auto s = two_level(m, n, k, n_offdiag);
    s.residual = std::max({weight_defect(s), n_offdiag,
                           std::abs(1.0 - std::abs(s.overlaps[0][1])),
                           std::abs(1.0 - std::abs(s.overlaps[1][0])),
                           std::abs(s.overlaps[0][0]), std::abs(s.overlaps[1][1])});
    if (s.residual > kStructureTol) {
        throw StructureMismatch(fmt::format("pair {}: A-type pattern off by {:.3g}",
                                            pair_name(m, n), s.residual));
    }
    return s;
}

TwoLevelStructure ctype_structure(WBasisIndex m, WBasisIndex n) {
    const auto cls = classify_pair(m, n);
    if (cls.category != PairCategory::C) {
        throw StructureMismatch(fmt::format("pair {} is not C-type", pair_name(m, n)));
    }
    double n_offdiag = 0.0;
    auto s = two_level(m, n, cls.witness_k, n_offdiag);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    s.residual = std::max({weight_defect(s), n_offdiag, std::abs(s.overlaps[0][1]),
                           std::abs(s.overlaps[1][0]),
                           std::abs(std::abs(s.overlaps[0][0]) - inv_sqrt2),
                           std::abs(s.overlaps[0][0] + s.overlaps[1][1])});
    if (s.residual > kStructureTol) {
        throw StructureMismatch(fmt::format("pair {}: C-type pattern off by {:.3g}",
                                            pair_name(m, n), s.residual));
    }
    return s;
}

ClonerIO cloner_io(WBasisIndex m, WBasisIndex n, int k, WBasisIndex blank) {
    check_k(k);
    if (m == n) {
        throw InvalidArgument(fmt::format("pair {} repeats a state", pair_name(m, n)));
    }
    const auto wm = w_basis(m);
    const auto wn = w_basis(n);
    const auto wb = w_basis(blank);
    const std::array<double, 2> half{0.5, 0.5};
    const std::array<DensityMatrix, 2> in_terms{density(tensor(wm, wb)), density(tensor(wn, wb))};
    const std::array<DensityMatrix, 2> out_terms{density(tensor(wm, wm)),
                                                 density(tensor(wn, wn))};
    return {mix(half, in_terms), mix(half, out_terms), Bipartition(6, {k - 1, k + 2})};
}

AuditRecord negativity_audit(WBasisIndex m, WBasisIndex n, WBasisIndex blank) {
    const auto cls = classify_pair(m, n);
    std::optional<BForm> form;
    if (cls.category == PairCategory::B) {
        form = btype_form(m, n, cls.witness_k).form;
    }
    const auto io = cloner_io(m, n, cls.witness_k, blank);
    return {m,
            n,
            cls.category,
            cls.witness_k,
            form,
            negativity(io.rho_in, io.cut),
            negativity(io.rho_out, io.cut),
            blank};
}

std::optional<ReferenceNegativity> reference_negativity(PairCategory category,
                                                        std::optional<BForm> form) {
    if (category == PairCategory::C) {
        return ReferenceNegativity{2.23802, 2.55185};
    }
    if (category == PairCategory::B && form == BForm::I) {
        return ReferenceNegativity{1.89097, 2.14597};
    }
    if (category == PairCategory::B && form == BForm::II) {
        return ReferenceNegativity{2.23802, 2.49298};
    }
    return std::nullopt;
}

InsufficiencyCertificate blank_insufficiency(const WClassParams &params) {
    const double third = 1.0 / 3.0;
    if (std::abs(params.a() - third) <= 1e-9 && std::abs(params.b() - third) <= 1e-9 &&
        std::abs(params.c() - third) <= 1e-9 && std::abs(params.d()) <= 1e-9) {
        throw WStatePoint("parameters describe the W state; every cut reaches the threshold");
    }
    const auto best = wclass_min_cut_entropy(params);
    if (!(best.entropy_bits < w_threshold_bits())) {
        throw WStatePoint(
            fmt::format("no cut below threshold (min entropy {:.12g})", best.entropy_bits));
    }
    return {params, best.cut_index, best.entropy_bits, w_threshold_bits()};
}

ScanReport lemma_scan(double step, double exclusion_radius, std::uint64_t seed) {
    if (!(step > 0.0 && step <= 0.1)) {
        throw InvalidArgument(fmt::format("scan step {} outside (0, 0.1]", step));
    }
    if (!(exclusion_radius >= 0.0)) {
        throw InvalidArgument("exclusion radius must be nonnegative");
    }
    ScanReport report{};
    report.step = step;
    report.exclusion_radius = exclusion_radius;
    report.seed = seed;

    const WClassParams w_point(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
    for (int k = 1; k <= 3; ++k) {
        const auto s = wclass_cut_spectrum(w_point, k);
        const std::array<double, 2> probs{s.minus, s.plus};
        report.w_point_entropies[static_cast<std::size_t>(k - 1)] = entropy_bits(probs);
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> sample(0, 99);
    const double threshold = w_threshold_bits();
    const double third = 1.0 / 3.0;
    const auto units = static_cast<int>(std::floor(1.0 / step + 1e-9));

    for (int ia = 1; ia <= units; ++ia) {
        for (int ib = 1; ia + ib <= units; ++ib) {
            for (int ic = 1; ia + ib + ic <= units; ++ic) {
                const WClassParams params(ia * step, ib * step, ic * step);
                const double d = std::max(params.d(), 0.0);
                const double dist = std::abs(params.a() - third) + std::abs(params.b() - third) +
                                    std::abs(params.c() - third) + d;
                if (dist <= exclusion_radius) {
                    ++report.points_excluded;
                    continue;
                }
                ++report.points_tested;
                const auto best = wclass_min_cut_entropy(params);
                report.max_min_cut_entropy = std::max(report.max_min_cut_entropy, best.entropy_bits);
                if (best.entropy_bits >= threshold - kLemmaSlack) {
                    report.violations.push_back({params.a(), params.b(), params.c(), d,
                                                 best.cut_index, best.entropy_bits});
                }
                if (sample(rng) == 0) {
                    const auto psi = w_class(params);
                    for (int k = 1; k <= 3; ++k) {
                        const auto closed = wclass_cut_spectrum(params, k);
                        const auto direct = direct_cut_spectrum(psi, k);
                        report.max_cross_check_error =
                            std::max({report.max_cross_check_error,
                                      std::abs(closed.minus - direct.minus),
                                      std::abs(closed.plus - direct.plus)});
                    }
                    ++report.cross_checks;
                }
            }
        }
    }
    return report;
}

}  // namespace locclone
