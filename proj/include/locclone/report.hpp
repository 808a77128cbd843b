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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locclone/ghz_cloning.hpp"
#include "locclone/w_audit.hpp"

namespace locclone {

inline constexpr const char *kToolVersion = "0.1.0";

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(const std::string &name);
std::string to_string(OutputFormat f);

struct RunConfig {
    double rank_tol = kRankTol;
    double fidelity_tol = kCloneFidelityTol;
    double match_tol = 1e-3;
    double step = 0.02;
    double radius = 0.05;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Table;
    std::optional<std::string> out_path;

    /// Throws InvalidArgument on non-positive tolerances or a bad step.
    void validate() const;
};

struct GhzCloneRow {
    std::vector<GhzLabel> states;
    GhzLabel blank;
    std::string circuit;  // listing, one gate per line
    std::map<GhzLabel, double> fidelities;
    bool verified = false;
};

struct GhzTripleRow {
    std::array<GhzLabel, 3> triple;
    bool clonable = false;
    std::optional<std::string> witness_cut;
    std::string circuit;
    double min_fidelity = 0.0;
    bool verified = false;
};

struct AuditRow {
    AuditRecord record;
    std::optional<ReferenceNegativity> reference;
    bool matches_reference = true;
    bool increases = false;
};

/// Reference classification: category and, for A/B pairs, the expected k.
struct TaxonomyEntry {
    int m;
    int n;
    PairCategory category;
    std::optional<int> k;
};
const std::vector<TaxonomyEntry> &reference_taxonomy();

struct ReportBundle {
    std::string tool_version = kToolVersion;
    RunConfig config;
    std::vector<GhzCloneRow> ghz_pairs;
    std::vector<GhzTripleRow> ghz_triples;
    std::vector<PairClassification> w_classification;
    std::vector<AuditRow> audits;
    std::optional<ScanReport> scan;
    std::vector<std::string> notes;
    /// Set when any verification failed; drives exit status 1.
    bool failed = false;
};

GhzCloneRow clone_row(std::span<const GhzLabel> states, const GhzLabel &blank,
                      const RunConfig &config);

void add_ghz_pairs(ReportBundle &bundle);
void add_ghz_triples(ReportBundle &bundle);
void add_w_classification(ReportBundle &bundle);
/// Audits `pairs` (all 28 when empty) with the given blank.
void add_audits(ReportBundle &bundle, WBasisIndex blank,
                std::vector<std::pair<WBasisIndex, WBasisIndex>> pairs = {});
void add_scan(ReportBundle &bundle);

/// Every analysis at the bundle's config.
ReportBundle full_report(const RunConfig &config);

std::string emit_report(const ReportBundle &bundle, OutputFormat format);

}  // namespace locclone
