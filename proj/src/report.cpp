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

#include "locclone/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace locclone {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::string labels_str(std::span<const GhzLabel> labels) {
    std::vector<std::string> parts;
    for (const auto &l : labels) {
        parts.push_back("(" + l.str() + ")");
    }
    return fmt::format("{}", fmt::join(parts, " "));
}

// Reals in machine-readable outputs.
std::string real12(double x) { return fmt::format("{:.12g}", x); }
// Reals in human tables.
std::string real6(double x) { return fmt::format("{:.6g}", x); }

ojson config_json(const RunConfig &c) {
    ojson j;
    j["rank_tol"] = c.rank_tol;
    j["fidelity_tol"] = c.fidelity_tol;
    j["match_tol"] = c.match_tol;
    j["step"] = c.step;
    j["radius"] = c.radius;
    j["seed"] = c.seed;
    j["format"] = to_string(c.format);
    return j;
}

ojson scan_json(const ScanReport &s) {
    ojson j;
    j["step"] = s.step;
    j["exclusion_radius"] = s.exclusion_radius;
    j["seed"] = s.seed;
    j["threshold_bits"] = w_threshold_bits();
    j["points_tested"] = s.points_tested;
    j["points_excluded"] = s.points_excluded;
    j["max_min_cut_entropy"] = s.max_min_cut_entropy;
    j["cross_checks"] = s.cross_checks;
    j["max_cross_check_error"] = s.max_cross_check_error;
    j["w_point_entropies"] = s.w_point_entropies;
    ojson v = ojson::array();
    for (const auto &x : s.violations) {
        v.push_back({{"a", x.a},
                     {"b", x.b},
                     {"c", x.c},
                     {"d", x.d},
                     {"cut", x.cut_index},
                     {"entropy_bits", x.entropy_bits}});
    }
    j["violations"] = v;
    return j;
}

std::string to_json(const ReportBundle &b) {
    ojson doc;
    doc["tool_version"] = b.tool_version;
    doc["config"] = config_json(b.config);

    ojson pairs = ojson::array();
    for (const auto &row : b.ghz_pairs) {
        ojson r;
        ojson states = ojson::array();
        for (const auto &s : row.states) {
            states.push_back(s.str());
        }
        r["states"] = states;
        r["blank"] = row.blank.str();
        r["circuit"] = lines_of(row.circuit);
        ojson fid;
        for (const auto &[label, f] : row.fidelities) {
            fid[label.str()] = f;
        }
        r["fidelities"] = fid;
        r["verified"] = row.verified;
        pairs.push_back(r);
    }
    doc["ghz_pairs"] = pairs;

    ojson triples = ojson::array();
    for (const auto &row : b.ghz_triples) {
        ojson r;
        r["triple"] = {row.triple[0].str(), row.triple[1].str(), row.triple[2].str()};
        r["clonable"] = row.clonable;
        r["witness_cut"] = row.witness_cut ? ojson(*row.witness_cut) : ojson(nullptr);
        r["circuit"] = lines_of(row.circuit);
        r["min_fidelity"] = row.clonable ? ojson(row.min_fidelity) : ojson(nullptr);
        r["verified"] = row.verified;
        triples.push_back(r);
    }
    doc["ghz_triples"] = triples;

    ojson cls = ojson::array();
    for (const auto &c : b.w_classification) {
        cls.push_back({{"m", c.m.str()},
                       {"n", c.n.str()},
                       {"category", to_string(c.category)},
                       {"witness_k", c.witness_k},
                       {"span_dim", c.span_dim},
                       {"span_dims", c.span_dims},
                       {"commutators", c.commutators}});
    }
    doc["w_classification"] = cls;

    ojson audits = ojson::array();
    for (const auto &row : b.audits) {
        const auto &a = row.record;
        ojson r;
        r["m"] = a.m.str();
        r["n"] = a.n.str();
        r["category"] = to_string(a.category);
        r["witness_k"] = a.witness_k;
        r["form"] = a.form ? ojson(to_string(*a.form)) : ojson(nullptr);
        r["negativity_in"] = a.negativity_in;
        r["negativity_out"] = a.negativity_out;
        r["blank"] = a.blank.str();
        r["reference_in"] = row.reference ? ojson(row.reference->in) : ojson(nullptr);
        r["reference_out"] = row.reference ? ojson(row.reference->out) : ojson(nullptr);
        r["matches_reference"] = row.matches_reference;
        r["increases"] = row.increases;
        audits.push_back(r);
    }
    doc["pairs"] = audits;
    doc["scan"] = b.scan ? scan_json(*b.scan) : ojson(nullptr);
    doc["notes"] = b.notes;
    doc["status"] = b.failed ? "failed" : "ok";
    return doc.dump(2) + "\n";
}

std::string to_csv(const ReportBundle &b) {
    std::string out;
    out += fmt::format("# tool_version,{}\n", b.tool_version);
    if (!b.ghz_pairs.empty()) {
        out += "# ghz_pairs\nstates,blank,circuit,min_fidelity,verified\n";
        for (const auto &row : b.ghz_pairs) {
            double min_f = 1.0;
            for (const auto &[label, f] : row.fidelities) {
                min_f = std::min(min_f, f);
            }
            auto circuit = lines_of(row.circuit);
            out += fmt::format("\"{}\",{},\"{}\",{},{}\n", labels_str(row.states), row.blank.str(),
                               fmt::join(circuit, "; "), real12(min_f), row.verified);
        }
    }
    if (!b.ghz_triples.empty()) {
        out += "# ghz_triples\ntriple,clonable,witness_cut,circuit,min_fidelity,verified\n";
        for (const auto &row : b.ghz_triples) {
            auto circuit = lines_of(row.circuit);
            out += fmt::format("\"{}\",{},{},\"{}\",{},{}\n", labels_str(row.triple), row.clonable,
                               row.witness_cut.value_or(""), fmt::join(circuit, "; "),
                               row.clonable ? real12(row.min_fidelity) : "", row.verified);
        }
    }
    if (!b.w_classification.empty()) {
        out += "# w_classification\nm,n,category,witness_k,span_dim,span_k1,span_k2,span_k3\n";
        for (const auto &c : b.w_classification) {
            out += fmt::format("{},{},{},{},{},{},{},{}\n", c.m.str(), c.n.str(),
                               to_string(c.category), c.witness_k, c.span_dim, c.span_dims[0],
                               c.span_dims[1], c.span_dims[2]);
        }
    }
    if (!b.audits.empty()) {
        out += "# pairs\nm,n,category,witness_k,form,negativity_in,negativity_out,blank,"
               "reference_in,reference_out,matches_reference,increases\n";
        for (const auto &row : b.audits) {
            const auto &a = row.record;
            out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", a.m.str(), a.n.str(),
                               to_string(a.category), a.witness_k,
                               a.form ? to_string(*a.form) : "", real12(a.negativity_in),
                               real12(a.negativity_out), a.blank.str(),
                               row.reference ? real12(row.reference->in) : "",
                               row.reference ? real12(row.reference->out) : "",
                               row.matches_reference, row.increases);
        }
    }
    if (b.scan) {
        const auto &s = *b.scan;
        out += "# scan\nstep,exclusion_radius,seed,points_tested,points_excluded,violations,"
               "max_min_cut_entropy,threshold_bits,cross_checks,max_cross_check_error\n";
        out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", real12(s.step),
                           real12(s.exclusion_radius), s.seed, s.points_tested, s.points_excluded,
                           s.violations.size(), real12(s.max_min_cut_entropy),
                           real12(w_threshold_bits()), s.cross_checks,
                           real12(s.max_cross_check_error));
    }
    for (const auto &note : b.notes) {
        out += fmt::format("# note,\"{}\"\n", note);
    }
    out += fmt::format("# status,{}\n", b.failed ? "failed" : "ok");
    return out;
}

std::string to_table(const ReportBundle &b) {
    std::string out;
    if (!b.ghz_pairs.empty()) {
        out += "GHZ cloning circuits\n";
        for (const auto &row : b.ghz_pairs) {
            out += fmt::format("states {}  blank ({})  {}\n", labels_str(row.states),
                               row.blank.str(), row.verified ? "verified" : "FAILED");
            for (const auto &line : lines_of(row.circuit)) {
                out += "  " + line + "\n";
            }
            for (const auto &[label, f] : row.fidelities) {
                out += fmt::format("  fidelity ({}) = {}\n", label.str(), real6(f));
            }
        }
    }
    if (!b.ghz_triples.empty()) {
        out += fmt::format("{:<26}{:<10}{:<14}{}\n", "triple", "clonable", "witness", "circuit");
        for (const auto &row : b.ghz_triples) {
            auto circuit = lines_of(row.circuit);
            out += fmt::format("{:<26}{:<10}{:<14}{}\n", labels_str(row.triple),
                               row.clonable ? "yes" : "no", row.witness_cut.value_or("-"),
                               fmt::join(circuit, "; "));
        }
    }
    if (!b.w_classification.empty()) {
        out += fmt::format("{:<10}{:<10}{:<4}{:<12}\n", "pair", "category", "k", "span(k=1,2,3)");
        for (const auto &c : b.w_classification) {
            out += fmt::format("{:<10}{:<10}{:<4}{},{},{}\n", fmt::format("{},{}", c.m.str(), c.n.str()),
                               to_string(c.category), c.witness_k, c.span_dims[0], c.span_dims[1],
                               c.span_dims[2]);
        }
    }
    if (!b.audits.empty()) {
        out += fmt::format("{:<10}{:<5}{:<3}{:<6}{:<12}{:<12}{:<7}{}\n", "pair", "cat", "k",
                           "form", "N_in", "N_out", "blank", "reference");
        for (const auto &row : b.audits) {
            const auto &a = row.record;
            const std::string ref =
                row.reference ? fmt::format("{} / {} {}", real6(row.reference->in),
                                            real6(row.reference->out),
                                            row.matches_reference ? "match" : "MISMATCH")
                              : "-";
            out += fmt::format("{:<10}{:<5}{:<3}{:<6}{:<12}{:<12}{:<7}{}\n",
                               fmt::format("{},{}", a.m.str(), a.n.str()), to_string(a.category),
                               a.witness_k, a.form ? to_string(*a.form) : "-",
                               real6(a.negativity_in), real6(a.negativity_out), a.blank.str(), ref);
        }
    }
    if (b.scan) {
        const auto &s = *b.scan;
        out += fmt::format("W-class scan: step {} radius {}\n", real6(s.step),
                           real6(s.exclusion_radius));
        out += fmt::format("  points tested {}  excluded {}  violations {}\n", s.points_tested,
                           s.points_excluded, s.violations.size());
        out += fmt::format("  max min-cut entropy {}  threshold {}\n", real6(s.max_min_cut_entropy),
                           real6(w_threshold_bits()));
        out += fmt::format("  W point entropies {} {} {}\n", real6(s.w_point_entropies[0]),
                           real6(s.w_point_entropies[1]), real6(s.w_point_entropies[2]));
        out += fmt::format("  cross-checks {}  max error {:.3g}\n", s.cross_checks,
                           s.max_cross_check_error);
    }
    for (const auto &note : b.notes) {
        out += "note: " + note + "\n";
    }
    return out;
}

}  // namespace

OutputFormat parse_format(const std::string &name) {
    if (name == "table") {
        return OutputFormat::Table;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    throw InvalidArgument(fmt::format("unknown format '{}' (table, json, csv)", name));
}

std::string to_string(OutputFormat f) {
    switch (f) {
    case OutputFormat::Table: return "table";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    }
    return "table";
}

void RunConfig::validate() const {
    if (!(rank_tol > 0.0 && fidelity_tol > 0.0 && match_tol > 0.0)) {
        throw InvalidArgument("tolerances must be positive");
    }
    if (!(step > 0.0 && step <= 0.1)) {
        throw InvalidArgument(fmt::format("step {} outside (0, 0.1]", step));
    }
    if (!(radius >= 0.0)) {
        throw InvalidArgument("radius must be nonnegative");
    }
}

const std::vector<TaxonomyEntry> &reference_taxonomy() {
    using C = PairCategory;
    static const std::vector<TaxonomyEntry> table = [] {
        std::vector<TaxonomyEntry> t{
            {1, 2, C::A, 2}, {3, 6, C::A, 2}, {1, 4, C::A, 1}, {6, 7, C::A, 1},
            {2, 7, C::A, 3}, {3, 4, C::A, 3}, {1, 6, C::B, 3}, {1, 8, C::B, 3},
            {5, 6, C::B, 3}, {5, 8, C::B, 3}, {2, 3, C::B, 1}, {2, 5, C::B, 1},
            {3, 8, C::B, 1}, {4, 5, C::B, 2}, {4, 7, C::B, 2}, {7, 8, C::B, 2},
            {1, 3, C::C, {}}, {1, 5, C::C, {}}, {1, 7, C::C, {}}, {2, 4, C::C, {}},
            {2, 6, C::C, {}}, {2, 8, C::C, {}}, {3, 5, C::C, {}}, {3, 7, C::C, {}},
            {4, 6, C::C, {}}, {4, 8, C::C, {}}, {5, 7, C::C, {}}, {6, 8, C::C, {}},
        };
        std::sort(t.begin(), t.end(), [](const auto &x, const auto &y) {
            return std::pair(x.m, x.n) < std::pair(y.m, y.n);
        });
        return t;
    }();
    return table;
}

GhzCloneRow clone_row(std::span<const GhzLabel> states, const GhzLabel &blank,
                      const RunConfig &config) {
    GhzCloneRow row;
    row.states.assign(states.begin(), states.end());
    row.blank = blank;
    const auto circuit = synthesize_cloner(states, blank);
    row.circuit = circuit.listing();
    row.fidelities = verify_cloner(circuit, states);
    row.verified = circuit.is_local() &&
                   std::all_of(row.fidelities.begin(), row.fidelities.end(), [&](const auto &kv) {
                       return kv.second >= 1.0 - config.fidelity_tol;
                   });
    return row;
}

void add_ghz_pairs(ReportBundle &bundle) {
    for (const auto &pair : all_ghz_pairs()) {
        try {
            bundle.ghz_pairs.push_back(clone_row(pair, GhzLabel{}, bundle.config));
        } catch (const NoCircuitFound &e) {
            GhzCloneRow row;
            row.states.assign(pair.begin(), pair.end());
            bundle.ghz_pairs.push_back(row);
            bundle.notes.push_back(e.what());
        }
        if (!bundle.ghz_pairs.back().verified) {
            bundle.failed = true;
        }
    }
}

void add_ghz_triples(ReportBundle &bundle) {
    const Bipartition cut12_3(3, {2});
    for (const auto &triple : all_ghz_triples()) {
        GhzTripleRow row;
        row.triple = triple;
        try {
            const auto verdict = triple_clonability(triple);
            row.clonable = verdict.clonable;
            if (verdict.witness_cut) {
                row.witness_cut = verdict.witness_cut->label();
                row.verified = true;
            }
            if (verdict.circuit) {
                row.circuit = verdict.circuit->listing();
                const auto fid = verify_cloner(*verdict.circuit, triple);
                row.min_fidelity = 1.0;
                for (const auto &[label, f] : fid) {
                    row.min_fidelity = std::min(row.min_fidelity, f);
                }
                row.verified = verdict.circuit->is_local() &&
                               row.min_fidelity >= 1.0 - bundle.config.fidelity_tol;
            }
            const bool fires_12_3 = verdict.witness_cut && *verdict.witness_cut == cut12_3;
            if (fires_12_3 != bell_label_pattern(triple, 3)) {
                bundle.notes.push_back(fmt::format(
                    "triple {}: label pattern and cut {{1,2}}|{{3}} criterion disagree",
                    labels_str(triple)));
                row.verified = false;
            }
        } catch (const InconsistentVerdict &e) {
            bundle.notes.push_back(e.what());
        }
        if (!row.verified) {
            bundle.failed = true;
        }
        bundle.ghz_triples.push_back(std::move(row));
    }
}

void add_w_classification(ReportBundle &bundle) {
    bundle.w_classification = classify_all_pairs();
    const auto &reference = reference_taxonomy();
    for (std::size_t t = 0; t < reference.size(); ++t) {
        const auto &ref = reference[t];
        const auto &got = bundle.w_classification[t];
        const bool same_category = got.category == ref.category;
        const bool same_k = !ref.k || *ref.k == got.witness_k;
        if (!same_category || !same_k) {
            bundle.notes.push_back(fmt::format(
                "pair (W{},W{}): classified {} k={}, reference {} k={}", ref.m, ref.n,
                to_string(got.category), got.witness_k, to_string(ref.category),
                ref.k ? std::to_string(*ref.k) : "-"));
            bundle.failed = true;
        }
    }
}

void add_audits(ReportBundle &bundle, WBasisIndex blank,
                std::vector<std::pair<WBasisIndex, WBasisIndex>> pairs) {
    if (pairs.empty()) {
        for (int m = 1; m <= 8; ++m) {
            for (int n = m + 1; n <= 8; ++n) {
                pairs.emplace_back(WBasisIndex(m), WBasisIndex(n));
            }
        }
    }
    for (const auto &[m, n] : pairs) {
        AuditRow row{negativity_audit(m, n, blank), std::nullopt, true, false};
        const auto &rec = row.record;
        row.increases = rec.negativity_out > rec.negativity_in;
        if (blank == WBasisIndex(1)) {
            row.reference = reference_negativity(rec.category, rec.form);
        }
        if (row.reference) {
            const double din = std::abs(rec.negativity_in - row.reference->in);
            const double dout = std::abs(rec.negativity_out - row.reference->out);
            row.matches_reference =
                din <= bundle.config.match_tol && dout <= bundle.config.match_tol;
            if (!row.matches_reference) {
                bundle.notes.push_back(fmt::format(
                    "pair ({},{}): negativities {} / {} differ from reference {} / {}",
                    rec.m.str(), rec.n.str(), real12(rec.negativity_in),
                    real12(rec.negativity_out), real12(row.reference->in),
                    real12(row.reference->out)));
                bundle.failed = true;
            }
        }
        if (rec.category != PairCategory::A && !row.increases) {
            bundle.notes.push_back(fmt::format("pair ({},{}): negativity does not increase",
                                               rec.m.str(), rec.n.str()));
            bundle.failed = true;
        }
        bundle.audits.push_back(row);
    }
}

void add_scan(ReportBundle &bundle) {
    const auto &c = bundle.config;
    bundle.scan = lemma_scan(c.step, c.radius, c.seed);
    const auto &s = *bundle.scan;
    if (!s.violations.empty()) {
        bundle.notes.push_back(
            fmt::format("scan found {} points at or above the threshold", s.violations.size()));
        bundle.failed = true;
    }
    for (double e : s.w_point_entropies) {
        if (std::abs(e - w_threshold_bits()) > 1e-9) {
            bundle.notes.push_back("W point entropy differs from the threshold");
            bundle.failed = true;
        }
    }
    if (s.max_cross_check_error > 1e-10) {
        bundle.notes.push_back(fmt::format("closed-form spectra disagree with partial traces by {:.3g}",
                                           s.max_cross_check_error));
        bundle.failed = true;
    }
}

ReportBundle full_report(const RunConfig &config) {
    ReportBundle bundle;
    bundle.config = config;
    add_ghz_pairs(bundle);
    add_ghz_triples(bundle);
    add_w_classification(bundle);
    add_audits(bundle, WBasisIndex(1));
    add_scan(bundle);
    return bundle;
}

std::string emit_report(const ReportBundle &bundle, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: return to_json(bundle);
    case OutputFormat::Csv: return to_csv(bundle);
    case OutputFormat::Table: return to_table(bundle);
    }
    return {};
}

}  // namespace locclone
