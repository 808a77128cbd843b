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

#include "locclone/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "locclone/report.hpp"

namespace locclone {

namespace {

struct Options {
    RunConfig config;
    std::string format = "table";
    std::string out_path;

    std::vector<std::string> ghz_states;
    std::string ghz_blank = "0,0,0";
    std::vector<std::string> ghz_triple;
    bool all = false;

    std::string w_pair;
    std::string w_blank = "W1";
    std::string w_params;

    std::string state_spec;
    std::string cut_spec;
};

void add_common(CLI::App *cmd, Options &o) {
    cmd->add_option("--format", o.format, "Output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--out", o.out_path, "Write the report to this path");
    cmd->add_option("--seed", o.config.seed, "Seed for randomized cross-checks");
    cmd->add_option("--tol", o.config.fidelity_tol, "Clone fidelity tolerance");
    cmd->add_option("--match-tol", o.config.match_tol,
                    "Allowed deviation from reference negativities");
    cmd->add_option("--step", o.config.step, "Lemma scan grid step");
    cmd->add_option("--radius", o.config.radius, "Lemma scan exclusion radius (L1)");
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string tok; std::getline(in, tok, sep);) {
        parts.push_back(tok);
    }
    return parts;
}

bool all_bits(const std::vector<std::string> &parts) {
    return std::all_of(parts.begin(), parts.end(),
                       [](const std::string &p) { return p == "0" || p == "1"; });
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument(fmt::format("cannot read '{}'", path));
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// GHZ "p,i,j" (optionally "ghz:"), "W1".."W8", W-class "a,b,c" (optionally
// "wclass:"), a JSON amplitude array, or "@file" holding one.
StateVector parse_state(const std::string &spec) {
    auto strip = [&](std::string_view prefix) -> std::optional<std::string> {
        if (spec.rfind(prefix, 0) == 0) {
            return spec.substr(prefix.size());
        }
        return std::nullopt;
    };
    if (auto rest = strip("ghz:")) {
        return ghz(GhzLabel::parse(*rest));
    }
    if (auto rest = strip("wclass:")) {
        return w_class(WClassParams::parse(*rest));
    }
    if (auto rest = strip("@")) {
        return state_from_json(read_file(*rest));
    }
    if (!spec.empty() && spec.front() == '[') {
        return state_from_json(spec);
    }
    if (!spec.empty() && (spec.front() == 'W' || spec.front() == 'w')) {
        return w_basis(WBasisIndex::parse(spec));
    }
    const auto parts = split(spec, ',');
    if (parts.size() == 3 && all_bits(parts)) {
        return ghz(GhzLabel::parse(spec));
    }
    if (parts.size() == 3) {
        return w_class(WClassParams::parse(spec));
    }
    throw InvalidArgument(fmt::format("unrecognized state '{}'", spec));
}

// 1-based qubit list for side B, e.g. "3" or "1,2".
Bipartition parse_cut(const std::string &spec, int n_qubits) {
    std::vector<int> side_b;
    for (const auto &tok : split(spec, ',')) {
        try {
            std::size_t used = 0;
            const int q = std::stoi(tok, &used);
            if (used != tok.size()) {
                throw std::invalid_argument("trailing characters");
            }
            side_b.push_back(q - 1);
        } catch (const std::exception &) {
            throw InvalidArgument(fmt::format("bad qubit '{}' in cut '{}'", tok, spec));
        }
    }
    return Bipartition(n_qubits, side_b);
}

std::pair<WBasisIndex, WBasisIndex> parse_pair(const std::string &spec) {
    const auto parts = split(spec, ',');
    if (parts.size() != 2) {
        throw InvalidArgument(fmt::format("pair '{}' must be m,n", spec));
    }
    const auto m = WBasisIndex::parse(parts[0]);
    const auto n = WBasisIndex::parse(parts[1]);
    if (m == n) {
        throw InvalidArgument(fmt::format("pair '{}' repeats a state", spec));
    }
    return {std::min(m, n), std::max(m, n)};
}

void write_output(const Options &o, const std::string &text, std::ostream &out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
        throw InvalidArgument(fmt::format("cannot write '{}'", o.out_path));
    }
    file << text;
}

std::string emit_measure(const std::string &quantity, const Options &o, double value,
                         const Bipartition &cut) {
    switch (o.config.format) {
    case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["quantity"] = quantity;
        j["state"] = o.state_spec;
        j["cut"] = cut.label();
        j["value"] = value;
        return j.dump(2) + "\n";
    }
    case OutputFormat::Csv:
        return fmt::format("quantity,state,cut,value\n{},\"{}\",{},{:.12g}\n", quantity,
                           o.state_spec, cut.label(), value);
    case OutputFormat::Table: break;
    }
    return fmt::format("{:.7g}\n", value);
}

}  // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Verification of local cloning claims for GHZ and W states", "locclone"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    auto *ghz_cmd = app.add_subcommand("ghz", "GHZ cloning circuits and triples");
    ghz_cmd->require_subcommand(1);
    auto *clone_cmd = ghz_cmd->add_subcommand("clone", "Synthesize and verify a cloner");
    clone_cmd->add_option("--states", o.ghz_states, "Two or three labels p,i,j")
        ->required()
        ->expected(2, 3);
    clone_cmd->add_option("--blank", o.ghz_blank, "Blank GHZ label");
    add_common(clone_cmd, o);
    auto *triples_cmd = ghz_cmd->add_subcommand("triples", "Clonability of GHZ triples");
    auto *all_flag = triples_cmd->add_flag("--all", o.all, "All 56 triples");
    triples_cmd->add_option("--triple", o.ghz_triple, "One triple of labels")
        ->expected(3)
        ->excludes(all_flag);
    add_common(triples_cmd, o);

    auto *w_cmd = app.add_subcommand("w", "W-basis no-go audit");
    w_cmd->require_subcommand(1);
    auto *classify_cmd = w_cmd->add_subcommand("classify", "Classify W pairs into A/B/C");
    auto *classify_all = classify_cmd->add_flag("--all", o.all, "All 28 pairs");
    classify_cmd->add_option("--pair", o.w_pair, "One pair m,n")->excludes(classify_all);
    add_common(classify_cmd, o);
    auto *audit_cmd = w_cmd->add_subcommand("audit", "Negativity audit of cloner input/output");
    audit_cmd->add_option("--pair", o.w_pair, "One pair m,n (default: all 28)");
    audit_cmd->add_option("--blank", o.w_blank, "W-basis blank (default W1)");
    add_common(audit_cmd, o);
    auto *lemma_cmd = w_cmd->add_subcommand("lemma", "Grid scan of W-class cut entropies");
    add_common(lemma_cmd, o);
    auto *blank_cmd = w_cmd->add_subcommand("blank-check", "Certify a W-class blank insufficient");
    blank_cmd->add_option("--params", o.w_params, "a,b,c")->required();
    add_common(blank_cmd, o);

    auto *measure_cmd = app.add_subcommand("measure", "Entanglement of a single state");
    measure_cmd->require_subcommand(1);
    auto *entropy_cmd = measure_cmd->add_subcommand("entropy", "Cut entropy in bits");
    auto *neg_cmd = measure_cmd->add_subcommand("negativity", "Negativity across a cut");
    for (auto *cmd : {entropy_cmd, neg_cmd}) {
        cmd->add_option("--state", o.state_spec, "p,i,j | W1..W8 | a,b,c | JSON | @file")
            ->required();
        cmd->add_option("--cut", o.cut_spec, "1-based qubits on side B, e.g. 3 or 1,2")
            ->required();
        add_common(cmd, o);
    }

    auto *report_cmd = app.add_subcommand("report", "Run every analysis");
    add_common(report_cmd, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << kToolVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitBadInput;
    }

    try {
        o.config.format = parse_format(o.format);
        o.config.validate();
        ReportBundle bundle;
        bundle.config = o.config;

        if (clone_cmd->parsed()) {
            std::vector<GhzLabel> states;
            for (const auto &s : o.ghz_states) {
                states.push_back(GhzLabel::parse(s));
            }
            const auto blank = GhzLabel::parse(o.ghz_blank);
            try {
                bundle.ghz_pairs.push_back(clone_row(states, blank, o.config));
                bundle.failed = !bundle.ghz_pairs.back().verified;
            } catch (const NoCircuitFound &e) {
                bundle.notes.push_back(e.what());
                bundle.failed = true;
            }
        } else if (triples_cmd->parsed()) {
            if (o.ghz_triple.empty()) {
                add_ghz_triples(bundle);
            } else {
                std::array<GhzLabel, 3> triple{};
                for (std::size_t t = 0; t < 3; ++t) {
                    triple[t] = GhzLabel::parse(o.ghz_triple[t]);
                }
                ReportBundle all;
                all.config = o.config;
                add_ghz_triples(all);
                std::sort(triple.begin(), triple.end());
                for (const auto &row : all.ghz_triples) {
                    if (row.triple == triple) {
                        bundle.ghz_triples.push_back(row);
                        bundle.failed = !row.verified;
                    }
                }
                if (bundle.ghz_triples.empty()) {
                    throw InvalidArgument("triple labels must be distinct");
                }
            }
        } else if (classify_cmd->parsed()) {
            add_w_classification(bundle);
            if (!o.w_pair.empty()) {
                const auto [m, n] = parse_pair(o.w_pair);
                std::erase_if(bundle.w_classification,
                              [&](const auto &c) { return !(c.m == m && c.n == n); });
            }
        } else if (audit_cmd->parsed()) {
            const auto blank = WBasisIndex::parse(o.w_blank);
            std::vector<std::pair<WBasisIndex, WBasisIndex>> pairs;
            if (!o.w_pair.empty()) {
                pairs.push_back(parse_pair(o.w_pair));
            }
            add_audits(bundle, blank, pairs);
        } else if (lemma_cmd->parsed()) {
            add_scan(bundle);
        } else if (blank_cmd->parsed()) {
            const auto params = WClassParams::parse(o.w_params);
            InsufficiencyCertificate cert = [&] {
                try {
                    return blank_insufficiency(params);
                } catch (const WStatePoint &e) {
                    throw InvalidArgument(e.what());
                }
            }();
            std::string text;
            if (o.config.format == OutputFormat::Json) {
                nlohmann::ordered_json j;
                j["params"] = {{"a", params.a()}, {"b", params.b()}, {"c", params.c()},
                               {"d", params.d()}};
                j["cut_index"] = cert.cut_index;
                j["blank_entropy_bits"] = cert.blank_entropy_bits;
                j["required_bits"] = cert.required_bits;
                text = j.dump(2) + "\n";
            } else if (o.config.format == OutputFormat::Csv) {
                text = fmt::format("a,b,c,d,cut_index,blank_entropy_bits,required_bits\n"
                                   "{:.12g},{:.12g},{:.12g},{:.12g},{},{:.12g},{:.12g}\n",
                                   params.a(), params.b(), params.c(), params.d(),
                                   cert.cut_index, cert.blank_entropy_bits, cert.required_bits);
            } else {
                text = fmt::format("cut {} (qubit {} alone): blank entropy {:.6g} < {:.6g} bits\n",
                                   single_qubit_cut(cert.cut_index).label(), cert.cut_index,
                                   cert.blank_entropy_bits, cert.required_bits);
            }
            write_output(o, text, out);
            return kExitOk;
        } else if (entropy_cmd->parsed() || neg_cmd->parsed()) {
            const auto state = parse_state(o.state_spec);
            const auto cut = parse_cut(o.cut_spec, state.n_qubits());
            const bool is_entropy = entropy_cmd->parsed();
            const double value = is_entropy ? cut_entropy(state, cut).entropy_bits
                                            : negativity(density(state), cut);
            write_output(o, emit_measure(is_entropy ? "entropy" : "negativity", o, value, cut),
                         out);
            return kExitOk;
        } else if (report_cmd->parsed()) {
            bundle = full_report(o.config);
        }

        write_output(o, emit_report(bundle, o.config.format), out);
        for (const auto &note : bundle.notes) {
            err << "note: " << note << "\n";
        }
        return bundle.failed ? kExitVerificationFailed : kExitOk;
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception &e) {
        err << "verification error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

}  // namespace locclone
