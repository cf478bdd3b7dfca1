#include "vedeg/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vedeg/alkane.hpp"
#include "vedeg/indices.hpp"
#include "vedeg/octane.hpp"
#include "vedeg/stats.hpp"
#include "vedeg/verifier.hpp"

namespace vedeg {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerifyFailure = 2;

std::string fixed(double v, int decimals) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string index_line(const IndexVector& iv) {
    std::ostringstream out;
    out << "W=" << iv.wiener << " M1=" << iv.m1 << " M2=" << iv.m2 << " F=" << iv.forgotten
        << " R=" << fixed(iv.randic, 3) << " S=" << iv.s_ev << " Salpha=" << iv.s_alpha
        << " Sbeta=" << iv.s_beta << " Smu=" << iv.s_mu << " Ralpha=" << fixed(iv.r_ve, 3)
        << " Te=" << iv.t_total;
    return out.str();
}

nlohmann::json index_json(const IndexVector& iv) {
    return {{"W", iv.wiener},     {"M1", iv.m1},          {"M2", iv.m2},
            {"F", iv.forgotten},  {"R", iv.randic},       {"S", iv.s_ev},
            {"Salpha", iv.s_alpha}, {"Sbeta", iv.s_beta}, {"Smu", iv.s_mu},
            {"Ralpha", iv.r_ve},  {"Te", iv.t_total}};
}

int cmd_compute(const std::string& graph_file, const std::string& smiles,
                const std::string& format, std::ostream& out) {
    Graph g = smiles.empty() ? read_edge_list_file(graph_file) : parse_alkane(smiles);
    const IndexVector iv = index_vector(g);
    if (format == "json")
        out << index_json(iv).dump() << '\n';
    else
        out << index_line(iv) << '\n';
    return kExitOk;
}

int cmd_parse(const std::string& smiles, std::istream& in, std::ostream& out) {
    if (!smiles.empty()) {
        write_edge_list(out, parse_alkane(smiles));
        return kExitOk;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        write_edge_list(out, parse_alkane(line, lineno));
    }
    return kExitOk;
}

// --- octanes tables ---------------------------------------------------------

void table1_markdown(std::ostream& out) {
    out << "| Molecule | Entropy | AcenFac | HVAP | DHVAP |\n|---|---|---|---|---|\n";
    for (const auto& rec : octane_isomers())
        out << "| " << rec.name << " | " << fixed(rec.entropy, 2) << " | "
            << fixed(rec.acen_fac, 5) << " | " << fixed(rec.hvap, 2) << " | "
            << fixed(rec.dhvap, 3) << " |\n";
}

void table3_row(std::ostream& out, const IndexVector& iv, const char* sep, const char* end) {
    out << iv.m1 << sep << iv.m2 << sep << iv.wiener << sep << fixed(iv.randic, 3) << sep
        << iv.s_ev << sep << iv.s_alpha << sep << iv.s_beta << sep << iv.s_mu << sep
        << fixed(iv.r_ve, 3) << end;
}

void table3_csv(std::ostream& out) {
    out << "Molecule,M1,M2,W,R,S,Salpha,Sbeta,Smu,Ralpha\n";
    for (const auto& rec : octane_isomers()) {
        out << csv_field(rec.name) << ',';
        table3_row(out, index_vector(rec.skeleton), ",", "\n");
    }
}

void table3_markdown(std::ostream& out) {
    out << "| Molecule | M1 | M2 | W | R | S | Salpha | Sbeta | Smu | Ralpha |\n"
        << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& rec : octane_isomers()) {
        out << "| " << rec.name << " | ";
        table3_row(out, index_vector(rec.skeleton), " | ", " |\n");
    }
}

nlohmann::json table3_json() {
    auto arr = nlohmann::json::array();
    for (const auto& rec : octane_isomers()) {
        auto j = index_json(index_vector(rec.skeleton));
        j["name"] = rec.name;
        arr.push_back(std::move(j));
    }
    return arr;
}

nlohmann::json table_json(const CorrelationTable& t) {
    auto rows = nlohmann::json::array();
    for (size_t i = 0; i < t.row_labels.size(); ++i) {
        nlohmann::json row{{"index", t.row_labels[i]}};
        for (size_t j = 0; j < t.col_labels.size(); ++j)
            row[t.col_labels[j]] = t.at(i, j);
        rows.push_back(std::move(row));
    }
    return rows;
}

CorrelationTable regenerate_table(int which) {
    const auto& records = octane_isomers();
    switch (which) {
        case 2: return index_property_table(records);
        case 4: return squared_table(index_property_table(records));
        case 5: return old_vs_new_table(records);
        case 6: return cross_table(records);
    }
    throw StatsError("no correlation table numbered " + std::to_string(which));
}

void print_discrepancies(std::ostream& out, const CorrelationTable& computed, int which) {
    const auto diffs = compare_tables(computed, printed_table(which), 0.01);
    out << "# discrepancy report vs published table " << which << " (tolerance 0.01): "
        << diffs.size() << " cell(s)\n";
    for (const auto& d : diffs)
        out << "# " << d.row << "/" << d.col << " computed=" << fixed(d.computed, 4)
            << " printed=" << fixed(d.printed, 4) << '\n';
}

int cmd_octanes(int table, const std::string& format, bool compare, std::ostream& out) {
    if (table == 1) {
        if (format == "csv")
            write_dataset_csv(out);
        else if (format == "json") {
            auto arr = nlohmann::json::array();
            for (const auto& rec : octane_isomers())
                arr.push_back({{"name", rec.name},
                               {"smiles", rec.smiles},
                               {"entropy", rec.entropy},
                               {"acen_fac", rec.acen_fac},
                               {"hvap", rec.hvap},
                               {"dhvap", rec.dhvap}});
            out << arr.dump(2) << '\n';
        } else
            table1_markdown(out);
        return kExitOk;
    }
    if (table == 3) {
        if (format == "csv")
            table3_csv(out);
        else if (format == "json")
            out << table3_json().dump(2) << '\n';
        else
            table3_markdown(out);
        return kExitOk;
    }
    const CorrelationTable t = regenerate_table(table);
    if (format == "csv")
        write_table_csv(out, t);
    else if (format == "json")
        out << table_json(t).dump(2) << '\n';
    else
        write_table_markdown(out, t);
    if (compare)
        print_discrepancies(out, t, table);
    return kExitOk;
}

// --- correlate ---------------------------------------------------------------

// Minimal RFC-4180 field splitting: commas separate, double quotes protect
// embedded commas, doubled quotes escape a quote.
std::vector<std::string> split_csv_line(const std::string& line, int lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (quoted)
        throw ParseError(lineno, static_cast<int>(line.size()) + 1, "unterminated quoted field");
    fields.push_back(cur);
    return fields;
}

int cmd_correlate(const std::string& csv_path, const std::string& format, std::ostream& out) {
    std::ifstream in(csv_path);
    if (!in)
        throw StatsError("cannot open file: " + csv_path);

    std::string line;
    if (!std::getline(in, line))
        throw ParseError(1, 1, "empty properties file");
    const auto header = split_csv_line(line, 1);
    if (header.size() < 2)
        throw ParseError(1, 1, "header must name a molecule column and at least one property");

    const auto& records = octane_isomers();
    std::vector<Column> props(header.size() - 1);
    for (size_t j = 1; j < header.size(); ++j)
        props[j - 1].name = header[j];
    std::vector<int> matched;

    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        const auto fields = split_csv_line(line, lineno);
        if (fields.size() != header.size())
            throw ParseError(lineno, 1,
                             "expected " + std::to_string(header.size()) + " fields, got " +
                                 std::to_string(fields.size()));
        const int idx = find_isomer(fields[0]);
        if (idx < 0)
            throw ParseError(lineno, 1, "unknown molecule name: " + fields[0]);
        matched.push_back(idx);
        for (size_t j = 1; j < fields.size(); ++j) {
            try {
                size_t pos = 0;
                const double v = std::stod(fields[j], &pos);
                if (pos != fields[j].size())
                    throw std::invalid_argument(fields[j]);
                props[j - 1].values.push_back(v);
            } catch (const std::exception&) {
                throw ParseError(lineno, static_cast<int>(j) + 1,
                                 "not a number: \"" + fields[j] + "\"");
            }
        }
    }
    if (matched.size() < 2)
        throw StatsError("need at least two molecule rows to correlate");

    std::vector<MoleculeRecord> subset;
    for (int idx : matched)
        subset.push_back(records[static_cast<size_t>(idx)]);
    const auto idx_cols = index_columns(subset);
    const CorrelationTable t = correlation_table(idx_cols, props);
    if (format == "csv")
        write_table_csv(out, t);
    else if (format == "json")
        out << table_json(t).dump(2) << '\n';
    else
        write_table_markdown(out, t);
    return kExitOk;
}

// --- verify -------------------------------------------------------------------

int cmd_verify(int n_trees, int n_graphs, const std::string& format, const std::string& engine,
               std::ostream& out, std::ostream& err) {
    if (n_trees > 9)
        err << "warning: --n-trees " << n_trees << " is above the default guard of 9\n";
    VerifyOptions opts;
    opts.n_trees = n_trees;
    opts.n_graphs = n_graphs;
    opts.engine = engine == "reference" ? Engine::Reference
                : engine == "serial"    ? Engine::FastSerial
                                        : Engine::FastParallel;
    const auto reports = verify_all(opts);
    if (format == "jsonl")
        write_reports_jsonl(out, reports);
    else
        write_reports_text(out, reports);
    if (!all_as_expected(reports)) {
        err << "verification failure: at least one claim deviates from its expected status\n";
        return kExitVerifyFailure;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"ev-degree / ve-degree topological index toolkit"};
    app.set_version_flag("--version", "vedeg 0.1.0");
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "compute all indices of one connected graph");
    std::string graph_file, smiles, format = "text";
    auto* gf = compute->add_option("graph-file", graph_file, "edge-list file");
    auto* sm = compute->add_option("--smiles", smiles, "alkane SMILES string");
    compute->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    gf->excludes(sm);

    auto* parse = app.add_subcommand("parse", "parse alkane SMILES into an edge list");
    std::string parse_smiles;
    parse->add_option("--smiles", parse_smiles, "alkane SMILES string (default: stdin lines)");

    auto* octanes = app.add_subcommand("octanes", "regenerate the octane-isomer tables");
    int table = 3;
    std::string oct_format = "text";
    bool compare = false;
    octanes->add_option("--table", table, "published table number")
        ->check(CLI::IsMember({1, 2, 3, 4, 5, 6}));
    octanes->add_option("--format", oct_format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    octanes->add_flag("--compare", compare,
                      "append a discrepancy report against the published values");

    auto* correlate = app.add_subcommand("correlate", "correlate indices with user properties");
    std::string props_path, cor_format = "text";
    correlate->add_option("--properties", props_path, "CSV: name,<property>[,<property>...]")
        ->required();
    correlate->add_option("--format", cor_format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* verify = app.add_subcommand("verify", "machine-check the identity and bound claims");
    int n_trees = 9, n_graphs = 7;
    std::string ver_format = "text", engine = "parallel";
    verify->add_option("--n-trees", n_trees, "max tree order (default 9)")
        ->check(CLI::Range(2, 10));
    verify->add_option("--n-graphs", n_graphs, "max connected-graph order (default 7)")
        ->check(CLI::Range(2, 7));
    verify->add_option("--format", ver_format, "text|jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    verify->add_option("--engine", engine, "parallel|serial|reference")
        ->check(CLI::IsMember({"parallel", "serial", "reference"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << app.version() << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (compute->parsed()) {
            if (graph_file.empty() == smiles.empty())
                throw GraphError("compute needs exactly one of <graph-file> or --smiles");
            return cmd_compute(graph_file, smiles, format, out);
        }
        if (parse->parsed())
            return cmd_parse(parse_smiles, in, out);
        if (octanes->parsed())
            return cmd_octanes(table, oct_format, compare, out);
        if (correlate->parsed())
            return cmd_correlate(props_path, cor_format, out);
        if (verify->parsed())
            return cmd_verify(n_trees, n_graphs, ver_format, engine, out, err);
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;  // unreachable: a subcommand is required
}

}  // namespace vedeg
