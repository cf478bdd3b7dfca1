#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vedeg/graph.hpp"
#include "vedeg/indices.hpp"

namespace vedeg {

/// One octane isomer: name, structure and the four measured properties.
struct MoleculeRecord {
    std::string name;
    std::string smiles;
    Graph skeleton;   // 8-vertex carbon tree, parsed from smiles
    double entropy;
    double acen_fac;  // acentric factor
    double hvap;      // enthalpy of vaporization
    double dhvap;     // standard enthalpy of vaporization
};

/// The 18 octane isomers in the fixed dataset order (n-octane first,
/// 2,2,3,3-tetramethylbutane last).
const std::vector<MoleculeRecord>& octane_isomers();

/// One row of the published index table (dataset order):
/// M1, M2, W, R, S, S^alpha, S^beta, S^mu, R^alpha.
struct GoldenRow {
    std::int64_t m1, m2, w;
    double r;
    std::int64_t s, s_alpha, s_beta, s_mu;
    double r_ve;
};

/// The published index values, kept verbatim as golden expectations. Two
/// cells are known misprints irreconcilable with the definitions; see
/// golden_misprints().
const std::vector<GoldenRow>& golden_index_table();

/// A golden-table cell whose printed value contradicts the definitions
/// (the remaining row values pin the structure, so the cell is attributable).
struct GoldenMisprint {
    int row;             // dataset index
    std::string column;  // index name
    double printed;
    double definitional;
};

/// The two cells where the published table disagrees with its own
/// definitions: S^alpha of 3-methyl-heptane (printed 98, true 108) and
/// R^alpha of 2,5-dimethyl-hexane (printed 1.801, true 1.8019).
const std::vector<GoldenMisprint>& golden_misprints();

/// CSV export: name,smiles,entropy,acen_fac,hvap,dhvap with the values
/// formatted exactly as published. Names containing commas are quoted.
void write_dataset_csv(std::ostream& out);

/// RFC-4180 minimal quoting: wraps the field in double quotes when it
/// contains a comma or a quote (embedded quotes doubled).
std::string csv_field(std::string_view value);

/// Case-insensitive molecule-name key with hyphens removed, used to join
/// user-supplied property tables against the dataset.
std::string normalize_name(std::string_view name);

/// Dataset index for a (normalized) molecule name, or -1.
int find_isomer(std::string_view name);

}  // namespace vedeg
