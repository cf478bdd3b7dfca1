#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vedeg/octane.hpp"

namespace vedeg {

struct StatsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Sample Pearson coefficient, clamped into [-1, 1]. Two-pass centered sums.
/// Throws StatsError on length mismatch, fewer than two points, or a
/// constant vector.
double pearson(std::span<const double> x, std::span<const double> y);

/// A labeled series (one index or one property over the dataset).
struct Column {
    std::string name;
    std::vector<double> values;
};

/// Labeled matrix of correlation coefficients.
struct CorrelationTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<double> cells;  // row-major; NaN marks an unpublished cell

    double at(size_t i, size_t j) const { return cells[i * col_labels.size() + j]; }
    double& at(size_t i, size_t j) { return cells[i * col_labels.size() + j]; }
};

inline constexpr const char* kIndexNames[9] = {"S",  "Salpha", "Sbeta", "Smu", "Ralpha",
                                               "W",  "M1",     "M2",    "R"};
inline constexpr const char* kNewIndexNames[5] = {"S", "Salpha", "Sbeta", "Smu", "Ralpha"};
inline constexpr const char* kOldIndexNames[4] = {"W", "M1", "M2", "R"};
inline constexpr const char* kPropertyNames[4] = {"Entropy", "AcenFac", "HVAP", "DHVAP"};

/// The nine index series of the records, in the published row order.
std::vector<Column> index_columns(std::span<const MoleculeRecord> records);

/// The four property series of the records.
std::vector<Column> property_columns(std::span<const MoleculeRecord> records);

/// Pearson of every row column against every col column.
CorrelationTable correlation_table(std::span<const Column> rows, std::span<const Column> cols);

/// Indices x properties (9x4). Pass a subset of kIndexNames to restrict rows.
CorrelationTable index_property_table(std::span<const MoleculeRecord> records,
                                      std::span<const std::string> index_set = {});

/// Entrywise square.
CorrelationTable squared_table(const CorrelationTable& t);

/// New indices x old indices (5x4).
CorrelationTable old_vs_new_table(std::span<const MoleculeRecord> records);

/// New indices x new indices (5x5, symmetric, unit diagonal).
CorrelationTable cross_table(std::span<const MoleculeRecord> records);

/// Published correlation tables for comparison; `which` is 2, 4, 5 or 6.
/// Cells the publication leaves blank (upper triangle of the cross matrix)
/// are NaN.
const CorrelationTable& printed_table(int which);

/// One cell where |computed - printed| exceeds a tolerance.
struct CellDiff {
    std::string row, col;
    double computed, printed;
};

/// Cells outside `tol`; NaN printed cells are skipped. Throws StatsError on
/// label mismatch.
std::vector<CellDiff> compare_tables(const CorrelationTable& computed,
                                     const CorrelationTable& printed, double tol);

// Rendering, 4-decimal fixed format.
void write_table_csv(std::ostream& out, const CorrelationTable& t,
                     const std::string& corner = "Index");
void write_table_markdown(std::ostream& out, const CorrelationTable& t,
                          const std::string& corner = "Index");

}  // namespace vedeg
