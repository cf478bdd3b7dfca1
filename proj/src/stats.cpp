#include "vedeg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "vedeg/indices.hpp"

namespace vedeg {

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw StatsError("pearson: length mismatch (" + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()) + ")");
    const size_t n = x.size();
    if (n < 2)
        throw StatsError("pearson: need at least two points");

    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0)
        throw StatsError("pearson: first vector is constant");
    if (syy == 0.0)
        throw StatsError("pearson: second vector is constant");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<Column> index_columns(std::span<const MoleculeRecord> records) {
    std::vector<Column> cols(9);
    for (int i = 0; i < 9; ++i)
        cols[i].name = kIndexNames[i];
    for (const auto& rec : records) {
        const IndexVector iv = index_vector(rec.skeleton);
        cols[0].values.push_back(static_cast<double>(iv.s_ev));
        cols[1].values.push_back(static_cast<double>(iv.s_alpha));
        cols[2].values.push_back(static_cast<double>(iv.s_beta));
        cols[3].values.push_back(static_cast<double>(iv.s_mu));
        cols[4].values.push_back(iv.r_ve);
        cols[5].values.push_back(static_cast<double>(iv.wiener));
        cols[6].values.push_back(static_cast<double>(iv.m1));
        cols[7].values.push_back(static_cast<double>(iv.m2));
        cols[8].values.push_back(iv.randic);
    }
    return cols;
}

std::vector<Column> property_columns(std::span<const MoleculeRecord> records) {
    std::vector<Column> cols(4);
    for (int i = 0; i < 4; ++i)
        cols[i].name = kPropertyNames[i];
    for (const auto& rec : records) {
        cols[0].values.push_back(rec.entropy);
        cols[1].values.push_back(rec.acen_fac);
        cols[2].values.push_back(rec.hvap);
        cols[3].values.push_back(rec.dhvap);
    }
    return cols;
}

CorrelationTable correlation_table(std::span<const Column> rows, std::span<const Column> cols) {
    CorrelationTable t;
    for (const auto& r : rows)
        t.row_labels.push_back(r.name);
    for (const auto& c : cols)
        t.col_labels.push_back(c.name);
    t.cells.resize(rows.size() * cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            t.at(i, j) = pearson(rows[i].values, cols[j].values);
    return t;
}

CorrelationTable index_property_table(std::span<const MoleculeRecord> records,
                                      std::span<const std::string> index_set) {
    auto idx = index_columns(records);
    if (!index_set.empty()) {
        std::vector<Column> picked;
        for (const auto& name : index_set) {
            auto it = std::find_if(idx.begin(), idx.end(),
                                   [&](const Column& c) { return c.name == name; });
            if (it == idx.end())
                throw StatsError("unknown index name: " + name);
            picked.push_back(*it);
        }
        idx = std::move(picked);
    }
    return correlation_table(idx, property_columns(records));
}

CorrelationTable squared_table(const CorrelationTable& t) {
    CorrelationTable out = t;
    for (double& v : out.cells)
        v = v * v;
    return out;
}

CorrelationTable old_vs_new_table(std::span<const MoleculeRecord> records) {
    auto idx = index_columns(records);
    std::vector<Column> rows(idx.begin(), idx.begin() + 5);  // S..Ralpha
    std::vector<Column> cols(idx.begin() + 5, idx.end());    // W, M1, M2, R
    return correlation_table(rows, cols);
}

CorrelationTable cross_table(std::span<const MoleculeRecord> records) {
    auto idx = index_columns(records);
    std::vector<Column> news(idx.begin(), idx.begin() + 5);
    auto t = correlation_table(news, news);
    for (size_t i = 0; i < 5; ++i)
        t.at(i, i) = 1.0;  // self-correlation, exact by definition
    return t;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

CorrelationTable make_printed(std::span<const char* const> rows,
                              std::span<const char* const> cols,
                              std::initializer_list<double> cells) {
    CorrelationTable t;
    t.row_labels.assign(rows.begin(), rows.end());
    t.col_labels.assign(cols.begin(), cols.end());
    t.cells.assign(cells.begin(), cells.end());
    return t;
}

}  // namespace

const CorrelationTable& printed_table(int which) {
    static const CorrelationTable t2 = make_printed(
        kIndexNames, kPropertyNames,
        std::initializer_list<double>{
            -0.9614, -0.9829, -0.8425, -0.9043,  // S
            -0.9565, -0.9906, -0.8279, -0.8931,  // Salpha
            -0.9410, -0.9864, -0.7281, -0.8118,  // Sbeta
            -0.9481, -0.9863, -0.7552, -0.8118,  // Smu
            0.9486, 0.9829, 0.8351, 0.8924,      // Ralpha
            0.8772, 0.9656, 0.7381, 0.8202,      // W
            -0.9543, -0.9731, -0.8860, -0.9361,  // M1
            -0.9410, -0.9864, -0.7281, -0.8118,  // M2
            0.9063, 0.9043, 0.9359, 0.9580,      // R
        });
    static const CorrelationTable t4 = make_printed(
        kIndexNames, kPropertyNames,
        std::initializer_list<double>{
            0.9242, 0.9660, 0.7098, 0.8177,  // S
            0.9148, 0.9812, 0.6854, 0.7976,  // Salpha
            0.8854, 0.9729, 0.5301, 0.6590,  // Sbeta
            0.8988, 0.9727, 0.5703, 0.6590,  // Smu
            0.8998, 0.9660, 0.6973, 0.7963,  // Ralpha
            0.7694, 0.9323, 0.5447, 0.6727,  // W
            0.9106, 0.9469, 0.7849, 0.8762,  // M1
            0.8854, 0.9729, 0.5301, 0.6590,  // M2
            0.8213, 0.8177, 0.8759, 0.9177,  // R
        });
    static const CorrelationTable t5 = make_printed(
        kNewIndexNames, kOldIndexNames,
        std::initializer_list<double>{
            -0.9177, 0.9951, 0.9676, -0.9441,   // S
            0.9483, 0.9818, 0.9774, -0.9182,    // Salpha
            -0.9683, 0.9495, 1.000, -0.8609,    // Sbeta
            -0.9567, 0.9523, 0.9982, -0.8645,   // Smu
            0.9478, -0.9764, -0.9758, 0.9365,   // Ralpha
        });
    static const CorrelationTable t6 = make_printed(
        kNewIndexNames, kNewIndexNames,
        std::initializer_list<double>{
            1.0000, kNaN, kNaN, kNaN, kNaN,              // S
            0.9901, 1.0000, kNaN, kNaN, kNaN,            // Salpha
            0.9676, 0.9774, 1.0000, kNaN, kNaN,          // Sbeta
            0.9738, 0.9797, 0.9982, 1.0000, kNaN,        // Smu
            -0.9758, -0.9752, -0.9758, -0.9701, 1.0000,  // Ralpha
        });
    switch (which) {
        case 2: return t2;
        case 4: return t4;
        case 5: return t5;
        case 6: return t6;
    }
    throw StatsError("no printed correlation table numbered " + std::to_string(which));
}

std::vector<CellDiff> compare_tables(const CorrelationTable& computed,
                                     const CorrelationTable& printed, double tol) {
    if (computed.row_labels != printed.row_labels || computed.col_labels != printed.col_labels)
        throw StatsError("compare_tables: label mismatch");
    std::vector<CellDiff> out;
    for (size_t i = 0; i < computed.row_labels.size(); ++i)
        for (size_t j = 0; j < computed.col_labels.size(); ++j) {
            const double p = printed.at(i, j);
            if (std::isnan(p))
                continue;
            if (std::abs(computed.at(i, j) - p) > tol)
                out.push_back({computed.row_labels[i], computed.col_labels[j],
                               computed.at(i, j), p});
        }
    return out;
}

void write_table_csv(std::ostream& out, const CorrelationTable& t, const std::string& corner) {
    out << corner;
    for (const auto& c : t.col_labels)
        out << ',' << c;
    out << '\n';
    char buf[32];
    for (size_t i = 0; i < t.row_labels.size(); ++i) {
        out << t.row_labels[i];
        for (size_t j = 0; j < t.col_labels.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.4f", t.at(i, j));
            out << ',' << buf;
        }
        out << '\n';
    }
}

void write_table_markdown(std::ostream& out, const CorrelationTable& t,
                          const std::string& corner) {
    out << "| " << corner << " |";
    for (const auto& c : t.col_labels)
        out << ' ' << c << " |";
    out << "\n|---|";
    for (size_t j = 0; j < t.col_labels.size(); ++j)
        out << "---|";
    out << '\n';
    char buf[32];
    for (size_t i = 0; i < t.row_labels.size(); ++i) {
        out << "| " << t.row_labels[i] << " |";
        for (size_t j = 0; j < t.col_labels.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.4f", t.at(i, j));
            out << ' ' << buf << " |";
        }
        out << '\n';
    }
}

}  // namespace vedeg
