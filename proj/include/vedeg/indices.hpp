#pragma once

#include <cstdint>

#include "vedeg/graph.hpp"

namespace vedeg {

/// All eleven indices of one connected graph. Integer-valued indices are
/// exact; randic and r_ve are plain doubles accumulated over edges in sorted
/// EdgeRef order, so values are bit-reproducible across runs.
struct IndexVector {
    std::int64_t wiener = 0;     // W
    std::int64_t m1 = 0;         // first Zagreb
    std::int64_t m2 = 0;         // second Zagreb
    std::int64_t forgotten = 0;  // F
    std::int64_t s_ev = 0;       // S, ev-degree Zagreb
    std::int64_t s_alpha = 0;    // first ve-degree Zagreb alpha
    std::int64_t s_beta = 0;     // first ve-degree Zagreb beta
    std::int64_t s_mu = 0;       // second ve-degree Zagreb
    std::int64_t t_total = 0;    // total ev-degree = total ve-degree
    double randic = 0.0;         // R
    double r_ve = 0.0;           // ve-degree Randic
};

// Each of these throws DisconnectedError on a disconnected input.
std::int64_t wiener(const Graph& g);
std::int64_t first_zagreb(const Graph& g);
std::int64_t second_zagreb(const Graph& g);
std::int64_t forgotten(const Graph& g);
double randic(const Graph& g);
std::int64_t ev_zagreb(const Graph& g);        // S
std::int64_t ve_zagreb_alpha(const Graph& g);  // S^alpha
std::int64_t ve_zagreb_beta(const Graph& g);   // S^beta
std::int64_t ve_zagreb_mu(const Graph& g);     // S^mu
double ve_randic(const Graph& g);              // R^alpha
std::int64_t total_ev_degree(const Graph& g);  // T_e = T_v

/// Computes all indices in one pass; ve-degrees are computed once and shared.
/// Verifies t_total == m1 - 3*triangles before returning.
IndexVector index_vector(const Graph& g);

}  // namespace vedeg
