#include "vedeg/indices.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace vedeg {

namespace {

void require_connected(const Graph& g) {
    if (!g.is_connected())
        throw DisconnectedError("index undefined for disconnected graphs");
}

std::vector<int> all_ve_degrees(const Graph& g) {
    std::vector<int> ve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        ve[v] = g.ve_degree(v);
    return ve;
}

}  // namespace

std::int64_t wiener(const Graph& g) {
    return all_pairs_distance(g).total() / 2;  // total() is symmetric, so exact
}

std::int64_t first_zagreb(const Graph& g) {
    require_connected(g);
    std::int64_t sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::int64_t d = g.degree(v);
        sum += d * d;
    }
    return sum;
}

std::int64_t second_zagreb(const Graph& g) {
    require_connected(g);
    std::int64_t sum = 0;
    for (const auto& e : g.edges())
        sum += static_cast<std::int64_t>(g.degree(e.a)) * g.degree(e.b);
    return sum;
}

std::int64_t forgotten(const Graph& g) {
    require_connected(g);
    std::int64_t sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::int64_t d = g.degree(v);
        sum += d * d * d;
    }
    return sum;
}

double randic(const Graph& g) {
    require_connected(g);
    double sum = 0.0;
    for (const auto& e : g.edges())
        sum += 1.0 / std::sqrt(static_cast<double>(g.degree(e.a)) * g.degree(e.b));
    return sum;
}

std::int64_t ev_zagreb(const Graph& g) {
    require_connected(g);
    std::int64_t sum = 0;
    for (const auto& e : g.edges()) {
        std::int64_t c = g.ev_degree(e);
        sum += c * c;
    }
    return sum;
}

std::int64_t ve_zagreb_alpha(const Graph& g) {
    require_connected(g);
    std::int64_t sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::int64_t c = g.ve_degree(v);
        sum += c * c;
    }
    return sum;
}

std::int64_t ve_zagreb_beta(const Graph& g) {
    require_connected(g);
    const auto ve = all_ve_degrees(g);
    std::int64_t sum = 0;
    for (const auto& e : g.edges())
        sum += static_cast<std::int64_t>(ve[e.a]) + ve[e.b];
    return sum;
}

std::int64_t ve_zagreb_mu(const Graph& g) {
    require_connected(g);
    const auto ve = all_ve_degrees(g);
    std::int64_t sum = 0;
    for (const auto& e : g.edges())
        sum += static_cast<std::int64_t>(ve[e.a]) * ve[e.b];
    return sum;
}

double ve_randic(const Graph& g) {
    require_connected(g);
    const auto ve = all_ve_degrees(g);
    double sum = 0.0;
    for (const auto& e : g.edges())
        sum += 1.0 / std::sqrt(static_cast<double>(ve[e.a]) * ve[e.b]);
    return sum;
}

std::int64_t total_ev_degree(const Graph& g) {
    require_connected(g);
    std::int64_t total_ev = 0;
    for (const auto& e : g.edges())
        total_ev += g.ev_degree(e);
    std::int64_t total_ve = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        total_ve += g.ve_degree(v);
    if (total_ev != total_ve)
        throw std::logic_error("total ev-degree != total ve-degree (implementation bug)");
    return total_ev;
}

IndexVector index_vector(const Graph& g) {
    require_connected(g);
    IndexVector iv;
    iv.wiener = wiener(g);

    for (int v = 0; v < g.vertex_count(); ++v) {
        std::int64_t d = g.degree(v);
        iv.m1 += d * d;
        iv.forgotten += d * d * d;
    }

    const auto ve = all_ve_degrees(g);
    std::int64_t t_ve = 0;
    for (int c : ve) {
        iv.s_alpha += static_cast<std::int64_t>(c) * c;
        t_ve += c;
    }

    for (const auto& e : g.edges()) {
        std::int64_t du = g.degree(e.a), dv = g.degree(e.b);
        iv.m2 += du * dv;
        iv.randic += 1.0 / std::sqrt(static_cast<double>(du) * dv);

        std::int64_t ce = g.ev_degree(e);
        iv.s_ev += ce * ce;
        iv.t_total += ce;

        std::int64_t cu = ve[e.a], cv = ve[e.b];
        iv.s_beta += cu + cv;
        iv.s_mu += cu * cv;
        iv.r_ve += 1.0 / std::sqrt(static_cast<double>(cu) * cv);
    }

    if (iv.t_total != t_ve)
        throw std::logic_error("total ev-degree != total ve-degree (implementation bug)");
    if (iv.t_total != iv.m1 - 3 * g.triangle_count())
        throw std::logic_error("t_total != m1 - 3*triangles (implementation bug)");
    return iv;
}

}  // namespace vedeg
