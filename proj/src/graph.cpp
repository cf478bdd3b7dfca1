#include "vedeg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace vedeg {

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
    if (n < 1)
        throw GraphError("vertex count must be at least 1, got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range 0.." + std::to_string(n - 1) + ": (" +
                             std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    std::vector<int> deg(n, 0);
    for (const auto& e : g.edges_) {
        ++deg[e.a];
        ++deg[e.b];
    }
    g.adj_offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        g.adj_offset_[v + 1] = g.adj_offset_[v] + deg[v];
    g.adj_flat_.resize(g.adj_offset_[n]);
    std::vector<int> fill(g.adj_offset_.begin(), g.adj_offset_.end() - 1);
    for (const auto& e : g.edges_) {
        g.adj_flat_[fill[e.a]++] = e.b;
        g.adj_flat_[fill[e.b]++] = e.a;
    }
    for (int v = 0; v < n; ++v)
        std::sort(g.adj_flat_.begin() + g.adj_offset_[v], g.adj_flat_.begin() + g.adj_offset_[v + 1]);
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return {adj_flat_.data() + adj_offset_[v],
            static_cast<size_t>(adj_offset_[v + 1] - adj_offset_[v])};
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    return adj_offset_[v + 1] - adj_offset_[v];
}

std::vector<VertexId> Graph::closed_neighborhood(VertexId v) const {
    auto nb = neighbors(v);
    std::vector<VertexId> out(nb.begin(), nb.end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

int Graph::ve_degree(VertexId v) const {
    check_vertex(v);
    std::vector<char> in_closed(n_, 0);
    in_closed[v] = 1;
    for (VertexId u : neighbors(v))
        in_closed[u] = 1;
    int count = 0;
    for (const auto& e : edges_)
        if (in_closed[e.a] || in_closed[e.b])
            ++count;
    return count;
}

int Graph::ev_degree(EdgeRef e) const {
    if (!has_edge(e))
        throw GraphError("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                         ") not in graph");
    std::vector<char> in_union(n_, 0);
    in_union[e.a] = 1;
    in_union[e.b] = 1;
    for (VertexId u : neighbors(e.a))
        in_union[u] = 1;
    for (VertexId u : neighbors(e.b))
        in_union[u] = 1;
    int count = 0;
    for (char c : in_union)
        count += c;
    return count;
}

std::int64_t Graph::triangle_count() const {
    // Each triangle is seen from each of its three edges.
    std::int64_t incidences = 0;
    for (const auto& e : edges_) {
        auto na = neighbors(e.a);
        auto nb = neighbors(e.b);
        auto ia = na.begin();
        auto ib = nb.begin();
        while (ia != na.end() && ib != nb.end()) {
            if (*ia < *ib)
                ++ia;
            else if (*ib < *ia)
                ++ib;
            else {
                ++incidences;
                ++ia;
                ++ib;
            }
        }
    }
    return incidences / 3;
}

bool Graph::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n_;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i)
        pairs.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, pairs);
}

Graph star_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n; ++i)
        pairs.emplace_back(0, i);
    return Graph::from_edge_list(n, pairs);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return Graph::from_edge_list(n, pairs);
}

std::int64_t DistanceMatrix::total() const {
    std::int64_t sum = 0;
    for (int x : d_)
        sum += x;
    return sum;
}

DistanceMatrix all_pairs_distance(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dist(n);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        std::vector<int> d(n, -1);
        d[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (VertexId w : g.neighbors(u))
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    queue[tail++] = w;
                }
        }
        if (tail != n)
            throw DisconnectedError("distances undefined: graph is not connected");
        for (int v = 0; v < n; ++v)
            dist.at(s, v) = d[v];
    }
    return dist;
}

namespace {

[[noreturn]] void format_error(int line, const std::string& message) {
    throw GraphError("edge-list format error at line " + std::to_string(line) + ": " + message);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
    if (text.empty())
        throw GraphError("edge-list format error: empty input");
    if (text.back() != '\n')
        throw GraphError("edge-list format error: missing trailing newline");

    std::istringstream lines(text);
    std::string raw;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(lines, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        if (raw.empty() || raw[0] == '#')
            continue;
        std::istringstream fields(raw);
        long x = 0, y = 0;
        char extra;
        if (!(fields >> x >> y) || (fields >> extra))
            format_error(lineno, "expected two integers, got \"" + raw + "\"");
        constexpr long kIntMax = std::numeric_limits<int>::max();
        if (x < 0 || x > kIntMax || y < 0 || y > kIntMax)
            format_error(lineno, "value out of range: \"" + raw + "\"");
        if (n < 0) {
            n = x;
            m = y;
            if (n < 1)
                format_error(lineno, "vertex count must be at least 1");
        } else {
            pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
        }
    }
    if (n < 0)
        throw GraphError("edge-list format error: missing header line");
    if (static_cast<long>(pairs.size()) != m)
        throw GraphError("edge-list format error: header declares " + std::to_string(m) +
                         " edges, found " + std::to_string(pairs.size()));
    return Graph::from_edge_list(static_cast<int>(n), pairs);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw GraphError("cannot open file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges())
        out << e.a << ' ' << e.b << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace vedeg
