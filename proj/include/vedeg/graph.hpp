#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vedeg {

using VertexId = int;

/// Invalid construction input or precondition violation.
struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation requires a connected graph and the input is not.
struct DisconnectedError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Undirected edge with endpoints normalized so that a < b.
struct EdgeRef {
    VertexId a = 0;
    VertexId b = 0;

    EdgeRef() = default;
    EdgeRef(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored deduplicated in sorted EdgeRef order; adjacency lists are
/// sorted, so neighborhood iteration is O(deg) and membership tests are
/// O(log deg).
class Graph {
  public:
    /// Validates and normalizes an edge list. Rejects n < 1, self-loops and
    /// out-of-range endpoints; duplicate pairs are collapsed.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<EdgeRef>& edges() const { return edges_; }

    std::span<const VertexId> neighbors(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;
    bool has_edge(EdgeRef e) const { return adjacent(e.a, e.b); }

    int degree(VertexId v) const;

    /// N[v] = N(v) + v, sorted ascending.
    std::vector<VertexId> closed_neighborhood(VertexId v) const;

    /// Number of distinct edges incident to at least one vertex of N[v].
    int ve_degree(VertexId v) const;

    /// |N[u] + N[v]| for e = {u,v}. Throws GraphError if e is not an edge.
    int ev_degree(EdgeRef e) const;

    std::int64_t triangle_count() const;

    bool is_connected() const;
    bool is_tree() const { return is_connected() && edge_count() == n_ - 1; }

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    Graph() = default;
    void check_vertex(VertexId v) const;

    int n_ = 0;
    std::vector<EdgeRef> edges_;       // sorted, unique
    std::vector<VertexId> adj_flat_;   // concatenated sorted neighbor lists
    std::vector<int> adj_offset_;      // n_+1 offsets into adj_flat_
};

Graph path_graph(int n);
Graph star_graph(int n);  // K_{1,n-1} on n vertices
Graph complete_graph(int n);

/// Symmetric matrix of shortest-path edge counts, zero diagonal.
class DistanceMatrix {
  public:
    DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, 0) {}

    int size() const { return n_; }
    int operator()(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
    int& at(int i, int j) { return d_[static_cast<size_t>(i) * n_ + j]; }

    /// Sum over all ordered pairs (twice the Wiener index).
    std::int64_t total() const;

  private:
    int n_;
    std::vector<int> d_;
};

/// BFS from every vertex. Throws DisconnectedError if g is not connected.
DistanceMatrix all_pairs_distance(const Graph& g);

// Edge-list text format: line 1 "n m", then m lines "u v" (0-based, one
// space); lines beginning '#' are ignored; a trailing newline is required.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace vedeg
