#pragma once

#include "stanley/varset.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stanley {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n. Edges are stored with u < v, sorted.
class Graph {
public:
    Graph() = default;
    /// Throws PreconditionError on loops, duplicate edges or endpoints outside 1..n.
    Graph(int n, std::vector<Edge> edges);

    int n() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    bool adjacent(int u, int v) const noexcept;
    /// Neighbours of v as a bit pattern (bit u-1 for vertex u).
    Mask neighbours(int v) const noexcept { return adjacency_[static_cast<std::size_t>(v - 1)]; }
    bool is_complete() const noexcept;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Mask> adjacency_;
};

enum class GraphFamily { complete, cycle, path, discrete };

std::optional<GraphFamily> parse_graph_family(std::string_view name);
std::string_view to_string(GraphFamily family);

/// Canonically labelled member of a family: K_n, C_n (n >= 3), P_n, or n
/// isolated vertices. Throws PreconditionError on an invalid n.
Graph make_graph(GraphFamily family, int n);

/// Largest vertex count accepted by canonical labelling.
inline constexpr int kMaxCanonicalVertices = 11;

/**
 * Canonical relabelling: colour refinement splits the vertices into ordered
 * cells, then every ordering compatible with the cells is tried and the one
 * with the largest adjacency code wins. Isomorphic graphs get identical
 * results.
 */
Graph canonical_form(const Graph& graph);

/// Stable text key "g<n>-<hex>" of the canonical adjacency code.
std::string graph_key(const Graph& graph);

/// Every labelled graph on n vertices (n <= 7), reduced to one
/// representative per isomorphism class when `dedup` is set. Representatives
/// are canonical forms, sorted by key.
std::vector<Graph> all_graphs(int n, bool dedup = true);

} // namespace stanley
