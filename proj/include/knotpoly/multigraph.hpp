#ifndef KNOTPOLY_MULTIGRAPH_HPP
#define KNOTPOLY_MULTIGRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace knotpoly {

/// Undirected multigraph: parallel edges are repeated entries, self-loops are
/// (v, v) pairs. Vertices are 0..vertex_count-1.
struct Multigraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    void add_edge(int u, int v);

    /// Number of connected components (isolated vertices count).
    int component_count() const;

    std::string to_text() const;
    static Multigraph from_text(const std::string& text);
};

/// Basic counts: vertices, edges, components, and the cyclomatic number
/// c = e + k - n.
struct GraphStats {
    int n, e, k, c;
};
GraphStats graph_stats(const Multigraph& g);

/// The ladder of m squares (rails u_0..u_m, v_0..v_m, rungs u_i-v_i) with one
/// apex vertex adjacent to every v_i. 2m+3 vertices, 4m+2 edges.
Multigraph build_S(int m);

} // namespace knotpoly

#endif
