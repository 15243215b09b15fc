#include "knotpoly/multigraph.hpp"

#include <numeric>
#include <sstream>

#include "knotpoly/errors.hpp"

namespace knotpoly {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[static_cast<size_t>(ra)] = rb;
        return true;
    }
};

} // namespace

void Multigraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
        throw InvalidParameter("edge endpoint out of range");
    edges.emplace_back(u, v);
}

int Multigraph::component_count() const {
    UnionFind uf(vertex_count);
    int k = vertex_count;
    for (const auto& [u, v] : edges)
        if (uf.unite(u, v)) --k;
    return k;
}

std::string Multigraph::to_text() const {
    std::ostringstream out;
    out << "n=" << vertex_count << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

Multigraph Multigraph::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!(in >> header) || header.rfind("n=", 0) != 0)
        throw ParseError("expected n=<int> header");
    Multigraph g;
    g.vertex_count = std::stoi(header.substr(2));
    int u, v;
    while (in >> u >> v) g.add_edge(u, v);
    return g;
}

GraphStats graph_stats(const Multigraph& g) {
    GraphStats s;
    s.n = g.vertex_count;
    s.e = g.edge_count();
    s.k = g.component_count();
    s.c = s.e + s.k - s.n;
    return s;
}

Multigraph build_S(int m) {
    if (m < 1) throw InvalidParameter("build_S requires m >= 1");
    // u_i = i, v_i = m+1+i (0 <= i <= m), apex w = 2m+2
    Multigraph g;
    g.vertex_count = 2 * m + 3;
    const int apex = 2 * m + 2;
    auto v = [m](int i) { return m + 1 + i; };
    for (int i = 0; i <= m; ++i) g.add_edge(i, v(i));  // rungs
    for (int i = 0; i < m; ++i) {
        g.add_edge(i, i + 1);        // rail u
        g.add_edge(v(i), v(i + 1));  // rail v
    }
    for (int i = 0; i <= m; ++i) g.add_edge(v(i), apex);
    return g;
}

} // namespace knotpoly
