#include "knotpoly/tutte.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotpoly/errors.hpp"

namespace knotpoly {

namespace {

int component_count_of(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    int k = n;
    for (const auto& [u, v] : edges) {
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[static_cast<size_t>(ru)] = rv;
            --k;
        }
    }
    return k;
}

// ---- canonical form for memoization ----------------------------------------

// Iterative degree refinement. Colors are renumbered each round in signature
// order, so isomorphic graphs end with identical color vectors up to the
// within-cell vertex permutations.
std::vector<int> refine_colors(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> loops(static_cast<size_t>(n), 0), deg(static_cast<size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        if (u == v) {
            ++loops[static_cast<size_t>(u)];
        } else {
            ++deg[static_cast<size_t>(u)];
            ++deg[static_cast<size_t>(v)];
        }
    }
    std::vector<int> color(static_cast<size_t>(n));
    {
        std::vector<std::pair<int, int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) sig[static_cast<size_t>(v)] = {deg[static_cast<size_t>(v)], loops[static_cast<size_t>(v)]};
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<size_t>(v)]) - sorted.begin());
    }
    for (;;) {
        std::vector<std::vector<int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) sig[static_cast<size_t>(v)].push_back(color[static_cast<size_t>(v)]);
        for (const auto& [u, v] : edges) {
            if (u == v) continue;
            sig[static_cast<size_t>(u)].push_back(color[static_cast<size_t>(v)]);
            sig[static_cast<size_t>(v)].push_back(color[static_cast<size_t>(u)]);
        }
        for (int v = 0; v < n; ++v)
            std::sort(sig[static_cast<size_t>(v)].begin() + 1, sig[static_cast<size_t>(v)].end());
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<size_t>(v)]) - sorted.begin());
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

std::vector<std::pair<int, int>> relabeled_sorted(const std::vector<std::pair<int, int>>& edges,
                                                  const std::vector<int>& label) {
    std::vector<std::pair<int, int>> r;
    r.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        int a = label[static_cast<size_t>(u)], b = label[static_cast<size_t>(v)];
        r.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(r.begin(), r.end());
    return r;
}

// Canonical key, or empty when the within-cell search would be too costly
// (callers then skip memoization for that node).
std::string canonical_key(int n, const std::vector<std::pair<int, int>>& edges) {
    const std::vector<int> color = refine_colors(n, edges);
    std::vector<std::vector<int>> cells;
    {
        int ncolors = 0;
        for (int v = 0; v < n; ++v) ncolors = std::max(ncolors, color[static_cast<size_t>(v)] + 1);
        cells.assign(static_cast<size_t>(ncolors), {});
        for (int v = 0; v < n; ++v) cells[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
    }
    long perms = 1;
    for (const auto& cell : cells) {
        long f = 1;
        for (size_t i = 2; i <= cell.size(); ++i) f *= static_cast<long>(i);
        perms *= f;
        if (perms > 40320) return {};
    }

    // label blocks: cell 0 gets labels [0, |cell0|), cell 1 the next block, ...
    std::vector<int> base(static_cast<size_t>(n));
    {
        int next = 0;
        for (const auto& cell : cells)
            for (int v : cell) base[static_cast<size_t>(v)] = next++;
    }
    std::vector<std::pair<int, int>> best;
    std::vector<std::vector<int>> perm_cells = cells;
    std::vector<int> label(static_cast<size_t>(n));
    auto apply = [&]() {
        int next = 0;
        for (const auto& cell : perm_cells)
            for (int v : cell) label[static_cast<size_t>(v)] = next++;
        auto cand = relabeled_sorted(edges, label);
        if (best.empty() || cand < best) best = std::move(cand);
    };
    // odometer over per-cell permutations
    for (auto& cell : perm_cells) std::sort(cell.begin(), cell.end());
    size_t ci = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == perm_cells.size()) {
            apply();
            return;
        }
        auto& cell = perm_cells[idx];
        std::sort(cell.begin(), cell.end());
        do {
            rec(idx + 1);
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    (void)ci;
    rec(0);

    std::string key;
    key.reserve(edges.size() * 2 + 2);
    key.push_back(static_cast<char>(n));
    for (const auto& [u, v] : best) {
        key.push_back(static_cast<char>(u));
        key.push_back(static_cast<char>(v));
    }
    return key;
}

// ---- deletion-contraction ---------------------------------------------------

struct DelconContext {
    std::unordered_map<std::string, BivarPoly> memo;
    long nodes = 0;
    long budget = 20'000'000;
};

// Bridges of a multigraph by DFS low-link over edge indices. Parallel edges
// are distinct indices, so a doubled edge is never reported as a bridge.
std::vector<bool> find_bridges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));  // (neighbor, edge index)
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        const auto& [u, v] = edges[static_cast<size_t>(i)];
        if (u == v) continue;
        adj[static_cast<size_t>(u)].emplace_back(v, i);
        adj[static_cast<size_t>(v)].emplace_back(u, i);
    }
    std::vector<bool> bridge(edges.size(), false);
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    int timer = 0;
    // iterative DFS to keep stack depth bounded
    struct Frame {
        int v;
        int parent_edge;
        size_t next;
    };
    for (int s = 0; s < n; ++s) {
        if (disc[static_cast<size_t>(s)] != -1) continue;
        std::vector<Frame> stack{{s, -1, 0}};
        disc[static_cast<size_t>(s)] = low[static_cast<size_t>(s)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[static_cast<size_t>(f.v)].size()) {
                auto [to, idx] = adj[static_cast<size_t>(f.v)][f.next++];
                if (idx == f.parent_edge) continue;
                if (disc[static_cast<size_t>(to)] == -1) {
                    disc[static_cast<size_t>(to)] = low[static_cast<size_t>(to)] = timer++;
                    stack.push_back({to, idx, 0});
                } else {
                    low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(to)]);
                }
            } else {
                const int v = f.v;
                const int pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    const int p = stack.back().v;
                    low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
                    if (low[static_cast<size_t>(v)] > disc[static_cast<size_t>(p)]) bridge[static_cast<size_t>(pe)] = true;
                }
            }
        }
    }
    return bridge;
}

BivarPoly delcon_rec(int n, std::vector<std::pair<int, int>> edges, DelconContext& ctx) {
    if (++ctx.nodes > ctx.budget)
        throw ResourceLimit("deletion-contraction budget exceeded");

    // strip self-loops first: each contributes a factor y
    int loop_count = 0;
    {
        std::vector<std::pair<int, int>> rest;
        rest.reserve(edges.size());
        for (const auto& e : edges) {
            if (e.first == e.second)
                ++loop_count;
            else
                rest.push_back(e);
        }
        edges = std::move(rest);
    }
    if (edges.empty()) return BivarPoly::monomial(1, 0, loop_count);

    const std::vector<bool> bridge = find_bridges(n, edges);
    int bridge_count = static_cast<int>(std::count(bridge.begin(), bridge.end(), true));
    if (bridge_count == static_cast<int>(edges.size()))
        return BivarPoly::monomial(1, bridge_count, loop_count);

    std::string key;
    if (n <= 120) {
        key = canonical_key(n, edges);
        if (!key.empty()) {
            auto it = ctx.memo.find(key);
            if (it != ctx.memo.end())
                return BivarPoly::monomial(1, 0, loop_count) * it->second;
        }
    }

    // pick a non-bridge edge with maximal endpoint-degree sum
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
    }
    int pick = -1, pick_score = -1;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        if (bridge[static_cast<size_t>(i)]) continue;
        const auto& [u, v] = edges[static_cast<size_t>(i)];
        const int score = deg[static_cast<size_t>(u)] + deg[static_cast<size_t>(v)];
        if (score > pick_score) {
            pick_score = score;
            pick = i;
        }
    }

    // delete
    std::vector<std::pair<int, int>> del = edges;
    del.erase(del.begin() + pick);
    BivarPoly result = delcon_rec(n, std::move(del), ctx);

    // contract: relabel b -> a, compact labels
    {
        const auto [a, b] = edges[static_cast<size_t>(pick)];
        std::vector<std::pair<int, int>> con;
        con.reserve(edges.size() - 1);
        std::vector<int> relabel(static_cast<size_t>(n));
        for (int v = 0, next = 0; v < n; ++v)
            relabel[static_cast<size_t>(v)] = (v == b) ? -1 : next++;
        relabel[static_cast<size_t>(b)] = relabel[static_cast<size_t>(a)];
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            if (i == pick) continue;
            const auto& [u, v] = edges[static_cast<size_t>(i)];
            con.emplace_back(relabel[static_cast<size_t>(u)], relabel[static_cast<size_t>(v)]);
        }
        result += delcon_rec(n - 1, std::move(con), ctx);
    }

    if (!key.empty()) ctx.memo.emplace(std::move(key), result);
    return BivarPoly::monomial(1, 0, loop_count) * result;
}

} // namespace

BivarPoly tutte_oracle(const Multigraph& g) {
    const int e = g.edge_count();
    if (e > 24) throw TooLarge("subgraph enumeration guarded at e <= 24");
    const int n = g.vertex_count;
    const int kG = g.component_count();

    // counts indexed by (k' - k, c')
    std::map<std::pair<int, int>, BigInt> counts;
    std::vector<int> parent(static_cast<size_t>(n));
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[static_cast<size_t>(a)] != a) {
                parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
                a = parent[static_cast<size_t>(a)];
            }
            return a;
        };
        int k = n, e_sub = 0;
        for (int i = 0; i < e; ++i) {
            if (!(mask >> i & 1u)) continue;
            ++e_sub;
            int ru = find(g.edges[static_cast<size_t>(i)].first);
            int rv = find(g.edges[static_cast<size_t>(i)].second);
            if (ru != rv) {
                parent[static_cast<size_t>(ru)] = rv;
                --k;
            }
        }
        const int c = e_sub + k - n;
        counts[{k - kG, c}] += 1;
    }

    // expand sum of counts * (x-1)^dk * (y-1)^c
    const BivarPoly xm1 = BivarPoly::var_x() - BivarPoly::constant(1);
    const BivarPoly ym1 = BivarPoly::var_y() - BivarPoly::constant(1);
    std::vector<BivarPoly> xp{BivarPoly::constant(1)}, yp{BivarPoly::constant(1)};
    BivarPoly result;
    for (const auto& [kc, cnt] : counts) {
        while (static_cast<int>(xp.size()) <= kc.first) xp.push_back(xp.back() * xm1);
        while (static_cast<int>(yp.size()) <= kc.second) yp.push_back(yp.back() * ym1);
        result += BivarPoly::constant(cnt) * xp[static_cast<size_t>(kc.first)] * yp[static_cast<size_t>(kc.second)];
    }
    return result;
}

BivarPoly tutte_delcon(const Multigraph& g) {
    DelconContext ctx;
    return delcon_rec(g.vertex_count, g.edges, ctx);
}

} // namespace knotpoly
