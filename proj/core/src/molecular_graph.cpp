#include "phenylo/molecular_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>

namespace phenylo {

MolecularGraph MolecularGraph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw std::invalid_argument("parallel edge");

    MolecularGraph g;
    g.vertex_count = n;
    g.edges = std::move(edge_list);
    g.adjacency.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool MolecularGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

bool MolecularGraph::is_connected() const {
    if (vertex_count == 0) return true;
    std::vector<int> d = bfs_distances(*this, 0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

bool MolecularGraph::is_bipartite() const {
    std::vector<int> side(vertex_count, -1);
    for (int s = 0; s < vertex_count; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adjacency[u]) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<int> MolecularGraph::degrees() const {
    std::vector<int> d(vertex_count);
    for (int v = 0; v < vertex_count; ++v) d[v] = static_cast<int>(adjacency[v].size());
    return d;
}

std::vector<int> bfs_distances(const MolecularGraph& g, int src) {
    if (src < 0 || src >= g.vertex_count)
        throw std::invalid_argument("bfs source out of range: " + std::to_string(src));
    std::vector<int> dist(g.vertex_count, -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adjacency[u]) {
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

const std::vector<int>& DistanceOracle::from(int v) {
    if (v < 0 || v >= graph_.vertex_count)
        throw std::invalid_argument("distance source out of range");
    if (table_[v].empty() && graph_.vertex_count > 0) table_[v] = bfs_distances(graph_, v);
    return table_[v];
}

EdgeSplit edge_split(const MolecularGraph& g, std::pair<int, int> e, DistanceOracle& dist) {
    auto [u, v] = e;
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge_split: not an edge");
    const auto& du = dist.from(u);
    const auto& dv = dist.from(v);
    EdgeSplit s;
    s.edge = e;
    for (int w = 0; w < g.vertex_count; ++w) {
        if (du[w] < dv[w])
            ++s.n_u;
        else if (dv[w] < du[w])
            ++s.n_v;
    }
    s.phi = std::abs(static_cast<long long>(s.n_u) - s.n_v);
    return s;
}

EdgeSplit edge_split(const MolecularGraph& g, std::pair<int, int> e) {
    DistanceOracle dist(g);
    return edge_split(g, e, dist);
}

long long mostar_direct(const MolecularGraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("mostar_direct: graph is disconnected");
    DistanceOracle dist(g);
    long long total = 0;
    for (auto e : g.edges) total += edge_split(g, e, dist).phi;
    return total;
}

MolecularGraph relabel(const MolecularGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count)
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
    return MolecularGraph::from_edges(g.vertex_count, std::move(edges));
}

}  // namespace phenylo
