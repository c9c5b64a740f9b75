#ifndef PHENYLO_MOLECULAR_GRAPH_HPP
#define PHENYLO_MOLECULAR_GRAPH_HPP

#include <utility>
#include <vector>

namespace phenylo {

// Simple undirected graph with dense vertex ids 0..n-1.
// Immutable after construction; all operations on it are pure.
struct MolecularGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;      // normalized u < v, sorted
    std::vector<std::vector<int>> adjacency;     // sorted neighbor lists

    static MolecularGraph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    bool is_connected() const;
    bool is_bipartite() const;
    std::vector<int> degrees() const;
};

// Per-edge distance split: n_u vertices strictly closer to u, n_v strictly
// closer to v, phi = |n_u - n_v|. Ties count in neither.
struct EdgeSplit {
    std::pair<int, int> edge;
    int n_u = 0;
    int n_v = 0;
    long long phi = 0;
};

// Exact unweighted shortest-path distances from src (hop counts).
// Unreachable vertices get -1. Throws std::invalid_argument if src is out of range.
std::vector<int> bfs_distances(const MolecularGraph& g, int src);

// Lazily memoized per-vertex BFS tables: each vertex's BFS runs at most once.
class DistanceOracle {
public:
    explicit DistanceOracle(const MolecularGraph& g) : graph_(g), table_(g.vertex_count) {}
    const std::vector<int>& from(int v);

private:
    const MolecularGraph& graph_;
    std::vector<std::vector<int>> table_;
};

EdgeSplit edge_split(const MolecularGraph& g, std::pair<int, int> e);
EdgeSplit edge_split(const MolecularGraph& g, std::pair<int, int> e, DistanceOracle& dist);

// Mo(G) = sum over edges of phi. Throws std::invalid_argument on a
// disconnected graph.
long long mostar_direct(const MolecularGraph& g);

// Relabeled copy: vertex v of g becomes perm[v].
MolecularGraph relabel(const MolecularGraph& g, const std::vector<int>& perm);

}  // namespace phenylo

#endif
