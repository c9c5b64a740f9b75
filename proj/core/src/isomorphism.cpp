#include "phenylo/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace phenylo {

namespace {

// Color refinement shared across graphs so colors are comparable between
// them. Seed colors come from (degree, sorted distance profile); refinement
// iterates neighbor-multiset splitting to a fixed point.
std::vector<std::vector<int>> refine_colors(const std::vector<const MolecularGraph*>& graphs) {
    std::vector<std::vector<int>> colors(graphs.size());

    std::map<std::vector<long long>, int> key_ids;
    std::vector<std::vector<std::vector<long long>>> keys(graphs.size());
    for (size_t gi = 0; gi < graphs.size(); ++gi) {
        const auto& g = *graphs[gi];
        keys[gi].resize(g.vertex_count);
        for (int v = 0; v < g.vertex_count; ++v) {
            std::vector<int> d = bfs_distances(g, v);
            std::sort(d.begin(), d.end());
            auto& key = keys[gi][v];
            key.push_back(static_cast<long long>(g.adjacency[v].size()));
            for (int x : d) key.push_back(x);
            key_ids.emplace(key, 0);
        }
    }

    auto assign = [&] {
        int next = 0;
        for (auto& [k, id] : key_ids) id = next++;
        for (size_t gi = 0; gi < graphs.size(); ++gi) {
            colors[gi].resize(keys[gi].size());
            for (size_t v = 0; v < keys[gi].size(); ++v) colors[gi][v] = key_ids.at(keys[gi][v]);
        }
        return next;
    };

    int color_count = assign();
    for (;;) {
        key_ids.clear();
        for (size_t gi = 0; gi < graphs.size(); ++gi) {
            const auto& g = *graphs[gi];
            for (int v = 0; v < g.vertex_count; ++v) {
                std::vector<long long> key{colors[gi][v]};
                std::vector<int> nbr;
                for (int w : g.adjacency[v]) nbr.push_back(colors[gi][w]);
                std::sort(nbr.begin(), nbr.end());
                for (int c : nbr) key.push_back(c);
                keys[gi][v] = std::move(key);
                key_ids.emplace(keys[gi][v], 0);
            }
        }
        int next_count = assign();
        if (next_count == color_count) break;
        color_count = next_count;
    }
    return colors;
}

}  // namespace

std::string certificate(const MolecularGraph& g) {
    const int n = g.vertex_count;
    std::string header = "MG:" + std::to_string(n) + ":";
    if (n == 0) return header;

    std::vector<int> colors = refine_colors({&g})[0];
    int color_count = 1 + *std::max_element(colors.begin(), colors.end());
    std::vector<std::vector<int>> buckets(color_count);
    for (int v = 0; v < n; ++v) buckets[colors[v]].push_back(v);

    // Canonical position -> color class (classes in canonical color order).
    std::vector<int> class_of_position;
    for (int c = 0; c < color_count; ++c)
        class_of_position.insert(class_of_position.end(), buckets[c].size(), c);

    // Minimize the row-major lower-triangle adjacency bitstring over all
    // color-respecting labelings, depth-first with prefix pruning.
    std::vector<int> perm;
    std::vector<char> placed(n, 0);
    std::string cur;
    std::string best;
    bool have_best = false;

    std::function<void(int)> dfs = [&](int p) {
        if (p == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        std::vector<std::pair<std::string, int>> cand;
        for (int v : buckets[class_of_position[p]]) {
            if (placed[v]) continue;
            std::string row(p, '0');
            for (int q = 0; q < p; ++q)
                if (g.has_edge(v, perm[q])) row[q] = '1';
            cand.emplace_back(std::move(row), v);
        }
        std::sort(cand.begin(), cand.end());
        for (auto& [row, v] : cand) {
            size_t base = cur.size();
            cur += row;
            if (have_best) {
                int cmp = best.compare(0, cur.size(), cur);
                if (cmp < 0) {  // prefix already worse than best
                    cur.resize(base);
                    continue;
                }
            }
            placed[v] = 1;
            perm.push_back(v);
            dfs(p + 1);
            perm.pop_back();
            placed[v] = 0;
            cur.resize(base);
        }
    };
    dfs(0);
    return header + best;
}

std::string certificate_hash(const std::string& cert) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : cert) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

bool are_isomorphic(const MolecularGraph& g1, const MolecularGraph& g2) {
    if (g1.vertex_count != g2.vertex_count) return false;
    if (g1.edges.size() != g2.edges.size()) return false;
    const int n = g1.vertex_count;
    if (n == 0) return true;

    auto colors = refine_colors({&g1, &g2});
    const auto& c1 = colors[0];
    const auto& c2 = colors[1];

    int color_count = 0;
    for (int v = 0; v < n; ++v) color_count = std::max({color_count, c1[v] + 1, c2[v] + 1});
    std::vector<std::vector<int>> buckets1(color_count), buckets2(color_count);
    for (int v = 0; v < n; ++v) buckets1[c1[v]].push_back(v);
    for (int v = 0; v < n; ++v) buckets2[c2[v]].push_back(v);
    for (int c = 0; c < color_count; ++c)
        if (buckets1[c].size() != buckets2[c].size()) return false;

    // Match g1 vertices in rarest-class-first order, preferring vertices
    // adjacent to already matched ones.
    std::vector<int> order;
    {
        std::vector<char> in_order(n, 0);
        auto pick = [&](bool need_adjacent) -> int {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (in_order[v]) continue;
                if (need_adjacent) {
                    bool adj = false;
                    for (int w : g1.adjacency[v]) adj = adj || in_order[w];
                    if (!adj) continue;
                }
                if (best == -1 || buckets1[c1[v]].size() < buckets1[c1[best]].size()) best = v;
            }
            return best;
        };
        while (static_cast<int>(order.size()) < n) {
            int v = order.empty() ? pick(false) : pick(true);
            if (v == -1) v = pick(false);  // disconnected fallback
            order.push_back(v);
            in_order[v] = 1;
        }
    }

    std::vector<int> map1(n, -1), map2(n, -1);
    std::function<bool(int)> match = [&](int idx) {
        if (idx == n) return true;
        int v = order[idx];
        for (int w : buckets2[c1[v]]) {
            if (map2[w] != -1) continue;
            bool ok = true;
            for (int x : g1.adjacency[v]) {
                if (map1[x] != -1 && !g2.has_edge(w, map1[x])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                for (int y : g2.adjacency[w]) {
                    if (map2[y] != -1 && !g1.has_edge(v, map2[y])) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            map1[v] = w;
            map2[w] = v;
            if (match(idx + 1)) return true;
            map1[v] = -1;
            map2[w] = -1;
        }
        return false;
    };
    return match(0);
}

}  // namespace phenylo
