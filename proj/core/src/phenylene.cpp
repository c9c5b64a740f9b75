#include "phenylo/phenylene.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "phenylo/embedding.hpp"

namespace phenylo {

namespace {

int circular_distance(int a, int b) {
    int d = std::abs(a - b) % 6;
    return std::min(d, 6 - d);
}

// Junction slots per hexagon: {slot, junction index} pairs.
std::vector<std::vector<std::pair<int, int>>> slots_by_hexagon(const PhenyleneTree& t) {
    std::vector<std::vector<std::pair<int, int>>> used(std::max(t.h, 0));
    for (int i = 0; i < static_cast<int>(t.junctions.size()); ++i) {
        const Junction& j = t.junctions[i];
        if (j.a >= 0 && j.a < t.h) used[j.a].emplace_back(j.slot_a, i);
        if (j.b >= 0 && j.b < t.h) used[j.b].emplace_back(j.slot_b, i);
    }
    return used;
}

}  // namespace

std::vector<std::string> validate(const PhenyleneTree& t) {
    std::vector<std::string> violations;
    if (t.h < 1) {
        violations.push_back("hexagon count must be >= 1, got " + std::to_string(t.h));
        return violations;
    }
    if (static_cast<int>(t.junctions.size()) != t.h - 1)
        violations.push_back("expected " + std::to_string(t.h - 1) + " junctions, got " +
                             std::to_string(t.junctions.size()));

    bool ids_ok = true;
    for (size_t i = 0; i < t.junctions.size(); ++i) {
        const Junction& j = t.junctions[i];
        if (j.a < 0 || j.a >= t.h || j.b < 0 || j.b >= t.h) {
            violations.push_back("junction " + std::to_string(i) + ": hexagon id out of range");
            ids_ok = false;
        }
        if (j.a == j.b)
            violations.push_back("junction " + std::to_string(i) + ": joins a hexagon to itself");
        if (j.slot_a < 0 || j.slot_a > 5 || j.slot_b < 0 || j.slot_b > 5)
            violations.push_back("junction " + std::to_string(i) + ": slot out of range 0..5");
    }
    if (!ids_ok) return violations;

    // Junction graph on hexagon ids must be a tree.
    {
        std::vector<int> parent(t.h);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool cycle = false;
        for (const Junction& j : t.junctions) {
            int ra = find(j.a), rb = find(j.b);
            if (ra == rb)
                cycle = true;
            else
                parent[ra] = rb;
        }
        if (cycle) violations.push_back("junction graph contains a cycle");
        int root = find(0);
        for (int i = 1; i < t.h; ++i)
            if (find(i) != root) {
                violations.push_back("junction graph is disconnected");
                break;
            }
    }

    // Per-hexagon slot geometry: no repeats, pairwise circular distance >= 2.
    auto used = slots_by_hexagon(t);
    for (int hex = 0; hex < t.h; ++hex) {
        const auto& slots = used[hex];
        for (size_t i = 0; i < slots.size(); ++i) {
            for (size_t k = i + 1; k < slots.size(); ++k) {
                int d = circular_distance(slots[i].first, slots[k].first);
                if (d < 2)
                    violations.push_back("hexagon " + std::to_string(hex) + ": slots " +
                                         std::to_string(slots[i].first) + "," +
                                         std::to_string(slots[k].first) +
                                         " at circular distance " + std::to_string(d));
            }
        }
    }
    return violations;
}

void require_valid(const PhenyleneTree& t) {
    std::vector<std::string> violations = validate(t);
    if (violations.empty()) return;
    std::string msg = "invalid phenylene tree:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw std::invalid_argument(msg);
}

MolecularGraph expand(const PhenyleneTree& t) {
    require_valid(t);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(8 * t.h - 2);
    for (int i = 0; i < t.h; ++i)
        for (int j = 0; j < 6; ++j)
            edges.emplace_back(expanded_vertex(i, j), expanded_vertex(i, j + 1));
    for (const Junction& j : t.junctions) {
        edges.emplace_back(expanded_vertex(j.a, j.slot_a), expanded_vertex(j.b, j.slot_b + 1));
        edges.emplace_back(expanded_vertex(j.a, j.slot_a + 1), expanded_vertex(j.b, j.slot_b));
    }
    return MolecularGraph::from_edges(6 * t.h, std::move(edges));
}

HexClassification classify_hexagons(const PhenyleneTree& t) {
    require_valid(t);
    auto used = slots_by_hexagon(t);
    HexClassification r;
    r.kinds.resize(t.h);
    for (int hex = 0; hex < t.h; ++hex) {
        const auto& slots = used[hex];
        switch (slots.size()) {
            case 0: r.kinds[hex] = HexKind::Isolated; break;
            case 1: r.kinds[hex] = HexKind::Terminal; break;
            case 2: {
                int d = circular_distance(slots[0].first, slots[1].first);
                r.kinds[hex] = (d == 3) ? HexKind::Straight : HexKind::Turn;
                if (d == 2) ++r.turn_count;
                break;
            }
            default:
                r.kinds[hex] = HexKind::Full;
                ++r.full_count;
                break;
        }
    }
    r.is_chain = (r.full_count == 0);
    return r;
}

std::vector<Segment> segments(const PhenyleneTree& t) {
    HexClassification cls = classify_hexagons(t);
    if (!cls.is_chain)
        throw std::invalid_argument("segments: phenylene has a full-hexagon, not a chain");

    if (t.h == 1) {
        Segment s;
        s.hexagons = {0};
        s.length = 1;
        s.kind = SegmentKind::Terminal;
        return {s};
    }

    // Walk the junction path from one terminal hexagon to the other.
    std::vector<std::vector<int>> nbr(t.h);
    for (const Junction& j : t.junctions) {
        nbr[j.a].push_back(j.b);
        nbr[j.b].push_back(j.a);
    }
    int start = 0;
    while (nbr[start].size() != 1) ++start;
    std::vector<int> path{start};
    int prev = -1, cur = start;
    while (static_cast<int>(path.size()) < t.h) {
        int next = (nbr[cur][0] != prev) ? nbr[cur][0] : nbr[cur][1];
        path.push_back(next);
        prev = cur;
        cur = next;
    }

    std::vector<int> breakpoints{0};
    for (int p = 1; p < t.h - 1; ++p)
        if (cls.kinds[path[p]] == HexKind::Turn) breakpoints.push_back(p);
    breakpoints.push_back(t.h - 1);

    Embedding emb = geometric_embedding(t);
    // Side of hexagon `other` relative to the axis through positions a -> b.
    auto side = [&](int pos_a, int pos_b, int pos_other) {
        Point axis = emb.hexagon_center[path[pos_b]] - emb.hexagon_center[path[pos_a]];
        Point off = emb.hexagon_center[path[pos_other]] - emb.hexagon_center[path[pos_a]];
        return cross_sign(axis, off);
    };

    std::vector<Segment> result;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        int lo = breakpoints[i], hi = breakpoints[i + 1];
        Segment s;
        for (int p = lo; p <= hi; ++p) s.hexagons.push_back(path[p]);
        s.length = hi - lo + 1;
        if (i == 0 || i + 2 == breakpoints.size()) {
            s.kind = SegmentKind::Terminal;
        } else {
            // Internal segment: zigzag iff the neighboring segments lie on
            // different sides of the line through this segment's centers.
            int side_prev = side(lo, hi, lo - 1);
            int side_next = side(lo, hi, hi + 1);
            s.kind = (side_prev != side_next) ? SegmentKind::Zigzag : SegmentKind::NonZigzag;
        }
        result.push_back(std::move(s));
    }
    return result;
}

std::vector<int> free_slots(const PhenyleneTree& t, int hex) {
    if (hex < 0 || hex >= t.h) throw std::invalid_argument("free_slots: hexagon id out of range");
    auto used = slots_by_hexagon(t);
    std::vector<int> result;
    for (int s = 0; s < 6; ++s) {
        bool ok = true;
        for (auto [us, ji] : used[hex]) ok = ok && circular_distance(s, us) >= 2;
        if (ok) result.push_back(s);
    }
    return result;
}

PhenyleneTree join(const PhenyleneTree& p1, int hex1, int slot1,
                   const PhenyleneTree& p2, int hex2, int slot2) {
    require_valid(p1);
    require_valid(p2);
    PhenyleneTree joined;
    joined.h = p1.h + p2.h;
    joined.junctions = p1.junctions;
    for (Junction j : p2.junctions) {
        j.a += p1.h;
        j.b += p1.h;
        joined.junctions.push_back(j);
    }
    joined.junctions.push_back(Junction{hex1, slot1, hex2 + p1.h, slot2});
    std::vector<std::string> violations = validate(joined);
    if (!violations.empty()) {
        std::string msg = "join: occupied or conflicting slot:";
        for (const auto& v : violations) msg += " [" + v + "]";
        throw std::invalid_argument(msg);
    }
    return joined;
}

PhenyleneTree mirror(const PhenyleneTree& t) {
    PhenyleneTree m = t;
    for (Junction& j : m.junctions) {
        j.slot_a = 5 - j.slot_a;
        j.slot_b = 5 - j.slot_b;
    }
    return m;
}

}  // namespace phenylo
