#include "phenylo/embedding.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace phenylo {

namespace {

// Corner j of an unrotated unit hexagon, clockwise from the top; values are
// (a + b*sqrt(3)) / 2 per coordinate.
constexpr Point kCorner[6] = {
    {{0, 0}, {2, 0}},  {{0, 1}, {1, 0}},  {{0, 1}, {-1, 0}},
    {{0, 0}, {-2, 0}}, {{0, -1}, {-1, 0}}, {{0, -1}, {1, 0}},
};

// Unit outward normal of boundary edge g of an unrotated hexagon.
constexpr Point kNormal[6] = {
    {{1, 0}, {0, 1}},   {{2, 0}, {0, 0}},  {{1, 0}, {0, -1}},
    {{-1, 0}, {0, -1}}, {{-2, 0}, {0, 0}}, {{-1, 0}, {0, 1}},
};

// Ring element a + b*sqrt(3) (unscaled; used for dot/cross products).
struct Ring {
    long long a = 0;
    long long b = 0;
    friend Ring operator+(Ring l, Ring r) { return {l.a + r.a, l.b + r.b}; }
    friend Ring operator-(Ring l, Ring r) { return {l.a - r.a, l.b - r.b}; }
};

int ring_sign(long long a, long long b) {
    if (a == 0 && b == 0) return 0;
    if (a >= 0 && b >= 0) return 1;
    if (a <= 0 && b <= 0) return -1;
    // a, b have opposite signs: compare a^2 with 3 b^2.
    __int128 lhs = static_cast<__int128>(a) * a;
    __int128 rhs = 3 * static_cast<__int128>(b) * b;
    int big = (lhs > rhs) ? 1 : (lhs < rhs ? -1 : 0);
    if (big == 0) return 0;  // cannot happen for integers unless both zero
    return (big > 0) ? (a > 0 ? 1 : -1) : (b > 0 ? 1 : -1);
}

int ring_sign(Ring r) { return ring_sign(r.a, r.b); }

Ring mul(Coord l, Coord r) {
    // (l.a + l.b rt3)(r.a + r.b rt3) = (l.a r.a + 3 l.b r.b) + (l.a r.b + l.b r.a) rt3
    return {l.a * r.a + 3 * l.b * r.b, l.a * r.b + l.b * r.a};
}

bool ring_leq(Ring l, Ring r) { return ring_sign(l - r) <= 0; }

struct Face {
    std::vector<int> vertex_ids;  // structural ids in expand(t)
    std::vector<Point> pts;
};

// Separating-axis test on convex polygons; returns true when the interiors
// intersect (shared boundary alone does not count).
bool interiors_intersect(const Face& fa, const Face& fb) {
    auto separated_by_edges_of = [&](const Face& edges_of, const Face& other) {
        size_t n = edges_of.pts.size();
        for (size_t i = 0; i < n; ++i) {
            Point p = edges_of.pts[i];
            Point q = edges_of.pts[(i + 1) % n];
            Coord nx = p.y - q.y;  // normal of (q - p)
            Coord ny = q.x - p.x;
            auto project = [&](const Face& f, Ring& lo, Ring& hi) {
                for (size_t k = 0; k < f.pts.size(); ++k) {
                    Ring d = mul(nx, f.pts[k].x) + mul(ny, f.pts[k].y);
                    if (k == 0) {
                        lo = hi = d;
                    } else {
                        if (ring_leq(d, lo)) lo = d;
                        if (ring_leq(hi, d)) hi = d;
                    }
                }
            };
            Ring alo, ahi, blo, bhi;
            project(edges_of, alo, ahi);
            project(other, blo, bhi);
            if (ring_leq(ahi, blo) || ring_leq(bhi, alo)) return true;
        }
        return false;
    };
    return !separated_by_edges_of(fa, fb) && !separated_by_edges_of(fb, fa);
}

}  // namespace

double Coord::approx() const { return (a + b * std::sqrt(3.0)) / 2.0; }

int coord_sign(Coord c) { return ring_sign(c.a, c.b); }

int cross_sign(Point p, Point q) { return ring_sign(mul(p.x, q.y) - mul(p.y, q.x)); }

Embedding geometric_embedding(const PhenyleneTree& t) {
    require_valid(t);
    Embedding emb;
    emb.vertex_position.resize(6 * t.h);
    emb.hexagon_center.assign(t.h, Point{});
    emb.rotation.assign(t.h, 0);

    std::vector<std::vector<std::pair<int, const Junction*>>> nbr(t.h);
    for (const Junction& j : t.junctions) {
        nbr[j.a].emplace_back(j.b, &j);
        nbr[j.b].emplace_back(j.a, &j);
    }

    std::vector<char> placed(t.h, 0);
    placed[0] = 1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (auto [b, jptr] : nbr[a]) {
            if (placed[b]) continue;
            int sa = (jptr->a == a) ? jptr->slot_a : jptr->slot_b;
            int sb = (jptr->a == a) ? jptr->slot_b : jptr->slot_a;
            int g = (sa + emb.rotation[a]) % 6;
            emb.rotation[b] = ((sa + emb.rotation[a] + 3 - sb) % 6 + 6) % 6;
            emb.hexagon_center[b] =
                emb.hexagon_center[a] + kCorner[g] + kNormal[g] - kCorner[(g + 4) % 6];
            placed[b] = 1;
            q.push(b);
        }
    }

    for (int i = 0; i < t.h; ++i)
        for (int j = 0; j < 6; ++j)
            emb.vertex_position[expanded_vertex(i, j)] =
                emb.hexagon_center[i] + kCorner[(j + emb.rotation[i]) % 6];

    // Faces: h hexagons plus h-1 quadrilaterals.
    std::vector<Face> faces;
    for (int i = 0; i < t.h; ++i) {
        Face f;
        for (int j = 0; j < 6; ++j) {
            f.vertex_ids.push_back(expanded_vertex(i, j));
            f.pts.push_back(emb.vertex_position[expanded_vertex(i, j)]);
        }
        faces.push_back(std::move(f));
    }
    for (const Junction& j : t.junctions) {
        Face f;
        for (int vid : {expanded_vertex(j.a, j.slot_a), expanded_vertex(j.a, j.slot_a + 1),
                        expanded_vertex(j.b, j.slot_b), expanded_vertex(j.b, j.slot_b + 1)}) {
            f.vertex_ids.push_back(vid);
            f.pts.push_back(emb.vertex_position[vid]);
        }
        faces.push_back(std::move(f));
    }

    for (size_t x = 0; x < faces.size() && !emb.overlap; ++x) {
        for (size_t y = x + 1; y < faces.size() && !emb.overlap; ++y) {
            bool incident = false;
            for (int u : faces[x].vertex_ids)
                for (int v : faces[y].vertex_ids) incident = incident || (u == v);
            if (incident) continue;
            for (const Point& p : faces[x].pts)
                for (const Point& r : faces[y].pts)
                    if (p == r) emb.overlap = true;
            if (!emb.overlap && interiors_intersect(faces[x], faces[y])) emb.overlap = true;
        }
    }
    return emb;
}

}  // namespace phenylo
