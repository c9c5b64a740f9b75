#ifndef PHENYLO_EMBEDDING_HPP
#define PHENYLO_EMBEDDING_HPP

#include <array>
#include <vector>

#include "phenylo/phenylene.hpp"

namespace phenylo {

// Exact coordinate (a + b*sqrt(3)) / 2. All vertex coordinates of a unit-edge
// phenylene embedding live in this ring, so geometric predicates are exact.
struct Coord {
    long long a = 0;
    long long b = 0;

    friend Coord operator+(Coord l, Coord r) { return {l.a + r.a, l.b + r.b}; }
    friend Coord operator-(Coord l, Coord r) { return {l.a - r.a, l.b - r.b}; }
    friend bool operator==(Coord l, Coord r) { return l.a == r.a && l.b == r.b; }
    double approx() const;
};

// Sign of a + b*sqrt(3), exactly.
int coord_sign(Coord c);

struct Point {
    Coord x, y;
    friend Point operator+(Point l, Point r) { return {l.x + r.x, l.y + r.y}; }
    friend Point operator-(Point l, Point r) { return {l.x - r.x, l.y - r.y}; }
    friend bool operator==(Point l, Point r) { return l.x == r.x && l.y == r.y; }
};

// Exact sign of the z-component of (p x q).
int cross_sign(Point p, Point q);

// Exact plane embedding with regular unit hexagons and unit-square
// quadrilaterals. overlap is set when two vertices of non-incident faces
// coincide or two face interiors intersect (helicene-like self-overlap).
struct Embedding {
    std::vector<Point> vertex_position;   // indexed by expanded_vertex(i, j)
    std::vector<Point> hexagon_center;
    std::vector<int> rotation;            // vertex j of hexagon i sits at
                                          // local corner (j + rotation[i]) % 6
    bool overlap = false;
};

Embedding geometric_embedding(const PhenyleneTree& t);

}  // namespace phenylo

#endif
