#ifndef PHENYLO_PHENYLENE_HPP
#define PHENYLO_PHENYLENE_HPP

#include <string>
#include <vector>

#include "phenylo/molecular_graph.hpp"

namespace phenylo {

// One quadrilateral bridging slot slot_a of hexagon a with slot slot_b of
// hexagon b. Slot j of a hexagon is its boundary edge (j, j+1 mod 6).
struct Junction {
    int a = 0;
    int slot_a = 0;
    int b = 0;
    int slot_b = 0;
};

// Compact decorated-tree encoding of a tree-like phenylene: h hexagons,
// h-1 junctions whose hexagon-id graph is a tree. Immutable by convention.
struct PhenyleneTree {
    int h = 0;
    std::vector<Junction> junctions;
};

// Structural validation. Empty result means valid; otherwise every violation
// found is reported.
std::vector<std::string> validate(const PhenyleneTree& t);

// Throws std::invalid_argument listing all violations when t is invalid.
void require_valid(const PhenyleneTree& t);

// Dense vertex id of boundary vertex j of hexagon i in the expanded graph.
inline int expanded_vertex(int hexagon, int j) { return 6 * hexagon + j % 6; }

// Expanded molecular graph: 6h vertices, 8h-2 edges. Each junction
// (a,sa,b,sb) contributes the quadrilateral edges (a,sa)-(b,sb+1) and
// (a,sa+1)-(b,sb); that pairing is fixed as part of the format (the mirror
// pairing yields an isomorphic graph).
MolecularGraph expand(const PhenyleneTree& t);

enum class HexKind { Isolated, Terminal, Straight, Turn, Full };

struct HexClassification {
    std::vector<HexKind> kinds;
    int full_count = 0;
    int turn_count = 0;
    bool is_chain = false;  // no full-hexagon
};

HexClassification classify_hexagons(const PhenyleneTree& t);

enum class SegmentKind { Terminal, Zigzag, NonZigzag };

// Maximal linear sub-chain of a phenylene chain. Consecutive segments share
// exactly one turn-hexagon.
struct Segment {
    std::vector<int> hexagons;  // path order, bounding turn hexagons included
    int length = 0;
    SegmentKind kind = SegmentKind::Terminal;
};

// End-to-end segment decomposition. Throws std::invalid_argument when t has a
// full-hexagon (segments are defined for chains only).
std::vector<Segment> segments(const PhenyleneTree& t);

// The box operation: glue p1 and p2 with a new quadrilateral between slot1 of
// hex1 (in p1) and slot2 of hex2 (in p2). p2's hexagons are relabeled by
// +p1.h. Throws std::invalid_argument on occupied or conflicting slots.
PhenyleneTree join(const PhenyleneTree& p1, int hex1, int slot1,
                   const PhenyleneTree& p2, int hex2, int slot2);

// Mirror image: reflects the plane embedding, slot j -> 5 - j.
PhenyleneTree mirror(const PhenyleneTree& t);

// Slots of hexagon `hex` usable for a further junction (unused and at
// circular distance >= 2 from every used slot).
std::vector<int> free_slots(const PhenyleneTree& t, int hex);

}  // namespace phenylo

#endif
