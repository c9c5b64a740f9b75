#ifndef PHENYLO_CUTS_HPP
#define PHENYLO_CUTS_HPP

#include <utility>
#include <vector>

#include "phenylo/phenylene.hpp"

namespace phenylo {

// One orthogonal-cut class: a maximal set of mutually parallel edges of the
// expanded graph. Removing it splits the graph into exactly two components;
// r_u / r_v count the hexagons wholly contained in each. The representative
// edge (u, v) is oriented so that u lies in the r_u component.
struct CutClass {
    std::vector<std::pair<int, int>> edges;  // sorted
    int size = 0;
    int r_u = 0;
    int r_v = 0;
    std::pair<int, int> representative{0, 0};
};

// All cut classes of t, in deterministic order (by smallest member edge).
// Classes partition the edge set of expand(t).
std::vector<CutClass> cut_classes(const PhenyleneTree& t);

// Cut-method Mostar index: 6 * sum over classes of size * |r_u - r_v|.
// Agrees with mostar_direct(expand(t)) for every valid t.
long long mostar_cut(const PhenyleneTree& t);

// Class containing a given edge of expand(t), with r_u taken on the side of
// e.first. Throws std::invalid_argument if e is not an edge.
CutClass cut_class_through(const PhenyleneTree& t, std::pair<int, int> e);

}  // namespace phenylo

#endif
