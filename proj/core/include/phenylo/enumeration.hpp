#ifndef PHENYLO_ENUMERATION_HPP
#define PHENYLO_ENUMERATION_HPP

#include <map>
#include <string>
#include <vector>

#include "phenylo/phenylene.hpp"

namespace phenylo {

struct CatalogEntry {
    PhenyleneTree tree;
    std::string cert;
    long long mo = 0;
    bool overlap = false;
    int full_hexagons = 0;
    int turn_hexagons = 0;
};

// All non-isomorphic tree-like phenylenes with h hexagons, one
// representative per class, in deterministic (certificate) order.
struct ClassCatalog {
    int h = 0;
    std::vector<CatalogEntry> entries;
    int total_classes = 0;
    int chain_classes = 0;
    int overlap_classes = 0;
    std::map<int, int> by_full_hexagons;  // full-hexagon count -> classes
};

struct EnumerateOptions {
    bool chains_only = false;
    bool planar_only = false;       // drop geometrically self-overlapping classes
    int max_h = 9;                  // resource bound; override via options or
                                    // the PHENYLO_MAX_H environment variable
};

// Exhaustive isomorph-free generation by incremental hexagon attachment with
// certificate deduplication per level. Throws std::invalid_argument for
// h < 1 and std::runtime_error when h exceeds the resource bound.
ClassCatalog enumerate_phenylenes(int h, const EnumerateOptions& opts = {});

// Histogram of Mostar values: value -> indices into catalog.entries.
std::map<long long, std::vector<int>> count_by_invariant(const ClassCatalog& catalog);

int resource_bound(const EnumerateOptions& opts);

}  // namespace phenylo

#endif
