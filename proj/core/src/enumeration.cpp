#include "phenylo/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "phenylo/cuts.hpp"
#include "phenylo/embedding.hpp"
#include "phenylo/isomorphism.hpp"

namespace phenylo {

int resource_bound(const EnumerateOptions& opts) {
    if (const char* env = std::getenv("PHENYLO_MAX_H")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    return opts.max_h;
}

ClassCatalog enumerate_phenylenes(int h, const EnumerateOptions& opts) {
    if (h < 1) throw std::invalid_argument("enumerate: h must be >= 1");
    int bound = resource_bound(opts);
    if (h > bound)
        throw std::runtime_error("enumerate: h=" + std::to_string(h) +
                                 " exceeds the resource bound " + std::to_string(bound) +
                                 " (~3^h classes); raise max_h or PHENYLO_MAX_H to override");

    // Level-by-level growth: every tree-like phenylene with h+1 hexagons
    // arises from one with h by removing a leaf hexagon, so attaching a new
    // hexagon at every free slot of every representative is exhaustive. The
    // new hexagon's own slot is fixed at 0; its rotation is a relabeling.
    std::map<std::string, PhenyleneTree> level;
    level.emplace(certificate(expand(PhenyleneTree{1, {}})), PhenyleneTree{1, {}});
    for (int cur = 1; cur < h; ++cur) {
        std::map<std::string, PhenyleneTree> next;
        for (const auto& [cert, tree] : level) {
            for (int hex = 0; hex < tree.h; ++hex) {
                for (int slot : free_slots(tree, hex)) {
                    PhenyleneTree child = tree;
                    ++child.h;
                    child.junctions.push_back(Junction{hex, slot, child.h - 1, 0});
                    std::string child_cert = certificate(expand(child));
                    next.emplace(std::move(child_cert), std::move(child));
                }
            }
        }
        level = std::move(next);
    }

    ClassCatalog catalog;
    catalog.h = h;
    for (auto& [cert, tree] : level) {
        HexClassification cls = classify_hexagons(tree);
        if (opts.chains_only && !cls.is_chain) continue;
        bool overlap = geometric_embedding(tree).overlap;
        if (opts.planar_only && overlap) continue;
        CatalogEntry e;
        e.tree = std::move(tree);
        e.cert = cert;
        e.mo = mostar_cut(e.tree);
        e.overlap = overlap;
        e.full_hexagons = cls.full_count;
        e.turn_hexagons = cls.turn_count;
        if (overlap) ++catalog.overlap_classes;
        if (cls.is_chain) ++catalog.chain_classes;
        ++catalog.by_full_hexagons[cls.full_count];
        catalog.entries.push_back(std::move(e));
    }
    catalog.total_classes = static_cast<int>(catalog.entries.size());
    // std::map iteration already sorted the entries by certificate.
    return catalog;
}

std::map<long long, std::vector<int>> count_by_invariant(const ClassCatalog& catalog) {
    std::map<long long, std::vector<int>> hist;
    for (int i = 0; i < static_cast<int>(catalog.entries.size()); ++i)
        hist[catalog.entries[i].mo].push_back(i);
    return hist;
}

}  // namespace phenylo
