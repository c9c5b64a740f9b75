#include "phenylo/json_io.hpp"

#include <cstdio>
#include <stdexcept>

#include "phenylo/embedding.hpp"
#include "phenylo/isomorphism.hpp"

namespace phenylo {

nlohmann::json tree_to_json(const PhenyleneTree& t) {
    nlohmann::json j;
    j["h"] = t.h;
    j["junctions"] = nlohmann::json::array();
    for (const Junction& jc : t.junctions)
        j["junctions"].push_back(
            {{"a", jc.a}, {"slot_a", jc.slot_a}, {"b", jc.b}, {"slot_b", jc.slot_b}});
    return j;
}

PhenyleneTree tree_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("junctions") ||
        !j["h"].is_number_integer() || !j["junctions"].is_array())
        throw std::invalid_argument("tree json must be {\"h\": int, \"junctions\": [...]}");
    PhenyleneTree t;
    t.h = j["h"].get<int>();
    for (const auto& jc : j["junctions"]) {
        if (!jc.is_object() || !jc.contains("a") || !jc.contains("slot_a") || !jc.contains("b") ||
            !jc.contains("slot_b"))
            throw std::invalid_argument("junction json needs a, slot_a, b, slot_b");
        t.junctions.push_back(Junction{jc["a"].get<int>(), jc["slot_a"].get<int>(),
                                       jc["b"].get<int>(), jc["slot_b"].get<int>()});
    }
    require_valid(t);
    return t;
}

nlohmann::json catalog_entry_to_json(const CatalogEntry& e) {
    nlohmann::json j;
    j["tree"] = tree_to_json(e.tree);
    j["certificate"] = certificate_hash(e.cert);
    j["mostar"] = e.mo;
    j["overlap"] = e.overlap;
    j["full_hexagons"] = e.full_hexagons;
    j["turn_hexagons"] = e.turn_hexagons;
    if (auto name = recognize_family(e.tree)) j["family"] = *name;
    return j;
}

nlohmann::json catalog_summary_to_json(const ClassCatalog& c) {
    nlohmann::json j;
    j["h"] = c.h;
    j["total_classes"] = c.total_classes;
    j["chain_classes"] = c.chain_classes;
    j["overlap_classes"] = c.overlap_classes;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [full, count] : c.by_full_hexagons) hist[std::to_string(full)] = count;
    j["by_full_hexagons"] = hist;
    return j;
}

nlohmann::json ranking_to_json(const RankingReport& r) {
    nlohmann::json j;
    j["h"] = r.h;
    j["chains_only"] = r.chains_only;
    j["planar_only"] = r.planar_only;
    j["groups"] = nlohmann::json::array();
    int rank_no = 1;
    for (const ValueGroup& g : r.groups) {
        nlohmann::json jg;
        jg["rank"] = rank_no++;
        jg["mostar"] = g.value;
        jg["class_count"] = static_cast<int>(g.members.size());
        jg["members"] = g.labels;
        j["groups"].push_back(std::move(jg));
    }
    return j;
}

nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json j;
    j["name"] = v.name;
    j["pass"] = v.pass;
    j["asserted"] = v.asserted;
    if (v.asserted) {
        j["expected_value"] = v.expected_value;
        j["expected_members"] = v.expected_members;
    }
    j["observed_value"] = v.observed_value;
    j["observed_members"] = v.observed_members;
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

std::string tree_to_dot(const PhenyleneTree& t) {
    require_valid(t);
    MolecularGraph g = expand(t);
    Embedding emb = geometric_embedding(t);
    std::string out = "graph phenylene {\n  node [shape=point];\n";
    char buf[128];
    for (int v = 0; v < g.vertex_count; ++v) {
        std::snprintf(buf, sizeof buf, "  v%d [pos=\"%.6f,%.6f!\"];\n", v,
                      emb.vertex_position[v].x.approx(), emb.vertex_position[v].y.approx());
        out += buf;
    }
    for (auto [u, v] : g.edges) {
        std::snprintf(buf, sizeof buf, "  v%d -- v%d;\n", u, v);
        out += buf;
    }
    out += "}\n";
    return out;
}

}  // namespace phenylo
