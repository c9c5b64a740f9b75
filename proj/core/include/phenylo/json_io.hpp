#ifndef PHENYLO_JSON_IO_HPP
#define PHENYLO_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "phenylo/enumeration.hpp"
#include "phenylo/phenylene.hpp"
#include "phenylo/verify.hpp"

namespace phenylo {

// Canonical interchange format:
// {"h": int, "junctions": [{"a":..,"slot_a":..,"b":..,"slot_b":..}, ...]}
nlohmann::json tree_to_json(const PhenyleneTree& t);
PhenyleneTree tree_from_json(const nlohmann::json& j);

nlohmann::json catalog_entry_to_json(const CatalogEntry& e);
nlohmann::json catalog_summary_to_json(const ClassCatalog& c);
nlohmann::json ranking_to_json(const RankingReport& r);
nlohmann::json verdict_to_json(const Verdict& v);

// Graphviz export with exact embedding coordinates as pos attributes.
std::string tree_to_dot(const PhenyleneTree& t);

}  // namespace phenylo

#endif
