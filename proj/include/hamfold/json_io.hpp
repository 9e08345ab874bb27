#pragma once

#include <string>

#include "json.hpp"

#include "hamfold/cover.hpp"
#include "hamfold/group.hpp"
#include "hamfold/walk.hpp"

namespace hamfold {

using Json = nlohmann::json;

// Graphs: {"type":"hamming","d":..,"q":..} or
// {"type":"general","vertices":[labels],"edges":[[a,b],..]}.
Json graph_to_json(const GraphRef& g);
GraphRef graph_from_json(const Json& j);

// Walks: {"graph":.., "vertices":[..]}; vertices are coordinate tuples over
// Hamming graphs and labels over general graphs.
Json walk_to_json(const Walk& w);
Walk walk_from_json(const Json& j);

// Certificates: {"initial":walk,"moves":[{"kind":..,"k":..,"vertex":..?},..]}.
Json certificate_to_json(const MoveCertificate& c);
MoveCertificate certificate_from_json(const Json& j);

Json element_to_json(const GroupElement& e);
GroupElement element_from_json(const GroupPresentation& p, const Json& j);

Json cover_to_json(const CoverGraph& c);
CoverGraph cover_from_json(const Json& j);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

}  // namespace hamfold
