#pragma once

#include <string>

#include "hamfold/cover.hpp"
#include "hamfold/graph.hpp"

namespace hamfold {

std::string graph_to_dot(const GeneralGraph& g, const std::string& name = "G");
std::string graph_to_dot(const GraphRef& g, const std::string& name = "G",
                         long long max_vertices = kDefaultMaxVertices);

/// DOT with one cluster per coset, so the fibre blocks of the figures come
/// out side by side.
std::string cover_to_dot(const CoverGraph& c);

}  // namespace hamfold
