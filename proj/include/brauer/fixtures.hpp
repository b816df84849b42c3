#pragma once

#include <string>
#include <vector>

#include "brauer/tree.hpp"

namespace brauer {

// Planar tree of the order-109 block: twelve edges, multiplicity nine, a
// four-edge real stem E0..E3, and two mirror-image branches around the
// second stem vertex.
BrauerTree ree_tree();

// Three-edge star with the exceptional centre on the stem and multiplicity
// two.
BrauerTree star_tree_e3_m2();

// Frozen reference character tables as JSON documents: "c3", "c5c4",
// "c15c4", "c15c8".
std::vector<std::string> fixture_table_names();
const char* fixture_table_json(const std::string& name);

}  // namespace brauer
