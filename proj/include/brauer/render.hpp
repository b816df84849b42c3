#pragma once

#include <string>

#include "brauer/star.hpp"
#include "brauer/tree.hpp"
#include "brauer/tube.hpp"

namespace brauer {

// Deterministic DOT drawing of the tree: undirected edges sorted by id,
// real-stem vertices pinned to one rank, the exceptional vertex filled and
// every other vertex hollow.
std::string render_tree_dot(const BrauerTree& tree);

// DOT drawing of the stable tube grid: one node per position, levels share a
// rank, self-dual positions filled, the two self-dual hooks double-circled.
std::string render_tube_dot(const StarParams& p);

// Aligned text drawing of the tube, top level first: '.' ordinary position,
// '*' self-dual, 'H' self-dual hook.
std::string render_tube_ascii(const StarParams& p);

}  // namespace brauer
