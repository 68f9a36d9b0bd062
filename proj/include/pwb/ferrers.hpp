#pragma once

#include <cstdint>
#include <string>

#include "pwb/partition.hpp"
#include "pwb/statistics.hpp"

namespace pwb {

// Dot-grid renderings of Ferrers diagrams. Nodes are '.', one row per part,
// glyphs separated by single spaces. The overlay variant marks the nodes
// belonging to the (k,m)-polygon with 'o', which reproduces the polygon
// figures as plain text. The empty partition renders as the empty string.
std::string render_ferrers(const Partition& p);
std::string render_ferrers_with_polygon(const Partition& p, std::int64_t k,
                                        std::int64_t m);

// The polygon shape on its own, every node marked 'o'.
std::string render_polygon(const PolygonShape& shape);

} // namespace pwb
