#pragma once

#include <string>

#include "json.hpp"

#include "ncpart/partition.hpp"

namespace ncpart::io {

// Builds a colored partition from its JSON form. Raises ParseError, UnknownElementName or
// InvalidPartition; with strict set, invalid colourings raise InvalidColoring.
ColoredPartition parse_partition(const nlohmann::json& j, bool strict = true);
ColoredPartition parse_partition_file(const std::string& path, bool strict = true);

// Canonical form: blocks in canonical order, points upper first then lower, ascending.
nlohmann::json serialize_partition(const ColoredPartition& cp);

// Comma separated element names, empty string for the empty list.
std::vector<PointElem> parse_point_colors(const PointGroup& gamma, const std::string& list);

}  // namespace ncpart::io
