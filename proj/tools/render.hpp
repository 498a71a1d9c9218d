#pragma once

#include <string>

#include "ncpart/partition.hpp"

namespace ncpart::render {

std::string ascii(const ColoredPartition& cp);
// A complete standalone SVG document.
std::string svg(const ColoredPartition& cp);

}  // namespace ncpart::render
