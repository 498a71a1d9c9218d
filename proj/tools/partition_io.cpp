#include "partition_io.hpp"

#include <fstream>
#include <memory>
#include <sstream>

namespace ncpart::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) parse_error(std::string("missing field '") + name + "'");
  return *it;
}

int size_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 64)
    parse_error(std::string("field '") + name + "' must be a small nonnegative integer");
  return v.get<int>();
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) parse_error(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::vector<PointElem> point_colors(const json& j, const char* name, const PointGroup& gamma, int expected) {
  const json& v = field(j, name);
  if (!v.is_array()) parse_error(std::string("field '") + name + "' must be an array");
  if (v.size() != static_cast<std::size_t>(expected))
    parse_error(std::string("field '") + name + "' has " + std::to_string(v.size()) + " entries, expected " +
                std::to_string(expected));
  std::vector<PointElem> out;
  for (const auto& x : v) {
    if (!x.is_string()) parse_error(std::string("entries of '") + name + "' must be element names");
    out.push_back(gamma.parse(x.get<std::string>()));
  }
  return out;
}

}  // namespace

ColoredPartition parse_partition(const json& j, bool strict) {
  if (!j.is_object()) parse_error("partition must be a JSON object");
  const int k = size_field(j, "k");
  const int l = size_field(j, "l");
  auto lambda = std::make_shared<const FiniteGroup>(finite_group_from_spec(string_field(j, "lambda")));
  auto gamma = std::make_shared<const PointGroup>(group_from_spec(string_field(j, "gamma")));
  auto upper = point_colors(j, "upper_colors", *gamma, k);
  auto lower = point_colors(j, "lower_colors", *gamma, l);

  const json& blocks = field(j, "blocks");
  if (!blocks.is_array()) parse_error("field 'blocks' must be an array");
  std::vector<Block> parsed;
  std::vector<Elem> colors;
  for (const auto& b : blocks) {
    if (!b.is_object()) parse_error("each block must be an object");
    const json& points = field(b, "points");
    if (!points.is_array()) parse_error("block points must be an array");
    std::vector<PointRef> refs;
    for (const auto& p : points) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_number_integer())
        parse_error("a point is written [\"U\"|\"L\", index]");
      const auto row = p[0].get<std::string>();
      if (row != "U" && row != "L") parse_error("point row must be \"U\" or \"L\"");
      refs.push_back({row == "U" ? Row::Upper : Row::Lower, p[1].get<int>()});
    }
    colors.push_back(lambda->parse(string_field(b, "color")));
    try {
      parsed.push_back(Block::from_points(refs));
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidPartition, e.what());
    }
  }

  TwoRowPartition part;
  try {
    part = TwoRowPartition(k, l, parsed);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidPartition, e.what());
  }
  std::vector<Elem> sorted(part.size());
  for (std::size_t b = 0; b < parsed.size(); ++b) sorted[part.index_of(parsed[b])] = colors[b];
  ColoredPartition cp(lambda, gamma, std::move(part), std::move(sorted), std::move(upper), std::move(lower));
  if (strict && !cp.lambda_valid())
    throw Error(ErrorCode::InvalidColoring, "boundary condition fails for the block colours");
  if (strict && !cp.gamma_valid()) throw Error(ErrorCode::InvalidColoring, "point colours violate the Gamma-condition");
  return cp;
}

ColoredPartition parse_partition_file(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path + ": " + e.what());
  }
  return parse_partition(j, strict);
}

json serialize_partition(const ColoredPartition& cp) {
  json j;
  j["k"] = cp.k();
  j["l"] = cp.l();
  j["lambda"] = cp.lambda().label();
  j["gamma"] = cp.gamma().label();
  j["upper_colors"] = json::array();
  for (const auto& g : cp.upper_colors()) j["upper_colors"].push_back(cp.gamma().name(g));
  j["lower_colors"] = json::array();
  for (const auto& g : cp.lower_colors()) j["lower_colors"].push_back(cp.gamma().name(g));
  j["blocks"] = json::array();
  for (std::size_t b = 0; b < cp.size(); ++b) {
    json points = json::array();
    for (int i : cp.block(b).upper()) points.push_back({"U", i});
    for (int i : cp.block(b).lower()) points.push_back({"L", i});
    j["blocks"].push_back({{"points", points}, {"color", cp.lambda().name(cp.color(b))}});
  }
  return j;
}

std::vector<PointElem> parse_point_colors(const PointGroup& gamma, const std::string& list) {
  std::vector<PointElem> out;
  if (list.empty()) return out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(gamma.parse(item));
  return out;
}

}  // namespace ncpart::io
