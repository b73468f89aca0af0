// Copyright 2026 The arpq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arpq/instance_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "arpq/error.hpp"

namespace arpq {

using nlohmann::json;

namespace {

void require_keys(const json& obj, std::initializer_list<const char*> allowed, const char* what) {
  if (!obj.is_object()) throw InvalidInput(std::string(what) + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) throw InvalidInput("unknown key '" + key + "' in " + what);
  }
  for (const char* k : allowed)
    if (!obj.contains(k)) throw InvalidInput(std::string("missing key '") + k + "' in " + what);
}

int as_int(const json& value, const char* what) {
  if (!value.is_number_integer())
    throw InvalidInput(std::string(what) + " must be an integer");
  return value.get<int>();
}

}  // namespace

ProblemInstance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("instance is not valid JSON: ") + e.what());
  }
  require_keys(doc, {"nodes", "start", "end", "edges", "deadline"}, "instance");
  if (!doc["nodes"].is_array() || !doc["edges"].is_array())
    throw InvalidInput("'nodes' and 'edges' must be arrays");
  if (!doc["start"].is_string() || !doc["end"].is_string())
    throw InvalidInput("'start' and 'end' must be node id strings");

  std::vector<NodeSpec> nodes;
  for (const auto& n : doc["nodes"]) {
    require_keys(n, {"id", "asset_value"}, "node");
    if (!n["id"].is_string()) throw InvalidInput("node id must be a string");
    if (!n["asset_value"].is_number()) throw InvalidInput("asset_value must be a number");
    nodes.push_back({n["id"].get<std::string>(), n["asset_value"].get<double>()});
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : doc["edges"]) {
    require_keys(e, {"u", "v", "time"}, "edge");
    if (!e["u"].is_string() || !e["v"].is_string())
      throw InvalidInput("edge endpoints must be node id strings");
    edges.push_back({e["u"].get<std::string>(), e["v"].get<std::string>(), as_int(e["time"], "edge time")});
  }
  return ProblemInstance::create(nodes, doc["start"].get<std::string>(),
                                 doc["end"].get<std::string>(), edges,
                                 as_int(doc["deadline"], "deadline"));
}

ProblemInstance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path));
}

std::string dump_instance(const ProblemInstance& instance) {
  json doc;
  doc["nodes"] = json::array();
  for (NodeIndex u = 0; u < instance.node_count(); ++u)
    doc["nodes"].push_back({{"id", instance.name(u)}, {"asset_value", instance.asset_value(u)}});
  doc["start"] = instance.name(instance.start());
  doc["end"] = instance.name(instance.end());
  doc["edges"] = json::array();
  for (const auto& e : instance.edges())
    doc["edges"].push_back({{"u", instance.name(e.u)}, {"v", instance.name(e.v)}, {"time", e.time}});
  doc["deadline"] = instance.deadline();
  return doc.dump(2) + "\n";
}

void save_instance(const ProblemInstance& instance, const std::filesystem::path& path) {
  write_text_file(path, dump_instance(instance));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace arpq
