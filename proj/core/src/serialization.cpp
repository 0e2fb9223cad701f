#include "isacnet/serialization.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "isacnet/regioncore.hpp"

namespace isacnet {
namespace {

using nlohmann::json;

// nlohmann reports byte offsets; error messages speak in lines.
int line_of_offset(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
}

json parse_json_or_throw(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": invalid JSON at line " +
                     std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
  }
}

const json& require_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

int require_int(const json& value, const char* where) {
  if (!value.is_number_integer()) {
    throw ParseError(std::string(where) + " must be an integer");
  }
  return value.get<int>();
}

double require_number(const json& value, const char* where) {
  if (!value.is_number()) {
    throw ParseError(std::string(where) + " must be a number");
  }
  return value.get<double>();
}

}  // namespace

NetworkSpec parse_network(std::string_view text) {
  json root = parse_json_or_throw(text, "network");
  if (!root.is_object()) {
    throw ParseError("network: top-level value must be an object");
  }
  static const char* known[] = {"nodes", "source", "sink", "sensing_area", "links"};
  for (auto it = root.begin(); it != root.end(); ++it) {
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return it.key() == k; }) == std::end(known)) {
      throw ParseError("network: unknown field \"" + it.key() + "\"");
    }
  }

  NetworkSpec spec;
  spec.node_count = require_int(require_field(root, "nodes"), "\"nodes\"");
  spec.source = require_int(require_field(root, "source"), "\"source\"");
  spec.sink = require_int(require_field(root, "sink"), "\"sink\"");

  const json& area = require_field(root, "sensing_area");
  if (!area.is_array()) {
    throw ParseError("\"sensing_area\" must be an array");
  }
  for (const json& v : area) {
    spec.sensing_area.push_back(require_int(v, "sensing_area entry"));
  }

  const json& links = require_field(root, "links");
  if (!links.is_array()) {
    throw ParseError("\"links\" must be an array");
  }
  std::set<std::pair<NodeId, NodeId>> seen;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const json& entry = links[i];
    const std::string where = "links[" + std::to_string(i) + "]";
    if (!entry.is_object()) {
      throw ParseError(where + " must be an object");
    }
    UndirectedLink link;
    link.a = require_int(require_field(entry, "a"), (where + ".a").c_str());
    link.b = require_int(require_field(entry, "b"), (where + ".b").c_str());
    link.capacity = require_number(require_field(entry, "capacity"), (where + ".capacity").c_str());
    if (link.a == link.b) {
      throw ParseError(where + ": self-loop at node " + std::to_string(link.a));
    }
    auto key = std::minmax(link.a, link.b);
    if (!seen.insert(key).second) {
      throw ParseError(where + ": duplicate link {" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + "}");
    }
    spec.links.push_back(link);
  }
  return spec;
}

std::string serialize_network(const NetworkSpec& spec) {
  json root;
  root["nodes"] = spec.node_count;
  root["source"] = spec.source;
  root["sink"] = spec.sink;
  root["sensing_area"] = spec.sensing_area;
  json links = json::array();
  for (const UndirectedLink& link : spec.links) {
    links.push_back({{"a", link.a}, {"b", link.b}, {"capacity", link.capacity}});
  }
  root["links"] = std::move(links);
  return root.dump(2) + "\n";
}

NetworkSpec load_network(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open network file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failure on network file: " + path);
  }
  return parse_network(buf.str());
}

std::string serialize_witness(const RateAssignment& assign, const ValidatedNetwork& net) {
  const auto& edges = net.edges();
  if (assign.comm.size() != edges.size() || assign.sense.size() != edges.size()) {
    throw Error("witness does not match the network's edge count");
  }
  json out = json::array();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (assign.comm[e] == 0.0 && assign.sense[e] == 0.0) {
      continue;
    }
    out.push_back({{"from", edges[e].from},
                   {"to", edges[e].to},
                   {"f", assign.comm[e]},
                   {"s", assign.sense[e]}});
  }
  return out.dump(2) + "\n";
}

RateAssignment parse_witness(std::string_view text, const ValidatedNetwork& net) {
  json root = parse_json_or_throw(text, "witness");
  if (!root.is_array()) {
    throw ParseError("witness: top-level value must be an array");
  }
  RateAssignment assign;
  assign.comm.assign(net.edges().size(), 0.0);
  assign.sense.assign(net.edges().size(), 0.0);
  for (std::size_t i = 0; i < root.size(); ++i) {
    const json& entry = root[i];
    const std::string where = "witness[" + std::to_string(i) + "]";
    if (!entry.is_object()) {
      throw ParseError(where + " must be an object");
    }
    NodeId from = require_int(require_field(entry, "from"), (where + ".from").c_str());
    NodeId to = require_int(require_field(entry, "to"), (where + ".to").c_str());
    int edge = net.edge_index(from, to);
    if (edge < 0) {
      throw ValidationError(where + ": no link between nodes " + std::to_string(from) + " and " +
                            std::to_string(to));
    }
    assign.comm[edge] = require_number(require_field(entry, "f"), (where + ".f").c_str());
    assign.sense[edge] = require_number(require_field(entry, "s"), (where + ".s").c_str());
  }
  return assign;
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open output file: " + tmp.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      throw IoError("write failure on output file: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot replace output file: " + path);
  }
}

}  // namespace isacnet
