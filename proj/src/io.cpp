#include "enclose/io.hpp"

#include <fstream>
#include <sstream>

#include "enclose/error.hpp"
#include "json.hpp"

namespace enclose::io {

using nlohmann::json;

namespace {

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw PreconditionError(std::string("instance: missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

}  // namespace

Decomposition parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("instance: ") + e.what());
  }
  if (!j.is_object()) throw PreconditionError("instance: top level must be an object");
  const int n = int_field(j, "n");
  const int lambda = int_field(j, "lambda");
  const int k = int_field(j, "k");
  if (n < 1 || lambda < 1 || k < 1) throw PreconditionError("instance: n, lambda, k must be positive");
  if (!j.contains("classes") || !j.at("classes").is_array()) {
    throw PreconditionError("instance: missing array field 'classes'");
  }
  const json& cls = j.at("classes");
  if (static_cast<int>(cls.size()) != k) {
    throw PreconditionError("instance: k = " + std::to_string(k) + " but " + std::to_string(cls.size()) +
                            " classes are listed");
  }
  std::vector<Multigraph> classes;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (!cls[i].is_array()) throw PreconditionError("instance: class " + std::to_string(i) + " is not a list");
    Multigraph g(n);
    for (const json& pair : cls[i]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
        throw PreconditionError("instance: class " + std::to_string(i) + " has an entry that is not a pair [u, v]");
      }
      const int u = pair[0].get<int>();
      const int v = pair[1].get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw PreconditionError("instance: pair [" + std::to_string(u) + "," + std::to_string(v) + "] out of range");
      }
      if (u == v) throw PreconditionError("instance: loop [" + std::to_string(u) + "," + std::to_string(v) + "]");
      g.add_edges(u, v);
    }
    classes.push_back(std::move(g));
  }
  return Decomposition(complete_multigraph(n, lambda), std::move(classes));
}

Decomposition read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string serialize_instance(const Decomposition& d, int lambda) {
  json classes = json::array();
  for (const auto& c : d.classes()) {
    json edges = json::array();
    for (const auto& pc : c.pair_counts()) {
      for (int t = 0; t < pc.count; ++t) edges.push_back({pc.pair.u, pc.pair.v});
    }
    classes.push_back(std::move(edges));
  }
  json j = {{"n", d.vertex_count()}, {"lambda", lambda}, {"k", d.k()}, {"classes", std::move(classes)}};
  return j.dump() + "\n";
}

std::string serialize_trace(const ExtensionTrace& trace, const DetachStats& stats, int recolor_steps) {
  json actions = json::array();
  for (const auto& a : trace.actions) {
    json act = {{"kind", action_kind_name(a.kind)}, {"edge", {a.edge.u, a.edge.v}}, {"color", a.color}};
    if (a.kind == ActionKind::kRecolor) act["from"] = a.from_color;
    actions.push_back(std::move(act));
  }
  json j = {{"actions", std::move(actions)},
            {"recolor_steps", recolor_steps},
            {"detach", {{"nodes", stats.nodes}, {"splits", stats.splits}, {"backtracks", stats.backtracks}}}};
  return j.dump(1) + "\n";
}

ExtensionTrace parse_trace(std::string_view text) {
  ExtensionTrace trace;
  try {
    const json j = json::parse(text);
    for (const json& a : j.at("actions")) {
      TraceAction act;
      act.kind = parse_action_kind(a.at("kind").get<std::string>());
      act.edge = VertexPair(a.at("edge")[0].get<int>(), a.at("edge")[1].get<int>());
      act.color = a.at("color").get<int>();
      if (a.contains("from")) act.from_color = a.at("from").get<int>();
      trace.actions.push_back(act);
    }
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("trace: ") + e.what());
  }
  return trace;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << content;
}

}  // namespace enclose::io
