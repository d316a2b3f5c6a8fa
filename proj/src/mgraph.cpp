#include "enclose/mgraph.hpp"

#include <algorithm>
#include <sstream>

#include "enclose/error.hpp"

namespace enclose {

Multigraph::Multigraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw PreconditionError("Multigraph: negative vertex count");
  mult_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  degree_.assign(static_cast<std::size_t>(n_), 0);
}

void Multigraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) +
                            ")");
  }
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return mult_[index(u, v)];
}

int Multigraph::degree(Vertex v) const {
  check_vertex(v);
  return degree_[static_cast<std::size_t>(v)];
}

void Multigraph::add_edges(Vertex u, Vertex v, int count) {
  check_vertex(u);
  check_vertex(v);
  if (count < 0) throw PreconditionError("add_edges: negative count");
  if (count == 0) return;
  if (u == v) {
    mult_[index(u, u)] += count;
    degree_[static_cast<std::size_t>(u)] += 2 * count;
  } else {
    mult_[index(u, v)] += count;
    mult_[index(v, u)] += count;
    degree_[static_cast<std::size_t>(u)] += count;
    degree_[static_cast<std::size_t>(v)] += count;
  }
  edges_ += count;
}

void Multigraph::remove_edges(Vertex u, Vertex v, int count) {
  check_vertex(u);
  check_vertex(v);
  if (count < 0) throw PreconditionError("remove_edges: negative count");
  if (mult_[index(u, v)] < count) {
    throw PreconditionError("remove_edges: pair {" + std::to_string(u) + "," + std::to_string(v) +
                            "} has fewer than " + std::to_string(count) + " edges");
  }
  if (count == 0) return;
  if (u == v) {
    mult_[index(u, u)] -= count;
    degree_[static_cast<std::size_t>(u)] -= 2 * count;
  } else {
    mult_[index(u, v)] -= count;
    mult_[index(v, u)] -= count;
    degree_[static_cast<std::size_t>(u)] -= count;
    degree_[static_cast<std::size_t>(v)] -= count;
  }
  edges_ -= count;
}

std::vector<PairCount> Multigraph::pair_counts() const {
  std::vector<PairCount> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u; v < n_; ++v) {
      const int c = mult_[index(u, v)];
      if (c > 0) out.push_back({VertexPair(u, v), c});
    }
  }
  return out;
}

bool Multigraph::has_loops() const {
  for (Vertex v = 0; v < n_; ++v) {
    if (mult_[index(v, v)] > 0) return true;
  }
  return false;
}

Multigraph Multigraph::induced_prefix(int count) const {
  if (count < 0 || count > n_) throw PreconditionError("induced_prefix: bad vertex count");
  Multigraph out(count);
  for (Vertex u = 0; u < count; ++u) {
    for (Vertex v = u; v < count; ++v) out.add_edges(u, v, mult_[index(u, v)]);
  }
  return out;
}

std::string Multigraph::to_string() const {
  std::ostringstream os;
  os << "Multigraph(" << n_ << "){";
  bool first = true;
  for (const auto& pc : pair_counts()) {
    if (!first) os << ", ";
    first = false;
    os << pc.pair.u << "-" << pc.pair.v;
    if (pc.count > 1) os << "x" << pc.count;
  }
  os << "}";
  return os.str();
}

Multigraph complete_multigraph(int n, int lambda) {
  if (n < 1) throw PreconditionError("complete_multigraph: n must be positive");
  if (lambda < 1) throw PreconditionError("complete_multigraph: lambda must be positive");
  Multigraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edges(u, v, lambda);
  }
  return g;
}

std::vector<int> component_labels(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w = 0; w < n; ++w) {
        if (w != v && label[static_cast<std::size_t>(w)] == -1 && g.multiplicity(v, w) > 0) {
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<Vertex>> components(const Multigraph& g) {
  const auto label = component_labels(g);
  const int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(count));
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
  return out;
}

namespace {

// Lowlink search. A parent pair of multiplicity >= 2 acts as a back edge.
struct BridgeFinder {
  const Multigraph& g;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<VertexPair> found;
  int timer = 0;

  explicit BridgeFinder(const Multigraph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.vertex_count()), -1),
        low(static_cast<std::size_t>(graph.vertex_count()), 0) {}

  void visit(Vertex v, Vertex parent) {
    const auto vi = static_cast<std::size_t>(v);
    disc[vi] = low[vi] = timer++;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (w == v) continue;
      const int mult = g.multiplicity(v, w);
      if (mult == 0) continue;
      const auto wi = static_cast<std::size_t>(w);
      if (w == parent) {
        if (mult >= 2) low[vi] = std::min(low[vi], disc[wi]);
        continue;
      }
      if (disc[wi] == -1) {
        visit(w, v);
        low[vi] = std::min(low[vi], low[wi]);
        if (low[wi] > disc[vi] && mult == 1) found.emplace_back(v, w);
      } else {
        low[vi] = std::min(low[vi], disc[wi]);
      }
    }
  }
};

}  // namespace

std::vector<VertexPair> bridges(const Multigraph& g) {
  BridgeFinder finder(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (finder.disc[static_cast<std::size_t>(v)] == -1) finder.visit(v, -1);
  }
  std::sort(finder.found.begin(), finder.found.end());
  return finder.found;
}

bool is_two_edge_connected_spanning(const Multigraph& g) {
  if (g.vertex_count() <= 1) return true;
  const auto label = component_labels(g);
  for (int l : label) {
    if (l != 0) return false;
  }
  return bridges(g).empty();
}

}  // namespace enclose
