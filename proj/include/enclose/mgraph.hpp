#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace enclose {

using Vertex = int;

// An unordered vertex pair stored with u <= v. u == v denotes a loop.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const { return u == v; }
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// A vertex pair together with its number of parallel edges.
struct PairCount {
  VertexPair pair;
  int count = 0;
  friend bool operator==(const PairCount&, const PairCount&) = default;
};

/// Undirected multigraph on dense vertex labels 0..vertex_count-1.
///
/// Edges are stored as multiplicities per unordered pair; parallel edges have
/// no identity. Loops are allowed and count twice towards the degree of their
/// vertex. Degrees and the total edge count are maintained incrementally.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);

  int vertex_count() const { return n_; }
  int edge_count() const { return edges_; }

  // Number of edges between u and v, or the number of loops at u when u == v.
  int multiplicity(Vertex u, Vertex v) const;
  int multiplicity(VertexPair p) const { return multiplicity(p.u, p.v); }

  int degree(Vertex v) const;

  void add_edges(Vertex u, Vertex v, int count = 1);
  // Throws PreconditionError if fewer than `count` edges join u and v.
  void remove_edges(Vertex u, Vertex v, int count = 1);

  // Pairs of positive multiplicity in lexicographic order, loops included.
  std::vector<PairCount> pair_counts() const;

  bool has_loops() const;

  // Copy of the graph induced on vertices 0..count-1.
  Multigraph induced_prefix(int count) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.mult_ == b.mult_;
  }

  std::string to_string() const;

 private:
  void check_vertex(Vertex v) const;
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  int edges_ = 0;
  std::vector<int> mult_;  // symmetric n_ x n_ matrix
  std::vector<int> degree_;
};

// Every distinct pair joined by `lambda` parallel edges; no loops.
Multigraph complete_multigraph(int n, int lambda);

// Connected components ordered by smallest member; members sorted ascending.
// Isolated vertices form singleton components.
std::vector<std::vector<Vertex>> components(const Multigraph& g);

// Component label per vertex, labels in order of smallest member.
std::vector<int> component_labels(const Multigraph& g);

// Pairs of multiplicity exactly one whose removal disconnects their
// component, in lexicographic order. Parallel classes and loops never bridge.
std::vector<VertexPair> bridges(const Multigraph& g);

// Connected on all vertices and bridgeless. A single vertex qualifies.
bool is_two_edge_connected_spanning(const Multigraph& g);

}  // namespace enclose
