#pragma once

#include <cstdint>
#include <vector>

#include "enclose/conditions.hpp"
#include "enclose/decomp.hpp"

namespace enclose {

/// A graph with loops, an amalgamation size g(v) >= 1 per vertex, and a
/// decomposition of the graph. Vertices with g(v) = 1 carry no loops.
struct Triad {
  Decomposition decomposition;
  std::vector<int> g;

  const Multigraph& graph() const { return decomposition.base(); }
  int vertex_count() const { return decomposition.vertex_count(); }

  // g(v)g(w) for v != w, g(v) choose 2 for v == w.
  std::int64_t pair_weight(Vertex v, Vertex w) const;
};

/// The amalgamated triad for a decomposition `a` of mu K_n that satisfies
/// (A'1)-(A'3): vertices 0..n-1 carry a, vertex n stands for the m - n new
/// vertices. Per color i it holds |E(a(i))| - p loops at vertex n and
/// r - d_{a(i)}(j) edges between n and j.
Triad build_amalgamated_triad(const Decomposition& a, const EnclosureParams& params);

// Every class is 2-edge-connected spanning and every vertex has class degree
// at least 2g(v).
bool is_good_triad(const Triad& t);

struct DetachStats {
  std::uint64_t nodes = 0;  // candidate placements tried
  int splits = 0;           // vertices split off the amalgamated vertex
  int backtracks = 0;       // splits undone
};

/// Fully expanded fair detachment: `result` is a decomposition of mu K_m and
/// vertex_map[x] is the triad vertex that x was detached from.
struct DetachmentWitness {
  Decomposition result;
  std::vector<Vertex> vertex_map;
  DetachStats stats;
};

constexpr std::uint64_t kDefaultDetachBudget = 10'000'000;

/// Splits the amalgamated vertex of a triad from build_amalgamated_triad into
/// m - n vertices, one at a time. Each split gives the new vertex exactly r
/// edges per color and mu edges to every expanded vertex, and keeps every
/// class 2-edge-connected; a failed split backtracks into the previous one.
/// Throws BudgetExhausted when `budget` placements are spent, and
/// InternalInconsistency when the whole space is exhausted without a solution.
DetachmentWitness fair_detach(const Triad& t, const EnclosureParams& params, std::uint64_t seed = 0,
                              std::uint64_t budget = kDefaultDetachBudget);

// Re-checks the correspondence, fiber sizes, degree and multiplicity ratios,
// and 2-edge-connectivity of a detachment against its triad.
VerifyReport verify_detachment(const DetachmentWitness& w, const Triad& t, const EnclosureParams& params);

}  // namespace enclose
