#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "enclose/mgraph.hpp"

namespace enclose {

struct EnclosureParams;

/// A partition of the edges of `base` into k spanning color classes.
/// Classes may contain isolated vertices.
class Decomposition {
 public:
  Decomposition() = default;
  // Throws PreconditionError unless the classes partition `base` exactly.
  Decomposition(Multigraph base, std::vector<Multigraph> classes);

  const Multigraph& base() const { return base_; }
  std::span<const Multigraph> classes() const { return classes_; }
  const Multigraph& color_class(int i) const { return classes_.at(static_cast<std::size_t>(i)); }
  int k() const { return static_cast<int>(classes_.size()); }
  int vertex_count() const { return base_.vertex_count(); }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  Multigraph base_;
  std::vector<Multigraph> classes_;
};

/// A decomposition of a subgraph of `base`; the remaining edges are uncolored.
/// Strict when at least one edge is uncolored.
class PartialDecomposition {
 public:
  PartialDecomposition() = default;
  // Throws PreconditionError if the classes overuse some pair of `base`.
  PartialDecomposition(Multigraph base, std::vector<Multigraph> classes);
  // Extends a decomposition to a larger base graph on the same vertex set.
  PartialDecomposition(const Decomposition& d, Multigraph base);

  const Multigraph& base() const { return base_; }
  std::span<const Multigraph> classes() const { return classes_; }
  const Multigraph& color_class(int i) const { return classes_.at(static_cast<std::size_t>(i)); }
  const Multigraph& uncolored() const { return uncolored_; }
  int k() const { return static_cast<int>(classes_.size()); }
  int vertex_count() const { return base_.vertex_count(); }
  bool is_strict() const { return uncolored_.edge_count() > 0; }

  // Moves one uncolored uv-edge into class c.
  void color(int c, Vertex u, Vertex v);
  // Moves one uv-edge of class c back to the uncolored pool.
  void uncolor(int c, Vertex u, Vertex v);
  // Moves one uv-edge from class `from` to class `to`.
  void recolor(Vertex u, Vertex v, int from, int to);

  // Throws PreconditionError while strict.
  Decomposition complete() const;

  friend bool operator==(const PartialDecomposition&, const PartialDecomposition&) = default;

 private:
  Multigraph& mutable_class(int c);

  Multigraph base_;
  std::vector<Multigraph> classes_;
  Multigraph uncolored_;
};

/// Which bullet of the admissibility definition failed.
enum class AdmissibilityBullet { kDegree = 1, kLowDegreeVertices = 2, kCutedge = 3 };

struct AdmissibilityViolation {
  int color = 0;
  AdmissibilityBullet bullet = AdmissibilityBullet::kDegree;
  std::vector<Vertex> component;  // sorted component members
  std::optional<VertexPair> cutedge;
  Vertex vertex = -1;  // the over-degree vertex for bullet 1

  std::string describe() const;
};

struct AdmissibilityResult {
  bool admissible = true;
  std::optional<AdmissibilityViolation> violation;

  explicit operator bool() const { return admissible; }
};

// Number of classes with exactly i edges.
int s_count(std::span<const Multigraph> classes, int i);
inline int s_count(const Decomposition& d, int i) { return s_count(d.classes(), i); }
inline int s_count(const PartialDecomposition& d, int i) { return s_count(d.classes(), i); }

// Number of classes with exactly i edges, all of them between u and v.
// Requires i >= 1 and u != v.
int s_uv_count(std::span<const Multigraph> classes, int i, Vertex u, Vertex v);
inline int s_uv_count(const Decomposition& d, int i, Vertex u, Vertex v) {
  return s_uv_count(d.classes(), i, u, v);
}
inline int s_uv_count(const PartialDecomposition& d, int i, Vertex u, Vertex v) {
  return s_uv_count(d.classes(), i, u, v);
}

// Admissibility of a single color class; `color` only labels the witness.
AdmissibilityResult class_admissible(const Multigraph& cls, int r, int color = 0);

/// r-admissibility of every class. The witness is the first violation in
/// class order, then component order (by smallest vertex), then bullet order.
AdmissibilityResult is_admissible(std::span<const Multigraph> classes, int r);
inline AdmissibilityResult is_admissible(const Decomposition& d, int r) {
  return is_admissible(d.classes(), r);
}
inline AdmissibilityResult is_admissible(const PartialDecomposition& d, int r) {
  return is_admissible(d.classes(), r);
}

/// A decomposition of the outer complete multigraph whose vertices 0..inner_n-1
/// are identified with the vertices of the enclosed decomposition.
struct Enclosing {
  Decomposition outer;
  int inner_n = 0;
};

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> diagnostics;

  explicit operator bool() const { return ok; }
  void fail(std::string message) {
    ok = false;
    diagnostics.push_back(std::move(message));
  }
};

// Checks that `outer` is a 2-edge-connected r-factorization of mu K_m that
// contains `inner` classwise. Throws PreconditionError on class-count mismatch.
VerifyReport verify_enclosing(const Decomposition& inner, const Enclosing& outer,
                              const EnclosureParams& params);

// Classwise induced decomposition on vertices 0..n-1.
Decomposition restrict(const Enclosing& outer, int n);
Decomposition restrict(const Decomposition& outer, int n);

}  // namespace enclose
