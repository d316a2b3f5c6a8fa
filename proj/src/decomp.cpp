#include "enclose/decomp.hpp"

#include <algorithm>
#include <sstream>

#include "enclose/conditions.hpp"
#include "enclose/error.hpp"

namespace enclose {

namespace {

void require_same_vertex_set(const Multigraph& base, std::span<const Multigraph> classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].vertex_count() != base.vertex_count()) {
      throw PreconditionError("class " + std::to_string(i) + " has " +
                              std::to_string(classes[i].vertex_count()) + " vertices, base has " +
                              std::to_string(base.vertex_count()));
    }
  }
}

// base minus the union of the classes; throws if some pair is overused.
Multigraph leftover(const Multigraph& base, std::span<const Multigraph> classes) {
  require_same_vertex_set(base, classes);
  Multigraph rest = base;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const auto& pc : classes[i].pair_counts()) {
      if (rest.multiplicity(pc.pair) < pc.count) {
        throw PreconditionError("classes use pair {" + std::to_string(pc.pair.u) + "," +
                                std::to_string(pc.pair.v) + "} more often than the base graph allows");
      }
      rest.remove_edges(pc.pair.u, pc.pair.v, pc.count);
    }
  }
  return rest;
}

}  // namespace

Decomposition::Decomposition(Multigraph base, std::vector<Multigraph> classes)
    : base_(std::move(base)), classes_(std::move(classes)) {
  if (leftover(base_, classes_).edge_count() != 0) {
    throw PreconditionError("classes do not cover every edge of the base graph");
  }
}

PartialDecomposition::PartialDecomposition(Multigraph base, std::vector<Multigraph> classes)
    : base_(std::move(base)), classes_(std::move(classes)) {
  uncolored_ = leftover(base_, classes_);
}

PartialDecomposition::PartialDecomposition(const Decomposition& d, Multigraph base)
    : PartialDecomposition(std::move(base), std::vector<Multigraph>(d.classes().begin(), d.classes().end())) {}

Multigraph& PartialDecomposition::mutable_class(int c) {
  if (c < 0 || c >= k()) throw PreconditionError("color " + std::to_string(c) + " out of range");
  return classes_[static_cast<std::size_t>(c)];
}

void PartialDecomposition::color(int c, Vertex u, Vertex v) {
  Multigraph& cls = mutable_class(c);
  uncolored_.remove_edges(u, v);
  cls.add_edges(u, v);
}

void PartialDecomposition::uncolor(int c, Vertex u, Vertex v) {
  Multigraph& cls = mutable_class(c);
  cls.remove_edges(u, v);
  uncolored_.add_edges(u, v);
}

void PartialDecomposition::recolor(Vertex u, Vertex v, int from, int to) {
  Multigraph& src = mutable_class(from);
  Multigraph& dst = mutable_class(to);
  src.remove_edges(u, v);
  dst.add_edges(u, v);
}

Decomposition PartialDecomposition::complete() const {
  if (is_strict()) {
    throw PreconditionError("partial decomposition still has " + std::to_string(uncolored_.edge_count()) +
                            " uncolored edges");
  }
  return Decomposition(base_, classes_);
}

std::string AdmissibilityViolation::describe() const {
  std::ostringstream os;
  os << "class " << color << ": ";
  switch (bullet) {
    case AdmissibilityBullet::kDegree:
      os << "vertex " << vertex << " exceeds the degree cap";
      break;
    case AdmissibilityBullet::kLowDegreeVertices:
      os << "component {";
      for (std::size_t i = 0; i < component.size(); ++i) os << (i ? "," : "") << component[i];
      os << "} lacks a vertex of degree <= r-2 and two vertices of degree <= r-1";
      break;
    case AdmissibilityBullet::kCutedge:
      os << "cutedge " << cutedge->u << "-" << cutedge->v << " leaves a side with every degree = r";
      break;
  }
  return os.str();
}

int s_count(std::span<const Multigraph> classes, int i) {
  return static_cast<int>(
      std::count_if(classes.begin(), classes.end(), [i](const Multigraph& c) { return c.edge_count() == i; }));
}

int s_uv_count(std::span<const Multigraph> classes, int i, Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("s_uv_count: u and v must differ");
  if (i < 1) throw PreconditionError("s_uv_count: i must be positive");
  return static_cast<int>(std::count_if(classes.begin(), classes.end(), [&](const Multigraph& c) {
    return c.edge_count() == i && c.multiplicity(u, v) == i;
  }));
}

AdmissibilityResult class_admissible(const Multigraph& cls, int r, int color) {
  if (r < 2) throw PreconditionError("admissibility requires r >= 2");
  const int n = cls.vertex_count();
  auto fail = [&](AdmissibilityViolation v) {
    v.color = color;
    return AdmissibilityResult{false, std::move(v)};
  };

  for (Vertex v = 0; v < n; ++v) {
    if (cls.degree(v) > r) {
      AdmissibilityViolation viol;
      viol.bullet = AdmissibilityBullet::kDegree;
      viol.vertex = v;
      return fail(viol);
    }
  }

  const auto comps = components(cls);
  const auto cut = bridges(cls);
  const auto label = component_labels(cls);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& comp = comps[ci];
    int low2 = 0;  // vertices of degree <= r-2
    int low1 = 0;  // vertices of degree <= r-1
    for (Vertex v : comp) {
      if (cls.degree(v) <= r - 2) ++low2;
      if (cls.degree(v) <= r - 1) ++low1;
    }
    if (low2 == 0 && low1 < 2) {
      AdmissibilityViolation viol;
      viol.bullet = AdmissibilityBullet::kLowDegreeVertices;
      viol.component = comp;
      return fail(viol);
    }

    // One split per bridge of this component.
    for (const VertexPair& e : cut) {
      if (label[static_cast<std::size_t>(e.u)] != static_cast<int>(ci)) continue;
      Multigraph split = cls;
      split.remove_edges(e.u, e.v);
      const auto side = component_labels(split);
      bool u_side_low = false;
      bool v_side_low = false;
      for (Vertex w : comp) {
        if (cls.degree(w) > r - 1) continue;
        if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(e.u)]) u_side_low = true;
        if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(e.v)]) v_side_low = true;
      }
      if (!u_side_low || !v_side_low) {
        AdmissibilityViolation viol;
        viol.bullet = AdmissibilityBullet::kCutedge;
        viol.component = comp;
        viol.cutedge = e;
        return fail(viol);
      }
    }
  }
  return {};
}

AdmissibilityResult is_admissible(std::span<const Multigraph> classes, int r) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto res = class_admissible(classes[i], r, static_cast<int>(i));
    if (!res) return res;
  }
  return {};
}

VerifyReport verify_enclosing(const Decomposition& inner, const Enclosing& outer, const EnclosureParams& params) {
  if (inner.k() != outer.outer.k()) {
    throw PreconditionError("class count mismatch: inner has " + std::to_string(inner.k()) + ", outer has " +
                            std::to_string(outer.outer.k()));
  }
  VerifyReport report;
  const Decomposition& d = outer.outer;
  if (!(d.base() == complete_multigraph(params.m, params.mu))) {
    report.fail("outer base graph is not " + std::to_string(params.mu) + "K_" + std::to_string(params.m));
  }
  if (outer.inner_n != inner.vertex_count() || inner.vertex_count() > d.vertex_count()) {
    report.fail("vertex identification does not match the inner decomposition");
    return report;
  }
  for (int i = 0; i < d.k(); ++i) {
    const Multigraph& cls = d.color_class(i);
    for (Vertex v = 0; v < cls.vertex_count(); ++v) {
      if (cls.degree(v) != params.r) {
        report.fail("class " + std::to_string(i) + " is not " + std::to_string(params.r) + "-regular (vertex " +
                    std::to_string(v) + " has degree " + std::to_string(cls.degree(v)) + ")");
        break;
      }
    }
    if (!is_two_edge_connected_spanning(cls)) {
      report.fail("class " + std::to_string(i) + " is not 2-edge-connected");
    }
    const Multigraph& sub = inner.color_class(i);
    for (const auto& pc : sub.pair_counts()) {
      if (cls.multiplicity(pc.pair) < pc.count) {
        report.fail("class " + std::to_string(i) + " is not a superclass of the inner class at pair " +
                    std::to_string(pc.pair.u) + "-" + std::to_string(pc.pair.v));
        break;
      }
    }
  }
  return report;
}

Decomposition restrict(const Decomposition& outer, int n) {
  if (n < 0 || n > outer.vertex_count()) {
    throw PreconditionError("restrict: n = " + std::to_string(n) + " exceeds the outer vertex count");
  }
  std::vector<Multigraph> classes;
  classes.reserve(static_cast<std::size_t>(outer.k()));
  for (const auto& c : outer.classes()) classes.push_back(c.induced_prefix(n));
  return Decomposition(outer.base().induced_prefix(n), std::move(classes));
}

Decomposition restrict(const Enclosing& outer, int n) { return restrict(outer.outer, n); }

}  // namespace enclose
