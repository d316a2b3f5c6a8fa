#include "enclose/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

#include "enclose/error.hpp"

namespace enclose::oracle {

const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "FOUND";
    case SearchStatus::kNone: return "NONE";
    case SearchStatus::kBudget: return "BUDGET";
  }
  return "?";
}

namespace {

// Vertices reachable from `start`, with one copy of the pair {skip_u, skip_v}
// treated as deleted.
std::vector<bool> reach(const Multigraph& g, Vertex start, Vertex skip_u = -1, Vertex skip_v = -1) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Vertex> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y = 0; y < n; ++y) {
      if (y == x || seen[static_cast<std::size_t>(y)]) continue;
      int mult = g.multiplicity(x, y);
      if ((x == skip_u && y == skip_v) || (x == skip_v && y == skip_u)) --mult;
      if (mult > 0) {
        seen[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

int degree_of(const Multigraph& g, Vertex v) {
  int d = 0;
  for (Vertex w = 0; w < g.vertex_count(); ++w) d += (w == v ? 2 : 1) * g.multiplicity(v, w);
  return d;
}

bool class_ok(const Multigraph& g, int r) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = degree_of(g, v);
    if (deg[static_cast<std::size_t>(v)] > r) return false;
  }
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (Vertex s = 0; s < n; ++s) {
    if (done[static_cast<std::size_t>(s)]) continue;
    const auto comp = reach(g, s);
    int low2 = 0;
    int low1 = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!comp[static_cast<std::size_t>(v)]) continue;
      done[static_cast<std::size_t>(v)] = true;
      if (deg[static_cast<std::size_t>(v)] <= r - 2) ++low2;
      if (deg[static_cast<std::size_t>(v)] <= r - 1) ++low1;
    }
    if (low2 == 0 && low1 < 2) return false;
  }
  // Every edge whose removal separates its ends is a cutedge.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.multiplicity(u, v) == 0) continue;
      const auto side_u = reach(g, u, u, v);
      if (side_u[static_cast<std::size_t>(v)]) continue;
      const auto side_v = reach(g, v, u, v);
      bool low_u = false;
      bool low_v = false;
      for (Vertex w = 0; w < n; ++w) {
        if (side_u[static_cast<std::size_t>(w)] && deg[static_cast<std::size_t>(w)] <= r - 1) low_u = true;
        if (side_v[static_cast<std::size_t>(w)] && deg[static_cast<std::size_t>(w)] <= r - 1) low_v = true;
      }
      if (!low_u || !low_v) return false;
    }
  }
  return true;
}

// Connected on all vertices and no single edge removal disconnects it.
bool two_edge_connected(const Multigraph& g) {
  const int n = g.vertex_count();
  const auto all = reach(g, 0);
  if (std::find(all.begin(), all.end(), false) != all.end()) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.multiplicity(u, v) == 1 && !reach(g, u, u, v)[static_cast<std::size_t>(v)]) return false;
    }
  }
  return true;
}

class EncloseSearch {
 public:
  EncloseSearch(const Decomposition& g, const EnclosureParams& p, std::uint64_t budget)
      : g_(g), n_(p.n), m_(p.m), k_(g.k()), r_(p.r), mu_(p.mu), lambda_(p.lambda), budget_(budget) {
    classes_.assign(static_cast<std::size_t>(k_), Multigraph(m_));
    deg_.assign(static_cast<std::size_t>(k_) * static_cast<std::size_t>(m_), 0);
    for (int c = 0; c < k_; ++c) {
      for (const auto& pc : g.color_class(c).pair_counts()) {
        classes_[static_cast<std::size_t>(c)].add_edges(pc.pair.u, pc.pair.v, pc.count);
        deg(c, pc.pair.u) += pc.count;
        deg(c, pc.pair.v) += pc.count;
      }
    }
    for (Vertex u = 0; u < m_; ++u) {
      for (Vertex v = u + 1; v < m_; ++v) {
        const int free = (v < n_) ? mu_ - lambda_ : mu_;
        if (free > 0) pairs_.push_back({VertexPair(u, v), free});
      }
    }
    left_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0);
    for (const auto& pc : pairs_) {
      left(pc.pair.u, pc.pair.v) = pc.count;
      left(pc.pair.v, pc.pair.u) = pc.count;
    }
    // Classes with identical inner content are interchangeable.
    prev_twin_.assign(static_cast<std::size_t>(k_), -1);
    for (int c = 0; c < k_; ++c) {
      for (int d = c - 1; d >= 0; --d) {
        if (g.color_class(d) == g.color_class(c)) {
          prev_twin_[static_cast<std::size_t>(c)] = d;
          break;
        }
      }
    }
    used_.assign(static_cast<std::size_t>(k_), 0);
  }

  EncloseOutcome run() {
    const auto t0 = std::chrono::steady_clock::now();
    EncloseOutcome out;
    try {
      if (feasible_all() && pair_step(0)) out.status = SearchStatus::kFound;
    } catch (const BudgetExhausted&) {
      out.status = SearchStatus::kBudget;
    }
    if (out.status == SearchStatus::kFound) {
      out.witness = Enclosing{Decomposition(complete_multigraph(m_, mu_), classes_), n_};
      out.stats.solutions = 1;
    }
    out.stats.nodes = nodes_;
    out.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }

 private:
  int& deg(int c, Vertex v) { return deg_[static_cast<std::size_t>(c) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(v)]; }
  int& left(Vertex u, Vertex v) { return left_[static_cast<std::size_t>(u) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(v)]; }

  // Each class deficit at v must fit on the pairs at v that are still open
  // towards vertices with a deficit of their own.
  bool feasible(Vertex v) {
    int open = 0;
    for (Vertex w = 0; w < m_; ++w) open += (w != v) ? left(v, w) : 0;
    int need = 0;
    for (int c = 0; c < k_; ++c) {
      const int d = r_ - deg(c, v);
      if (d < 0) return false;
      need += d;
      if (d == 0) continue;
      int room = 0;
      for (Vertex w = 0; w < m_ && room < d; ++w) {
        if (w != v) room += std::min(left(v, w), r_ - deg(c, w));
      }
      if (room < d) return false;
    }
    return need == open;
  }

  bool feasible_all() {
    for (Vertex v = 0; v < m_; ++v) {
      if (!feasible(v)) return false;
    }
    return true;
  }

  bool pair_step(std::size_t idx) {
    if (idx == pairs_.size()) {
      for (const auto& cls : classes_) {
        if (!two_edge_connected(cls)) return false;
      }
      return true;
    }
    return copy_step(idx, pairs_[idx].count, 0);
  }

  bool copy_step(std::size_t idx, int copies, int min_color) {
    const VertexPair e = pairs_[idx].pair;
    if (copies == 0) {
      return feasible_all() && pair_step(idx + 1);
    }
    for (int c = min_color; c < k_; ++c) {
      const int twin = prev_twin_[static_cast<std::size_t>(c)];
      if (twin >= 0 && used_[static_cast<std::size_t>(twin)] == 0) continue;
      if (deg(c, e.u) >= r_ || deg(c, e.v) >= r_) continue;
      if (++nodes_ > budget_) throw BudgetExhausted("oracle budget");
      classes_[static_cast<std::size_t>(c)].add_edges(e.u, e.v);
      ++deg(c, e.u);
      ++deg(c, e.v);
      --left(e.u, e.v);
      --left(e.v, e.u);
      ++used_[static_cast<std::size_t>(c)];
      const bool ok = feasible(e.u) && feasible(e.v) && copy_step(idx, copies - 1, c);
      if (ok) return true;
      --used_[static_cast<std::size_t>(c)];
      ++left(e.u, e.v);
      ++left(e.v, e.u);
      --deg(c, e.u);
      --deg(c, e.v);
      classes_[static_cast<std::size_t>(c)].remove_edges(e.u, e.v);
    }
    return false;
  }

  const Decomposition& g_;
  int n_, m_, k_, r_, mu_, lambda_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Multigraph> classes_;
  std::vector<int> deg_;
  std::vector<int> left_;
  std::vector<PairCount> pairs_;
  std::vector<int> prev_twin_;
  std::vector<int> used_;
};

}  // namespace

EncloseOutcome brute_force_enclose(const Decomposition& g, const EnclosureParams& params, std::uint64_t budget,
                                   int slot_cap) {
  const long slots = static_cast<long>(params.mu) * params.m * (params.m - 1) / 2;
  if (slots > slot_cap) {
    throw CapExceeded("brute_force_enclose: " + std::to_string(slots) + " edge slots exceed the cap of " +
                      std::to_string(slot_cap));
  }
  if (g.vertex_count() != params.n || g.k() != params.k || !(g.base() == complete_multigraph(params.n, params.lambda))) {
    throw PreconditionError("brute_force_enclose: decomposition does not match the parameters");
  }
  if (params.m < params.n || params.mu < params.lambda || params.r < 1) {
    throw PreconditionError("brute_force_enclose: need m >= n, mu >= lambda, r >= 1");
  }
  return EncloseSearch(g, params, budget).run();
}

bool brute_force_admissible(std::span<const Multigraph> classes, int r) {
  return std::all_of(classes.begin(), classes.end(), [r](const Multigraph& c) { return class_ok(c, r); });
}

namespace {

struct EdgeCopies {
  std::vector<VertexPair> edges;  // one entry per parallel copy, lex order
};

EdgeCopies edge_copies(int n, int lambda) {
  EdgeCopies out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (int t = 0; t < lambda; ++t) out.edges.emplace_back(u, v);
    }
  }
  return out;
}

Decomposition build(int n, int lambda, int k, const std::vector<VertexPair>& edges, const std::vector<int>& color) {
  std::vector<Multigraph> classes(static_cast<std::size_t>(k), Multigraph(n));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    classes[static_cast<std::size_t>(color[e])].add_edges(edges[e].u, edges[e].v);
  }
  return Decomposition(complete_multigraph(n, lambda), std::move(classes));
}

using ClassKey = std::vector<VertexPair>;

std::vector<ClassKey> canonical_key(const std::vector<VertexPair>& edges, const std::vector<int>& color, int k) {
  std::vector<ClassKey> key(static_cast<std::size_t>(k));
  for (std::size_t e = 0; e < edges.size(); ++e) key[static_cast<std::size_t>(color[e])].push_back(edges[e]);
  std::sort(key.begin(), key.end(), [](const ClassKey& a, const ClassKey& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return key;
}

}  // namespace

std::uint64_t enumerate_decompositions(int n, int lambda, int k, const EnumerationOptions& options,
                                       const DecompositionVisitor& visit) {
  if (n < 1 || lambda < 0 || k < 1) throw PreconditionError("enumerate_decompositions: bad parameters");
  const auto copies = edge_copies(n, lambda);
  const auto& edges = copies.edges;
  if (static_cast<int>(edges.size()) > kEnumerationEdgeCap) {
    throw CapExceeded("enumerate_decompositions: " + std::to_string(edges.size()) + " edges exceed the cap of " +
                      std::to_string(kEnumerationEdgeCap));
  }
  std::uint64_t visited = 0;
  std::vector<int> color(edges.size(), 0);
  std::set<std::vector<ClassKey>> seen;

  auto emit = [&] {
    if (options.dedup && !seen.insert(canonical_key(edges, color, k)).second) return;
    Decomposition d = build(n, lambda, k, edges, color);
    if (options.filter && !options.filter(d)) return;
    ++visited;
    visit(d);
  };

  // Raw: every color for every copy. Dedup: colors introduced in order of
  // first use (restricted growth), the rest removed by the canonical key.
  auto rec = [&](auto&& self, std::size_t i, int used) -> void {
    if (i == edges.size()) {
      emit();
      return;
    }
    const int top = options.dedup ? std::min(k, used + 1) : k;
    for (int c = 0; c < top; ++c) {
      color[i] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  rec(rec, 0, 0);
  return visited;
}

std::vector<Decomposition> all_decompositions(int n, int lambda, int k, const EnumerationOptions& options) {
  std::vector<Decomposition> out;
  enumerate_decompositions(n, lambda, k, options, [&](const Decomposition& d) { out.push_back(d); });
  return out;
}

Decomposition random_admissible(int n, int lambda, int k, int r, std::uint64_t seed) {
  if (n < 1 || lambda < 0 || k < 1 || r < 1) throw PreconditionError("random_admissible: bad parameters");
  const auto edges = edge_copies(n, lambda).edges;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_color(0, k - 1);
  constexpr int kRestarts = 50;
  constexpr int kMoves = 4000;

  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    std::vector<int> color(edges.size());
    for (auto& c : color) c = pick_color(rng);
    std::vector<Multigraph> classes(static_cast<std::size_t>(k), Multigraph(n));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      classes[static_cast<std::size_t>(color[e])].add_edges(edges[e].u, edges[e].v);
    }
    for (int move = 0; move < kMoves; ++move) {
      int bad = -1;
      for (int c = 0; c < k && bad < 0; ++c) {
        if (!class_ok(classes[static_cast<std::size_t>(c)], r)) bad = c;
      }
      if (bad < 0) return Decomposition(complete_multigraph(n, lambda), std::move(classes));
      std::vector<std::size_t> mine;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (color[e] == bad) mine.push_back(e);
      }
      const std::size_t e = mine[std::uniform_int_distribution<std::size_t>(0, mine.size() - 1)(rng)];
      int to = pick_color(rng);
      if (k > 1) {
        while (to == bad) to = pick_color(rng);
      }
      classes[static_cast<std::size_t>(bad)].remove_edges(edges[e].u, edges[e].v);
      classes[static_cast<std::size_t>(to)].add_edges(edges[e].u, edges[e].v);
      color[e] = to;
    }
  }
  throw PreconditionError("random_admissible: no " + std::to_string(r) + "-admissible decomposition found after " +
                          std::to_string(kRestarts) + " restarts");
}

}  // namespace enclose::oracle
