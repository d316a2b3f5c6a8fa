#include "enclose/detach.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "enclose/error.hpp"

namespace enclose {

std::int64_t Triad::pair_weight(Vertex v, Vertex w) const {
  const std::int64_t gv = g.at(static_cast<std::size_t>(v));
  if (v != w) return gv * g.at(static_cast<std::size_t>(w));
  return gv * (gv - 1) / 2;
}

Triad build_amalgamated_triad(const Decomposition& a, const EnclosureParams& params) {
  if (params.m <= params.n) throw PreconditionError("build_amalgamated_triad: requires m > n");
  const auto rep = check_a_prime(a, params);
  if (const auto* f = rep.first_failure()) {
    throw PreconditionError("build_amalgamated_triad: condition " + f->name + " fails (" + f->reason + ")");
  }
  const int n = params.n;
  const int r = params.r;
  const int extra = params.m - params.n;
  const auto p = static_cast<int>(params.p.num());
  const Vertex hub = n;

  std::vector<Multigraph> classes;
  Multigraph graph(n + 1);
  for (const auto& cls : a.classes()) {
    Multigraph t(n + 1);
    for (const auto& pc : cls.pair_counts()) t.add_edges(pc.pair.u, pc.pair.v, pc.count);
    t.add_edges(hub, hub, cls.edge_count() - p);
    for (Vertex j = 0; j < n; ++j) t.add_edges(hub, j, r - cls.degree(j));
    for (const auto& pc : t.pair_counts()) graph.add_edges(pc.pair.u, pc.pair.v, pc.count);
    classes.push_back(std::move(t));
  }

  std::vector<int> g(static_cast<std::size_t>(n + 1), 1);
  g[static_cast<std::size_t>(hub)] = extra;
  Triad triad{Decomposition(std::move(graph), std::move(classes)), std::move(g)};

  // The four degree and multiplicity facts the construction guarantees.
  for (int i = 0; i < triad.decomposition.k(); ++i) {
    const Multigraph& cls = triad.decomposition.color_class(i);
    for (Vertex j = 0; j < n; ++j) {
      if (cls.degree(j) != r) throw InternalInconsistency("amalgamated triad: inner vertex degree differs from r");
    }
    if (cls.degree(hub) != r * extra) throw InternalInconsistency("amalgamated triad: hub degree differs from r(m-n)");
  }
  for (Vertex j = 0; j < n; ++j) {
    if (triad.graph().multiplicity(hub, j) != params.mu * extra) {
      throw InternalInconsistency("amalgamated triad: hub multiplicity differs from mu(m-n)");
    }
  }
  if (triad.graph().multiplicity(hub, hub) != params.mu * extra * (extra - 1) / 2) {
    throw InternalInconsistency("amalgamated triad: loop count differs from mu(m-n)(m-n-1)/2");
  }
  return triad;
}

namespace {

// Connectivity ignores loops; a loop-only vertex counts as isolated.
bool class_two_edge_connected(const Multigraph& cls) {
  if (!cls.has_loops()) return is_two_edge_connected_spanning(cls);
  Multigraph plain = cls;
  for (Vertex v = 0; v < plain.vertex_count(); ++v) plain.remove_edges(v, v, plain.multiplicity(v, v));
  return is_two_edge_connected_spanning(plain);
}

}  // namespace

bool is_good_triad(const Triad& t) {
  if (static_cast<int>(t.g.size()) != t.vertex_count()) return false;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.g[static_cast<std::size_t>(v)] < 1) return false;
    if (t.g[static_cast<std::size_t>(v)] == 1 && t.graph().multiplicity(v, v) > 0) return false;
  }
  for (const auto& cls : t.decomposition.classes()) {
    if (!class_two_edge_connected(cls)) return false;
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      if (cls.degree(v) < 2 * t.g[static_cast<std::size_t>(v)]) return false;
    }
  }
  return true;
}

namespace {

/// Detaches the hub one vertex at a time. State: the edges already final
/// (among expanded vertices), the hub's edges to each expanded vertex per
/// color, and the hub's loops per color.
class SplitSearch {
 public:
  SplitSearch(const Triad& t, const EnclosureParams& params, std::uint64_t seed, std::uint64_t budget)
      : n_(params.n),
        m_(params.m),
        mu_(params.mu),
        r_(params.r),
        k_(t.decomposition.k()),
        budget_(budget),
        seed_(seed),
        rng_(seed) {
    hub_size_ = t.g.at(static_cast<std::size_t>(n_));
    expanded_ = n_;
    final_.assign(static_cast<std::size_t>(k_), Multigraph(m_));
    hub_edges_.assign(static_cast<std::size_t>(k_), std::vector<int>(static_cast<std::size_t>(m_), 0));
    loops_.assign(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
      const Multigraph& cls = t.decomposition.color_class(i);
      for (const auto& pc : cls.pair_counts()) {
        if (pc.pair.v < n_) final_[static_cast<std::size_t>(i)].add_edges(pc.pair.u, pc.pair.v, pc.count);
      }
      for (Vertex j = 0; j < n_; ++j) hub_edges_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cls.multiplicity(n_, j);
      loops_[static_cast<std::size_t>(i)] = cls.multiplicity(n_, n_);
    }
  }

  bool run() { return split(); }

  std::vector<Multigraph> take_classes() { return std::move(final_); }
  const DetachStats& stats() const { return stats_; }

 private:
  // Per color: edges from the new vertex to each expanded vertex, then the
  // number of hub loops that become new-vertex-to-hub edges (last entry).
  using Row = std::vector<int>;

  int hub_degree(int i) const {
    const auto& he = hub_edges_[static_cast<std::size_t>(i)];
    return std::accumulate(he.begin(), he.begin() + expanded_, 0) + 2 * loops_[static_cast<std::size_t>(i)];
  }

  void check_conservation() const {
    for (int i = 0; i < k_; ++i) {
      if (hub_degree(i) != r_ * hub_size_) {
        throw InternalInconsistency("fair_detach: hub degree in color " + std::to_string(i) +
                                    " drifted from r times its remaining size");
      }
    }
  }

  // Class i after giving `row` to the new vertex, on expanded+2 vertices
  // (new vertex = expanded_, hub = expanded_ + 1).
  bool row_keeps_class_good(int i, const Row& row) const {
    const Vertex y = expanded_;
    const Vertex hub = expanded_ + 1;
    Multigraph cls(expanded_ + 2);
    const Multigraph& fin = final_[static_cast<std::size_t>(i)];
    for (Vertex u = 0; u < expanded_; ++u) {
      for (Vertex v = u + 1; v < expanded_; ++v) cls.add_edges(u, v, fin.multiplicity(u, v));
    }
    const auto& he = hub_edges_[static_cast<std::size_t>(i)];
    for (Vertex v = 0; v < expanded_; ++v) {
      cls.add_edges(hub, v, he[static_cast<std::size_t>(v)] - row[static_cast<std::size_t>(v)]);
      cls.add_edges(y, v, row[static_cast<std::size_t>(v)]);
    }
    cls.add_edges(y, hub, row.back());
    return is_two_edge_connected_spanning(cls);
  }

  void enumerate_rows(int i, std::vector<Row>& out) const {
    const auto& he = hub_edges_[static_cast<std::size_t>(i)];
    std::vector<int> bound(static_cast<std::size_t>(expanded_) + 1);
    for (Vertex v = 0; v < expanded_; ++v) bound[static_cast<std::size_t>(v)] = he[static_cast<std::size_t>(v)];
    bound.back() = loops_[static_cast<std::size_t>(i)];
    std::vector<std::size_t> open;
    for (std::size_t c = 0; c < bound.size(); ++c) {
      if (bound[c] > 0) open.push_back(c);
    }
    Row row(bound.size(), 0);
    // Distribute r edge ends over the open columns.
    auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
      if (left == 0) {
        if (row_keeps_class_good(i, row)) out.push_back(row);
        return;
      }
      if (idx == open.size()) return;
      const std::size_t col = open[idx];
      const int top = std::min(left, bound[col]);
      for (int take = top; take >= 0; --take) {
        row[col] = take;
        self(self, idx + 1, left - take);
      }
      row[col] = 0;
    };
    rec(rec, 0, r_);
  }

  void apply(const std::vector<const Row*>& rows, int sign) {
    const Vertex y = expanded_;
    for (int i = 0; i < k_; ++i) {
      const Row& row = *rows[static_cast<std::size_t>(i)];
      auto& he = hub_edges_[static_cast<std::size_t>(i)];
      Multigraph& fin = final_[static_cast<std::size_t>(i)];
      for (Vertex v = 0; v < y; ++v) {
        const int a = row[static_cast<std::size_t>(v)];
        if (sign > 0) {
          fin.add_edges(v, y, a);
        } else {
          fin.remove_edges(v, y, a);
        }
        he[static_cast<std::size_t>(v)] -= sign * a;
      }
      he[static_cast<std::size_t>(y)] = sign > 0 ? row.back() : 0;
      loops_[static_cast<std::size_t>(i)] -= sign * row.back();
    }
  }

  bool finalize() {
    const Vertex last = expanded_;
    if (last != m_ - 1) throw InternalInconsistency("fair_detach: vertex accounting is off");
    for (int i = 0; i < k_; ++i) {
      if (loops_[static_cast<std::size_t>(i)] != 0) return false;
    }
    for (int i = 0; i < k_; ++i) {
      for (Vertex v = 0; v < last; ++v) {
        final_[static_cast<std::size_t>(i)].add_edges(v, last, hub_edges_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]);
      }
    }
    for (const auto& cls : final_) {
      if (!is_two_edge_connected_spanning(cls)) {
        throw InternalInconsistency("fair_detach: final class lost 2-edge-connectivity");
      }
    }
    return true;
  }

  bool split() {
    if (hub_size_ == 1) return finalize();

    std::vector<std::vector<Row>> cands(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) {
      enumerate_rows(i, cands[static_cast<std::size_t>(i)]);
      if (cands[static_cast<std::size_t>(i)].empty()) return false;
      if (seed_ != 0) std::shuffle(cands[static_cast<std::size_t>(i)].begin(), cands[static_cast<std::size_t>(i)].end(), rng_);
    }
    // Fail-first: colors with the fewest usable rows go first.
    std::vector<int> order(static_cast<std::size_t>(k_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return cands[static_cast<std::size_t>(a)].size() < cands[static_cast<std::size_t>(b)].size();
    });

    const std::size_t cols = static_cast<std::size_t>(expanded_) + 1;
    std::vector<int> need(cols, mu_);
    need.back() = mu_ * (hub_size_ - 1);
    // reach[t][c]: most that colors order[t..] can still add to column c.
    std::vector<std::vector<int>> reach(static_cast<std::size_t>(k_) + 1, std::vector<int>(cols, 0));
    for (int t = k_ - 1; t >= 0; --t) {
      const auto& cs = cands[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])];
      for (std::size_t c = 0; c < cols; ++c) {
        int best = 0;
        for (const Row& row : cs) best = std::max(best, row[c]);
        reach[static_cast<std::size_t>(t)][c] = reach[static_cast<std::size_t>(t) + 1][c] + best;
      }
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (reach[0][c] < need[c]) return false;
    }

    std::vector<int> used(cols, 0);
    std::vector<const Row*> chosen(static_cast<std::size_t>(k_), nullptr);

    auto choose = [&](auto&& self, int t) -> bool {
      if (t == k_) {
        apply(chosen, +1);
        ++expanded_;
        --hub_size_;
        ++stats_.splits;
        check_conservation();
        if (split()) return true;
        --expanded_;
        ++hub_size_;
        apply(chosen, -1);
        ++stats_.backtracks;
        return false;
      }
      const int color = order[static_cast<std::size_t>(t)];
      for (const Row& row : cands[static_cast<std::size_t>(color)]) {
        if (++stats_.nodes > budget_) {
          throw BudgetExhausted("fair_detach: budget of " + std::to_string(budget_) + " placements exhausted");
        }
        bool ok = true;
        for (std::size_t c = 0; c < cols && ok; ++c) {
          const int now = used[c] + row[c];
          ok = now <= need[c] && now + reach[static_cast<std::size_t>(t) + 1][c] >= need[c];
        }
        if (!ok) continue;
        for (std::size_t c = 0; c < cols; ++c) used[c] += row[c];
        chosen[static_cast<std::size_t>(color)] = &row;
        if (self(self, t + 1)) return true;
        for (std::size_t c = 0; c < cols; ++c) used[c] -= row[c];
      }
      return false;
    };
    return choose(choose, 0);
  }

  int n_;
  int m_;
  int mu_;
  int r_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  int hub_size_ = 0;
  int expanded_ = 0;
  std::vector<Multigraph> final_;
  std::vector<std::vector<int>> hub_edges_;
  std::vector<int> loops_;
  DetachStats stats_;
};

}  // namespace

DetachmentWitness fair_detach(const Triad& t, const EnclosureParams& params, std::uint64_t seed,
                              std::uint64_t budget) {
  if (t.vertex_count() != params.n + 1 || t.g.at(static_cast<std::size_t>(params.n)) != params.m - params.n) {
    throw PreconditionError("fair_detach: triad is not the amalgamated triad for these parameters");
  }
  if (!is_good_triad(t)) throw PreconditionError("fair_detach: triad is not good");

  SplitSearch search(t, params, seed, budget);
  if (!search.run()) {
    throw InternalInconsistency("fair_detach: search space exhausted without a fair detachment");
  }
  DetachmentWitness w;
  w.stats = search.stats();
  w.result = Decomposition(complete_multigraph(params.m, params.mu), search.take_classes());
  w.vertex_map.resize(static_cast<std::size_t>(params.m));
  for (Vertex x = 0; x < params.m; ++x) w.vertex_map[static_cast<std::size_t>(x)] = x < params.n ? x : params.n;
  return w;
}

namespace {

// floor(a) <= b <= ceil(a) for a = num / den.
bool approx(std::int64_t b, std::int64_t num, std::int64_t den) {
  if (den == 0) return num == 0 && b == 0;
  const Rational a(num, den);
  return a.floor() <= b && b <= a.ceil();
}

}  // namespace

VerifyReport verify_detachment(const DetachmentWitness& w, const Triad& t, const EnclosureParams& params) {
  VerifyReport rep;
  const Decomposition& f = w.result;
  const int tv = t.vertex_count();
  if (static_cast<int>(w.vertex_map.size()) != f.vertex_count()) {
    rep.fail("vertex map size differs from the detached vertex count");
    return rep;
  }
  if (f.k() != t.decomposition.k()) {
    rep.fail("detachment has a different number of classes");
    return rep;
  }
  for (Vertex x : w.vertex_map) {
    if (x < 0 || x >= tv) {
      rep.fail("vertex map leaves the triad");
      return rep;
    }
  }

  // (D'1): amalgamating each class gives back the triad class.
  for (int i = 0; i < f.k(); ++i) {
    Multigraph amalgam(tv);
    for (const auto& pc : f.color_class(i).pair_counts()) {
      amalgam.add_edges(w.vertex_map[static_cast<std::size_t>(pc.pair.u)], w.vertex_map[static_cast<std::size_t>(pc.pair.v)],
                        pc.count);
    }
    if (!(amalgam == t.decomposition.color_class(i))) {
      rep.fail("D'1: class " + std::to_string(i) + " does not amalgamate to the triad class");
    }
  }

  // (D'2): fiber sizes with f = 1 everywhere.
  std::vector<int> fiber(static_cast<std::size_t>(tv), 0);
  for (Vertex x : w.vertex_map) ++fiber[static_cast<std::size_t>(x)];
  for (Vertex v = 0; v < tv; ++v) {
    if (fiber[static_cast<std::size_t>(v)] != t.g[static_cast<std::size_t>(v)]) {
      rep.fail("D'2: vertex " + std::to_string(v) + " has " + std::to_string(fiber[static_cast<std::size_t>(v)]) +
               " preimages, g = " + std::to_string(t.g[static_cast<std::size_t>(v)]));
    }
  }

  // (D'3): class degrees against the triad ratio.
  for (int i = 0; i < f.k(); ++i) {
    for (Vertex x = 0; x < f.vertex_count(); ++x) {
      const Vertex v = w.vertex_map[static_cast<std::size_t>(x)];
      if (!approx(f.color_class(i).degree(x), t.decomposition.color_class(i).degree(v), t.g[static_cast<std::size_t>(v)])) {
        rep.fail("D'3: class " + std::to_string(i) + " degree at vertex " + std::to_string(x) + " is unfair");
      }
      if (f.color_class(i).degree(x) != params.r) {
        rep.fail("D'3: class " + std::to_string(i) + " degree at vertex " + std::to_string(x) + " is not r");
      }
    }
  }

  // (D'4): pair multiplicities against the triad ratio.
  for (Vertex x = 0; x < f.vertex_count(); ++x) {
    for (Vertex y = x + 1; y < f.vertex_count(); ++y) {
      const Vertex vx = w.vertex_map[static_cast<std::size_t>(x)];
      const Vertex vy = w.vertex_map[static_cast<std::size_t>(y)];
      const int d = f.base().multiplicity(x, y);
      if (!approx(d, t.graph().multiplicity(vx, vy), t.pair_weight(vx, vy)) || d != params.mu) {
        rep.fail("D'4: pair " + std::to_string(x) + "-" + std::to_string(y) + " has multiplicity " +
                 std::to_string(d));
      }
    }
  }

  for (int i = 0; i < f.k(); ++i) {
    if (!is_two_edge_connected_spanning(f.color_class(i))) {
      rep.fail("class " + std::to_string(i) + " of the detachment is not 2-edge-connected");
    }
  }
  return rep;
}

}  // namespace enclose
