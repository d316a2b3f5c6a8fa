#include "enclose/extend.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "enclose/error.hpp"
#include "enclose/matching.hpp"

namespace enclose {

namespace {

std::vector<VertexPair> pair_order(int n, std::uint64_t seed) {
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
  }
  return pairs;
}

void require_condition(const ConditionReport& rep, std::initializer_list<const char*> names, const char* who) {
  for (const char* name : names) {
    const auto& f = rep.flag(name);
    if (!f.ok) throw PreconditionError(std::string(who) + ": condition " + f.name + " fails (" + f.reason + ")");
  }
}

// Records the action, applies it, and checks the classes it touched.
void act(PartialDecomposition& state, ExtensionTrace& trace, const TraceAction& a, int r) {
  apply_action(state, a);
  trace.actions.push_back(a);
  for (int c : {a.color, a.from_color}) {
    if (c < 0) continue;
    const auto res = class_admissible(state.color_class(c), r, c);
    if (!res) {
      throw InternalInconsistency(action_kind_name(a.kind) + " of edge " + std::to_string(a.edge.u) + "-" +
                                  std::to_string(a.edge.v) + " broke admissibility: " + res.violation->describe());
    }
  }
}

bool admits_edge(const Multigraph& cls, VertexPair e, int r) {
  Multigraph trial = cls;
  trial.add_edges(e.u, e.v);
  return class_admissible(trial, r).admissible;
}

// Smallest uncolored pair in lexicographic order.
VertexPair first_uncolored(const PartialDecomposition& gp) {
  const auto pcs = gp.uncolored().pair_counts();
  if (pcs.empty()) throw PreconditionError("partial decomposition has no uncolored edge");
  return pcs.front().pair;
}

// Spare copies of pair e in class c: colored copies beyond the protected ones.
int spare_in_class(const PartialDecomposition& gp, const Decomposition& prot, int c, VertexPair e) {
  return gp.color_class(c).multiplicity(e) - prot.color_class(c).multiplicity(e);
}

}  // namespace

std::string action_kind_name(ActionKind kind) {
  switch (kind) {
    case ActionKind::kPad: return "pad";
    case ActionKind::kColor: return "color";
    case ActionKind::kRecolor: return "recolor";
    case ActionKind::kMatchingAssign: return "matching_assign";
  }
  return "?";
}

ActionKind parse_action_kind(const std::string& name) {
  for (ActionKind k : {ActionKind::kPad, ActionKind::kColor, ActionKind::kRecolor, ActionKind::kMatchingAssign}) {
    if (action_kind_name(k) == name) return k;
  }
  throw PreconditionError("unknown trace action '" + name + "'");
}

void apply_action(PartialDecomposition& state, const TraceAction& a) {
  if (a.kind == ActionKind::kRecolor) {
    state.recolor(a.edge.u, a.edge.v, a.from_color, a.color);
  } else {
    state.color(a.color, a.edge.u, a.edge.v);
  }
}

PartialDecomposition replay(PartialDecomposition start, const ExtensionTrace& trace, const StepObserver& observer) {
  for (const auto& a : trace.actions) {
    apply_action(start, a);
    if (observer) observer(start, a);
  }
  return start;
}

PartialDecomposition lift_to_mu_kn(const Decomposition& g, const EnclosureParams& params) {
  if (!(g.base() == complete_multigraph(params.n, params.lambda))) {
    throw PreconditionError("inner decomposition is not a decomposition of lambda K_n");
  }
  return PartialDecomposition(g, complete_multigraph(params.n, params.mu));
}

ExtensionResult pad_to_p(const Decomposition& g, const EnclosureParams& params, std::uint64_t seed) {
  if (params.m < 2 * params.n - 1) throw PreconditionError("pad_to_p: requires m >= 2n - 1");
  require_condition(check_b(g, params), {"B2", "B3"}, "pad_to_p");

  ExtensionResult out{lift_to_mu_kn(g, params), {}};
  if (params.p <= Rational(0)) return out;
  if (!params.p.is_integer()) throw PreconditionError("pad_to_p: p = " + params.p.str() + " is not an integer");
  const auto target = static_cast<int>(params.p.num());
  const auto order = pair_order(params.n, seed);

  for (int c = 0; c < out.state.k(); ++c) {
    while (out.state.color_class(c).edge_count() < target) {
      bool placed = false;
      for (const VertexPair& e : order) {
        if (out.state.uncolored().multiplicity(e) == 0) continue;
        if (!admits_edge(out.state.color_class(c), e, params.r)) continue;
        act(out.state, out.trace, {ActionKind::kPad, e, c, -1}, params.r);
        placed = true;
        break;
      }
      if (!placed) {
        throw InternalInconsistency("pad_to_p: no spare edge fits class " + std::to_string(c) +
                                    " although (B3) holds");
      }
    }
  }
  return out;
}

ExtensionResult extend_to_r_via_matching(const Decomposition& g, const EnclosureParams& params, std::uint64_t seed) {
  if (params.m != 2 * params.n - 2) throw PreconditionError("extend_to_r_via_matching: requires m = 2n - 2");
  require_condition(check_c(g, params), {"C2", "C3", "C4"}, "extend_to_r_via_matching");
  const int r = params.r;
  const auto order = pair_order(params.n, seed);

  ExtensionResult out{lift_to_mu_kn(g, params), {}};

  // Step 1: one spare edge into every empty class.
  for (int c = 0; c < out.state.k(); ++c) {
    if (out.state.color_class(c).edge_count() != 0) continue;
    const auto it = std::find_if(order.begin(), order.end(),
                                 [&](const VertexPair& e) { return out.state.uncolored().multiplicity(e) > 0; });
    if (it == order.end()) throw InternalInconsistency("extend_to_r_via_matching: spare edges ran out in step 1");
    act(out.state, out.trace, {ActionKind::kPad, *it, c, -1}, r);
  }

  // Step 2/3: slots on the class side, individual spare edges on the other.
  struct Slot {
    int color;
    std::optional<VertexPair> special;  // avoids this pair when set
  };
  std::vector<Slot> slots;
  for (int c = 0; c < out.state.k(); ++c) {
    const Multigraph& cls = out.state.color_class(c);
    const int i = cls.edge_count();
    if (i < 1 || i > r - 1) continue;
    const auto pcs = cls.pair_counts();
    const bool bad = pcs.size() == 1 && !pcs.front().pair.is_loop();
    const int plain = bad ? r - i - 1 : r - i;
    for (int s = 0; s < plain; ++s) slots.push_back({c, std::nullopt});
    if (bad) slots.push_back({c, pcs.front().pair});
  }

  std::vector<VertexPair> spare;
  for (const VertexPair& e : order) {
    for (int copy = 0; copy < out.state.uncolored().multiplicity(e); ++copy) spare.push_back(e);
  }

  BipartiteMatcher matcher(static_cast<int>(slots.size()), static_cast<int>(spare.size()));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    for (std::size_t w = 0; w < spare.size(); ++w) {
      if (slots[s].special && *slots[s].special == spare[w]) continue;
      matcher.add_edge(static_cast<int>(s), static_cast<int>(w));
    }
  }
  // Step 4: Hall's condition holds under (C3) and (C4).
  const int matched = matcher.solve();
  if (matched != static_cast<int>(slots.size())) {
    throw InternalInconsistency("extend_to_r_via_matching: matching saturates only " + std::to_string(matched) +
                                " of " + std::to_string(slots.size()) + " class slots");
  }

  // Step 5: special slots first so a bad class never passes through r parallel edges.
  std::vector<std::size_t> apply_order(slots.size());
  std::iota(apply_order.begin(), apply_order.end(), 0);
  std::stable_partition(apply_order.begin(), apply_order.end(),
                        [&](std::size_t s) { return slots[s].special.has_value(); });
  for (std::size_t s : apply_order) {
    const VertexPair e = spare[static_cast<std::size_t>(matcher.partner_of_left(static_cast<int>(s)))];
    act(out.state, out.trace, {ActionKind::kMatchingAssign, e, slots[s].color, -1}, r);
  }

  for (int c = 0; c < out.state.k(); ++c) {
    const Multigraph& cls = out.state.color_class(c);
    if (cls.edge_count() < r) {
      throw InternalInconsistency("extend_to_r_via_matching: class " + std::to_string(c) + " ends below r edges");
    }
    const auto pcs = cls.pair_counts();
    if (cls.edge_count() == r && pcs.size() == 1) {
      throw InternalInconsistency("extend_to_r_via_matching: class " + std::to_string(c) +
                                  " has r edges on a single pair");
    }
  }
  return out;
}

ColoringStep color_one_edge(const PartialDecomposition& gp, const EnclosureParams& params) {
  if (params.m < 2 * params.n - 1) throw PreconditionError("color_one_edge: requires m >= 2n - 1");
  if (std::int64_t{params.r} * params.k != std::int64_t{params.mu} * (params.m - 1)) {
    throw PreconditionError("color_one_edge: requires rk = mu(m - 1)");
  }
  if (!gp.is_strict()) throw PreconditionError("color_one_edge: nothing left to color");
  if (const auto res = is_admissible(gp, params.r); !res) {
    throw PreconditionError("color_one_edge: input not admissible: " + res.violation->describe());
  }

  const VertexPair e = first_uncolored(gp);
  for (int c = 0; c < gp.k(); ++c) {
    if (!admits_edge(gp.color_class(c), e, params.r)) continue;
    ColoringStep step{gp, {}, false};
    ExtensionTrace trace;
    act(step.state, trace, {ActionKind::kColor, e, c, -1}, params.r);
    step.actions = std::move(trace.actions);
    return step;
  }
  throw InternalInconsistency("color_one_edge: no class accepts edge " + std::to_string(e.u) + "-" +
                              std::to_string(e.v));
}

ColoringStep color_one_edge_with_recolor(const PartialDecomposition& gp, const Decomposition& prot,
                                         const EnclosureParams& params, std::optional<VertexPair> edge) {
  const int r = params.r;
  if (params.m != 2 * params.n - 2) throw PreconditionError("color_one_edge_with_recolor: requires m = 2n - 2");
  if (std::int64_t{r} * params.k != std::int64_t{params.mu} * (params.m - 1)) {
    throw PreconditionError("color_one_edge_with_recolor: requires rk = mu(m - 1)");
  }
  if (!(2 * (r - 1) >= params.mu && params.mu > params.lambda)) {
    throw PreconditionError("color_one_edge_with_recolor: requires 2(r - 1) >= mu > lambda");
  }
  if (!gp.is_strict()) throw PreconditionError("color_one_edge_with_recolor: nothing left to color");
  if (prot.k() != gp.k()) throw PreconditionError("color_one_edge_with_recolor: class count mismatch");
  for (int c = 0; c < gp.k(); ++c) {
    for (const auto& pc : prot.color_class(c).pair_counts()) {
      if (gp.color_class(c).multiplicity(pc.pair) < pc.count) {
        throw PreconditionError("color_one_edge_with_recolor: gp does not enclose the protected classes");
      }
    }
  }
  if (const auto res = is_admissible(gp, r); !res) {
    throw PreconditionError("color_one_edge_with_recolor: input not admissible: " + res.violation->describe());
  }

  const VertexPair e = edge.value_or(first_uncolored(gp));
  if (gp.uncolored().multiplicity(e) == 0) {
    throw PreconditionError("color_one_edge_with_recolor: edge is not uncolored");
  }

  for (int c = 0; c < gp.k(); ++c) {
    if (!admits_edge(gp.color_class(c), e, r)) continue;
    ColoringStep step{gp, {}, false};
    ExtensionTrace trace;
    act(step.state, trace, {ActionKind::kColor, e, c, -1}, r);
    step.actions = std::move(trace.actions);
    return step;
  }

  // Every class refuses e = xy. The blocking class j holds exactly r-1
  // parallel xy-edges and nothing else at x or y.
  const Vertex x = e.u;
  const Vertex y = e.v;
  int j = -1;
  for (int c = 0; c < gp.k(); ++c) {
    const Multigraph& cls = gp.color_class(c);
    if (cls.multiplicity(x, y) == r - 1 && cls.degree(x) == r - 1 && cls.degree(y) == r - 1) {
      j = c;
      break;
    }
  }
  if (j < 0) {
    throw InternalInconsistency("color_one_edge_with_recolor: no class holds r-1 parallel edges on " +
                                std::to_string(x) + "-" + std::to_string(y));
  }

  const Multigraph& cls_j = gp.color_class(j);
  const auto label = component_labels(cls_j);
  std::vector<Vertex> targets;  // low-degree vertices outside the xy component
  for (const auto& comp : components(cls_j)) {
    if (label[static_cast<std::size_t>(comp.front())] == label[static_cast<std::size_t>(x)]) continue;
    std::vector<Vertex> below;
    std::vector<Vertex> at;
    for (Vertex w : comp) {
      if (cls_j.degree(w) < r - 1) below.push_back(w);
      if (cls_j.degree(w) == r - 1) at.push_back(w);
    }
    targets.insert(targets.end(), below.begin(), below.end());
    if (at.size() == 2) targets.insert(targets.end(), at.begin(), at.end());
  }

  for (Vertex u : targets) {
    for (Vertex anchor : {x, y}) {
      const VertexPair f(anchor, u);
      if (gp.uncolored().multiplicity(f) > 0) {
        if (!admits_edge(cls_j, f, r)) continue;
        ColoringStep step{gp, {}, true};
        ExtensionTrace trace;
        act(step.state, trace, {ActionKind::kColor, f, j, -1}, r);
        step.actions = std::move(trace.actions);
        return step;
      }
      for (int c = 0; c < gp.k(); ++c) {
        if (c == j || spare_in_class(gp, prot, c, f) <= 0) continue;
        PartialDecomposition trial = gp;
        trial.recolor(f.u, f.v, c, j);
        trial.color(c, e.u, e.v);
        if (!class_admissible(trial.color_class(c), r) || !class_admissible(trial.color_class(j), r)) continue;
        ColoringStep step{gp, {}, true};
        ExtensionTrace trace;
        act(step.state, trace, {ActionKind::kRecolor, f, j, c}, r);
        act(step.state, trace, {ActionKind::kColor, e, c, -1}, r);
        step.actions = std::move(trace.actions);
        return step;
      }
    }
  }
  throw InternalInconsistency("color_one_edge_with_recolor: no recoloring frees a class for edge " +
                              std::to_string(x) + "-" + std::to_string(y));
}

namespace {

/// Backtracking over pair copies; each copy goes to one sized class or to the
/// leftover pool. Degrees per class are confined to {lo, hi} with a fixed
/// number of vertices at hi.
class AlmostRegularSearch {
 public:
  AlmostRegularSearch(int n, int lambda, std::span<const int> sizes, std::uint64_t seed)
      : n_(n), lambda_(lambda), t_(static_cast<int>(sizes.size())), size_(sizes.begin(), sizes.end()) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        for (int c = 0; c < lambda; ++c) slots_.emplace_back(u, v);
      }
    }
    const int total = static_cast<int>(slots_.size());
    leftover_ = total - std::accumulate(size_.begin(), size_.end(), 0);
    lo_.resize(size_.size());
    hi_.resize(size_.size());
    hi_quota_.resize(size_.size());
    for (int c = 0; c < t_; ++c) {
      const int twice = 2 * size_[static_cast<std::size_t>(c)];
      lo_[static_cast<std::size_t>(c)] = n > 0 ? twice / n : 0;
      hi_[static_cast<std::size_t>(c)] = n > 0 ? (twice + n - 1) / n : 0;
      hi_quota_[static_cast<std::size_t>(c)] = n > 0 ? twice - n * lo_[static_cast<std::size_t>(c)] : 0;
    }
    deg_.assign(static_cast<std::size_t>(t_) * static_cast<std::size_t>(n), 0);
    at_hi_.assign(static_cast<std::size_t>(t_), 0);
    used_.assign(static_cast<std::size_t>(t_), 0);
    remaining_at_.assign(static_cast<std::size_t>(n), lambda * (n - 1));
    choice_.assign(slots_.size(), -1);
    order_.resize(static_cast<std::size_t>(t_));
    std::iota(order_.begin(), order_.end(), 0);
    if (seed != 0) {
      std::mt19937_64 rng(seed);
      std::shuffle(order_.begin(), order_.end(), rng);
    }
  }

  bool run() { return place(0); }

  // Class per slot, -1 for leftover.
  const std::vector<int>& choice() const { return choice_; }
  const std::vector<VertexPair>& slots() const { return slots_; }

 private:
  int& deg(int c, Vertex v) { return deg_[static_cast<std::size_t>(c) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)]; }

  bool can_take(int c, Vertex v) {
    const auto ci = static_cast<std::size_t>(c);
    const int d = deg(c, v);
    if (d + 1 > hi_[ci]) return false;
    if (hi_[ci] > lo_[ci] && d + 1 == hi_[ci] && at_hi_[ci] >= hi_quota_[ci]) return false;
    return true;
  }

  void bump(int c, Vertex v, int delta) {
    const auto ci = static_cast<std::size_t>(c);
    int& d = deg(c, v);
    if (hi_[ci] > lo_[ci]) {
      if (delta > 0 && d + 1 == hi_[ci]) ++at_hi_[ci];
      if (delta < 0 && d == hi_[ci]) --at_hi_[ci];
    }
    d += delta;
  }

  // Every vertex can still reach its lower bound in every class.
  bool feasible(Vertex v) {
    int need = 0;
    for (int c = 0; c < t_; ++c) need += std::max(0, lo_[static_cast<std::size_t>(c)] - deg(c, v));
    return need <= remaining_at_[static_cast<std::size_t>(v)];
  }

  bool place(std::size_t idx) {
    if (idx == slots_.size()) {
      for (int c = 0; c < t_; ++c) {
        if (used_[static_cast<std::size_t>(c)] != size_[static_cast<std::size_t>(c)]) return false;
      }
      return true;
    }
    const VertexPair e = slots_[idx];
    --remaining_at_[static_cast<std::size_t>(e.u)];
    --remaining_at_[static_cast<std::size_t>(e.v)];
    // Copies of one pair are interchangeable: non-decreasing choice order.
    const bool same_pair_as_prev = idx > 0 && slots_[idx - 1] == e;
    const int floor_rank = same_pair_as_prev ? rank_of(choice_[idx - 1]) : 0;
    const int slots_left = static_cast<int>(slots_.size() - idx);

    for (int rank = floor_rank; rank <= t_; ++rank) {
      const int c = rank < t_ ? order_[static_cast<std::size_t>(rank)] : -1;
      if (c >= 0) {
        const auto ci = static_cast<std::size_t>(c);
        if (used_[ci] >= size_[ci] || !can_take(c, e.u) || !can_take(c, e.v)) continue;
        ++used_[ci];
        bump(c, e.u, +1);
        bump(c, e.v, +1);
        choice_[idx] = c;
        if (feasible(e.u) && feasible(e.v) && place(idx + 1)) return true;
        bump(c, e.u, -1);
        bump(c, e.v, -1);
        --used_[ci];
      } else {
        if (leftover_used_ >= leftover_) continue;
        // Sized classes must still be fillable from the remaining slots.
        if (slots_left - 1 < (static_cast<int>(slots_.size()) - leftover_) - assigned_sized()) continue;
        ++leftover_used_;
        choice_[idx] = -1;
        if (feasible(e.u) && feasible(e.v) && place(idx + 1)) return true;
        --leftover_used_;
      }
    }
    choice_[idx] = -1;
    ++remaining_at_[static_cast<std::size_t>(e.u)];
    ++remaining_at_[static_cast<std::size_t>(e.v)];
    return false;
  }

  int assigned_sized() const { return std::accumulate(used_.begin(), used_.end(), 0); }

  int rank_of(int c) const {
    if (c < 0) return t_;
    return static_cast<int>(std::find(order_.begin(), order_.end(), c) - order_.begin());
  }

  int n_;
  int lambda_;
  int t_;
  std::vector<int> size_;
  std::vector<VertexPair> slots_;
  int leftover_ = 0;
  int leftover_used_ = 0;
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<int> hi_quota_;
  std::vector<int> deg_;
  std::vector<int> at_hi_;
  std::vector<int> used_;
  std::vector<int> remaining_at_;
  std::vector<int> choice_;
  std::vector<int> order_;
};

}  // namespace

bool is_almost_regular(std::span<const Multigraph> classes) {
  for (const auto& cls : classes) {
    if (cls.vertex_count() == 0) continue;
    int lo = cls.degree(0);
    int hi = lo;
    for (Vertex v = 1; v < cls.vertex_count(); ++v) {
      lo = std::min(lo, cls.degree(v));
      hi = std::max(hi, cls.degree(v));
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

PartialDecomposition almost_regular_decompose(int n, int lambda, std::span<const int> sizes, std::uint64_t seed) {
  if (n < 1 || lambda < 1) throw PreconditionError("almost_regular_decompose: n and lambda must be positive");
  std::int64_t total = 0;
  for (int s : sizes) {
    if (s < 0) throw PreconditionError("almost_regular_decompose: negative class size");
    total += s;
  }
  const std::int64_t capacity = std::int64_t{lambda} * n * (n - 1) / 2;
  if (total > capacity) {
    throw PreconditionError("almost_regular_decompose: sizes sum to " + std::to_string(total) + " > lambda n(n-1)/2 = " +
                            std::to_string(capacity));
  }

  AlmostRegularSearch search(n, lambda, sizes, seed);
  if (!search.run()) {
    throw InternalInconsistency("almost_regular_decompose: no almost-regular decomposition found for feasible sizes");
  }
  std::vector<Multigraph> classes(sizes.size(), Multigraph(n));
  for (std::size_t i = 0; i < search.slots().size(); ++i) {
    const int c = search.choice()[i];
    if (c >= 0) classes[static_cast<std::size_t>(c)].add_edges(search.slots()[i].u, search.slots()[i].v);
  }
  return PartialDecomposition(complete_multigraph(n, lambda), std::move(classes));
}

ExtensionResult proper_padding(const Decomposition& g, const EnclosureParams& params, std::uint64_t seed) {
  if (params.r < 3) throw PreconditionError("proper_padding: requires r >= 3");
  const auto rep = check_padding(g, params);
  if (const auto* f = rep.first_failure()) {
    throw PreconditionError("proper_padding: condition " + f->name + " fails (" + f->reason + ")");
  }

  const int spare_mult = params.mu - params.lambda;
  const int total = spare_mult * params.n * (params.n - 1) / 2;
  std::vector<int> sizes(static_cast<std::size_t>(params.k), total / params.k);
  std::vector<int> who(static_cast<std::size_t>(params.k));
  std::iota(who.begin(), who.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(who.begin(), who.end(), rng);
  }
  for (int i = 0; i < total % params.k; ++i) ++sizes[static_cast<std::size_t>(who[static_cast<std::size_t>(i)])];

  const Decomposition spare = almost_regular_decompose(params.n, spare_mult, sizes, seed).complete();
  for (int c = 0; c < spare.k(); ++c) {
    for (Vertex v = 0; v < params.n; ++v) {
      if (spare.color_class(c).degree(v) > 1) {
        throw InternalInconsistency("proper_padding: spare class " + std::to_string(c) + " is not a matching");
      }
    }
  }

  ExtensionResult out{lift_to_mu_kn(g, params), {}};
  for (int c = 0; c < spare.k(); ++c) {
    for (const auto& pc : spare.color_class(c).pair_counts()) {
      for (int copy = 0; copy < pc.count; ++copy) act(out.state, out.trace, {ActionKind::kPad, pc.pair, c, -1}, params.r);
    }
  }
  for (const auto& cls : out.state.classes()) {
    if (Rational(cls.edge_count()) < params.p) {
      throw InternalInconsistency("proper_padding: a class ends below p edges");
    }
  }
  return out;
}

MuKnResult enclose_in_mu_kn(const Decomposition& g, const EnclosureParams& params, Regime mode, std::uint64_t seed) {
  if (g.k() != params.k) throw PreconditionError("enclose_in_mu_kn: decomposition has the wrong number of classes");
  const auto battery = check_regime(g, params, mode);
  if (const auto* f = battery.first_failure()) {
    throw PreconditionError("condition " + f->name + " fails (" + f->reason + ")");
  }

  MuKnResult out;
  ExtensionResult ext;
  switch (mode) {
    case Regime::kAPrime:
      out.decomposition = g;
      return out;
    case Regime::kB:
      ext = pad_to_p(g, params, seed);
      while (ext.state.is_strict()) {
        auto step = color_one_edge(ext.state, params);
        ext.state = std::move(step.state);
        ext.trace.actions.insert(ext.trace.actions.end(), step.actions.begin(), step.actions.end());
      }
      break;
    case Regime::kC:
      ext = extend_to_r_via_matching(g, params, seed);
      while (ext.state.is_strict()) {
        auto step = color_one_edge_with_recolor(ext.state, g, params);
        out.recolor_steps += step.used_recolor ? 1 : 0;
        ext.state = std::move(step.state);
        ext.trace.actions.insert(ext.trace.actions.end(), step.actions.begin(), step.actions.end());
      }
      break;
    case Regime::kPadding:
      ext = proper_padding(g, params, seed);
      break;
    case Regime::kOutOfRegime:
      throw PreconditionError("enclose_in_mu_kn: no construction for this regime");
  }

  out.decomposition = ext.state.complete();
  out.trace = std::move(ext.trace);
  const auto a_report = check_a_prime(out.decomposition, params);
  if (const auto* f = a_report.first_failure()) {
    throw InternalInconsistency("enclose_in_mu_kn: result fails " + f->name + " (" + f->reason + ")");
  }
  return out;
}

}  // namespace enclose
