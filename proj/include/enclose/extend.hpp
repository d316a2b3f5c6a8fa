#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "enclose/conditions.hpp"
#include "enclose/decomp.hpp"

namespace enclose {

enum class ActionKind {
  kPad,             // uncolored spare edge added to a class to reach a size target
  kColor,           // uncolored spare edge colored one at a time
  kRecolor,         // spare edge moved between classes
  kMatchingAssign,  // spare edge assigned through the Hall matching
};

std::string action_kind_name(ActionKind kind);
ActionKind parse_action_kind(const std::string& name);

struct TraceAction {
  ActionKind kind = ActionKind::kPad;
  VertexPair edge;
  int color = 0;        // destination class
  int from_color = -1;  // source class for kRecolor

  friend bool operator==(const TraceAction&, const TraceAction&) = default;
};

/// Ordered log of every change made to a partial decomposition. Replaying it
/// on the input reproduces the output.
struct ExtensionTrace {
  std::vector<TraceAction> actions;
  friend bool operator==(const ExtensionTrace&, const ExtensionTrace&) = default;
};

// Applies one action in place.
void apply_action(PartialDecomposition& state, const TraceAction& action);

// Called after each replayed action with the updated state.
using StepObserver = std::function<void(const PartialDecomposition&, const TraceAction&)>;

PartialDecomposition replay(PartialDecomposition start, const ExtensionTrace& trace,
                            const StepObserver& observer = {});

struct ExtensionResult {
  PartialDecomposition state;
  ExtensionTrace trace;
};

// Starting state for every extension: the classes of g inside mu K_n, with the
// spare edges uncolored.
PartialDecomposition lift_to_mu_kn(const Decomposition& g, const EnclosureParams& params);

/// Adds spare edges to every class with fewer than p edges until it has p.
/// Requires m >= 2n - 1, r-admissible g and (B3). Spare edges are taken in
/// lexicographic pair order, permuted by `seed` when it is nonzero.
ExtensionResult pad_to_p(const Decomposition& g, const EnclosureParams& params, std::uint64_t seed = 0);

/// Brings every class up to r edges for m = 2n - 2 via a Hall matching
/// between missing class slots and spare edges, so that no class ends with
/// exactly r edges all on one pair. Requires r-admissible g with (C3), (C4).
ExtensionResult extend_to_r_via_matching(const Decomposition& g, const EnclosureParams& params,
                                         std::uint64_t seed = 0);

struct ColoringStep {
  PartialDecomposition state;
  std::vector<TraceAction> actions;
  bool used_recolor = false;
};

/// Colors the lexicographically first uncolored edge with the first class
/// that keeps the decomposition r-admissible. Requires m >= 2n - 1,
/// rk = mu(m - 1), a strict and r-admissible gp.
ColoringStep color_one_edge(const PartialDecomposition& gp, const EnclosureParams& params);

/// As color_one_edge for m = 2n - 2. When no class accepts the edge xy, a
/// spare edge from x (or y) to a low-degree vertex of another component of the
/// blocking class is colored or moved into that class, and xy takes the
/// vacated color. Edges of `protected_classes` are never moved.
ColoringStep color_one_edge_with_recolor(const PartialDecomposition& gp, const Decomposition& protected_classes,
                                         const EnclosureParams& params,
                                         std::optional<VertexPair> edge = std::nullopt);

/// Almost-regular decomposition of (part of) lambda K_n with exactly sizes[i]
/// edges in class i; edges beyond the total stay uncolored. Throws
/// PreconditionError when the sizes exceed lambda n(n-1)/2.
PartialDecomposition almost_regular_decompose(int n, int lambda, std::span<const int> sizes, std::uint64_t seed = 0);

// Every vertex degree in every class lies in {floor(2s/n), ceil(2s/n)}.
bool is_almost_regular(std::span<const Multigraph> classes);

/// Unions g with a near-equal proper k-edge-coloring of mu K_n minus lambda K_n.
/// Requires every hypothesis reported by check_padding.
ExtensionResult proper_padding(const Decomposition& g, const EnclosureParams& params, std::uint64_t seed = 0);

struct MuKnResult {
  Decomposition decomposition;
  ExtensionTrace trace;
  int recolor_steps = 0;
};

/// Full decomposition of mu K_n that encloses g and satisfies (A'1)-(A'3).
/// kB pads then colors edge by edge; kC matches then colors with recoloring;
/// kPadding applies proper_padding; kAPrime returns g unchanged.
MuKnResult enclose_in_mu_kn(const Decomposition& g, const EnclosureParams& params, Regime mode,
                            std::uint64_t seed = 0);

}  // namespace enclose
