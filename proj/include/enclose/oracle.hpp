#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "enclose/conditions.hpp"
#include "enclose/decomp.hpp"

// Brute-force ground truth. Nothing here calls the admissibility, condition or
// construction code; only the Multigraph substrate and plain data types are
// shared.
namespace enclose::oracle {

struct SearchStats {
  std::uint64_t nodes = 0;
  int solutions = 0;
  double wall_seconds = 0.0;
};

enum class SearchStatus { kFound, kNone, kBudget };

const char* search_status_name(SearchStatus s);

struct EncloseOutcome {
  SearchStatus status = SearchStatus::kNone;
  std::optional<Enclosing> witness;
  SearchStats stats;
};

constexpr int kDefaultSlotCap = 40;
constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

/// Exhaustive search for a 2-edge-connected r-factorization of mu K_m whose
/// classes contain those of g. kNone is only returned after the whole space is
/// exhausted. Throws CapExceeded when mu m(m-1)/2 exceeds `slot_cap`.
EncloseOutcome brute_force_enclose(const Decomposition& g, const EnclosureParams& params,
                                   std::uint64_t budget = kDefaultOracleBudget, int slot_cap = kDefaultSlotCap);

// Literal reading of the admissibility definition: components by BFS, every
// single edge removed and the graph searched again.
bool brute_force_admissible(std::span<const Multigraph> classes, int r);
inline bool brute_force_admissible(const Decomposition& d, int r) { return brute_force_admissible(d.classes(), r); }

constexpr int kEnumerationEdgeCap = 12;

struct EnumerationOptions {
  bool dedup = true;  // one representative per color permutation
  std::function<bool(const Decomposition&)> filter;  // keep when unset or true
};

using DecompositionVisitor = std::function<void(const Decomposition&)>;

/// Visits decompositions of lambda K_n into k classes in a deterministic order.
/// Raw mode visits all k^E assignments of the E edge copies (parallel copies
/// are counted separately); dedup mode visits each decomposition once up to
/// renaming colors. Returns the number visited. Throws CapExceeded when
/// E > kEnumerationEdgeCap.
std::uint64_t enumerate_decompositions(int n, int lambda, int k, const EnumerationOptions& options,
                                       const DecompositionVisitor& visit);

std::vector<Decomposition> all_decompositions(int n, int lambda, int k, const EnumerationOptions& options = {});

/// Random r-admissible decomposition of lambda K_n into k classes: random
/// assignment, then edges of offending classes are moved at random. Throws
/// PreconditionError when every restart fails.
Decomposition random_admissible(int n, int lambda, int k, int r, std::uint64_t seed);

}  // namespace enclose::oracle
