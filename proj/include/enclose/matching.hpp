#pragma once

#include <vector>

namespace enclose {

/// Bipartite graph with left vertices 0..left-1 and right vertices 0..right-1.
/// Maximum matching via Hopcroft-Karp; adjacency order fixes the result.
class BipartiteMatcher {
 public:
  static constexpr int kFree = -1;

  BipartiteMatcher(int left, int right);

  void add_edge(int l, int r);
  int left_size() const { return static_cast<int>(adj_.size()); }
  int right_size() const { return static_cast<int>(match_right_.size()); }

  // Computes a maximum matching and returns its size.
  int solve();

  // Right partner of left vertex l, or kFree.
  int partner_of_left(int l) const { return match_left_[static_cast<std::size_t>(l)]; }

 private:
  bool bfs();
  bool dfs(int l);

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
};

}  // namespace enclose
