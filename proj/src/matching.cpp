#include "enclose/matching.hpp"

#include <limits>
#include <queue>

#include "enclose/error.hpp"

namespace enclose {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

BipartiteMatcher::BipartiteMatcher(int left, int right)
    : adj_(static_cast<std::size_t>(left)),
      match_left_(static_cast<std::size_t>(left), kFree),
      match_right_(static_cast<std::size_t>(right), kFree),
      dist_(static_cast<std::size_t>(left), kInf) {}

void BipartiteMatcher::add_edge(int l, int r) {
  if (l < 0 || l >= left_size() || r < 0 || r >= right_size()) {
    throw PreconditionError("BipartiteMatcher: edge out of range");
  }
  adj_[static_cast<std::size_t>(l)].push_back(r);
}

bool BipartiteMatcher::bfs() {
  std::queue<int> q;
  bool reachable_free = false;
  for (int l = 0; l < left_size(); ++l) {
    if (match_left_[static_cast<std::size_t>(l)] == kFree) {
      dist_[static_cast<std::size_t>(l)] = 0;
      q.push(l);
    } else {
      dist_[static_cast<std::size_t>(l)] = kInf;
    }
  }
  while (!q.empty()) {
    const int l = q.front();
    q.pop();
    for (int r : adj_[static_cast<std::size_t>(l)]) {
      const int next = match_right_[static_cast<std::size_t>(r)];
      if (next == kFree) {
        reachable_free = true;
      } else if (dist_[static_cast<std::size_t>(next)] == kInf) {
        dist_[static_cast<std::size_t>(next)] = dist_[static_cast<std::size_t>(l)] + 1;
        q.push(next);
      }
    }
  }
  return reachable_free;
}

bool BipartiteMatcher::dfs(int l) {
  for (int r : adj_[static_cast<std::size_t>(l)]) {
    const int next = match_right_[static_cast<std::size_t>(r)];
    if (next == kFree ||
        (dist_[static_cast<std::size_t>(next)] == dist_[static_cast<std::size_t>(l)] + 1 && dfs(next))) {
      match_left_[static_cast<std::size_t>(l)] = r;
      match_right_[static_cast<std::size_t>(r)] = l;
      return true;
    }
  }
  dist_[static_cast<std::size_t>(l)] = kInf;
  return false;
}

int BipartiteMatcher::solve() {
  int size = 0;
  for (int m : match_left_) size += (m != kFree);
  while (bfs()) {
    for (int l = 0; l < left_size(); ++l) {
      if (match_left_[static_cast<std::size_t>(l)] == kFree && dfs(l)) ++size;
    }
  }
  return size;
}

}  // namespace enclose
