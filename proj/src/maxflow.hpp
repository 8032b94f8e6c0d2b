#pragma once

#include <queue>
#include <vector>

#include "wiretap/rational.hpp"

namespace wiretap::detail {

/// Dinic's algorithm over exact big-integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count)
      : adjacency_(static_cast<std::size_t>(node_count)) {}

  void add_arc(int from, int to, BigInt capacity) {
    adjacency_[static_cast<std::size_t>(from)].push_back(
        {to, static_cast<int>(adjacency_[static_cast<std::size_t>(to)].size()),
         std::move(capacity)});
    adjacency_[static_cast<std::size_t>(to)].push_back(
        {from,
         static_cast<int>(adjacency_[static_cast<std::size_t>(from)].size()) - 1,
         BigInt(0)});
  }

  BigInt max_flow(int source, int sink) {
    BigInt total = 0;
    while (build_levels(source, sink)) {
      iter_.assign(adjacency_.size(), 0);
      for (;;) {
        BigInt pushed = augment(source, sink, BigInt(-1));
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  /// After max_flow: nodes reachable from `source` in the residual graph.
  std::vector<bool> min_cut_side(int source) const {
    std::vector<bool> side(adjacency_.size(), false);
    std::queue<int> queue;
    queue.push(source);
    side[static_cast<std::size_t>(source)] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (const Arc& a : adjacency_[static_cast<std::size_t>(v)]) {
        if (a.capacity > 0 && !side[static_cast<std::size_t>(a.to)]) {
          side[static_cast<std::size_t>(a.to)] = true;
          queue.push(a.to);
        }
      }
    }
    return side;
  }

 private:
  struct Arc {
    int to;
    int rev;
    BigInt capacity;  // residual
  };

  bool build_levels(int source, int sink) {
    level_.assign(adjacency_.size(), -1);
    std::queue<int> queue;
    queue.push(source);
    level_[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (const Arc& a : adjacency_[static_cast<std::size_t>(v)]) {
        if (a.capacity > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
          level_[static_cast<std::size_t>(a.to)] =
              level_[static_cast<std::size_t>(v)] + 1;
          queue.push(a.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  // limit < 0 means unbounded.
  BigInt augment(int v, int sink, BigInt limit) {
    if (v == sink) return limit;
    for (int& i = iter_[static_cast<std::size_t>(v)];
         i < static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
         ++i) {
      Arc& a = adjacency_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
      if (a.capacity <= 0 ||
          level_[static_cast<std::size_t>(a.to)] !=
              level_[static_cast<std::size_t>(v)] + 1)
        continue;
      BigInt next_limit =
          (limit < 0 || a.capacity < limit) ? a.capacity : limit;
      BigInt pushed = augment(a.to, sink, next_limit);
      if (pushed > 0) {
        a.capacity -= pushed;
        adjacency_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)]
            .capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> adjacency_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace wiretap::detail
