#include "support/fixtures.hpp"

namespace wiretap::fixtures {

namespace {

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

}  // namespace

Graph k3() { return complete(3); }
Graph k4() { return complete(4); }
Graph k5() { return complete(5); }

Graph p3() { return make_graph(3, {{0, 1}, {1, 2}}); }

Graph two_parallel() { return make_graph(2, {{0, 1}, {0, 1}}); }

Graph bowtie() {
  return make_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
}

Graph triangle_pendant() {
  return make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
}

Graph fig1() {
  // Vertices 0..3 left K4, 4..7 right K4, 8..12 the K5.
  std::vector<std::pair<int, int>> edges;
  edges.emplace_back(1, 8);    // 0: left K4 - K5
  edges.emplace_back(11, 5);   // 1: K5 - right K4
  edges.emplace_back(2, 4);    // 2: left K4 - right K4
  edges.emplace_back(3, 7);    // 3: left K4 - right K4
  for (int u = 0; u < 4; ++u)  // 4..9: left K4
    for (int v = u + 1; v < 4; ++v) edges.emplace_back(u, v);
  for (int u = 4; u < 8; ++u)  // 10..15: right K4
    for (int v = u + 1; v < 8; ++v) edges.emplace_back(u, v);
  for (int u = 8; u < 13; ++u)  // 16..25: K5
    for (int v = u + 1; v < 13; ++v) edges.emplace_back(u, v);
  return make_graph(13, std::move(edges));
}

}  // namespace wiretap::fixtures
