#include "wiretap/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "wiretap/errors.hpp"
#include "union_find.hpp"

namespace wiretap {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  Graph g;
  g.vertex_names.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) g.vertex_names.push_back(std::to_string(v));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
  }
  g.edges = std::move(edges);
  return g;
}

Graph parse_graph(std::istream& in) {
  Graph g;
  std::unordered_map<std::string, int> vertex_ids;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string u, v, extra;
    if (!(tokens >> u)) continue;          // blank line
    if (u[0] == '#') continue;             // comment
    if (!(tokens >> v) || (tokens >> extra))
      throw ParseError("line " + std::to_string(line_number) +
                           ": expected exactly two vertex tokens",
                       line_number);
    if (u == v)
      throw ParseError("line " + std::to_string(line_number) +
                           ": self-loop '" + u + " " + v + "' rejected",
                       line_number);
    auto intern = [&](const std::string& name) {
      auto [it, inserted] =
          vertex_ids.emplace(name, static_cast<int>(g.vertex_names.size()));
      if (inserted) g.vertex_names.push_back(name);
      return it->second;
    };
    int a = intern(u);
    int b = intern(v);
    g.edges.emplace_back(a, b);
  }
  if (g.edges.empty()) throw ParseError("empty edge set", line_number);
  return g;
}

EdgeDistribution::EdgeDistribution(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  Rational total = 0;
  for (const Rational& w : weights_) {
    if (w < 0) throw std::invalid_argument("distribution weight must be >= 0");
    total += w;
  }
  if (total != 1)
    throw std::invalid_argument("distribution weights must sum to exactly 1");
}

EdgeDistribution EdgeDistribution::uniform(int edge_count) {
  return EdgeDistribution(std::vector<Rational>(
      static_cast<std::size_t>(edge_count), Rational(1, edge_count)));
}

EdgeDistribution EdgeDistribution::uniform_on(int edge_count,
                                              const EdgeSubset& support) {
  std::vector<Rational> w(static_cast<std::size_t>(edge_count), Rational(0));
  Rational share(1, static_cast<long long>(support.count()));
  support.for_each([&](int e) { w[static_cast<std::size_t>(e)] = share; });
  return EdgeDistribution(std::move(w));
}

Rational EdgeDistribution::sum_over(const EdgeSubset& s) const {
  Rational total = 0;
  s.for_each([&](int e) { total += weights_[static_cast<std::size_t>(e)]; });
  return total;
}

int component_count(const Graph& g, const EdgeSubset& removed) {
  detail::UnionFind uf(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (removed.contains(e)) continue;
    uf.unite(g.edges[static_cast<std::size_t>(e)].first,
             g.edges[static_cast<std::size_t>(e)].second);
  }
  return uf.component_count();
}

int component_count(const Graph& g) {
  return component_count(g, EdgeSubset(static_cast<std::size_t>(g.edge_count())));
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_connected_spanning(const Graph& g, const EdgeSubset& s) {
  detail::UnionFind uf(g.vertex_count());
  s.for_each([&](int e) {
    uf.unite(g.edges[static_cast<std::size_t>(e)].first,
             g.edges[static_cast<std::size_t>(e)].second);
  });
  return uf.component_count() == 1;
}

MinCsgResult min_csg(const Graph& g, const EdgeDistribution& d) {
  if (!is_connected(g))
    throw DisconnectedGraphError("min_csg requires a connected graph");
  std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (d[a] != d[b]) return d[a] < d[b];
    return a < b;
  });
  detail::UnionFind uf(g.vertex_count());
  EdgeSubset tree(static_cast<std::size_t>(g.edge_count()));
  Rational weight = 0;
  for (int e : order) {
    if (uf.unite(g.edges[static_cast<std::size_t>(e)].first,
                 g.edges[static_cast<std::size_t>(e)].second)) {
      tree.add(e);
      weight += d[e];
    }
  }
  return {std::move(weight), std::move(tree)};
}

WeightClasses weight_classes(const Graph& g, const EdgeDistribution& d) {
  std::map<Rational, std::vector<int>, std::greater<Rational>> by_weight;
  for (int e = 0; e < g.edge_count(); ++e) by_weight[d[e]].push_back(e);
  WeightClasses wc;
  for (auto& [weight, ids] : by_weight)
    wc.classes.push_back(
        {weight, EdgeSubset::from_range(static_cast<std::size_t>(g.edge_count()), ids)});
  return wc;
}

}  // namespace wiretap
