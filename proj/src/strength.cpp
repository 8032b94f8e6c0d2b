#include "wiretap/strength.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

#include "wiretap/errors.hpp"
#include "maxflow.hpp"
#include "union_find.hpp"

namespace wiretap {

WeightMap::WeightMap(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (const Rational& w : weights_)
    if (w <= 0) throw std::invalid_argument("edge weight must be > 0");
}

WeightMap WeightMap::unit(int edge_count) {
  return WeightMap(std::vector<Rational>(static_cast<std::size_t>(edge_count),
                                         Rational(1)));
}

Rational WeightMap::sum_over(const EdgeSubset& s) const {
  Rational total = 0;
  s.for_each([&](int e) { total += weights_[static_cast<std::size_t>(e)]; });
  return total;
}

Rational WeightMap::total() const {
  Rational total = 0;
  for (const Rational& w : weights_) total += w;
  return total;
}

Rational cut_rate(const Graph& g, const WeightMap& w, const EdgeSubset& s) {
  if (g.vertex_count() <= 1 || s.empty()) return 0;
  int gain = component_count(g, s) - component_count(g);
  return Rational(gain) / w.sum_over(s);
}

Rational cut_rate(const Graph& g, const EdgeSubset& s) {
  if (g.vertex_count() <= 1 || s.empty()) return 0;
  int gain = component_count(g, s) - component_count(g);
  return Rational(gain, static_cast<long long>(s.count()));
}

Rational class_cut_rate(const Graph& g, const WeightClasses& wc, int ell) {
  if (ell < 1 || ell > wc.class_count())
    throw std::invalid_argument("class index out of range");
  EdgeSubset prefix(static_cast<std::size_t>(g.edge_count()));
  for (int i = 0; i + 1 < ell; ++i) prefix |= wc.classes[static_cast<std::size_t>(i)].edges;
  int before = component_count(g, prefix);
  prefix |= wc.classes[static_cast<std::size_t>(ell - 1)].edges;
  int after = component_count(g, prefix);
  return Rational(after - before,
                  static_cast<long long>(
                      wc.classes[static_cast<std::size_t>(ell - 1)].edges.count()));
}

namespace {

// One Dinkelbach subproblem: minimize w(delta(P)) - mu*(|P| - 1) over all
// vertex partitions P. Parts are grown one vertex at a time; when vertex x
// arrives, the cheapest way to extend the current optimal partition is to
// merge x with some subfamily of its parts, and choosing that subfamily is
// a minimum s-t cut on the contracted graph (select a part and pay mu,
// capture the edge weight it shares with the selection).
struct PartitionResult {
  Rational deficit;             // min over partitions of w(delta) - mu*(parts-1)
  std::vector<int> part_of;     // minimizing partition, by vertex id
  int part_count = 0;
  Rational crossing_weight;     // w(delta) of that partition
};

PartitionResult min_partition_deficit(const Graph& g, const WeightMap& w,
                                      const Rational& mu) {
  const int n = g.vertex_count();
  // All capacities become integers after scaling by 2 * lcm of denominators.
  BigInt scale = 2 * denominator(mu);
  for (int e = 0; e < g.edge_count(); ++e)
    scale = lcm(scale, BigInt(2) * denominator(w[e]));

  std::vector<std::vector<int>> parts;   // vertex lists of the current parts
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  Rational partition_value = 0;          // sum over parts of w(delta(U))/2 - mu

  for (int x = 0; x < n; ++x) {
    // Contract: node 0 is x, nodes 1..r the current parts, then one node per
    // unprocessed vertex.
    int r = static_cast<int>(parts.size());
    std::vector<int> node_of(static_cast<std::size_t>(n), -1);
    node_of[static_cast<std::size_t>(x)] = 0;
    for (int i = 0; i < r; ++i)
      for (int v : parts[static_cast<std::size_t>(i)])
        node_of[static_cast<std::size_t>(v)] = 1 + i;
    int next = 1 + r;
    for (int v = x + 1; v < n; ++v) node_of[static_cast<std::size_t>(v)] = next++;
    const int node_count = next;

    std::map<std::pair<int, int>, Rational> contracted;
    std::vector<Rational> degree(static_cast<std::size_t>(node_count), Rational(0));
    Rational total_edge_weight = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      int a = node_of[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].first)];
      int b = node_of[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].second)];
      if (a == b) continue;  // internal to a part
      contracted[{std::min(a, b), std::max(a, b)}] += w[e];
      degree[static_cast<std::size_t>(a)] += w[e];
      degree[static_cast<std::size_t>(b)] += w[e];
      total_edge_weight += w[e];
    }

    auto scaled = [&](const Rational& value) {
      Rational v = value * scale;
      if (denominator(v) != 1)
        throw std::logic_error("capacity scaling left a fraction");
      return numerator(v);
    };

    // Flow network: source, sink, then the contracted nodes.
    const int source = node_count;
    const int sink = node_count + 1;
    detail::MaxFlow flow(node_count + 2);
    BigInt finite_total = 0;
    for (int v = 0; v < node_count; ++v) {
      BigInt cap = scaled(degree[static_cast<std::size_t>(v)] / 2);
      if (cap > 0) flow.add_arc(source, v, cap);
      finite_total += cap;
    }
    BigInt part_cost = scaled(mu);
    for (int i = 0; i < r; ++i) {
      flow.add_arc(1 + i, sink, part_cost);
      finite_total += part_cost;
    }
    for (const auto& [key, weight] : contracted) {
      BigInt cap = scaled(weight / 2);
      flow.add_arc(key.first, key.second, cap);
      flow.add_arc(key.second, key.first, cap);
      finite_total += 2 * cap;
    }
    BigInt infinity = finite_total + 1;
    flow.add_arc(source, 0, infinity);                      // x joins the selection
    for (int v = 1 + r; v < node_count; ++v) flow.add_arc(v, sink, infinity);

    BigInt cut = flow.max_flow(source, sink);
    std::vector<bool> side = flow.min_cut_side(source);

    // Capture value: max over subfamilies I of w(E[{x} u I]) - mu*|I|,
    // realized as (sum of all scaled s->v caps) - mincut.
    Rational captured = total_edge_weight - Rational(cut, scale);
    partition_value += degree[0] / 2 - mu - captured;

    // Merge x with the selected parts.
    std::vector<int> merged{x};
    std::vector<std::vector<int>> remaining;
    for (int i = 0; i < r; ++i) {
      if (side[static_cast<std::size_t>(1 + i)])
        merged.insert(merged.end(), parts[static_cast<std::size_t>(i)].begin(),
                      parts[static_cast<std::size_t>(i)].end());
      else
        remaining.push_back(std::move(parts[static_cast<std::size_t>(i)]));
    }
    remaining.push_back(std::move(merged));
    parts = std::move(remaining);
  }

  PartitionResult result;
  result.part_count = static_cast<int>(parts.size());
  for (int i = 0; i < result.part_count; ++i)
    for (int v : parts[static_cast<std::size_t>(i)])
      part_of[static_cast<std::size_t>(v)] = i;
  result.part_of = std::move(part_of);
  result.crossing_weight = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    if (result.part_of[static_cast<std::size_t>(u)] !=
        result.part_of[static_cast<std::size_t>(v)])
      result.crossing_weight += w[e];
  }
  result.deficit = partition_value + mu;
  return result;
}

EdgeSubset crossing_edges(const Graph& g, const std::vector<int>& part_of) {
  EdgeSubset cut(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
      cut.add(e);
  }
  return cut;
}

}  // namespace

StrengthResult strength_opt(const Graph& g, const WeightMap& w) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("strength needs at least two vertices");
  if (!is_connected(g))
    throw DisconnectedGraphError("strength_opt requires a connected graph");

  // Start from the all-singletons partition and Newton-step upward.
  std::vector<int> witness(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) witness[static_cast<std::size_t>(v)] = v;
  Rational lambda = Rational(g.vertex_count() - 1) / w.total();

  for (;;) {
    PartitionResult step = min_partition_deficit(g, w, Rational(1) / lambda);
    if (step.deficit >= 0) break;   // no partition has a better ratio
    Rational improved = Rational(step.part_count - 1) / step.crossing_weight;
    if (improved <= lambda)
      throw std::logic_error("ratio iteration failed to make progress");
    lambda = improved;
    witness = std::move(step.part_of);
  }
  return {lambda, crossing_edges(g, witness)};
}

StrengthResult strength_opt(const Graph& g) {
  return strength_opt(g, WeightMap::unit(g.edge_count()));
}

namespace {

struct Component {
  Graph graph;
  std::vector<int> edge_ids;  // original ids, ascending
};

std::vector<Component> edge_components(const Graph& g, const EdgeSubset& alive) {
  detail::UnionFind uf(g.vertex_count());
  alive.for_each([&](int e) {
    uf.unite(g.edges[static_cast<std::size_t>(e)].first,
             g.edges[static_cast<std::size_t>(e)].second);
  });
  // Components keyed by smallest vertex id; only edge-bearing ones matter.
  std::map<int, int> component_index;
  std::vector<Component> components;
  std::vector<int> local_id(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int root = uf.find(v);
    auto [it, inserted] =
        component_index.emplace(root, static_cast<int>(components.size()));
    if (inserted) components.emplace_back();
    Component& comp = components[static_cast<std::size_t>(it->second)];
    local_id[static_cast<std::size_t>(v)] =
        static_cast<int>(comp.graph.vertex_names.size());
    comp.graph.vertex_names.push_back(g.vertex_names[static_cast<std::size_t>(v)]);
  }
  alive.for_each([&](int e) {
    auto [u, v] = g.edges[static_cast<std::size_t>(e)];
    Component& comp =
        components[static_cast<std::size_t>(component_index.at(uf.find(u)))];
    comp.graph.edges.emplace_back(local_id[static_cast<std::size_t>(u)],
                                  local_id[static_cast<std::size_t>(v)]);
    comp.edge_ids.push_back(e);
  });
  std::erase_if(components, [](const Component& c) { return c.edge_ids.empty(); });
  return components;
}

}  // namespace

PrimeSetResult prime_set_on(const Graph& g, const EdgeSubset& alive) {
  if (alive.empty())
    return {Rational(0), EdgeSubset(static_cast<std::size_t>(g.edge_count()))};

  std::vector<Component> components = edge_components(g, alive);
  int best = 0;
  Rational best_opt = -1;
  for (int i = 0; i < static_cast<int>(components.size()); ++i) {
    Rational opt = strength_opt(components[static_cast<std::size_t>(i)].graph).opt;
    if (opt > best_opt) {
      best_opt = opt;
      best = i;
    }
  }

  const Component& comp = components[static_cast<std::size_t>(best)];
  const int m = comp.graph.edge_count();
  std::vector<Rational> omega(static_cast<std::size_t>(m), Rational(1));
  for (int j = 0; j < m; ++j) {   // ascending original edge id
    omega[static_cast<std::size_t>(j)] = 2;
    Rational doubled_opt = strength_opt(comp.graph, WeightMap(omega)).opt;
    if (doubled_opt != best_opt) omega[static_cast<std::size_t>(j)] = 1;
  }
  EdgeSubset prime(static_cast<std::size_t>(g.edge_count()));
  for (int j = 0; j < m; ++j)
    if (omega[static_cast<std::size_t>(j)] == 1)
      prime.add(comp.edge_ids[static_cast<std::size_t>(j)]);
  return {best_opt, prime};
}

PrimeSetResult prime_set(const Graph& g) {
  return prime_set_on(g, EdgeSubset::full(static_cast<std::size_t>(g.edge_count())));
}

}  // namespace wiretap
