#include "wiretap/order.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wiretap/errors.hpp"
#include "union_find.hpp"

namespace wiretap {

bool OrderDag::is_ancestor(int a, int b) const {
  const auto& anc = ancestors[static_cast<std::size_t>(b)];
  return std::binary_search(anc.begin(), anc.end(), a);
}

std::vector<int> ancestors(const Graph& g, const PrimePartition& pp, int target,
                           const std::vector<int>& scan_order) {
  if (target < 0 || target >= pp.nondegenerate_count())
    throw std::invalid_argument("ancestors: target must be a non-degenerate element");

  std::vector<bool> in_family(static_cast<std::size_t>(pp.nondegenerate_count()), true);
  EdgeSubset footprint(static_cast<std::size_t>(g.edge_count()));
  for (int i = 0; i < pp.nondegenerate_count(); ++i)
    footprint |= pp.elements[static_cast<std::size_t>(i)];

  bool removed = true;
  while (removed) {
    removed = false;
    for (int candidate : scan_order) {
      if (candidate == target || !in_family[static_cast<std::size_t>(candidate)])
        continue;
      EdgeSubset reduced = footprint - pp.elements[static_cast<std::size_t>(candidate)];
      if (cut_rate(g, reduced) == pp.opt) {
        in_family[static_cast<std::size_t>(candidate)] = false;
        footprint = reduced;
        removed = true;
      }
    }
  }

  std::vector<int> result;
  for (int i = 0; i < pp.nondegenerate_count(); ++i)
    if (in_family[static_cast<std::size_t>(i)] && i != target) result.push_back(i);
  return result;
}

std::vector<int> ancestors(const Graph& g, const PrimePartition& pp, int target) {
  std::vector<int> order(static_cast<std::size_t>(pp.nondegenerate_count()));
  std::iota(order.begin(), order.end(), 0);
  return ancestors(g, pp, target, order);
}

OrderDag parent_child(const Graph& g, const PrimePartition& pp) {
  OrderDag dag;
  dag.node_count = pp.nondegenerate_count();
  dag.ancestors.resize(static_cast<std::size_t>(dag.node_count));
  for (int i = 0; i < dag.node_count; ++i)
    dag.ancestors[static_cast<std::size_t>(i)] = ancestors(g, pp, i);

  // Parent = ancestor with no intermediate element in between.
  for (int child = 0; child < dag.node_count; ++child) {
    for (int parent : dag.ancestors[static_cast<std::size_t>(child)]) {
      bool direct = true;
      for (int mid : dag.ancestors[static_cast<std::size_t>(child)]) {
        if (mid != parent && dag.is_ancestor(parent, mid)) {
          direct = false;
          break;
        }
      }
      if (direct) dag.parent_edges.emplace_back(parent, child);
    }
  }
  std::sort(dag.parent_edges.begin(), dag.parent_edges.end());
  return dag;
}

Layers layers(const OrderDag& dag, const PrimePartition& pp) {
  Layers result;
  std::vector<bool> peeled(static_cast<std::size_t>(dag.node_count), false);
  int remaining = dag.node_count;
  while (remaining > 0) {
    std::vector<int> sinks;
    for (int i = 0; i < dag.node_count; ++i) {
      if (peeled[static_cast<std::size_t>(i)]) continue;
      bool has_child = false;
      for (auto [parent, child] : dag.parent_edges)
        if (parent == i && !peeled[static_cast<std::size_t>(child)]) {
          has_child = true;
          break;
        }
      if (!has_child) sinks.push_back(i);
    }
    EdgeSubset layer_edges(static_cast<std::size_t>(
        pp.elements.empty() ? 0 : pp.elements.front().universe_size()));
    for (int i : sinks) {
      peeled[static_cast<std::size_t>(i)] = true;
      layer_edges |= pp.elements[static_cast<std::size_t>(i)];
      --remaining;
    }
    result.element_indices.push_back(std::move(sinks));
    result.edge_sets.push_back(std::move(layer_edges));
  }
  return result;
}

namespace {

// All connected-spanning subsets as a 2^m membership table.
std::vector<bool> csg_table(const Graph& g) {
  const int m = g.edge_count();
  std::vector<bool> table(std::size_t{1} << m, false);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    detail::UnionFind uf(g.vertex_count());
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1)
        uf.unite(g.edges[static_cast<std::size_t>(e)].first,
                 g.edges[static_cast<std::size_t>(e)].second);
    table[mask] = uf.component_count() == 1;
  }
  return table;
}

}  // namespace

std::vector<std::vector<bool>> leads_to_relation(const Graph& g,
                                                 const PrimePartition& pp,
                                                 int cap) {
  const int m = g.edge_count();
  if (m > cap)
    throw OracleCapError(
        "leads_to oracle supports at most " + std::to_string(cap) +
        " edges; compute the order via ancestors instead");
  const int t = pp.nondegenerate_count();
  std::vector<int> element_of(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < t; ++i)
    pp.elements[static_cast<std::size_t>(i)].for_each(
        [&](int e) { element_of[static_cast<std::size_t>(e)] = i; });

  std::vector<bool> csg = csg_table(g);
  std::vector<std::vector<bool>> relation(
      static_cast<std::size_t>(t), std::vector<bool>(static_cast<std::size_t>(t), false));

  std::vector<std::uint64_t> element_masks;
  std::vector<int> quotas;
  for (int i = 0; i < t; ++i) {
    const EdgeSubset& p = pp.elements[static_cast<std::size_t>(i)];
    element_masks.push_back(p.to_mask());
    Rational quota = Rational(static_cast<long long>(p.count())) * pp.opt;
    assert(denominator(quota) == 1);
    quotas.push_back(static_cast<int>(numerator(quota)));
  }
  std::vector<std::uint64_t> ocsg_masks;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if (!csg[mask]) continue;
    bool quotas_met = true;
    for (int i = 0; i < t; ++i)
      if (std::popcount(mask & element_masks[static_cast<std::size_t>(i)]) !=
          quotas[static_cast<std::size_t>(i)]) {
        quotas_met = false;
        break;
      }
    if (quotas_met) ocsg_masks.push_back(mask);
  }

  for (std::uint64_t base : ocsg_masks) {
    for (int e = 0; e < m; ++e) {
      if (base >> e & 1) continue;
      int p = element_of[static_cast<std::size_t>(e)];
      if (p < 0) continue;  // degenerate
      for (int removed = 0; removed < m; ++removed) {
        if (!(base >> removed & 1)) continue;
        int q = element_of[static_cast<std::size_t>(removed)];
        if (q < 0 || q == p) continue;
        std::uint64_t exchanged =
            (base & ~(std::uint64_t{1} << removed)) | (std::uint64_t{1} << e);
        if (csg[exchanged]) relation[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = true;
      }
    }
  }
  return relation;
}

bool leads_to_oracle(const Graph& g, const PrimePartition& pp, int p, int q,
                     int cap) {
  if (p == q || p < 0 || q < 0 || p >= pp.nondegenerate_count() ||
      q >= pp.nondegenerate_count())
    throw std::invalid_argument("leads_to: need two distinct non-degenerate elements");
  return leads_to_relation(g, pp, cap)[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

std::string to_dot(const PrimePartition& pp, const OrderDag& dag,
                   const std::vector<int>* relabel) {
  auto name = [&](int i) {
    return relabel ? (*relabel)[static_cast<std::size_t>(i)] : i;
  };
  std::ostringstream out;
  out << "digraph order {\n";
  std::vector<int> display_order(static_cast<std::size_t>(dag.node_count));
  std::iota(display_order.begin(), display_order.end(), 0);
  std::sort(display_order.begin(), display_order.end(),
            [&](int a, int b) { return name(a) < name(b); });
  for (int i : display_order)
    out << "  p" << name(i) << " [label=\"P" << name(i) << " (size "
        << pp.elements[static_cast<std::size_t>(i)].count() << ")\"];\n";
  std::vector<std::pair<int, int>> display_edges;
  for (auto [parent, child] : dag.parent_edges)
    display_edges.emplace_back(name(parent), name(child));
  std::sort(display_edges.begin(), display_edges.end());
  for (auto [parent, child] : display_edges)
    out << "  p" << parent << " -> p" << child << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace wiretap
