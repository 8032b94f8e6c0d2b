#include "wiretap/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "wiretap/errors.hpp"
#include "union_find.hpp"

namespace wiretap {

StrengthResult brute_opt(const Graph& g, int cap) {
  const int m = g.edge_count();
  if (m > cap)
    throw OracleCapError("brute_opt capped at " + std::to_string(cap) + " edges");
  if (m == 0) throw std::invalid_argument("brute_opt needs at least one edge");

  const int base_components = component_count(g);
  Rational best_rate = -1;
  std::uint64_t best_mask = 0;
  std::size_t best_size = 0;
  std::vector<int> best_ids;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    detail::UnionFind uf(g.vertex_count());
    for (int e = 0; e < m; ++e)
      if (!(mask >> e & 1))
        uf.unite(g.edges[static_cast<std::size_t>(e)].first,
                 g.edges[static_cast<std::size_t>(e)].second);
    std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    Rational rate(uf.component_count() - base_components,
                  static_cast<long long>(size));
    if (rate < best_rate) continue;
    std::vector<int> ids;
    if (rate == best_rate) {
      // Ties prefer smaller subsets, then lexicographically smaller ids.
      if (size > best_size) continue;
      ids = EdgeSubset::from_mask(static_cast<std::size_t>(m), mask).to_vector();
      if (size == best_size &&
          !std::lexicographical_compare(ids.begin(), ids.end(), best_ids.begin(),
                                        best_ids.end()))
        continue;
    } else {
      ids = EdgeSubset::from_mask(static_cast<std::size_t>(m), mask).to_vector();
    }
    best_rate = rate;
    best_mask = mask;
    best_size = size;
    best_ids = std::move(ids);
  }
  return {best_rate, EdgeSubset::from_mask(static_cast<std::size_t>(m), best_mask)};
}

std::vector<EdgeSubset> enumerate_csgs(const Graph& g, int cap) {
  const int m = g.edge_count();
  if (m > cap)
    throw OracleCapError("CSG enumeration capped at " + std::to_string(cap) +
                         " edges");
  std::vector<EdgeSubset> result;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    EdgeSubset s = EdgeSubset::from_mask(static_cast<std::size_t>(m), mask);
    if (is_connected_spanning(g, s)) result.push_back(std::move(s));
  }
  return result;
}

ResponseStats response_stats(const Graph& g, const EdgeDistribution& d, int cap) {
  std::vector<EdgeSubset> csgs = enumerate_csgs(g, cap);
  if (csgs.empty())
    throw DisconnectedGraphError("response_stats requires a connected graph");
  ResponseStats stats;
  bool first = true;
  for (const EdgeSubset& s : csgs) {
    Rational weight = d.sum_over(s);
    if (first || weight < stats.best_weight) {
      if (!first && (!stats.second_best_weight || stats.best_weight < *stats.second_best_weight))
        stats.second_best_weight = stats.best_weight;
      stats.best_weight = weight;
      stats.best_count = 1;
      first = false;
    } else if (weight == stats.best_weight) {
      ++stats.best_count;
    } else if (!stats.second_best_weight || weight < *stats.second_best_weight) {
      stats.second_best_weight = weight;
    }
  }
  return stats;
}

std::vector<EdgeSubset> enumerate_ocsgs(const Graph& g, const PrimePartition& pp,
                                        int cap) {
  std::vector<EdgeSubset> result;
  for (EdgeSubset& s : enumerate_csgs(g, cap))
    if (is_ocsg(g, pp, s)) result.push_back(std::move(s));
  return result;
}

namespace {

int rational_matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  std::size_t pivot_column = 0;
  for (std::size_t r = 0; r < rows.size() && pivot_column < cols; ++pivot_column) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][pivot_column] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t other = 0; other < rows.size(); ++other) {
      if (other == r || rows[other][pivot_column] == 0) continue;
      Rational factor = rows[other][pivot_column] / rows[r][pivot_column];
      for (std::size_t c = pivot_column; c < cols; ++c)
        rows[other][c] -= factor * rows[r][c];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

bool vertex_check(const PolytopeDescription& desc, const EdgeDistribution& d) {
  const int t = desc.variable_count;

  // Recover the per-variable values and insist d actually fits the system.
  std::vector<std::optional<Rational>> value(static_cast<std::size_t>(t));
  for (int e = 0; e < d.edge_count(); ++e) {
    int var = desc.edge_to_variable[static_cast<std::size_t>(e)];
    if (var < 0) {
      if (d[e] != 0)
        throw std::invalid_argument("distribution is positive on the degenerate set");
      continue;
    }
    auto& slot = value[static_cast<std::size_t>(var)];
    if (!slot)
      slot = d[e];
    else if (*slot != d[e])
      throw std::invalid_argument("distribution is not constant on an element");
  }
  std::vector<Rational> y;
  for (auto& slot : value) y.push_back(slot.value());
  for (auto [parent, child] : desc.order_inequalities)
    if (y[static_cast<std::size_t>(parent)] < y[static_cast<std::size_t>(child)])
      throw std::invalid_argument("distribution violates an order inequality");
  for (int var : desc.nonneg_variables)
    if (y[static_cast<std::size_t>(var)] < 0)
      throw std::invalid_argument("distribution violates nonnegativity");

  // Rows of the constraints tight at d, in variable space.
  std::vector<std::vector<Rational>> tight;
  std::vector<Rational> normalization;
  for (int i = 0; i < t; ++i)
    normalization.emplace_back(desc.element_size[static_cast<std::size_t>(i)]);
  tight.push_back(std::move(normalization));
  for (auto [parent, child] : desc.order_inequalities) {
    if (y[static_cast<std::size_t>(parent)] != y[static_cast<std::size_t>(child)])
      continue;
    std::vector<Rational> row(static_cast<std::size_t>(t), Rational(0));
    row[static_cast<std::size_t>(parent)] = 1;
    row[static_cast<std::size_t>(child)] = -1;
    tight.push_back(std::move(row));
  }
  for (int var : desc.nonneg_variables) {
    if (y[static_cast<std::size_t>(var)] != 0) continue;
    std::vector<Rational> row(static_cast<std::size_t>(t), Rational(0));
    row[static_cast<std::size_t>(var)] = 1;
    tight.push_back(std::move(row));
  }
  return rational_matrix_rank(std::move(tight)) == t;
}

}  // namespace wiretap
