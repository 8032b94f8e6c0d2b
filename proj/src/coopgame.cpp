#include "wiretap/coopgame.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "wiretap/errors.hpp"
#include "wiretap/strength.hpp"
#include "union_find.hpp"

namespace wiretap {

int coalition_value(const Graph& g, const EdgeSubset& s) {
  if (g.vertex_count() < 3)
    throw AssumptionViolationError(
        "the spanning connectivity game needs at least three vertices");
  return is_connected_spanning(g, s) ? 1 : 0;
}

Rational excess(const Graph& g, const Imputation& x, const EdgeSubset& s) {
  return x.sum_over(s) - coalition_value(g, s);
}

namespace {

std::vector<bool> winning_table(const Graph& g) {
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

// x with all weights over one small common denominator, when that fits
// comfortably in 64-bit arithmetic.
struct CommonDenominator {
  long long denominator = 0;
  std::vector<long long> numerators;
};

std::optional<CommonDenominator> common_denominator(const Imputation& x) {
  BigInt common = 1;
  for (int e = 0; e < x.edge_count(); ++e) common = lcm(common, denominator(x[e]));
  if (common > std::numeric_limits<std::int32_t>::max()) return std::nullopt;
  CommonDenominator result;
  result.denominator = static_cast<long long>(common);
  for (int e = 0; e < x.edge_count(); ++e) {
    Rational scaled = x[e] * common;
    result.numerators.push_back(static_cast<long long>(numerator(scaled)));
  }
  return result;
}

// Coalition sums for every mask via the low-bit recurrence.
std::vector<long long> mask_sums(const std::vector<long long>& numerators) {
  const int m = static_cast<int>(numerators.size());
  std::vector<long long> sums(std::size_t{1} << m, 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + numerators[static_cast<std::size_t>(low)];
  }
  return sums;
}

}  // namespace

ExcessVector excess_vector(const Graph& g, const Imputation& x, int cap) {
  const int m = g.edge_count();
  if (m > cap)
    throw OracleCapError("excess-vector enumeration capped at " +
                         std::to_string(cap) + " edges");
  if (m != x.edge_count())
    throw std::invalid_argument("imputation size does not match the graph");
  coalition_value(g, EdgeSubset(static_cast<std::size_t>(m)));  // vertex-count gate

  std::vector<bool> winning = winning_table(g);
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  ExcessVector result;
  result.values.reserve(full - 1);

  if (auto common = common_denominator(x)) {
    std::vector<long long> sums = mask_sums(common->numerators);
    std::vector<long long> scaled;  // excess * denominator
    scaled.reserve(full - 1);
    for (std::uint64_t mask = 1; mask < full; ++mask)
      scaled.push_back(sums[mask] - (winning[mask] ? common->denominator : 0));
    std::sort(scaled.begin(), scaled.end());
    for (long long v : scaled)
      result.values.emplace_back(Rational(v, common->denominator));
    return result;
  }

  for (std::uint64_t mask = 1; mask < full; ++mask) {
    Rational sum = 0;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) sum += x[e];
    result.values.push_back(sum - (winning[mask] ? 1 : 0));
  }
  std::sort(result.values.begin(), result.values.end());
  return result;
}

int lex_compare(const ExcessVector& a, const ExcessVector& b) {
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("excess vectors of different games");
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] < b.values[i]) return -1;
    if (a.values[i] > b.values[i]) return 1;
  }
  return 0;
}

bool least_core_check(const Graph& g, const Imputation& x, int cap) {
  const int m = g.edge_count();
  if (m > cap)
    throw OracleCapError("least-core check capped at " + std::to_string(cap) +
                         " edges");
  if (!is_connected(g))
    throw DisconnectedGraphError("least_core_check requires a connected graph");
  coalition_value(g, EdgeSubset(static_cast<std::size_t>(m)));  // vertex-count gate

  Rational opt = strength_opt(g).opt;
  std::vector<bool> winning = winning_table(g);
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;

  if (auto common = common_denominator(x)) {
    std::vector<long long> sums = mask_sums(common->numerators);
    long long min_scaled = std::numeric_limits<long long>::max();
    for (std::uint64_t mask = 1; mask < full; ++mask)
      min_scaled = std::min(
          min_scaled, sums[mask] - (winning[mask] ? common->denominator : 0));
    return Rational(min_scaled, common->denominator) == opt - 1;
  }

  Rational min_excess;
  bool first = true;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    Rational sum = 0;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) sum += x[e];
    Rational value = sum - (winning[mask] ? 1 : 0);
    if (first || value < min_excess) {
      min_excess = value;
      first = false;
    }
  }
  return min_excess == opt - 1;
}

}  // namespace wiretap
