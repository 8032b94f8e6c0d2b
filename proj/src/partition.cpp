#include "wiretap/partition.hpp"

#include <cassert>
#include <stdexcept>

#include "wiretap/errors.hpp"

namespace wiretap {

PrimePartition prime_partition(const Graph& g) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("prime_partition needs at least two vertices");
  if (!is_connected(g))
    throw DisconnectedGraphError("prime_partition requires a connected graph");

  PrimePartition pp;
  EdgeSubset alive = EdgeSubset::full(static_cast<std::size_t>(g.edge_count()));
  auto [opt, prime] = prime_set_on(g, alive);
  pp.opt = opt;
  EdgeSubset current = prime;
  for (;;) {
    pp.elements.push_back(current);
    alive -= current;
    auto [residual_opt, residual_prime] = prime_set_on(g, alive);
    if (residual_opt < pp.opt) break;
    assert(residual_opt == pp.opt);
    current = residual_prime;
  }
  if (!alive.empty()) {
    pp.elements.push_back(alive);
    pp.degenerate = pp.element_count() - 1;
  }
  return pp;
}

std::optional<EdgeSubset> degenerate_set(const Graph& g, const PrimePartition& pp) {
  Rational whole_graph_rate(g.vertex_count() - 1, g.edge_count());
  if (whole_graph_rate == pp.opt) return std::nullopt;
  assert(pp.degenerate.has_value());
  return pp.elements.back();
}

EdgeDistribution canonical_beta(const PrimePartition& pp) {
  const int t = pp.nondegenerate_count();
  const std::size_t m = pp.elements.front().universe_size();
  Rational normalizer = 0;
  for (int i = 0; i < t; ++i)
    normalizer += Rational(t - i) *
                  Rational(static_cast<long long>(
                      pp.elements[static_cast<std::size_t>(i)].count()));
  std::vector<Rational> weights(m, Rational(0));
  for (int i = 0; i < t; ++i) {
    Rational level = Rational(t - i) / normalizer;
    pp.elements[static_cast<std::size_t>(i)].for_each(
        [&](int e) { weights[static_cast<std::size_t>(e)] = level; });
  }
  return EdgeDistribution(std::move(weights));
}

EdgeSubset build_ocsg(const Graph& g, const PrimePartition& pp) {
  EdgeSubset tree = min_csg(g, canonical_beta(pp)).witness;
  assert(is_ocsg(g, pp, tree));
  return tree;
}

bool is_ocsg(const Graph& g, const PrimePartition& pp, const EdgeSubset& h) {
  if (!is_connected_spanning(g, h)) return false;
  for (int i = 0; i < pp.nondegenerate_count(); ++i) {
    const EdgeSubset& p = pp.elements[static_cast<std::size_t>(i)];
    Rational quota = Rational(static_cast<long long>(p.count())) * pp.opt;
    if (Rational(static_cast<long long>((h & p).count())) != quota) return false;
  }
  return true;
}

}  // namespace wiretap
