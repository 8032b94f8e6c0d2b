#include "wiretap/strategy.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "wiretap/errors.hpp"

namespace wiretap {

PolytopeDescription polytope_description(const PrimePartition& pp,
                                         const OrderDag& dag) {
  PolytopeDescription desc;
  desc.variable_count = pp.nondegenerate_count();
  for (int i = 0; i < desc.variable_count; ++i)
    desc.element_size.push_back(
        static_cast<int>(pp.elements[static_cast<std::size_t>(i)].count()));
  desc.order_inequalities = dag.parent_edges;

  std::vector<bool> has_child(static_cast<std::size_t>(desc.variable_count), false);
  for (auto [parent, child] : dag.parent_edges)
    has_child[static_cast<std::size_t>(parent)] = true;
  for (int i = 0; i < desc.variable_count; ++i)
    if (!has_child[static_cast<std::size_t>(i)]) desc.nonneg_variables.push_back(i);

  const std::size_t m = pp.elements.front().universe_size();
  desc.edge_to_variable.assign(m, -1);
  for (int i = 0; i < desc.variable_count; ++i)
    pp.elements[static_cast<std::size_t>(i)].for_each(
        [&](int e) { desc.edge_to_variable[static_cast<std::size_t>(e)] = i; });
  return desc;
}

namespace {

// Per-element values of d, or nullopt when d is not constant on some
// element or nonzero on the degenerate one.
std::optional<std::vector<Rational>> element_values(const PrimePartition& pp,
                                                    const EdgeDistribution& d) {
  if (pp.degenerate) {
    bool zero = true;
    pp.elements[static_cast<std::size_t>(*pp.degenerate)].for_each([&](int e) {
      if (d[e] != 0) zero = false;
    });
    if (!zero) return std::nullopt;
  }
  std::vector<Rational> values;
  for (int i = 0; i < pp.nondegenerate_count(); ++i) {
    const EdgeSubset& p = pp.elements[static_cast<std::size_t>(i)];
    std::optional<Rational> value;
    bool constant = true;
    p.for_each([&](int e) {
      if (!value)
        value = d[e];
      else if (*value != d[e])
        constant = false;
    });
    if (!constant) return std::nullopt;
    values.push_back(*value);
  }
  return values;
}

}  // namespace

bool is_maxmin(const Graph& g, const PrimePartition& pp, const OrderDag& dag,
               const EdgeDistribution& d) {
  (void)g;
  auto values = element_values(pp, d);
  if (!values) return false;
  for (auto [parent, child] : dag.parent_edges)
    if ((*values)[static_cast<std::size_t>(parent)] <
        (*values)[static_cast<std::size_t>(child)])
      return false;
  return true;
}

bool is_pdist(const PrimePartition& pp, const OrderDag& dag,
              const EdgeDistribution& d) {
  auto values = element_values(pp, d);
  if (!values) return false;
  for (const Rational& v : *values)
    if (v <= 0) return false;
  for (auto [parent, child] : dag.parent_edges)
    if ((*values)[static_cast<std::size_t>(parent)] <=
        (*values)[static_cast<std::size_t>(child)])
      return false;
  return true;
}

EdgeDistribution nucleolus(const PrimePartition& pp, const Layers& lys) {
  if (pp.opt >= 1)
    throw AssumptionViolationError(
        "the nucleolus requires opt < 1; this graph contains a bridge, the "
        "game value is 1 and the hider has no second-best response");
  Rational kappa_inverse = 0;
  for (int i = 0; i < lys.layer_count(); ++i)
    kappa_inverse += Rational(i + 1) *
                     Rational(static_cast<long long>(
                         lys.edge_sets[static_cast<std::size_t>(i)].count()));
  Rational kappa = Rational(1) / kappa_inverse;

  const std::size_t m = pp.elements.front().universe_size();
  std::vector<Rational> weights(m, Rational(0));
  for (int i = 0; i < lys.layer_count(); ++i) {
    Rational level = Rational(i + 1) * kappa;
    lys.edge_sets[static_cast<std::size_t>(i)].for_each(
        [&](int e) { weights[static_cast<std::size_t>(e)] = level; });
  }
  return EdgeDistribution(std::move(weights));
}

EdgeDistribution make_pdist(const PrimePartition& pp, const OrderDag& dag) {
  return nucleolus(pp, layers(dag, pp));
}

namespace {

std::vector<std::uint32_t> ancestor_masks(const OrderDag& dag) {
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(dag.node_count), 0);
  for (int i = 0; i < dag.node_count; ++i)
    for (int a : dag.ancestors[static_cast<std::size_t>(i)])
      masks[static_cast<std::size_t>(i)] |= std::uint32_t{1} << a;
  return masks;
}

ClosedSet set_from_mask(std::uint32_t mask) {
  ClosedSet cs;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1) cs.members.push_back(i);
  return cs;
}

}  // namespace

std::vector<ClosedSet> closed_sets(const OrderDag& dag, int cap) {
  if (dag.node_count > cap)
    throw OracleCapError("closed-set enumeration capped at " +
                         std::to_string(cap) + " elements");
  std::vector<std::uint32_t> anc = ancestor_masks(dag);
  std::vector<ClosedSet> result;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << dag.node_count); ++mask) {
    bool closed = true;
    for (int i = 0; i < dag.node_count && closed; ++i)
      if ((mask >> i & 1) && (anc[static_cast<std::size_t>(i)] & ~mask))
        closed = false;
    if (closed) result.push_back(set_from_mask(mask));
  }
  return result;
}

namespace {

// Weak connectivity of the members through order edges with both ends in
// the set. A closed set splits into two disjoint nonempty closed sets
// exactly when this fails, since no order edge can cross such a split.
bool weakly_connected(const OrderDag& dag, std::uint32_t mask) {
  int seed = std::countr_zero(mask);
  std::uint32_t reached = std::uint32_t{1} << seed;
  for (bool grew = true; grew;) {
    grew = false;
    for (auto [parent, child] : dag.parent_edges) {
      std::uint32_t p = std::uint32_t{1} << parent;
      std::uint32_t c = std::uint32_t{1} << child;
      if (!(mask & p) || !(mask & c)) continue;
      if (bool(reached & p) != bool(reached & c)) {
        reached |= p | c;
        grew = true;
      }
    }
  }
  return reached == mask;
}

}  // namespace

std::vector<ClosedSet> minimal_closed_sets(const OrderDag& dag, int cap) {
  if (dag.node_count > cap)
    throw OracleCapError("closed-set enumeration capped at " +
                         std::to_string(cap) + " elements");
  std::vector<std::uint32_t> anc = ancestor_masks(dag);
  std::vector<ClosedSet> result;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << dag.node_count); ++mask) {
    bool closed = true;
    for (int i = 0; i < dag.node_count && closed; ++i)
      if ((mask >> i & 1) && (anc[static_cast<std::size_t>(i)] & ~mask))
        closed = false;
    if (closed && weakly_connected(dag, mask)) result.push_back(set_from_mask(mask));
  }
  return result;
}

std::vector<ClosedSet> minimal_closed_sets_pair_search(const OrderDag& dag,
                                                       int cap) {
  std::vector<ClosedSet> all = closed_sets(dag, cap);
  std::vector<std::uint32_t> masks;
  for (const ClosedSet& cs : all) {
    std::uint32_t mask = 0;
    for (int i : cs.members) mask |= std::uint32_t{1} << i;
    masks.push_back(mask);
  }
  std::vector<ClosedSet> result;
  for (std::size_t k = 0; k < all.size(); ++k) {
    bool minimal = true;
    for (std::size_t a = 0; a < all.size() && minimal; ++a) {
      if (masks[a] == masks[k] || (masks[a] & ~masks[k])) continue;
      std::uint32_t rest = masks[k] & ~masks[a];
      for (std::size_t b = 0; b < all.size(); ++b) {
        if (masks[b] == rest) {  // disjoint closed complement inside k
          minimal = false;
          break;
        }
      }
    }
    if (minimal) result.push_back(all[k]);
  }
  return result;
}

std::vector<EdgeDistribution> extreme_points(const PrimePartition& pp,
                                             const OrderDag& dag, int cap) {
  if (dag.node_count > cap)
    throw OracleCapError("extreme-point enumeration capped at " +
                         std::to_string(cap) + " elements");
  const std::size_t m = pp.elements.front().universe_size();
  std::vector<EdgeDistribution> points;
  for (const ClosedSet& cs : minimal_closed_sets(dag, cap)) {
    EdgeSubset support(m);
    for (int i : cs.members) support |= pp.elements[static_cast<std::size_t>(i)];
    points.push_back(EdgeDistribution::uniform_on(static_cast<int>(m), support));
  }
  return points;
}

}  // namespace wiretap
