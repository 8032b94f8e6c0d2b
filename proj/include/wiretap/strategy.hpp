#pragma once

#include <vector>

#include "wiretap/order.hpp"

namespace wiretap {

/// The maxmin polytope in per-element variables y_P (one per non-degenerate
/// element): y_parent >= y_child per order edge, y_P >= 0 for sinks, and the
/// normalization sum(|P| * y_P) = 1. Edges of P carry weight y_P; degenerate
/// edges carry 0. A distribution is maxmin exactly when it fits this system.
struct PolytopeDescription {
  int variable_count = 0;                          // = non-degenerate elements
  std::vector<int> element_size;                   // |P_i| (normalization coefficients)
  std::vector<std::pair<int, int>> order_inequalities;  // y_first >= y_second
  std::vector<int> nonneg_variables;               // sinks of the order
  std::vector<int> edge_to_variable;               // per edge id; -1 for degenerate

  int inequality_count() const {
    return static_cast<int>(order_inequalities.size() + nonneg_variables.size()) + 1;
  }
};

PolytopeDescription polytope_description(const PrimePartition& pp,
                                         const OrderDag& dag);

/// True iff d is constant on each element, zero on the degenerate one, and
/// weakly monotone along every parent-child pair.
bool is_maxmin(const Graph& g, const PrimePartition& pp, const OrderDag& dag,
               const EdgeDistribution& d);

/// True iff d is maxmin, strictly positive off the degenerate element, and
/// strictly separated along every parent-child pair. Such distributions
/// minimize the hider's number of pure best responses.
bool is_pdist(const PrimePartition& pp, const OrderDag& dag,
              const EdgeDistribution& d);

/// The nucleolus: kappa = 1 / sum(i * |L_i|) and weight i*kappa on layer i,
/// zero on the degenerate element. Requires opt < 1 (no bridge); otherwise
/// throws AssumptionViolationError.
EdgeDistribution nucleolus(const PrimePartition& pp, const Layers& lys);

/// A canonical pdist witness (the nucleolus). Errors as nucleolus does.
EdgeDistribution make_pdist(const PrimePartition& pp, const OrderDag& dag);

/// An ancestor-closed, nonempty set of non-degenerate element indices.
struct ClosedSet {
  std::vector<int> members;  // ascending

  friend bool operator==(const ClosedSet&, const ClosedSet&) = default;
};

/// All closed sets, in ascending bitmask order. Throws OracleCapError when
/// the element count exceeds cap.
std::vector<ClosedSet> closed_sets(const OrderDag& dag, int cap = 20);

/// Minimal closed sets: the closed sets that are not a union of two
/// disjoint nonempty closed sets, which is exactly the closed sets whose
/// members are weakly connected through the order edges. Their uniform
/// distributions are the vertices of the maxmin polytope.
std::vector<ClosedSet> minimal_closed_sets(const OrderDag& dag, int cap = 20);

/// Literal disjoint-pair search over all closed sets; verification path for
/// the connectivity characterization above.
std::vector<ClosedSet> minimal_closed_sets_pair_search(const OrderDag& dag,
                                                       int cap = 20);

/// Extreme points of the maxmin polytope: the uniform distribution on the
/// edge union of each minimal closed set.
std::vector<EdgeDistribution> extreme_points(const PrimePartition& pp,
                                             const OrderDag& dag, int cap = 20);

}  // namespace wiretap
