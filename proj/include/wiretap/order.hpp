#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wiretap/partition.hpp"

namespace wiretap {

/// The parent-child partial order over the non-degenerate partition
/// elements. `parent_edges` is the transitive reduction of the ancestor
/// relation; `ancestors[i]` lists every element strictly above element i.
struct OrderDag {
  int node_count = 0;                            // non-degenerate elements 0..t-1
  std::vector<std::pair<int, int>> parent_edges; // (parent, child)
  std::vector<std::vector<int>> ancestors;       // sorted ascending

  bool is_ancestor(int a, int b) const;          // a strictly above b
};

/// All ancestors of `target` (a non-degenerate element index), via the
/// removal procedure: starting from all non-degenerate elements, repeatedly
/// drop any element other than target whose removal keeps the union's
/// cut-rate at opt; the survivors minus target are exactly the ancestors.
/// Candidates are scanned in ascending element index (`scan_order` overrides
/// the scan sequence; the survivor set does not depend on it).
std::vector<int> ancestors(const Graph& g, const PrimePartition& pp, int target);
std::vector<int> ancestors(const Graph& g, const PrimePartition& pp, int target,
                           const std::vector<int>& scan_order);

/// Computes ancestor sets for every non-degenerate element and takes the
/// transitive reduction.
OrderDag parent_child(const Graph& g, const PrimePartition& pp);

/// Layers by iterative sink-peeling: L_1 is the sinks of the order, then
/// peel and repeat. The degenerate element never appears.
struct Layers {
  std::vector<std::vector<int>> element_indices;  // per layer, ascending
  std::vector<EdgeSubset> edge_sets;              // union of elements per layer

  int layer_count() const { return static_cast<int>(edge_sets.size()); }
};

Layers layers(const OrderDag& dag, const PrimePartition& pp);

/// Definition-level "leads to" test at desk scale: true iff some enumerated
/// OCSG H admits the exchange e in p\H, e' in q∩H with (H\{e'})∪{e} still a
/// connected spanning subgraph. Throws OracleCapError when |E| > cap.
bool leads_to_oracle(const Graph& g, const PrimePartition& pp, int p, int q,
                     int cap = 14);

/// The full relation as a matrix over non-degenerate element indices.
std::vector<std::vector<bool>> leads_to_relation(const Graph& g,
                                                 const PrimePartition& pp,
                                                 int cap = 14);

/// DOT rendering of the order. Nodes are labeled by element index and size;
/// `relabel`, when given, maps internal element indices to display indices.
std::string to_dot(const PrimePartition& pp, const OrderDag& dag,
                   const std::vector<int>* relabel = nullptr);

}  // namespace wiretap
