#pragma once

#include <optional>
#include <vector>

#include "wiretap/strength.hpp"

namespace wiretap {

/// The prime-partition: disjoint nonempty edge sets covering E, in the
/// insertion order of the construction loop. When a degenerate element
/// exists it is the last one; its edges get weight zero under every maxmin
/// distribution.
struct PrimePartition {
  std::vector<EdgeSubset> elements;
  std::optional<int> degenerate;   // index into elements; always the last
  Rational opt;                    // cut-rate of the host graph

  int element_count() const { return static_cast<int>(elements.size()); }
  /// Number of non-degenerate elements; they occupy indices 0..count-1.
  int nondegenerate_count() const {
    return element_count() - (degenerate ? 1 : 0);
  }
  bool is_degenerate(int index) const { return degenerate && *degenerate == index; }
};

/// Builds the prime-partition by repeatedly extracting a prime set from the
/// residual graph until the residual cut-rate drops below opt; any remaining
/// edges form the final (degenerate) element. The element set is unique
/// regardless of edge order. Throws DisconnectedGraphError.
PrimePartition prime_partition(const Graph& g);

/// The degenerate element, detected by the rule: D exists iff
/// (|V|-1)/|E| != opt, and is then the last inserted element.
std::optional<EdgeSubset> degenerate_set(const Graph& g, const PrimePartition& pp);

/// The canonical maxmin distribution realizing the partition: edges of the
/// i-th non-degenerate element (insertion order, 1-based) get weight
/// proportional to t+1-i, degenerate edges get 0, normalized to sum 1.
/// Every non-degenerate class then has cut-rate opt, so any minimum-weight
/// CSG of it meets every element quota.
EdgeDistribution canonical_beta(const PrimePartition& pp);

/// An omni-connected spanning subgraph: the MST under canonical_beta.
/// Postcondition (asserted): is_ocsg holds for the result.
EdgeSubset build_ocsg(const Graph& g, const PrimePartition& pp);

/// True iff h is a connected spanning subgraph using exactly |P|*opt edges
/// of every non-degenerate element P (degenerate edges are unconstrained).
bool is_ocsg(const Graph& g, const PrimePartition& pp, const EdgeSubset& h);

}  // namespace wiretap
