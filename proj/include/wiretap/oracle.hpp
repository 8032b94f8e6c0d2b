#pragma once

#include <optional>
#include <vector>

#include "wiretap/partition.hpp"
#include "wiretap/strategy.hpp"

namespace wiretap {

// Exhaustive reference implementations evaluated straight from the
// definitions. They back the test suite and the CLI --verify mode and are
// deliberately blind to the fast-path algorithms they check.

/// Maximizes the cut-rate over all 2^|E|-1 nonempty subsets. Ties prefer
/// smaller subsets, then lexicographically smaller id lists. Throws
/// OracleCapError when |E| > cap.
StrengthResult brute_opt(const Graph& g, int cap = 20);

/// All connected spanning subgraphs, as subsets in ascending mask order.
std::vector<EdgeSubset> enumerate_csgs(const Graph& g, int cap = 14);

struct ResponseStats {
  Rational best_weight;                      // minimum CSG weight under d
  long long best_count = 0;                  // CSGs attaining it
  std::optional<Rational> second_best_weight;  // smallest strictly larger weight
};

/// Weighs every connected spanning subgraph under d.
ResponseStats response_stats(const Graph& g, const EdgeDistribution& d,
                             int cap = 14);

/// The connected spanning subgraphs meeting every non-degenerate quota.
std::vector<EdgeSubset> enumerate_ocsgs(const Graph& g, const PrimePartition& pp,
                                        int cap = 14);

/// True iff the constraints of `desc` tight at d have full rank in the
/// element-variable space (exact Gaussian elimination over rationals), i.e.
/// d is an extreme point of the maxmin polytope. Throws
/// std::invalid_argument when d does not satisfy the description.
bool vertex_check(const PolytopeDescription& desc, const EdgeDistribution& d);

}  // namespace wiretap
