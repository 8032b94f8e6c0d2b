#pragma once

#include <vector>

#include "wiretap/graph.hpp"

namespace wiretap {

/// Strictly positive edge weights used by the weighted cut-rate.
class WeightMap {
 public:
  explicit WeightMap(std::vector<Rational> weights);

  static WeightMap unit(int edge_count);

  const Rational& operator[](int e) const { return weights_[static_cast<std::size_t>(e)]; }
  int edge_count() const { return static_cast<int>(weights_.size()); }

  Rational sum_over(const EdgeSubset& s) const;
  Rational total() const;

 private:
  std::vector<Rational> weights_;
};

struct StrengthResult {
  Rational opt;        // maximum cut-rate over all edge subsets
  EdgeSubset argmax;   // a subset attaining it
};

/// Weighted cut-rate (C_G(s) - C_G) / w(s); zero when |V| <= 1 or s is empty.
Rational cut_rate(const Graph& g, const WeightMap& w, const EdgeSubset& s);

/// Unweighted cut-rate (unit weights).
Rational cut_rate(const Graph& g, const EdgeSubset& s);

/// Incremental cut-rate of class ell (1-based) of a weight-class partition:
/// the component gain from removing class ell on top of classes 1..ell-1,
/// divided by the class size.
Rational class_cut_rate(const Graph& g, const WeightClasses& wc, int ell);

/// Exact maximum cut-rate of a connected graph (the reciprocal of its
/// strength) plus a witness subset.
///
/// Runs discrete-Newton (Dinkelbach) iteration on the ratio
/// (C_G(E')-1)/w(E'). Each step minimizes lambda*w(crossing) - (parts-1)
/// over vertex partitions; that inner problem is solved incrementally, one
/// vertex at a time, each step a minimum s-t cut on a contracted auxiliary
/// network. Candidate ratios are rationals with numerator < |V|, so the
/// iteration terminates with the exact optimum.
///
/// Throws DisconnectedGraphError on disconnected input and
/// std::invalid_argument when |V| < 2.
StrengthResult strength_opt(const Graph& g, const WeightMap& w);

/// Unit-weight convenience overload.
StrengthResult strength_opt(const Graph& g);

struct PrimeSetResult {
  Rational opt;       // cut-rate of the graph (max over its components)
  EdgeSubset prime;   // a minimal subset with cut-rate opt; empty iff E is empty
};

/// A minimal edge set of maximum cut-rate, found by the weight-doubling
/// sweep: visit edges in ascending id, tentatively give each weight 2, and
/// keep the change exactly when the weighted cut-rate still equals opt.
/// Edges left at weight 1 form the prime set. Disconnected graphs are
/// handled per component, returning the component of largest cut-rate.
PrimeSetResult prime_set(const Graph& g);

/// Same sweep restricted to the subgraph (V, alive); edge ids stay global.
PrimeSetResult prime_set_on(const Graph& g, const EdgeSubset& alive);

}  // namespace wiretap
