#pragma once

#include <vector>

#include "wiretap/graph.hpp"

namespace wiretap {

/// Payoff vectors of the spanning connectivity game: the players are the
/// edges, singletons are worthless (|V| >= 3), so imputations are exactly
/// the probability distributions on edges.
using Imputation = EdgeDistribution;

/// Characteristic function: 1 iff the coalition contains a spanning tree.
/// Throws AssumptionViolationError when the graph has fewer than 3 vertices.
int coalition_value(const Graph& g, const EdgeSubset& s);

/// e(x, S) = x(S) - v(S).
Rational excess(const Graph& g, const Imputation& x, const EdgeSubset& s);

/// Excesses of all proper nonempty coalitions, sorted ascending.
struct ExcessVector {
  std::vector<Rational> values;
};

/// Throws OracleCapError when |E| > cap.
ExcessVector excess_vector(const Graph& g, const Imputation& x, int cap = 16);

/// Lexicographic comparison of ascending excess vectors: negative, zero or
/// positive as a <, ==, > b. The nucleolus has the lexicographically
/// largest excess vector among imputations.
int lex_compare(const ExcessVector& a, const ExcessVector& b);

/// True iff the minimum excess over proper coalitions equals opt - 1, i.e.
/// x attains the least-core value; under opt < 1 this holds exactly for the
/// maxmin distributions of the wiretap game.
bool least_core_check(const Graph& g, const Imputation& x, int cap = 16);

}  // namespace wiretap
