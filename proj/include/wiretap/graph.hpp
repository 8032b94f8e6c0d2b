#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wiretap/edge_subset.hpp"
#include "wiretap/rational.hpp"

namespace wiretap {

/// An undirected multigraph. Edge ids are 0..m-1 in input order and stable
/// across runs; parallel edges are allowed, self-loops are not.
struct Graph {
  std::vector<std::string> vertex_names;      // index = vertex id
  std::vector<std::pair<int, int>> edges;     // endpoints by vertex id

  int vertex_count() const { return static_cast<int>(vertex_names.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Builds a graph on n unnamed vertices. Rejects self-loops.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

/// Reads the edge-list text format: one "u v" pair per line, '#' lines are
/// comments, vertex tokens are arbitrary UTF-8 words. Throws ParseError on
/// self-loops (with the offending line number) and on an empty edge set.
Graph parse_graph(std::istream& in);

/// A probability distribution on the edges: nonnegative weights summing
/// to exactly 1.
class EdgeDistribution {
 public:
  explicit EdgeDistribution(std::vector<Rational> weights);

  static EdgeDistribution uniform(int edge_count);
  /// Uniform on `support`, zero elsewhere.
  static EdgeDistribution uniform_on(int edge_count, const EdgeSubset& support);

  const Rational& operator[](int e) const { return weights_[static_cast<std::size_t>(e)]; }
  int edge_count() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }

  Rational sum_over(const EdgeSubset& s) const;

  friend bool operator==(const EdgeDistribution&, const EdgeDistribution&) = default;

 private:
  std::vector<Rational> weights_;
};

/// The weight classes E_1,...,E_k of a distribution, in strictly decreasing
/// weight order; the class edge sets partition E.
struct WeightClass {
  Rational weight;
  EdgeSubset edges;
};

struct WeightClasses {
  std::vector<WeightClass> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
};

/// Number of connected components of (V, E \ removed).
int component_count(const Graph& g, const EdgeSubset& removed);

/// Number of connected components of the whole graph.
int component_count(const Graph& g);

bool is_connected(const Graph& g);

/// True iff (V, s) is a connected spanning subgraph.
bool is_connected_spanning(const Graph& g, const EdgeSubset& s);

struct MinCsgResult {
  Rational weight;      // minimum total weight of a connected spanning subgraph
  EdgeSubset witness;   // a spanning tree attaining it
};

/// Minimum-weight connected spanning subgraph under d. The witness is the
/// minimum spanning tree with ties broken by ascending edge id, so the
/// result is deterministic. Throws DisconnectedGraphError.
MinCsgResult min_csg(const Graph& g, const EdgeDistribution& d);

/// Groups edges by weight, heaviest class first.
WeightClasses weight_classes(const Graph& g, const EdgeDistribution& d);

}  // namespace wiretap
