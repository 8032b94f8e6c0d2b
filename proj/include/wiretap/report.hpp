#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wiretap/oracle.hpp"

namespace wiretap {

struct AnalysisOptions {
  bool verify = false;
  int max_oracle_edges = 14;  // blanket enumeration cap under verify
};

/// The full analysis of a graph in canonical form: partition elements are
/// sorted by their smallest contained edge id and everything else is keyed
/// to that order, so identical inputs produce identical reports.
struct AnalysisReport {
  int vertex_count = 0;
  int edge_count = 0;
  Rational opt;
  std::vector<std::vector<int>> elements;          // sorted edge ids
  std::optional<int> degenerate;                   // canonical element index
  std::vector<std::pair<int, int>> parent_edges;   // canonical indices, sorted
  std::vector<std::vector<int>> layers;            // edge ids per layer, sorted
  std::optional<Rational> kappa;                   // absent when opt = 1
  std::optional<std::vector<Rational>> nucleolus_weights;  // by edge id
  std::vector<int> variable_elements;              // canonical element per variable
  std::vector<int> normalization;                  // |P| per variable
  std::vector<std::pair<int, int>> order_inequalities;  // variable indices
  std::vector<int> nonneg_variables;
  std::vector<std::vector<Rational>> extreme_points;    // by edge id
  std::string verification;                        // "not requested" / "passed"
};

/// Runs the whole pipeline. With options.verify set, re-derives every result
/// through the exhaustive oracles first (OracleCapError when |E| exceeds the
/// cap; std::logic_error on any mismatch).
AnalysisReport analyze(const Graph& g, const AnalysisOptions& options = {});

/// Fixed-key-order JSON with every rational rendered as "p/q".
nlohmann::ordered_json to_json(const AnalysisReport& report);

/// DOT text for the order DAG in canonical element indices.
std::string order_dag_dot(const AnalysisReport& report);

/// Oracle cross-checks behind --verify; throws as analyze() describes.
void verify_analysis(const Graph& g, int max_oracle_edges);

}  // namespace wiretap
