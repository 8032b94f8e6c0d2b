#include "wiretap/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wiretap/coopgame.hpp"
#include "wiretap/errors.hpp"

namespace wiretap {

namespace {

using nlohmann::ordered_json;

std::string frac(const Rational& r) { return to_fraction_string(r); }

}  // namespace

void verify_analysis(const Graph& g, int max_oracle_edges) {
  const int m = g.edge_count();
  if (m > max_oracle_edges)
    throw OracleCapError("--verify needs |E| <= " +
                         std::to_string(max_oracle_edges) +
                         " (got " + std::to_string(m) +
                         "); raise --max-oracle-edges to proceed");

  auto fail = [](const std::string& what) {
    throw std::logic_error("verification failed: " + what);
  };

  PrimePartition pp = prime_partition(g);
  if (brute_opt(g, max_oracle_edges).opt != pp.opt)
    fail("strength_opt disagrees with brute_opt");

  PrimeSetResult ps = prime_set(g);
  if (cut_rate(g, ps.prime) != pp.opt) fail("prime set cut-rate is not opt");
  std::vector<int> prime_ids = ps.prime.to_vector();
  const std::uint64_t prime_size = prime_ids.size();
  for (std::uint64_t sub = 1; sub + 1 < (std::uint64_t{1} << prime_size); ++sub) {
    EdgeSubset subset(static_cast<std::size_t>(m));
    for (std::uint64_t i = 0; i < prime_size; ++i)
      if (sub >> i & 1) subset.add(prime_ids[static_cast<std::size_t>(i)]);
    if (cut_rate(g, subset) == pp.opt) fail("prime set is not minimal");
  }

  OrderDag dag = parent_child(g, pp);
  std::vector<std::vector<bool>> relation = leads_to_relation(g, pp, max_oracle_edges);
  const int t = pp.nondegenerate_count();
  // Transitive closure of the oracle relation must match the ancestor sets,
  // and its transitive reduction the parent edges.
  std::vector<std::vector<bool>> closure = relation;
  for (int k = 0; k < t; ++k)
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        if (closure[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
            closure[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          closure[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  for (int child = 0; child < t; ++child) {
    std::vector<bool> expected(static_cast<std::size_t>(t), false);
    for (int a : dag.ancestors[static_cast<std::size_t>(child)])
      expected[static_cast<std::size_t>(a)] = true;
    for (int a = 0; a < t; ++a)
      if (closure[static_cast<std::size_t>(a)][static_cast<std::size_t>(child)] !=
          expected[static_cast<std::size_t>(a)])
        fail("leads-to closure disagrees with the ancestor relation");
  }
  std::vector<std::pair<int, int>> reduction;
  for (int p = 0; p < t; ++p)
    for (int q = 0; q < t; ++q) {
      if (!closure[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]) continue;
      bool direct = true;
      for (int k = 0; k < t && direct; ++k)
        if (k != p && k != q &&
            closure[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)] &&
            closure[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)])
          direct = false;
      if (direct) reduction.emplace_back(p, q);
    }
  if (reduction != dag.parent_edges)
    fail("leads-to reduction disagrees with the parent-child edges");

  EdgeDistribution beta = canonical_beta(pp);
  if (min_csg(g, beta).weight != pp.opt) fail("canonical beta is not maxmin");
  if (!is_ocsg(g, pp, build_ocsg(g, pp))) fail("constructed OCSG fails the quota check");

  if (pp.opt < 1) {
    Layers lys = layers(dag, pp);
    EdgeDistribution nu = nucleolus(pp, lys);
    Rational kappa_inverse = 0;
    for (int i = 0; i < lys.layer_count(); ++i)
      kappa_inverse += Rational(i + 1) *
                       Rational(static_cast<long long>(
                           lys.edge_sets[static_cast<std::size_t>(i)].count()));
    ResponseStats stats = response_stats(g, nu, max_oracle_edges);
    if (stats.best_weight != pp.opt) fail("nucleolus best response is not opt");
    std::size_t ocsg_count = enumerate_ocsgs(g, pp, max_oracle_edges).size();
    if (stats.best_count != static_cast<long long>(ocsg_count))
      fail("nucleolus best-response count differs from the OCSG count");
    if (!stats.second_best_weight ||
        *stats.second_best_weight != pp.opt + Rational(1) / kappa_inverse)
      fail("nucleolus second-best response is not opt + kappa");
  }

  PolytopeDescription desc = polytope_description(pp, dag);
  std::vector<EdgeDistribution> points = extreme_points(pp, dag);
  for (const EdgeDistribution& p : points)
    if (!vertex_check(desc, p)) fail("an extreme point fails the vertex oracle");
  std::vector<ClosedSet> fast = minimal_closed_sets(dag);
  std::vector<ClosedSet> literal = minimal_closed_sets_pair_search(dag);
  auto by_members = [](const ClosedSet& a, const ClosedSet& b) {
    return a.members < b.members;
  };
  std::sort(fast.begin(), fast.end(), by_members);
  std::sort(literal.begin(), literal.end(), by_members);
  if (fast != literal)
    fail("fast minimal-closed-set path disagrees with the pair search");
}

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options) {
  AnalysisReport report;
  report.vertex_count = g.vertex_count();
  report.edge_count = g.edge_count();

  if (options.verify) verify_analysis(g, options.max_oracle_edges);
  report.verification = options.verify ? "passed" : "not requested";

  PrimePartition pp = prime_partition(g);
  OrderDag dag = parent_child(g, pp);
  Layers lys = layers(dag, pp);
  PolytopeDescription desc = polytope_description(pp, dag);
  std::vector<EdgeDistribution> points = extreme_points(pp, dag);

  report.opt = pp.opt;

  // Canonical order: elements sorted by smallest contained edge id.
  const int total = pp.element_count();
  std::vector<std::vector<int>> raw_elements;
  for (const EdgeSubset& p : pp.elements) raw_elements.push_back(p.to_vector());
  std::vector<int> order(static_cast<std::size_t>(total));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return raw_elements[static_cast<std::size_t>(a)].front() <
           raw_elements[static_cast<std::size_t>(b)].front();
  });
  std::vector<int> canonical_of(static_cast<std::size_t>(total));
  for (int pos = 0; pos < total; ++pos) {
    canonical_of[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
    report.elements.push_back(raw_elements[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])]);
  }
  if (pp.degenerate)
    report.degenerate = canonical_of[static_cast<std::size_t>(*pp.degenerate)];

  for (auto [parent, child] : dag.parent_edges)
    report.parent_edges.emplace_back(canonical_of[static_cast<std::size_t>(parent)],
                                     canonical_of[static_cast<std::size_t>(child)]);
  std::sort(report.parent_edges.begin(), report.parent_edges.end());

  for (const EdgeSubset& layer : lys.edge_sets)
    report.layers.push_back(layer.to_vector());

  if (pp.opt < 1) {
    EdgeDistribution nu = nucleolus(pp, lys);
    Rational kappa_inverse = 0;
    for (int i = 0; i < lys.layer_count(); ++i)
      kappa_inverse += Rational(i + 1) *
                       Rational(static_cast<long long>(
                           lys.edge_sets[static_cast<std::size_t>(i)].count()));
    report.kappa = Rational(1) / kappa_inverse;
    report.nucleolus_weights = nu.weights();
  }

  // Variables presented in canonical element order.
  std::vector<int> variables;  // internal element index per display variable
  for (int i = 0; i < total; ++i) {
    int internal = order[static_cast<std::size_t>(i)];
    if (!pp.is_degenerate(internal)) variables.push_back(internal);
  }
  std::vector<int> display_variable(static_cast<std::size_t>(total), -1);
  for (int v = 0; v < static_cast<int>(variables.size()); ++v) {
    int internal = variables[static_cast<std::size_t>(v)];
    display_variable[static_cast<std::size_t>(internal)] = v;
    report.variable_elements.push_back(canonical_of[static_cast<std::size_t>(internal)]);
    report.normalization.push_back(desc.element_size[static_cast<std::size_t>(internal)]);
  }
  for (auto [parent, child] : desc.order_inequalities)
    report.order_inequalities.emplace_back(
        display_variable[static_cast<std::size_t>(parent)],
        display_variable[static_cast<std::size_t>(child)]);
  std::sort(report.order_inequalities.begin(), report.order_inequalities.end());
  for (int var : desc.nonneg_variables)
    report.nonneg_variables.push_back(display_variable[static_cast<std::size_t>(var)]);
  std::sort(report.nonneg_variables.begin(), report.nonneg_variables.end());

  // Extreme points sorted by the canonical indices of their supports.
  std::vector<std::vector<int>> support_keys;
  for (const EdgeDistribution& point : points) {
    std::vector<int> key;
    for (int i = 0; i < total; ++i) {
      int first_edge = raw_elements[static_cast<std::size_t>(i)].front();
      if (point[first_edge] != 0) key.push_back(canonical_of[static_cast<std::size_t>(i)]);
    }
    std::sort(key.begin(), key.end());
    support_keys.push_back(std::move(key));
  }
  std::vector<std::size_t> point_order(points.size());
  std::iota(point_order.begin(), point_order.end(), 0);
  std::sort(point_order.begin(), point_order.end(), [&](std::size_t a, std::size_t b) {
    return support_keys[a] < support_keys[b];
  });
  for (std::size_t idx : point_order)
    report.extreme_points.push_back(points[idx].weights());

  return report;
}

nlohmann::ordered_json to_json(const AnalysisReport& report) {
  ordered_json j;
  j["vertices"] = report.vertex_count;
  j["edges"] = report.edge_count;
  j["opt"] = frac(report.opt);

  ordered_json partition;
  partition["elements"] = report.elements;
  if (report.degenerate)
    partition["degenerate"] = *report.degenerate;
  else
    partition["degenerate"] = nullptr;
  j["prime_partition"] = partition;

  ordered_json parents = ordered_json::array();
  for (auto [p, c] : report.parent_edges) parents.push_back({p, c});
  j["parent_edges"] = parents;
  j["layers"] = report.layers;

  j["kappa"] = report.kappa ? ordered_json(frac(*report.kappa)) : ordered_json(nullptr);
  if (report.nucleolus_weights) {
    ordered_json nu;
    for (std::size_t e = 0; e < report.nucleolus_weights->size(); ++e)
      nu[std::to_string(e)] = frac((*report.nucleolus_weights)[e]);
    j["nucleolus"] = nu;
  } else {
    j["nucleolus"] = nullptr;
  }

  ordered_json polytope;
  polytope["variables"] = report.variable_elements;
  ordered_json normalization = ordered_json::array();
  for (int size : report.normalization)
    normalization.push_back(frac(Rational(size)));
  polytope["normalization"] = normalization;
  ordered_json inequalities = ordered_json::array();
  for (auto [p, c] : report.order_inequalities) inequalities.push_back({p, c});
  polytope["order_inequalities"] = inequalities;
  polytope["nonnegative"] = report.nonneg_variables;
  j["polytope"] = polytope;

  ordered_json extremes = ordered_json::array();
  for (const auto& point : report.extreme_points) {
    ordered_json weights = ordered_json::array();
    for (const Rational& w : point) weights.push_back(frac(w));
    extremes.push_back(weights);
  }
  j["extreme_points"] = extremes;
  j["verification"] = report.verification;
  return j;
}

std::string order_dag_dot(const AnalysisReport& report) {
  std::ostringstream out;
  out << "digraph order {\n";
  for (std::size_t v = 0; v < report.variable_elements.size(); ++v) {
    int element = report.variable_elements[v];
    out << "  p" << element << " [label=\"P" << element << " (size "
        << report.elements[static_cast<std::size_t>(element)].size() << ")\"];\n";
  }
  for (auto [p, c] : report.order_inequalities)
    out << "  p" << report.variable_elements[static_cast<std::size_t>(p)] << " -> p"
        << report.variable_elements[static_cast<std::size_t>(c)] << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace wiretap
