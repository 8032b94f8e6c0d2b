#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "wiretap/coopgame.hpp"
#include "wiretap/errors.hpp"
#include "wiretap/report.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitDisconnected = 2;
constexpr int kExitAssumption = 3;
constexpr int kExitOracleCap = 4;
constexpr int kExitInternal = 70;

wiretap::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wiretap::ParseError("cannot open graph file: " + path);
  return wiretap::parse_graph(in);
}

wiretap::EdgeDistribution load_distribution(const std::string& path, int edge_count) {
  std::ifstream in(path);
  if (!in) throw wiretap::ParseError("cannot open distribution file: " + path);
  std::vector<wiretap::Rational> weights(static_cast<std::size_t>(edge_count),
                                         wiretap::Rational(0));
  std::vector<bool> seen(static_cast<std::size_t>(edge_count), false);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string id_token, value_token, extra;
    if (!(tokens >> id_token)) continue;
    if (id_token[0] == '#') continue;
    if (!(tokens >> value_token) || (tokens >> extra))
      throw wiretap::ParseError("distribution line " + std::to_string(line_number) +
                                    ": expected 'edge_id p/q'",
                                line_number);
    int edge = -1;
    try {
      edge = std::stoi(id_token);
    } catch (const std::exception&) {
      throw wiretap::ParseError("distribution line " + std::to_string(line_number) +
                                    ": bad edge id '" + id_token + "'",
                                line_number);
    }
    if (edge < 0 || edge >= edge_count)
      throw wiretap::ParseError("distribution line " + std::to_string(line_number) +
                                    ": edge id out of range",
                                line_number);
    if (seen[static_cast<std::size_t>(edge)])
      throw wiretap::ParseError("distribution line " + std::to_string(line_number) +
                                    ": duplicate edge id",
                                line_number);
    auto value = wiretap::parse_fraction(value_token);
    if (!value)
      throw wiretap::ParseError("distribution line " + std::to_string(line_number) +
                                    ": bad fraction '" + value_token + "'",
                                line_number);
    seen[static_cast<std::size_t>(edge)] = true;
    weights[static_cast<std::size_t>(edge)] = *value;
  }
  try {
    return wiretap::EdgeDistribution(std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw wiretap::ParseError(std::string("invalid distribution: ") + e.what());
  }
}

void write_or_print(const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    std::ofstream out(*path);
    out << text;
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wiretap-game analysis: graph strength, prime partition, "
               "maxmin polytope and the nucleolus of the spanning "
               "connectivity game"};
  app.require_subcommand(1);

  std::string graph_path;
  std::optional<std::string> json_path;
  std::optional<std::string> dot_path;
  std::string dist_path;
  bool verify = false;
  int max_oracle_edges = 14;

  auto add_common = [&](CLI::App* cmd, bool with_dist = false) {
    cmd->add_option("graph", graph_path, "edge-list file")->required();
    cmd->add_option("--json", json_path, "write JSON output to this path");
    cmd->add_option("--dot", dot_path, "write the order DAG as DOT");
    cmd->add_flag("--verify", verify,
                  "cross-check every result against the exhaustive oracles");
    cmd->add_option("--max-oracle-edges", max_oracle_edges,
                    "edge cap for oracle enumeration under --verify");
    if (with_dist)
      cmd->add_option("--dist", dist_path, "distribution file (edge_id p/q lines)")
          ->required();
  };

  CLI::App* cmd_strength = app.add_subcommand("strength", "game value / strength");
  CLI::App* cmd_partition = app.add_subcommand("partition", "prime partition");
  CLI::App* cmd_order = app.add_subcommand("order", "parent-child order and layers");
  CLI::App* cmd_nucleolus = app.add_subcommand("nucleolus", "nucleolus distribution");
  CLI::App* cmd_polytope = app.add_subcommand("polytope", "maxmin polytope description");
  CLI::App* cmd_extremes = app.add_subcommand("extremes", "maxmin polytope extreme points");
  CLI::App* cmd_check = app.add_subcommand("check", "classify a distribution");
  CLI::App* cmd_analyze = app.add_subcommand("analyze", "full JSON report");
  for (CLI::App* cmd : {cmd_strength, cmd_partition, cmd_order, cmd_nucleolus,
                        cmd_polytope, cmd_extremes, cmd_analyze})
    add_common(cmd);
  add_common(cmd_check, true);

  CLI11_PARSE(app, argc, argv);

  try {
    wiretap::Graph g = load_graph(graph_path);
    wiretap::AnalysisOptions options{verify, max_oracle_edges};

    if (cmd_check->parsed()) {
      wiretap::EdgeDistribution d = load_distribution(dist_path, g.edge_count());
      if (verify) wiretap::verify_analysis(g, max_oracle_edges);
      wiretap::PrimePartition pp = wiretap::prime_partition(g);
      wiretap::OrderDag dag = wiretap::parent_child(g, pp);
      bool maxmin = wiretap::is_maxmin(g, pp, dag, d);
      bool pdist = wiretap::is_pdist(pp, dag, d);
      wiretap::Rational value = wiretap::min_csg(g, d).weight;
      std::ostringstream out;
      out << "maxmin: " << (maxmin ? "true" : "false") << "\n"
          << "pdist: " << (pdist ? "true" : "false") << "\n"
          << "value: " << wiretap::to_fraction_string(value) << "\n";
      if (json_path) {
        nlohmann::ordered_json j;
        j["maxmin"] = maxmin;
        j["pdist"] = pdist;
        j["value"] = wiretap::to_fraction_string(value);
        write_or_print(json_path, j.dump(2) + "\n");
      }
      std::cout << out.str();
      return 0;
    }

    wiretap::AnalysisReport report = wiretap::analyze(g, options);
    if (dot_path) write_or_print(dot_path, wiretap::order_dag_dot(report));

    if (cmd_analyze->parsed()) {
      write_or_print(json_path, wiretap::to_json(report).dump(2) + "\n");
      return 0;
    }
    if (json_path) write_or_print(json_path, wiretap::to_json(report).dump(2) + "\n");

    std::ostringstream out;
    if (cmd_strength->parsed()) {
      out << "opt = " << wiretap::to_fraction_string(report.opt)
          << " (game value)\n"
          << "strength = " << wiretap::to_fraction_string(1 / report.opt) << "\n";
    } else if (cmd_partition->parsed()) {
      for (std::size_t i = 0; i < report.elements.size(); ++i) {
        out << "P" << i << (report.degenerate && *report.degenerate == static_cast<int>(i)
                                ? " (degenerate):"
                                : ":");
        for (int e : report.elements[i]) out << " " << e;
        out << "\n";
      }
    } else if (cmd_order->parsed()) {
      for (auto [p, c] : report.parent_edges)
        out << "P" << p << " -> P" << c << "\n";
      for (std::size_t i = 0; i < report.layers.size(); ++i) {
        out << "L" << (i + 1) << ":";
        for (int e : report.layers[i]) out << " " << e;
        out << "\n";
      }
    } else if (cmd_nucleolus->parsed()) {
      if (!report.kappa)
        throw wiretap::AssumptionViolationError(
            "the nucleolus requires opt < 1; this graph contains a bridge "
            "(opt = 1), so every distribution already attains the value");
      out << "kappa = " << wiretap::to_fraction_string(*report.kappa) << "\n";
      for (std::size_t e = 0; e < report.nucleolus_weights->size(); ++e)
        out << e << " " << wiretap::to_fraction_string((*report.nucleolus_weights)[e])
            << "\n";
    } else if (cmd_polytope->parsed()) {
      out << "variables:";
      for (int v : report.variable_elements) out << " y(P" << v << ")";
      out << "\nnormalization:";
      for (std::size_t i = 0; i < report.normalization.size(); ++i)
        out << (i ? " + " : " ") << report.normalization[i] << "*y" << i;
      out << " = 1\n";
      for (auto [p, c] : report.order_inequalities)
        out << "y" << p << " >= y" << c << "\n";
      for (int v : report.nonneg_variables) out << "y" << v << " >= 0\n";
    } else if (cmd_extremes->parsed()) {
      for (const auto& point : report.extreme_points) {
        bool first = true;
        for (std::size_t e = 0; e < point.size(); ++e) {
          if (point[e] == 0) continue;
          out << (first ? "" : " ") << e << "="
              << wiretap::to_fraction_string(point[e]);
          first = false;
        }
        out << "\n";
      }
    }
    std::cout << out.str();
    return 0;
  } catch (const wiretap::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const wiretap::DisconnectedGraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisconnected;
  } catch (const wiretap::AssumptionViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssumption;
  } catch (const wiretap::OracleCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOracleCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
