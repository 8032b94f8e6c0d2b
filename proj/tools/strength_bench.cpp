// Records wall-clock growth of the exact strength and prime-partition
// computations on synthetic multigraphs. Nothing here is asserted; the
// output is a CSV meant for eyeballing scaling behaviour.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "wiretap/partition.hpp"

namespace {

wiretap::Graph random_multigraph(int n, int m, std::mt19937& rng) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> earlier(0, v - 1);
    edges.emplace_back(earlier(rng), v);  // random spanning tree first
  }
  while (static_cast<int>(edges.size()) < m) {
    int u = pick(rng), v = pick(rng);
    if (u != v) edges.emplace_back(u, v);
  }
  return wiretap::make_graph(n, std::move(edges));
}

template <typename F>
double timed_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "runtime_growth.csv";
  std::ofstream out(out_path);
  out << "operation,vertices,edges,milliseconds\n";
  std::mt19937 rng(7u);

  for (int m : {100, 300, 1000, 3000, 10000}) {
    wiretap::Graph g = random_multigraph(30, m, rng);
    wiretap::Rational opt;
    double ms = timed_ms([&] { opt = wiretap::strength_opt(g).opt; });
    out << "strength_opt,30," << m << "," << ms << "\n";
    std::cout << "strength_opt n=30 m=" << m << ": " << ms << " ms (opt = "
              << wiretap::to_fraction_string(opt) << ")\n";
  }

  for (int m : {30, 60, 120, 240}) {
    wiretap::Graph g = random_multigraph(12, m, rng);
    double ms = timed_ms([&] { wiretap::prime_partition(g); });
    out << "prime_partition,12," << m << "," << ms << "\n";
    std::cout << "prime_partition n=12 m=" << m << ": " << ms << " ms\n";
  }

  std::cout << "wrote " << out_path << "\n";
  return 0;
}
