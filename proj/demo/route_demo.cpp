// Closes a small road network three ways and prints one route per solver.

#include <iostream>

#include "apsp/apsp.hpp"

int main() {
  using namespace apsp;

  // 0 -> 1 -> 2 -> 3 is cheaper than the direct 0 -> 3 link.
  const Graph roads(5, {{0, 1, 4}, {1, 2, 3}, {2, 3, 2}, {0, 3, 12}, {3, 4, 1}, {4, 0, 6}});
  const CostMatrix h = cost_matrix_from_graph(roads);

  const ApspSolution classic = fw_classic(h);
  const ApspSolution squared = fw_squaring(h);
  const ApspSolution kleene = rkleene(h, 2);

  std::cout << format_matrix(classic.distances);

  auto show = [](const char* name, const std::optional<Path>& p) {
    std::cout << name << ":";
    for (std::size_t v : p->vertices) std::cout << ' ' << v;
    std::cout << "  (cost " << p->total_cost << ")\n";
  };
  show("fw_classic ", path_from_pred(*classic.pred, classic.distances, 0, 4));
  show("fw_squaring", path_from_via(*squared.via, squared.distances, roads, 0, 4));
  show("rkleene    ", path_from_via(*kleene.via, kleene.distances, roads, 0, 4));
  std::cout << "squaring rounds: " << squared.iterations << "\n";
}
