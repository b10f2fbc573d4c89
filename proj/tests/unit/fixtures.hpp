#ifndef GEMCOLOR_TESTS_FIXTURES_HPP
#define GEMCOLOR_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "gemcolor/graph.hpp"

namespace gemcolor::testing {

// Class member on which the 2w construction takes Case 2.1.
inline Graph case21_graph() {
  return Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 6},
                               {1, 7}, {2, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}},
                           "case21");
}

// Class member on which the 2w construction takes Case 2.2.
inline Graph case22_graph() {
  return Graph::from_edges(10, {{0, 1}, {0, 5}, {0, 6}, {0, 7}, {1, 2}, {1, 4}, {1, 6},
                                {2, 4}, {2, 7}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {5, 7}},
                           "case22");
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace gemcolor::testing

#endif  // GEMCOLOR_TESTS_FIXTURES_HPP
