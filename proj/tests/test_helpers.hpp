#pragma once

#include <random>
#include <vector>

#include "raag/defining_graph.hpp"
#include "raag/graph_product.hpp"

namespace raag::test {

// The running example graph: a-b commute, c commutes with nothing.
inline const DefiningGraph& graph_p() {
  static const DefiningGraph g =
      DefiningGraph::parse("vertices: a b c\nedges: a-b\n");
  return g;
}

inline constexpr Vertex A = 0;
inline constexpr Vertex B = 1;
inline constexpr Vertex C = 2;

template <VertexWeight W>
Expression<W> random_expression(std::mt19937_64& rng, std::size_t vertices,
                                std::size_t max_len, long max_exp,
                                const std::vector<W>& weights) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> vert(0, vertices - 1);
  std::uniform_int_distribution<std::size_t> widx(0, weights.size() - 1);
  (void)max_exp;
  Expression<W> e;
  const std::size_t l = len(rng);
  for (std::size_t i = 0; i < l; ++i) {
    e.push_back({static_cast<Vertex>(vert(rng)), weights[widx(rng)]});
  }
  return e;
}

inline Expression<IntWeight> random_group_expression(std::mt19937_64& rng,
                                                     std::size_t vertices,
                                                     std::size_t max_len,
                                                     long max_exp) {
  std::vector<IntWeight> weights;
  for (long q = -max_exp; q <= max_exp; ++q) {
    if (q != 0) {
      weights.push_back({q});
    }
  }
  return random_expression(rng, vertices, max_len, max_exp, weights);
}

}  // namespace raag::test
