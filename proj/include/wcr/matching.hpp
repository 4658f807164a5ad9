#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wcr/core.hpp"

namespace wcr::matching {

struct Edge {
  int u = 0;
  int v = 0;
  std::optional<SensorId> label;
};

/// Undirected multigraph on vertices 0..vertex_count-1. Self-loops are
/// rejected; parallel edges are allowed and collapse to one representative
/// (lowest label, then lowest index) for matching purposes.
struct Graph {
  int vertex_count = 0;
  std::vector<Edge> edges;

  int add_edge(int u, int v, std::optional<SensorId> label = std::nullopt);
};

/// Sorted edge indices.
using EdgeSet = std::vector<std::size_t>;

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// shrinking, O(V^3)). Deterministic for a fixed edge order.
EdgeSet maximum_matching(const Graph& g);

/// Minimum edge cover: a maximum matching plus, for every vertex it leaves
/// exposed, the representative incident edge with the smallest index.
/// Throws Error{isolated_vertex} if some vertex has no edge.
EdgeSet minimum_edge_cover(const Graph& g);

bool is_matching(const Graph& g, const EdgeSet& edges);
bool is_edge_cover(const Graph& g, const EdgeSet& edges);

}  // namespace wcr::matching
