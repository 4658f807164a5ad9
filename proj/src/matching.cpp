#include "wcr/matching.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "wcr/error.hpp"

namespace wcr::matching {

int Graph::add_edge(int u, int v, std::optional<SensorId> label) {
  if (u == v) fail(ErrorKind::validation, "self-loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
    fail(ErrorKind::validation, "edge endpoint out of range");
  }
  edges.push_back({u, v, label});
  return static_cast<int>(edges.size()) - 1;
}

namespace {

using VertexPair = std::pair<int, int>;

VertexPair key_of(const Edge& e) { return {std::min(e.u, e.v), std::max(e.u, e.v)}; }

/// One representative edge index per distinct vertex pair.
std::map<VertexPair, std::size_t> representatives(const Graph& g) {
  auto rank = [&](std::size_t i) {
    return std::make_pair(g.edges[i].label.value_or(std::numeric_limits<SensorId>::max()), i);
  };
  std::map<VertexPair, std::size_t> reps;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (e.u == e.v) fail(ErrorKind::validation, "self-loop at vertex " + std::to_string(e.u));
    auto [it, inserted] = reps.emplace(key_of(e), i);
    if (!inserted && rank(i) < rank(it->second)) it->second = i;
  }
  return reps;
}

class Blossom {
 public:
  explicit Blossom(std::vector<std::vector<int>> adj)
      : n_(static_cast<int>(adj.size())), adj_(std::move(adj)), match_(n_, -1) {}

  const std::vector<int>& run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_path(v);
      while (end != -1) {
        const int prev = parent_[end];
        const int next = match_[prev];
        match_[end] = prev;
        match_[prev] = end;
        end = next;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) const {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, false);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          in_blossom_.assign(n_, false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              queue.push(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

EdgeSet maximum_matching(const Graph& g) {
  const auto reps = representatives(g);

  // Neighbours ordered by representative edge index keeps the search
  // deterministic for a fixed edge order.
  std::vector<std::vector<std::pair<std::size_t, int>>> ordered(g.vertex_count);
  for (const auto& [pair, index] : reps) {
    ordered[pair.first].emplace_back(index, pair.second);
    ordered[pair.second].emplace_back(index, pair.first);
  }
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    std::sort(ordered[v].begin(), ordered[v].end());
    for (const auto& [index, to] : ordered[v]) adj[v].push_back(to);
  }

  const std::vector<int> mate = Blossom(std::move(adj)).run();
  EdgeSet out;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (mate[v] > v) out.push_back(reps.at({v, mate[v]}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet minimum_edge_cover(const Graph& g) {
  const auto reps = representatives(g);
  std::vector<std::size_t> first_edge(g.vertex_count, std::numeric_limits<std::size_t>::max());
  for (const auto& [pair, index] : reps) {
    first_edge[pair.first] = std::min(first_edge[pair.first], index);
    first_edge[pair.second] = std::min(first_edge[pair.second], index);
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    if (first_edge[v] == std::numeric_limits<std::size_t>::max()) {
      fail(ErrorKind::isolated_vertex, "vertex " + std::to_string(v) + " has no incident edge");
    }
  }

  const EdgeSet matched = maximum_matching(g);
  std::vector<bool> covered(g.vertex_count, false);
  std::set<std::size_t> cover(matched.begin(), matched.end());
  for (std::size_t i : matched) covered[g.edges[i].u] = covered[g.edges[i].v] = true;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (covered[v]) continue;
    const Edge& e = g.edges[first_edge[v]];
    cover.insert(first_edge[v]);
    covered[e.u] = covered[e.v] = true;
  }

  EdgeSet out(cover.begin(), cover.end());
  if (!is_edge_cover(g, out)) {
    fail(ErrorKind::property_violation, "internal: edge cover verification failed");
  }
  return out;
}

bool is_matching(const Graph& g, const EdgeSet& edges) {
  std::vector<bool> used(g.vertex_count, false);
  for (std::size_t i : edges) {
    if (i >= g.edges.size()) return false;
    const Edge& e = g.edges[i];
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

bool is_edge_cover(const Graph& g, const EdgeSet& edges) {
  std::vector<bool> covered(g.vertex_count, false);
  for (std::size_t i : edges) {
    if (i >= g.edges.size()) return false;
    covered[g.edges[i].u] = covered[g.edges[i].v] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

}  // namespace wcr::matching
