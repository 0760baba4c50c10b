#pragma once

// Shared helpers and independent oracles for the test suites. The oracles
// deliberately avoid the library's own algorithms: treewidth is recomputed by
// a plain subset dynamic program, connected sets are counted by filtering all
// bitmasks, and shortest paths are checked against BFS distances.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ctw/graph.hpp"
#include "ctw/pipeline.hpp"

namespace ctw::testing {

inline Graph graph_from_edges(const std::string& edge_lines) {
  std::istringstream in(edge_lines);
  return parse_edge_list(in);
}

inline VertexSet by_labels(const Graph& g, const std::vector<std::string>& labels) {
  VertexSet s(g.vertex_count());
  for (const auto& l : labels) {
    auto v = g.vertex_by_label(l);
    if (!v) throw std::runtime_error("no vertex labeled '" + l + "'");
    s.insert(*v);
  }
  return s;
}

inline std::vector<std::string> labels_of(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  s.for_each([&](int v) { out.push_back(g.label(v)); });
  return out;
}

// Treewidth via the textbook subset dynamic program over elimination orders:
// eliminating v after the set S costs the number of vertices outside S u {v}
// reachable from v through S. Usable up to ~16 vertices.
inline int oracle_treewidth(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  if (n > 16) throw std::runtime_error("oracle_treewidth: too large");
  std::vector<uint64_t> adj(static_cast<size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)] |= 1ull << v;
    adj[static_cast<size_t>(v)] |= 1ull << u;
  }
  uint64_t full = (n == 64) ? ~0ull : (1ull << n) - 1;
  auto cost = [&](uint64_t s, int v) {
    // Vertices outside s u {v} seen from v through s.
    uint64_t seen = 1ull << v, frontier = 1ull << v, boundary = 0;
    while (frontier) {
      uint64_t next = 0;
      for (uint64_t f = frontier; f;) {
        int x = __builtin_ctzll(f);
        f &= f - 1;
        uint64_t nb = adj[static_cast<size_t>(x)] & ~seen;
        boundary |= nb & ~s;
        next |= nb & s;
      }
      seen |= next;
      frontier = next;
    }
    return __builtin_popcountll(boundary);
  };
  std::vector<int> f(size_t{1} << n, 0);
  for (uint64_t s = 1; s <= full; ++s) {
    int best = n;
    for (uint64_t rest = s; rest;) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      uint64_t prev = s & ~(1ull << v);
      best = std::min(best, std::max(f[prev], cost(prev, v)));
    }
    f[s] = best;
  }
  return f[full];
}

// All connected subsets of size <= max_size, found by filtering every
// bitmask. Quadratic and dumb on purpose; usable up to ~18 vertices.
inline std::vector<uint64_t> oracle_connected_masks(const Graph& g, int max_size) {
  int n = g.vertex_count();
  if (n > 18) throw std::runtime_error("oracle_connected_masks: too large");
  std::vector<uint64_t> adj(static_cast<size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)] |= 1ull << v;
    adj[static_cast<size_t>(v)] |= 1ull << u;
  }
  std::vector<uint64_t> out;
  for (uint64_t s = 1; s < (1ull << n); ++s) {
    if (__builtin_popcountll(s) > max_size) continue;
    uint64_t seed = s & -s, seen = seed;
    for (;;) {
      uint64_t next = seen;
      for (uint64_t f = seen; f;) {
        int x = __builtin_ctzll(f);
        f &= f - 1;
        next |= adj[static_cast<size_t>(x)] & s;
      }
      if (next == seen) break;
      seen = next;
    }
    if (seen == s) out.push_back(s);
  }
  return out;
}

// Checks that `path` is a shortest connection between two distinct blocks
// whose interior avoids every block, by comparing against all BFS distances
// inside `allowed`.
inline bool oracle_is_shortest_connector(const Graph& g, const VertexSet& allowed,
                                         const std::vector<VertexSet>& blocks,
                                         const Path& path) {
  if (!Path::is_valid(g, path.vertices)) return false;
  for (int v : path.vertices)
    if (!allowed.contains(v)) return false;
  int from = -1, to = -1;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].contains(path.front())) from = static_cast<int>(i);
    if (blocks[i].contains(path.back())) to = static_cast<int>(i);
  }
  if (from < 0 || to < 0 || from == to) return false;
  for (int v : path.internals())
    for (const auto& b : blocks)
      if (b.contains(v)) return false;

  // No admissible connector may be shorter.
  int best = path.length();
  for (const auto& b : blocks) {
    b.for_each([&](int s) {
      if (!allowed.contains(s)) return;
      // BFS that may not pass through any block vertex except at the ends.
      std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kUnreachable);
      std::vector<int> queue{s};
      dist[static_cast<size_t>(s)] = 0;
      for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        bool x_blocked = false;
        for (const auto& bb : blocks)
          if (x != s && bb.contains(x)) x_blocked = true;
        if (x_blocked) continue;  // may end here but not continue
        for (int y : g.neighbors(x)) {
          if (!allowed.contains(y) || dist[static_cast<size_t>(y)] != kUnreachable)
            continue;
          dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
          queue.push_back(y);
        }
      }
      for (const auto& other : blocks) {
        if (&other == &b) continue;
        other.for_each([&](int t) {
          int d = dist[static_cast<size_t>(t)];
          if (d != kUnreachable && d < best) best = d;
        });
      }
    });
  }
  return best == path.length();
}

// Deterministic stream of small connected graphs with at least one cycle,
// with the edge surplus varied from sparse to nearly complete.
struct RandomGraphStream {
  std::mt19937 rng;
  explicit RandomGraphStream(unsigned seed) : rng(seed) {}

  Graph next(int max_n = 12) {
    std::uniform_int_distribution<int> nd(3, max_n);
    int n = nd(rng);
    int max_extra = n * (n - 1) / 2 - (n - 1);
    std::uniform_int_distribution<int> ed(1, std::max(1, max_extra));
    return random_connected_graph(n, ed(rng), rng());
  }
};

}  // namespace ctw::testing
