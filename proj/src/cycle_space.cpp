#include "ctw/cycle_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctw {

namespace {

using EdgeVector = boost::dynamic_bitset<>;

EdgeVector edge_vector_of_cycle(const Graph& g, const std::vector<int>& cyc) {
  EdgeVector v(static_cast<size_t>(g.edge_count()));
  for (size_t i = 0; i < cyc.size(); ++i) {
    int e = g.edge_index(cyc[i], cyc[(i + 1) % cyc.size()]);
    if (e < 0) throw std::invalid_argument("cycle uses a non-edge");
    v.set(static_cast<size_t>(e));
  }
  return v;
}

// Incremental GF(2) elimination keyed by lowest set bit.
class Gf2Basis {
 public:
  explicit Gf2Basis(int dim) : pivot_row_(static_cast<size_t>(dim), -1) {}

  // True when v was independent of the rows seen so far (and is kept).
  bool insert(EdgeVector v) {
    while (v.any()) {
      size_t p = v.find_first();
      int row = pivot_row_[p];
      if (row < 0) {
        pivot_row_[p] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      v ^= rows_[static_cast<size_t>(row)];
    }
    return false;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<EdgeVector> rows_;
  std::vector<int> pivot_row_;
};

}  // namespace

int cyclomatic_number(const Graph& g) {
  int comps = static_cast<int>(components(g, g.full_vertex_set()).size());
  return g.edge_count() - g.vertex_count() + comps;
}

std::optional<int> girth(const Graph& g) {
  int best = kUnreachable;
  int n = g.vertex_count();
  std::vector<int> parent(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    auto dist = bfs_distances(g, r);
    // Recover the BFS parents deterministically: smallest eligible neighbor.
    for (int v = 0; v < n; ++v) {
      parent[static_cast<size_t>(v)] = -1;
      if (dist[static_cast<size_t>(v)] <= 0) continue;
      for (int w : g.neighbors(v))
        if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(v)] - 1) {
          parent[static_cast<size_t>(v)] = w;
          break;
        }
    }
    for (auto [x, y] : g.edges()) {
      if (dist[static_cast<size_t>(x)] == kUnreachable ||
          dist[static_cast<size_t>(y)] == kUnreachable)
        continue;
      if (parent[static_cast<size_t>(x)] == y || parent[static_cast<size_t>(y)] == x)
        continue;
      int len = dist[static_cast<size_t>(x)] + dist[static_cast<size_t>(y)] + 1;
      if (best == kUnreachable || len < best) best = len;
    }
  }
  if (best == kUnreachable) return std::nullopt;
  return best;
}

void for_each_cycle(const Graph& g, int max_len,
                    const std::function<bool(const std::vector<int>&)>& fn) {
  if (max_len < 3) return;
  int n = g.vertex_count();
  std::vector<char> on_path(static_cast<size_t>(n), 0);
  std::vector<int> path;

  // Each cycle is found exactly once: from its smallest vertex s, walking
  // first toward the smaller of s's two cycle neighbours.
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[static_cast<size_t>(s)] = 1;
    bool stop = false;

    auto dfs = [&](auto&& self, int v) -> void {
      for (int w : g.neighbors(v)) {
        if (stop) return;
        if (w == s) {
          if (path.size() >= 3 && path[1] < path.back())
            if (!fn(path)) stop = true;
          continue;
        }
        if (w < s || on_path[static_cast<size_t>(w)]) continue;
        if (static_cast<int>(path.size()) >= max_len) continue;
        path.push_back(w);
        on_path[static_cast<size_t>(w)] = 1;
        self(self, w);
        on_path[static_cast<size_t>(w)] = 0;
        path.pop_back();
      }
    };
    dfs(dfs, s);
    on_path[static_cast<size_t>(s)] = 0;
    if (stop) return;
  }
}

std::vector<Cycle> cycles_upto(const Graph& g, int max_len) {
  std::vector<Cycle> out;
  for_each_cycle(g, max_len, [&](const std::vector<int>& c) {
    out.push_back(Cycle{c});
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

int cycle_rank_upto(const Graph& g, int max_len) {
  Gf2Basis basis(g.edge_count());
  for_each_cycle(g, max_len, [&](const std::vector<int>& c) {
    basis.insert(edge_vector_of_cycle(g, c));
    return true;
  });
  return basis.rank();
}

int ell(const Graph& g) {
  int target = cyclomatic_number(g);
  if (target == 0) throw std::invalid_argument("forest has an empty cycle space");
  Gf2Basis basis(g.edge_count());
  auto start = girth(g);
  for (int len = *start; len <= g.vertex_count(); ++len) {
    for_each_cycle(g, len, [&](const std::vector<int>& c) {
      if (static_cast<int>(c.size()) == len)
        basis.insert(edge_vector_of_cycle(g, c));
      return basis.rank() < target;
    });
    if (basis.rank() == target) return len;
  }
  throw std::logic_error("cycle space not spanned by its simple cycles");
}

std::vector<BasisElement> min_cycle_basis(const Graph& g) {
  int target = cyclomatic_number(g);
  std::vector<BasisElement> out;
  if (target == 0) return out;

  // Horton candidate set: for every root r and edge xy, the closed walk
  // along the BFS tree paths r..x, r..y plus xy. Shared tree prefixes cancel
  // over GF(2), leaving the fundamental cycle of xy in that tree, so the
  // candidates span the cycle space.
  int n = g.vertex_count();
  std::vector<EdgeVector> candidates;
  std::vector<int> parent(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    auto dist = bfs_distances(g, r);
    for (int v = 0; v < n; ++v) {
      parent[static_cast<size_t>(v)] = -1;
      if (dist[static_cast<size_t>(v)] <= 0) continue;
      for (int w : g.neighbors(v))
        if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(v)] - 1) {
          parent[static_cast<size_t>(v)] = w;
          break;
        }
    }
    auto tree_path = [&](int v, EdgeVector& acc) {
      while (parent[static_cast<size_t>(v)] >= 0) {
        int p = parent[static_cast<size_t>(v)];
        acc.flip(static_cast<size_t>(g.edge_index(v, p)));
        v = p;
      }
    };
    for (auto [x, y] : g.edges()) {
      if (dist[static_cast<size_t>(x)] == kUnreachable ||
          dist[static_cast<size_t>(y)] == kUnreachable)
        continue;
      if (parent[static_cast<size_t>(x)] == y || parent[static_cast<size_t>(y)] == x)
        continue;
      EdgeVector acc(static_cast<size_t>(g.edge_count()));
      tree_path(x, acc);
      tree_path(y, acc);
      acc.flip(static_cast<size_t>(g.edge_index(x, y)));
      if (acc.any()) candidates.push_back(std::move(acc));
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const EdgeVector& a, const EdgeVector& b) {
              if (a.count() != b.count()) return a.count() < b.count();
              return a < b;
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  Gf2Basis basis(g.edge_count());
  for (const auto& cand : candidates) {
    if (!basis.insert(cand)) continue;
    BasisElement el;
    el.length = static_cast<int>(cand.count());
    for (auto i = cand.find_first(); i != EdgeVector::npos; i = cand.find_next(i))
      el.edge_ids.push_back(static_cast<int>(i));
    out.push_back(std::move(el));
    if (basis.rank() == target) break;
  }
  if (basis.rank() != target)
    throw std::logic_error("candidate cycles failed to span the cycle space");
  return out;
}

int ell_via_min_basis(const Graph& g) {
  auto basis = min_cycle_basis(g);
  if (basis.empty()) throw std::invalid_argument("forest has an empty cycle space");
  int best = 0;
  for (const auto& el : basis) best = std::max(best, el.length);
  return best;
}

bool is_geodesic_cycle(const Graph& g, const Cycle& c) {
  if (!c.is_valid(g)) throw std::invalid_argument("not a cycle of the graph");
  int len = c.length();
  for (int i = 0; i < len; ++i) {
    auto dist = bfs_distances(g, c.vertices[static_cast<size_t>(i)]);
    for (int j = i + 1; j < len; ++j) {
      int along = std::min(j - i, len - (j - i));
      if (dist[static_cast<size_t>(c.vertices[static_cast<size_t>(j)])] != along)
        return false;
    }
  }
  return true;
}

GeodesicBoundReport check_geodesic_bound(const Graph& g, const Cycle& c, int tw) {
  if (!is_geodesic_cycle(g, c))
    throw std::invalid_argument("cycle is not geodesic");
  GeodesicBoundReport r;
  r.cycle_length = c.length();
  r.ell = ell(g);
  r.tw = tw;
  r.holds = static_cast<long>(r.tw) * r.ell >= r.cycle_length;
  return r;
}

}  // namespace ctw
