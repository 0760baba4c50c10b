#include "ctw/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace ctw {

VertexSet VertexSet::of(int universe, std::initializer_list<int> vs) {
  VertexSet s(universe);
  for (int v : vs) s.insert(v);
  return s;
}

VertexSet VertexSet::from_vertices(int universe, const std::vector<int>& vs) {
  VertexSet s(universe);
  for (int v : vs) s.insert(v);
  return s;
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(count()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

int VertexSet::first() const {
  auto i = bits_.find_first();
  return i == boost::dynamic_bitset<>::npos ? -1 : static_cast<int>(i);
}

uint64_t VertexSet::to_mask() const {
  if (universe() > 64) throw std::invalid_argument("to_mask: universe exceeds 64 vertices");
  uint64_t m = 0;
  for_each([&](int v) { m |= uint64_t{1} << v; });
  return m;
}

VertexSet VertexSet::from_mask(int universe, uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("from_mask: universe exceeds 64 vertices");
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v)
    if (mask >> v & 1) s.insert(v);
  return s;
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& a = adj_[static_cast<size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::optional<int> Graph::vertex_by_label(const std::string& label) const {
  auto it = label_to_id_.find(label);
  if (it == label_to_id_.end()) return std::nullopt;
  return it->second;
}

VertexSet Graph::full_vertex_set() const {
  VertexSet s(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) s.insert(v);
  return s;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  auto d = bfs_distances(*this, 0);
  return std::find(d.begin(), d.end(), kUnreachable) == d.end();
}

uint64_t Graph::fingerprint() const {
  // FNV-1a over the vertex count and the sorted edge list.
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<uint64_t>(vertex_count()));
  for (const auto& [u, v] : edges_) {
    mix(static_cast<uint64_t>(u));
    mix(static_cast<uint64_t>(v));
  }
  return h;
}

int GraphBuilder::add_vertex(std::string label) {
  int id = static_cast<int>(labels_.size());
  if (label.empty()) label = std::to_string(id);
  auto [it, inserted] = label_to_id_.emplace(label, id);
  if (!inserted) throw std::invalid_argument("duplicate vertex label: " + label);
  labels_.push_back(std::move(label));
  return id;
}

int GraphBuilder::ensure_vertex(const std::string& label) {
  auto it = label_to_id_.find(label);
  if (it != label_to_id_.end()) return it->second;
  return add_vertex(label);
}

void GraphBuilder::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (u > v) std::swap(u, v);
  edges_.emplace_back(u, v);
}

Graph GraphBuilder::build() {
  Graph g;
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  g.edges_ = edges_;
  g.labels_ = labels_;
  g.label_to_id_ = label_to_id_;
  g.adj_.assign(labels_.size(), {});
  for (const auto& [u, v] : g.edges_) {
    g.adj_[static_cast<size_t>(u)].push_back(v);
    g.adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

std::vector<int> Path::internals() const {
  if (vertices.size() <= 2) return {};
  return std::vector<int>(vertices.begin() + 1, vertices.end() - 1);
}

bool Path::is_valid(const Graph& g, const std::vector<int>& seq) {
  if (seq.empty()) return false;
  std::unordered_set<int> seen;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0 || seq[i] >= g.vertex_count()) return false;
    if (!seen.insert(seq[i]).second) return false;
    if (i > 0 && !g.has_edge(seq[i - 1], seq[i])) return false;
  }
  return true;
}

Cycle Cycle::canonical() const {
  const int n = length();
  if (n == 0) return *this;
  int pos = static_cast<int>(std::min_element(vertices.begin(), vertices.end()) -
                             vertices.begin());
  auto rotate_from = [&](bool reversed) {
    std::vector<int> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      int idx = reversed ? (pos - i % n + n) % n : (pos + i) % n;
      out[static_cast<size_t>(i)] = vertices[static_cast<size_t>(idx)];
    }
    return out;
  };
  std::vector<int> fwd = rotate_from(false), rev = rotate_from(true);
  return Cycle{fwd <= rev ? fwd : rev};
}

bool Cycle::is_valid(const Graph& g) const {
  if (length() < 3) return false;
  if (!Path::is_valid(g, vertices)) return false;
  return g.has_edge(vertices.back(), vertices.front());
}

Graph parse_edge_list(std::istream& in) {
  GraphBuilder b;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string u, v, extra;
    if (!(ls >> u)) continue;  // blank
    if (!(ls >> v) || (ls >> extra))
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected two vertex tokens");
    if (u == v)
      throw std::runtime_error("line " + std::to_string(line_no) + ": self-loop '" + u + "'");
    // Sequence the two lookups; as arguments their evaluation order would be
    // unspecified and the promised first-appearance id order would not hold.
    int iu = b.ensure_vertex(u);
    int iv = b.ensure_vertex(v);
    b.add_edge(iu, iv);
  }
  return b.build();
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("edge-list format cannot express isolated vertex '" +
                                  g.label(v) + "'");
  for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kUnreachable);
  std::deque<int> queue{source};
  dist[static_cast<size_t>(source)] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (dist[static_cast<size_t>(w)] == kUnreachable) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::vector<int> bfs_distances_within(const Graph& g, const VertexSet& within, int source) {
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kUnreachable);
  std::deque<int> queue{source};
  dist[static_cast<size_t>(source)] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (within.contains(w) && dist[static_cast<size_t>(w)] == kUnreachable) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet seen(g.vertex_count());
  within.for_each([&](int s) {
    if (seen.contains(s)) return;
    VertexSet comp(g.vertex_count());
    std::deque<int> queue{s};
    seen.insert(s);
    comp.insert(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u))
        if (within.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          comp.insert(w);
          queue.push_back(w);
        }
    }
    out.push_back(std::move(comp));
  });
  return out;
}

bool is_connected_in(const Graph& g, const VertexSet& vs) {
  int start = vs.first();
  if (start < 0) return true;
  auto d = bfs_distances_within(g, vs, start);
  bool ok = true;
  vs.for_each([&](int v) { ok = ok && d[static_cast<size_t>(v)] != kUnreachable; });
  return ok;
}

bool touches(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) return true;
  const VertexSet& small = a.count() <= b.count() ? a : b;
  const VertexSet& large = a.count() <= b.count() ? b : a;
  bool hit = false;
  small.for_each([&](int v) {
    if (hit) return;
    for (int w : g.neighbors(v))
      if (large.contains(w)) {
        hit = true;
        return;
      }
  });
  return hit;
}

namespace {

// Distances to the nearest vertex of any block other than `skip`, moving only
// through vertices of `interior` (allowed minus all blocks). Block vertices
// are never expanded from, so paths have all internal vertices in `interior`.
std::vector<int> distances_to_other_blocks(const Graph& g, const VertexSet& interior,
                                           const std::vector<VertexSet>& blocks, size_t skip) {
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kUnreachable);
  std::deque<int> queue;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i == skip) continue;
    blocks[i].for_each([&](int v) {
      dist[static_cast<size_t>(v)] = 0;
      queue.push_back(v);
    });
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (interior.contains(w) && dist[static_cast<size_t>(w)] == kUnreachable) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace

std::optional<Path> shortest_path_between_components(const Graph& g, const VertexSet& allowed,
                                                     const std::vector<VertexSet>& blocks) {
  VertexSet interior = allowed;
  VertexSet block_union(g.vertex_count());
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (!blocks[i].is_subset_of(allowed))
      throw std::invalid_argument("block not contained in allowed set");
    if (blocks[i].intersects(block_union))
      throw std::invalid_argument("blocks must be pairwise disjoint");
    block_union |= blocks[i];
    interior -= blocks[i];
  }
  if (blocks.size() < 2) return std::nullopt;

  // One constrained BFS per start block; dist[i][v] is the length of the
  // shortest valid continuation from v to any block != i.
  std::vector<std::vector<int>> dist(blocks.size());
  for (size_t i = 0; i < blocks.size(); ++i)
    dist[i] = distances_to_other_blocks(g, interior, blocks, i);

  auto block_of = [&](int v) -> int {
    for (size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].contains(v)) return static_cast<int>(i);
    return -1;
  };

  // Value at a start vertex: one edge to a neighbour plus its continuation.
  auto start_value = [&](int v, size_t home) -> int {
    int best = kUnreachable;
    for (int w : g.neighbors(v)) {
      if (!allowed.contains(w)) continue;
      int dw = dist[home][static_cast<size_t>(w)];
      if (dw == kUnreachable) continue;
      if (!interior.contains(w) && dw != 0) continue;  // other-block vertex, must end there
      if (best == kUnreachable || dw + 1 < best) best = dw + 1;
    }
    return best;
  };

  int best_len = kUnreachable;
  int best_start = -1;
  block_union.for_each([&](int v) {
    int val = start_value(v, static_cast<size_t>(block_of(v)));
    if (val == kUnreachable) return;
    if (best_len == kUnreachable || val < best_len ||
        (val == best_len && v < best_start)) {
      best_len = val;
      best_start = v;
    }
  });
  if (best_len == kUnreachable) return std::nullopt;

  // Greedy lexicographic reconstruction: every shortest valid walk is a path,
  // so always stepping to the smallest neighbour whose continuation distance
  // matches the remaining length yields the lexicographically least sequence.
  size_t home = static_cast<size_t>(block_of(best_start));
  std::vector<int> seq{best_start};
  int cur = best_start, remaining = best_len;
  while (remaining > 0) {
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (!allowed.contains(w)) continue;
      if (dist[home][static_cast<size_t>(w)] != remaining - 1) continue;
      if (remaining > 1 && !interior.contains(w)) continue;
      if (next == -1 || w < next) next = w;
    }
    seq.push_back(next);
    cur = next;
    --remaining;
  }
  return Path{std::move(seq)};
}

void enumerate_connected_sets(const Graph& g, int max_size,
                              const std::function<bool(const VertexSet&)>& visit) {
  if (max_size < 1) throw std::invalid_argument("max_size must be at least 1");
  if (g.vertex_count() > 64)
    throw std::invalid_argument("enumerate_connected_sets limited to 64 vertices");
  const int n = g.vertex_count();
  std::vector<uint64_t> level;
  for (int v = 0; v < n; ++v) level.push_back(uint64_t{1} << v);
  for (int size = 1; size <= max_size && !level.empty(); ++size) {
    std::sort(level.begin(), level.end());
    for (uint64_t m : level)
      if (!visit(VertexSet::from_mask(n, m))) return;
    if (size == max_size) break;
    std::unordered_set<uint64_t> next;
    for (uint64_t m : level)
      for (int v = 0; v < n; ++v) {
        if (!(m >> v & 1)) continue;
        for (int w : g.neighbors(v))
          if (!(m >> w & 1)) next.insert(m | uint64_t{1} << w);
      }
    level.assign(next.begin(), next.end());
  }
}

std::vector<VertexSet> connected_sets_upto(const Graph& g, int max_size) {
  std::vector<VertexSet> out;
  enumerate_connected_sets(g, max_size, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> old_ids = keep.vertices();
  std::vector<int> new_id(static_cast<size_t>(g.vertex_count()), -1);
  GraphBuilder b;
  for (size_t i = 0; i < old_ids.size(); ++i) {
    new_id[static_cast<size_t>(old_ids[i])] = static_cast<int>(i);
    b.add_vertex(g.label(old_ids[i]));
  }
  for (const auto& [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v))
      b.add_edge(new_id[static_cast<size_t>(u)], new_id[static_cast<size_t>(v)]);
  return {b.build(), std::move(old_ids)};
}

}  // namespace ctw
