#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ctw {

/// Subset of the vertex set of a fixed host graph, with bitset semantics.
/// The universe size is the vertex count of that graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : bits_(static_cast<size_t>(universe)) {}

  static VertexSet of(int universe, std::initializer_list<int> vs);
  static VertexSet from_vertices(int universe, const std::vector<int>& vs);

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(int v) const { return bits_.test(static_cast<size_t>(v)); }
  void insert(int v) { bits_.set(static_cast<size_t>(v)); }
  void erase(int v) { bits_.reset(static_cast<size_t>(v)); }
  int count() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }

  bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }
  bool is_subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }

  VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { a -= b; return a; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

  /// Members in ascending order.
  std::vector<int> vertices() const;
  /// Smallest member, -1 if empty.
  int first() const;

  template <class F>
  void for_each(F f) const {
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
         i = bits_.find_next(i))
      f(static_cast<int>(i));
  }

  /// Bitmask form, only defined for universes of at most 64 vertices.
  uint64_t to_mask() const;
  static VertexSet from_mask(int universe, uint64_t mask);

 private:
  boost::dynamic_bitset<> bits_;
};

/// Finite simple undirected graph on vertices 0..n-1, loop free.
/// Every vertex carries a unique string label (defaults to its decimal id).
/// Immutable after construction; build through GraphBuilder or parse_edge_list.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

  /// Edges as (u, v) with u < v, sorted lexicographically. Index in this
  /// list is the edge id used by edge-indexed vectors.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_index(int u, int v) const;  // -1 if absent

  const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }
  std::optional<int> vertex_by_label(const std::string& label) const;

  VertexSet full_vertex_set() const;
  bool is_connected() const;

  /// Stable hash of (n, edge list); used to tie decompositions to their graph.
  uint64_t fingerprint() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> label_to_id_;
  friend class GraphBuilder;
};

class GraphBuilder {
 public:
  /// Empty label means "use the decimal id".
  int add_vertex(std::string label = "");
  /// Id for the vertex with this label, creating it on first sight.
  int ensure_vertex(const std::string& label);
  /// Rejects loops; duplicate edges are merged silently.
  void add_edge(int u, int v);
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  Graph build();

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> label_to_id_;
  std::vector<std::pair<int, int>> edges_;
};

/// Sequence of pairwise distinct vertices with consecutive ones adjacent.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  std::vector<int> internals() const;

  static bool is_valid(const Graph& g, const std::vector<int>& seq);
};

/// Cyclic sequence of at least three distinct vertices, consecutive ones
/// (including last-first) adjacent. Canonical form starts at the smallest
/// vertex and runs toward its smaller neighbour on the cycle.
struct Cycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  Cycle canonical() const;
  bool is_valid(const Graph& g) const;
};

/// Reads one edge per line: two whitespace-separated vertex labels. '#'
/// starts a comment, blank lines are skipped. Labels become ids in order of
/// first appearance. Throws std::runtime_error with the line number on a
/// malformed line or a self-loop; duplicate edges are fine.
Graph parse_edge_list(std::istream& in);
/// Inverse of parse_edge_list up to comments. Isolated vertices cannot be
/// expressed in this format and are rejected.
void write_edge_list(const Graph& g, std::ostream& out);

inline constexpr int kUnreachable = -1;

/// Distances (hop counts) from source to every vertex, kUnreachable if none.
std::vector<int> bfs_distances(const Graph& g, int source);
/// As above but restricted to the induced subgraph on `within` (source must
/// be a member).
std::vector<int> bfs_distances_within(const Graph& g, const VertexSet& within, int source);
/// Full distance matrix; entry kUnreachable when there is no path.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// Connected components of the subgraph induced on `within`, each a maximal
/// connected subset, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
/// True when the induced subgraph on `vs` is connected (empty counts as
/// connected).
bool is_connected_in(const Graph& g, const VertexSet& vs);
/// True when a and b intersect or are joined by an edge.
bool touches(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Shortest path inside the subgraph induced on `allowed` whose ends lie in
/// two distinct blocks and whose internal vertices lie in no block. Blocks
/// must be pairwise disjoint subsets of `allowed`. Ties are broken toward the
/// lexicographically smallest vertex sequence. nullopt when no such path
/// exists.
std::optional<Path> shortest_path_between_components(
    const Graph& g, const VertexSet& allowed, const std::vector<VertexSet>& blocks);

/// Calls visit for every connected vertex set of size <= max_size, each
/// exactly once, in nondecreasing size order (ties: ascending bitmask).
/// Return false from visit to stop early. Output size is exponential in
/// general; restricted to graphs with at most 64 vertices.
void enumerate_connected_sets(const Graph& g, int max_size,
                              const std::function<bool(const VertexSet&)>& visit);
std::vector<VertexSet> connected_sets_upto(const Graph& g, int max_size);

/// Subgraph induced on `keep`, preserving labels. Second member maps new ids
/// back to the originals (ascending).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace ctw
