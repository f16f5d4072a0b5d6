#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eccaudit {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with first < second once inside a Graph.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Labeled simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as fixed-width bit rows (one row per vertex, 64 vertices
/// per word) next to a lexicographically sorted edge list and a degree table.
/// Values are immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Validating constructor: rejects self-loops, duplicate edges and
  /// endpoints >= n. Edge endpoints may be given in either order.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  /// Builds from packed adjacency rows (n rows of words_for(n) words each).
  /// Throws GraphError if the relation is not symmetric or has a loop.
  static Graph from_rows(std::size_t n, std::vector<std::uint64_t> rows);

  static constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  std::size_t words() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  std::size_t degree(Vertex v) const { return degrees_[v]; }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void finish();

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint32_t> degrees_;
  std::vector<Edge> edges_;
};

/// build_graph: canonical graph from a vertex count and an edge list.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}
inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Vertex eccentricity; infinite stands for "some vertex is unreachable".
class Ecc {
 public:
  static Ecc infinite() { return Ecc(); }
  static Ecc finite(std::uint32_t hops) { return Ecc(hops); }

  bool is_finite() const { return hops_.has_value(); }
  std::uint32_t value() const { return hops_.value(); }

  friend bool operator==(const Ecc&, const Ecc&) = default;

 private:
  Ecc() = default;
  explicit Ecc(std::uint32_t hops) : hops_(hops) {}
  std::optional<std::uint32_t> hops_;
};

/// BFS distances from source; unreachable vertices get nullopt.
std::vector<std::optional<std::uint32_t>> bfs_distances(const Graph& g, Vertex source);

/// One entry per vertex. A disconnected graph yields all-infinite entries.
std::vector<Ecc> eccentricities(const Graph& g);

/// The empty graph and K1 count as connected.
bool is_connected(const Graph& g);

/// Maximum eccentricity; infinite when disconnected, 0 for n <= 1.
Ecc diameter(const Graph& g);

Graph complement(const Graph& g);

}  // namespace eccaudit
