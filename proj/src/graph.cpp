#include "eccaudit/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace eccaudit {

namespace {

void set_bit(std::vector<std::uint64_t>& rows, std::size_t words, std::size_t u,
             std::size_t v) {
  rows[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.n_ = n;
  g.words_ = words_for(n);
  g.rows_.assign(n * g.words_, 0);
  for (const Edge& e : edges) {
    if (e.first >= n || e.second >= n) {
      throw GraphError("edge (" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + ") has an endpoint >= n=" +
                       std::to_string(n));
    }
    if (e.first == e.second) {
      throw GraphError("self-loop at vertex " + std::to_string(e.first));
    }
    if (g.adjacent(e.first, e.second)) {
      throw GraphError("duplicate edge (" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + ")");
    }
    set_bit(g.rows_, g.words_, e.first, e.second);
    set_bit(g.rows_, g.words_, e.second, e.first);
  }
  g.finish();
  return g;
}

Graph Graph::from_rows(std::size_t n, std::vector<std::uint64_t> rows) {
  Graph g;
  g.n_ = n;
  g.words_ = words_for(n);
  if (rows.size() != n * g.words_) {
    throw GraphError("adjacency row storage has the wrong size");
  }
  g.rows_ = std::move(rows);
  // Bits past column n-1 must be clear so that equality is representation-exact.
  if (n % 64 != 0) {
    const std::uint64_t tail = ~std::uint64_t{0} << (n % 64);
    for (std::size_t u = 0; u < n; ++u) {
      if (g.rows_[u * g.words_ + g.words_ - 1] & tail) {
        throw GraphError("adjacency row has bits beyond the vertex range");
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    if (g.adjacent(u, u)) throw GraphError("self-loop at vertex " + std::to_string(u));
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) {
        throw GraphError("adjacency is not symmetric");
      }
    }
  }
  g.finish();
  return g;
}

void Graph::finish() {
  degrees_.assign(n_, 0);
  edges_.clear();
  for (Vertex u = 0; u < n_; ++u) {
    std::uint32_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      d += static_cast<std::uint32_t>(std::popcount(rows_[u * words_ + w]));
    }
    degrees_[u] = d;
  }
  for (Vertex u = 0; u < n_; ++u) {
    // Walk only the part of the row above the diagonal.
    for (std::size_t w = (u + 1) / 64; w < words_; ++w) {
      std::uint64_t bits = rows_[u * words_ + w];
      if (w == (u + 1) / 64) bits &= ~std::uint64_t{0} << ((u + 1) % 64);
      while (bits) {
        const auto bit = static_cast<Vertex>(std::countr_zero(bits));
        edges_.push_back({u, static_cast<Vertex>(w * 64 + bit)});
        bits &= bits - 1;
      }
    }
  }
}

std::vector<std::optional<std::uint32_t>> bfs_distances(const Graph& g, Vertex source) {
  const std::size_t n = g.order();
  const std::size_t words = g.words();
  std::vector<std::optional<std::uint32_t>> dist(n);
  std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
  visited[source / 64] |= std::uint64_t{1} << (source % 64);
  frontier = visited;
  dist[source] = 0;
  for (std::uint32_t level = 1;; ++level) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits) {
        const auto v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        const auto r = g.row(v);
        for (std::size_t k = 0; k < words; ++k) next[k] |= r[k];
        bits &= bits - 1;
      }
    }
    bool any = false;
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      visited[w] |= next[w];
      std::uint64_t bits = next[w];
      any = any || bits != 0;
      while (bits) {
        dist[w * 64 + std::countr_zero(bits)] = level;
        bits &= bits - 1;
      }
    }
    if (!any) break;
    frontier.swap(next);
  }
  return dist;
}

std::vector<Ecc> eccentricities(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Ecc> ecc;
  ecc.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    std::uint32_t far = 0;
    for (const auto& d : bfs_distances(g, v)) {
      if (!d) return std::vector<Ecc>(n, Ecc::infinite());
      far = std::max(far, *d);
    }
    ecc.push_back(Ecc::finite(far));
  }
  return ecc;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

Ecc diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (const Ecc& e : eccentricities(g)) {
    if (!e.is_finite()) return Ecc::infinite();
    best = std::max(best, e.value());
  }
  return Ecc::finite(best);
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t words = g.words();
  std::vector<std::uint64_t> rows(n * words);
  for (Vertex u = 0; u < n; ++u) {
    const auto r = g.row(u);
    for (std::size_t w = 0; w < words; ++w) rows[u * words + w] = ~r[w];
    if (n % 64 != 0) rows[u * words + words - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
    rows[u * words + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  }
  return Graph::from_rows(n, std::move(rows));
}

}  // namespace eccaudit
