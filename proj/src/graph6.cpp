#include "eccaudit/graph6.hpp"

#include <vector>

namespace eccaudit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::size_t bit_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw Graph6Error("invalid graph6 character at offset " + std::to_string(i));
    }
  }
  if (text.empty()) throw Graph6Error("empty graph6 record");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) {
      throw Graph6Error("graph6 order exceeds " + std::to_string(kGraph6MaxOrder));
    }
    if (text.size() < 4) throw Graph6Error("truncated graph6 size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    pos = 4;
  }

  const std::size_t bits = bit_count(n);
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw Graph6Error("truncated graph6 adjacency data");
  if (text.size() - pos > bytes) throw Graph6Error("trailing data after graph6 record");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto chunk = static_cast<unsigned>(text[pos + k / 6] - 63);
      if ((chunk >> (5 - k % 6)) & 1u) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const auto last = static_cast<unsigned>(text[pos + bytes - 1] - 63);
    const unsigned pad_mask = (1u << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw Graph6Error("nonzero graph6 padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Graph6Error("order " + std::to_string(n) + " is too large for graph6");
  }
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  unsigned chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

}  // namespace eccaudit
