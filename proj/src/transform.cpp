#include "eccaudit/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace eccaudit {

namespace {

Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

void set_pair(std::vector<std::uint64_t>& rows, std::size_t words, std::size_t u,
              std::size_t v) {
  rows[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
  rows[v * words + u / 64] |= std::uint64_t{1} << (u % 64);
}

// XOR columns [lo, hi) of one row.
void flip_columns(std::uint64_t* row, std::size_t lo, std::size_t hi) {
  for (std::size_t c = lo; c < hi;) {
    const std::size_t w = c / 64;
    const std::size_t off = c % 64;
    const std::size_t span = std::min<std::size_t>(64 - off, hi - c);
    const std::uint64_t mask =
        (span == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << span) - 1)) << off;
    row[w] ^= mask;
    c += span;
  }
}

}  // namespace

SignPattern SignPattern::parse(std::string_view text) {
  if (text.size() != 3) {
    throw std::invalid_argument("sign pattern must have 3 characters: '" +
                                std::string(text) + "'");
  }
  std::array<Sign, 3> s{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (text[i] == '+') {
      s[i] = Sign::Plus;
    } else if (text[i] == '-') {
      s[i] = Sign::Minus;
    } else {
      throw std::invalid_argument("sign pattern may only contain '+' and '-': '" +
                                  std::string(text) + "'");
    }
  }
  return {s[0], s[1], s[2]};
}

std::string SignPattern::to_string() const {
  auto c = [](Sign s) { return s == Sign::Plus ? '+' : '-'; };
  return {c(x), c(y), c(z)};
}

int SignPattern::theorem() const {
  const std::string s = to_string();
  if (s == "+++") return 1;
  if (s == "---") return 2;
  if (s == "++-") return 3;
  if (s == "--+") return 4;
  if (s == "+-+") return 5;
  if (s == "-+-") return 6;
  if (s == "-++") return 7;
  return 8;  // +--
}

const std::array<SignPattern, 8>& all_patterns() {
  static const std::array<SignPattern, 8> patterns = [] {
    std::array<SignPattern, 8> out{};
    for (int bits = 0; bits < 8; ++bits) {
      out[bits] = {(bits & 4) ? Sign::Minus : Sign::Plus,
                   (bits & 2) ? Sign::Minus : Sign::Plus,
                   (bits & 1) ? Sign::Minus : Sign::Plus};
    }
    return out;
  }();
  return patterns;
}

SignPattern complement_partner(SignPattern p) { return {flip(p.x), flip(p.y), flip(p.z)}; }

std::string Provenance::to_string() const {
  if (is_original()) return "v" + std::to_string(a);
  return "e" + std::to_string(a) + "-" + std::to_string(b);
}

TransformedGraph apply(const Graph& g, SignPattern p) {
  const std::size_t n = g.order();
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t total = n + m;
  const std::size_t words = Graph::words_for(total);

  // Start from the total graph T(G) = G^{+++}.
  std::vector<std::uint64_t> rows(total * words, 0);
  for (std::size_t k = 0; k < m; ++k) {
    const auto [u, v] = edges[k];
    set_pair(rows, words, u, v);
    set_pair(rows, words, u, n + k);
    set_pair(rows, words, v, n + k);
  }
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t k = 0; k < m; ++k) {
    incident[edges[k].first].push_back(k);
    incident[edges[k].second].push_back(k);
  }
  for (const auto& list : incident) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        set_pair(rows, words, n + list[i], n + list[j]);
      }
    }
  }

  // Each Minus complements one block, leaving the diagonal clear.
  for (std::size_t r = 0; r < total; ++r) {
    std::uint64_t* row = rows.data() + r * words;
    const bool original = r < n;
    if (original && p.x == Sign::Minus) {
      flip_columns(row, 0, n);
      row[r / 64] ^= std::uint64_t{1} << (r % 64);
    }
    if (!original && p.y == Sign::Minus) {
      flip_columns(row, n, total);
      row[r / 64] ^= std::uint64_t{1} << (r % 64);
    }
    if (p.z == Sign::Minus) {
      if (original) {
        flip_columns(row, n, total);
      } else {
        flip_columns(row, 0, n);
      }
    }
  }

  TransformedGraph out{Graph::from_rows(total, std::move(rows)), {}};
  out.provenance.reserve(total);
  for (Vertex v = 0; v < n; ++v) out.provenance.push_back(Provenance::original(v));
  for (const Edge& e : edges) out.provenance.push_back(Provenance::edge(e));
  return out;
}

std::vector<std::int64_t> predicted_degrees(const Graph& g, SignPattern p) {
  const auto n = static_cast<std::int64_t>(g.order());
  const auto m = static_cast<std::int64_t>(g.size());
  const int theorem = p.theorem();
  std::vector<std::int64_t> out;
  out.reserve(g.order() + g.size());

  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    switch (theorem) {
      case 1: out.push_back(2 * d); break;
      case 2: out.push_back(m + n - 1 - 2 * d); break;
      case 3: out.push_back(m); break;
      case 4: out.push_back(n + 1 - d); break;
      case 5: out.push_back(2 * d); break;
      case 6: out.push_back(m + n - 1 - 2 * d); break;
      case 7: out.push_back(n - 1); break;
      default: out.push_back(m); break;
    }
  }
  for (const Edge& e : g.edges()) {
    const auto s = static_cast<std::int64_t>(g.degree(e.first) + g.degree(e.second));
    switch (theorem) {
      case 1: out.push_back(s); break;
      case 2: out.push_back(m + n - 1 - s); break;
      case 3: out.push_back(n - 4 + s); break;
      case 4: out.push_back(m + 3 - s); break;
      case 5: out.push_back(m + 3 - s); break;
      case 6: out.push_back(n - 4 + s); break;
      case 7: out.push_back(s); break;
      default: out.push_back(m + n - 1 - s); break;
    }
  }
  return out;
}

std::vector<std::optional<std::uint32_t>> ecc_caps(const Graph& g, SignPattern p) {
  const std::size_t total = g.order() + g.size();
  const int theorem = p.theorem();
  if (theorem == 3 || theorem == 8) return std::vector<std::optional<std::uint32_t>>(total, 4u);
  if (theorem != 1) return std::vector<std::optional<std::uint32_t>>(total, 3u);

  const auto ecc = eccentricities(g);
  if (!is_connected(g)) return std::vector<std::optional<std::uint32_t>>(total, std::nullopt);
  std::vector<std::optional<std::uint32_t>> out;
  out.reserve(total);
  for (const Ecc& e : ecc) out.push_back(e.value() + 1);
  for (const Edge& e : g.edges()) {
    out.push_back(std::min(ecc[e.first].value(), ecc[e.second].value()) + 1);
  }
  return out;
}

std::optional<std::uint32_t> ecc_cap(const Graph& g, SignPattern p, std::size_t k) {
  const auto caps = ecc_caps(g, p);
  if (k >= caps.size()) throw std::out_of_range("provenance index out of range");
  return caps[k];
}

}  // namespace eccaudit
