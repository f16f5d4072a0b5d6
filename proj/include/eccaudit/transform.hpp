#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eccaudit/graph.hpp"

namespace eccaudit {

enum class Sign : std::uint8_t { Plus, Minus };

/// Selects one of the eight total transformation graphs. x governs
/// vertex-vertex pairs, y edge-edge pairs, z vertex-edge pairs; Plus keeps the
/// relation of G (adjacency, adjacency, incidence) and Minus complements it.
struct SignPattern {
  Sign x = Sign::Plus;
  Sign y = Sign::Plus;
  Sign z = Sign::Plus;

  /// Parses a 3-character string over {+,-}, e.g. "++-".
  static SignPattern parse(std::string_view text);
  std::string to_string() const;

  /// Number of the theorem that bounds this transformation (1..8).
  int theorem() const;

  /// Report order: +++, ++-, +-+, +--, -++, -+-, --+, --- (Minus sorts after Plus).
  friend auto operator<=>(const SignPattern&, const SignPattern&) = default;
};

/// All eight patterns in report order.
const std::array<SignPattern, 8>& all_patterns();

/// The pattern whose transform is the complement of this one's.
SignPattern complement_partner(SignPattern p);

/// Where a transformed vertex came from: a vertex of G or an edge of G.
struct Provenance {
  enum class Kind : std::uint8_t { Original, EdgeVertex };
  Kind kind = Kind::Original;
  Vertex a = 0;  // the vertex, or the smaller edge endpoint
  Vertex b = 0;  // larger edge endpoint (EdgeVertex only)

  static Provenance original(Vertex v) { return {Kind::Original, v, 0}; }
  static Provenance edge(Edge e) { return {Kind::EdgeVertex, e.first, e.second}; }
  bool is_original() const { return kind == Kind::Original; }
  std::string to_string() const;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Graph on n+m vertices: originals 0..n-1 in vertex order, then one vertex
/// per edge of G in lexicographic edge order.
struct TransformedGraph {
  Graph graph;
  std::vector<Provenance> provenance;
};

TransformedGraph apply(const Graph& g, SignPattern p);

/// Closed-form degrees asserted for each transformed vertex, in provenance
/// order. Values are returned as written, including negative or wrong ones.
std::vector<std::int64_t> predicted_degrees(const Graph& g, SignPattern p);

/// Eccentricity cap for every transformed vertex, in provenance order.
/// +++ caps by e_G(v)+1 (and min over endpoints + 1 for edge vertices), which
/// is undefined (nullopt) for disconnected G. ++- and +-- cap by 4, the rest by 3.
std::vector<std::optional<std::uint32_t>> ecc_caps(const Graph& g, SignPattern p);

std::optional<std::uint32_t> ecc_cap(const Graph& g, SignPattern p, std::size_t k);

}  // namespace eccaudit
