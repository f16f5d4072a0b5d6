#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "eccaudit/graph.hpp"
#include "eccaudit/rational.hpp"

namespace eccaudit {

/// Degree-based invariants. Always defined except the inverse degree, which
/// needs every vertex to have degree >= 1.
struct DegreeInvariants {
  std::size_t n = 0;
  std::size_t m = 0;
  Integer m1;                             // first Zagreb, sum of deg^2
  Integer m2;                             // second Zagreb, sum over edges of deg(u)deg(v)
  Integer forgotten;                      // sum of deg^3
  std::optional<Rational> inverse_degree; // sum of 1/deg
  Rational m1_inverse;                    // sum over edges of 1/(deg(u)+deg(v))
};

/// Eccentricity-connectivity family. Only defined for connected graphs; the
/// inverse index additionally needs every e(v)deg(v) > 0.
struct EccInvariants {
  Integer eci;                     // sum e*deg
  std::optional<Rational> i_eci;   // sum 1/(e*deg)
  Integer m1_eci;                  // sum e*deg^2
  Integer eci1;                    // sum e^2*deg
  Integer m1_eci1;                 // sum e^2*deg^2
};

/// Edge sums weighted by the edge eccentricity w(uv) = min(e(u), e(v)).
struct EdgeEccInvariants {
  Rational xi_inverse;  // sum 1/(w*(deg u + deg v))
  Integer f_eci;        // sum w*(deg u^2 + deg v^2)
  Integer m2_eci;       // sum w*deg u*deg v
  Integer f_eci1;       // sum w^2*(deg u^2 + deg v^2)
  Integer m2_eci1;      // sum w^2*deg u*deg v
  Integer edge_sum;     // sum w*(deg u + deg v)
  Integer edge_sum_sq;  // sum w^2*(deg u + deg v)
};

/// Description of the edge eccentricity convention, recorded in reports.
inline constexpr const char* kEdgeEccConvention = "edge eccentricity = min(e(u), e(v))";

/// First Zagreb index as a vertex sum of squared degrees.
Integer first_zagreb_vertex_form(const Graph& g);
/// First Zagreb index as an edge sum of deg(u)+deg(v).
Integer first_zagreb_edge_form(const Graph& g);

DegreeInvariants degree_invariants(const Graph& g);

std::optional<EccInvariants> ecc_invariants(const Graph& g);
/// Variant for callers that already hold the eccentricities.
std::optional<EccInvariants> ecc_invariants(const Graph& g, std::span<const Ecc> ecc);

/// nullopt for disconnected graphs; all-zero sums when m = 0.
std::optional<EdgeEccInvariants> edge_ecc_invariants(const Graph& g);
std::optional<EdgeEccInvariants> edge_ecc_invariants(const Graph& g, std::span<const Ecc> ecc);

}  // namespace eccaudit
