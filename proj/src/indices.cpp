#include "eccaudit/indices.hpp"

#include <algorithm>

namespace eccaudit {

Integer first_zagreb_vertex_form(const Graph& g) {
  Integer sum = 0;
  for (auto d : g.degrees()) sum += Integer(d) * d;
  return sum;
}

Integer first_zagreb_edge_form(const Graph& g) {
  Integer sum = 0;
  for (const Edge& e : g.edges()) sum += g.degree(e.first) + g.degree(e.second);
  return sum;
}

DegreeInvariants degree_invariants(const Graph& g) {
  DegreeInvariants out;
  out.n = g.order();
  out.m = g.size();
  out.m1 = first_zagreb_vertex_form(g);
  Integer cubes = 0;
  Rational inverse = 0;
  bool isolated = false;
  for (auto d : g.degrees()) {
    cubes += Integer(d) * d * d;
    if (d == 0) {
      isolated = true;
    } else {
      inverse += Rational(1, d);
    }
  }
  out.forgotten = cubes;
  if (!isolated) out.inverse_degree = inverse;
  for (const Edge& e : g.edges()) {
    const std::size_t du = g.degree(e.first);
    const std::size_t dv = g.degree(e.second);
    out.m2 += Integer(du) * dv;
    out.m1_inverse += Rational(1, du + dv);
  }
  return out;
}

std::optional<EccInvariants> ecc_invariants(const Graph& g) {
  const auto ecc = eccentricities(g);
  return ecc_invariants(g, ecc);
}

std::optional<EccInvariants> ecc_invariants(const Graph& g, std::span<const Ecc> ecc) {
  if (std::any_of(ecc.begin(), ecc.end(), [](const Ecc& e) { return !e.is_finite(); })) {
    return std::nullopt;
  }
  EccInvariants out;
  Rational inverse = 0;
  bool inverse_defined = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Integer e = ecc[v].value();
    const Integer d = g.degree(v);
    out.eci += e * d;
    out.m1_eci += e * d * d;
    out.eci1 += e * e * d;
    out.m1_eci1 += e * e * d * d;
    if (e * d == 0) {
      inverse_defined = false;
    } else {
      inverse += Rational(1, e * d);
    }
  }
  if (inverse_defined) out.i_eci = inverse;
  return out;
}

std::optional<EdgeEccInvariants> edge_ecc_invariants(const Graph& g) {
  const auto ecc = eccentricities(g);
  return edge_ecc_invariants(g, ecc);
}

std::optional<EdgeEccInvariants> edge_ecc_invariants(const Graph& g,
                                                     std::span<const Ecc> ecc) {
  if (std::any_of(ecc.begin(), ecc.end(), [](const Ecc& e) { return !e.is_finite(); })) {
    return std::nullopt;
  }
  EdgeEccInvariants out;
  for (const Edge& edge : g.edges()) {
    const Integer w = std::min(ecc[edge.first].value(), ecc[edge.second].value());
    const Integer du = g.degree(edge.first);
    const Integer dv = g.degree(edge.second);
    const Integer squares = du * du + dv * dv;
    out.xi_inverse += Rational(1, w * (du + dv));
    out.f_eci += w * squares;
    out.m2_eci += w * du * dv;
    out.f_eci1 += w * w * squares;
    out.m2_eci1 += w * w * du * dv;
    out.edge_sum += w * (du + dv);
    out.edge_sum_sq += w * w * (du + dv);
  }
  return out;
}

}  // namespace eccaudit
