#include "eccaudit/audit.hpp"

#include <algorithm>

#include "eccaudit/graph6.hpp"
#include "eccaudit/indices.hpp"
#include "ordered_parallel.hpp"

namespace eccaudit {

namespace {

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

AuditOptions normalized(const AuditOptions& o) {
  AuditOptions out = o;
  out.patterns = sorted_unique(o.patterns);
  out.kinds = sorted_unique(o.kinds);
  out.variants = sorted_unique(o.variants);
  return out;
}

std::optional<Rational> index_value(const std::optional<EccInvariants>& idx, BoundKind k) {
  if (!idx) return std::nullopt;
  switch (k) {
    case BoundKind::IEci: return idx->i_eci;
    case BoundKind::M1Eci: return Rational(idx->m1_eci);
    case BoundKind::Eci1: return Rational(idx->eci1);
    case BoundKind::M1Eci1: return Rational(idx->m1_eci1);
  }
  return std::nullopt;
}

std::vector<AuditRow> audit_normalized(const Graph& g, const AuditOptions& options) {
  const std::string g6 = encode_graph6(g);
  const DegreeInvariants d = degree_invariants(g);
  const auto ecc = eccentricities(g);
  const auto e = ecc_invariants(g, ecc);
  const auto ee = edge_ecc_invariants(g, ecc);

  std::optional<std::string> skip;
  if (!e) {
    skip = "base graph is disconnected";
  } else if (g.size() == 0) {
    skip = "base graph has no edges";
  }

  std::vector<AuditRow> rows;
  for (const SignPattern& p : options.patterns) {
    const TransformedGraph t = apply(g, p);
    const auto t_ecc = eccentricities(t.graph);
    const auto t_idx = ecc_invariants(t.graph, t_ecc);
    for (BoundKind k : options.kinds) {
      const auto exact = index_value(t_idx, k);
      for (BoundVariant v : options.variants) {
        if (!has_variant(p, k, v)) continue;
        AuditRow row;
        row.graph6 = g6;
        row.n = g.order();
        row.m = g.size();
        row.pattern = p;
        row.kind = k;
        row.variant = v;
        row.transform_connected = t_idx.has_value();
        row.exact = exact;
        row.bound = skip ? BoundValue::inapplicable(*skip) : bound_value(p, k, v, d, e, ee);
        row.verdict = classify(row.exact, row.bound);
        if (row.exact && row.bound.has_value()) row.slack = row.bound.value - *row.exact;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Undefined: return "undefined";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "undefined";
}

std::string_view to_string(CheckKind c) {
  switch (c) {
    case CheckKind::Degree: return "degree";
    case CheckKind::EccCap: return "ecc_cap";
    case CheckKind::ComplementDegree: return "complement_degree";
  }
  return "degree";
}

Verdict classify(const std::optional<Rational>& exact, const BoundValue& bound) {
  if (!exact || bound.status == BoundValue::Status::Undefined) return Verdict::Undefined;
  if (bound.status == BoundValue::Status::Inapplicable) return Verdict::Inapplicable;
  return *exact <= bound.value ? Verdict::Holds : Verdict::Violated;
}

std::vector<AuditRow> audit_graph(const Graph& g, const AuditOptions& options) {
  return audit_normalized(g, normalized(options));
}

void run_audit(GraphStream& corpus, const AuditOptions& options, const AuditSink& sink) {
  const AuditOptions opts = normalized(options);
  detail::ordered_parallel<std::vector<AuditRow>>(
      corpus, opts.jobs, [&opts](const CorpusItem& item) { return audit_normalized(item.graph, opts); },
      [&sink](const std::vector<AuditRow>& rows) {
        for (const auto& r : rows) sink(r);
      });
}

std::vector<AuditRow> run_audit(const CorpusSpec& spec, const AuditOptions& options) {
  auto corpus = open_corpus(spec);
  std::vector<AuditRow> rows;
  run_audit(*corpus, options, [&rows](const AuditRow& r) { rows.push_back(r); });
  return rows;
}

std::vector<CrosscheckRow> crosscheck_graph(const Graph& g,
                                            const std::vector<SignPattern>& requested) {
  const auto patterns = sorted_unique(requested);
  const std::string g6 = encode_graph6(g);
  std::vector<CrosscheckRow> rows;
  auto base_row = [&](SignPattern p, CheckKind check, std::size_t k, const Provenance& prov) {
    CrosscheckRow r;
    r.graph6 = g6;
    r.n = g.order();
    r.m = g.size();
    r.pattern = p;
    r.check = check;
    r.index = k;
    r.provenance = prov;
    return r;
  };

  for (const SignPattern& p : patterns) {
    const TransformedGraph t = apply(g, p);
    const auto predicted = predicted_degrees(g, p);
    for (std::size_t k = 0; k < t.provenance.size(); ++k) {
      auto r = base_row(p, CheckKind::Degree, k, t.provenance[k]);
      r.actual = static_cast<std::int64_t>(t.graph.degree(static_cast<Vertex>(k)));
      r.expected = predicted[k];
      r.match = r.actual == predicted[k];
      rows.push_back(std::move(r));
    }
    if (is_connected(t.graph)) {
      const auto ecc = eccentricities(t.graph);
      const auto caps = ecc_caps(g, p);
      for (std::size_t k = 0; k < t.provenance.size(); ++k) {
        auto r = base_row(p, CheckKind::EccCap, k, t.provenance[k]);
        r.actual = ecc[k].value();
        if (caps[k]) r.expected = *caps[k];
        r.match = caps[k] && ecc[k].value() <= *caps[k];
        rows.push_back(std::move(r));
      }
    }
  }

  const auto target = static_cast<std::int64_t>(g.order() + g.size()) - 1;
  for (const SignPattern& p : patterns) {
    const SignPattern q = complement_partner(p);
    if (!(p < q)) continue;
    const TransformedGraph tp = apply(g, p);
    const TransformedGraph tq = apply(g, q);
    for (std::size_t k = 0; k < tp.provenance.size(); ++k) {
      auto r = base_row(p, CheckKind::ComplementDegree, k, tp.provenance[k]);
      r.actual = static_cast<std::int64_t>(tp.graph.degree(static_cast<Vertex>(k)) +
                                           tq.graph.degree(static_cast<Vertex>(k)));
      r.expected = target;
      r.match = r.actual == target;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

void degree_crosscheck(GraphStream& corpus, const std::vector<SignPattern>& patterns,
                       unsigned jobs, const CrosscheckSink& sink) {
  detail::ordered_parallel<std::vector<CrosscheckRow>>(
      corpus, jobs, [&patterns](const CorpusItem& item) { return crosscheck_graph(item.graph, patterns); },
      [&sink](const std::vector<CrosscheckRow>& rows) {
        for (const auto& r : rows) sink(r);
      });
}

std::vector<CrosscheckRow> degree_crosscheck(const CorpusSpec& spec,
                                             const std::vector<SignPattern>& patterns,
                                             unsigned jobs) {
  auto corpus = open_corpus(spec);
  std::vector<CrosscheckRow> rows;
  degree_crosscheck(*corpus, patterns, jobs, [&rows](const CrosscheckRow& r) { rows.push_back(r); });
  return rows;
}

}  // namespace eccaudit
