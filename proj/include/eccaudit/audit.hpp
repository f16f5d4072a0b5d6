#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eccaudit/bounds.hpp"
#include "eccaudit/corpus.hpp"
#include "eccaudit/graph.hpp"
#include "eccaudit/rational.hpp"
#include "eccaudit/transform.hpp"

namespace eccaudit {

enum class Verdict { Holds, Violated, Undefined, Inapplicable };

std::string_view to_string(Verdict v);

/// One bound instantiated for one base graph.
///
/// The verdict is a function of the two values: undefined when exact (or the
/// bound) is undefined, inapplicable when exact is defined and the bound is
/// inapplicable, otherwise holds iff exact <= bound.
struct AuditRow {
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;
  SignPattern pattern;
  BoundKind kind = BoundKind::IEci;
  BoundVariant variant = BoundVariant::Statement;
  bool transform_connected = false;
  std::optional<Rational> exact;
  BoundValue bound;
  std::optional<Rational> slack;
  Verdict verdict = Verdict::Undefined;
};

Verdict classify(const std::optional<Rational>& exact, const BoundValue& bound);

struct AuditOptions {
  std::vector<SignPattern> patterns{all_patterns().begin(), all_patterns().end()};
  std::vector<BoundKind> kinds{kAllKinds.begin(), kAllKinds.end()};
  std::vector<BoundVariant> variants{kAllVariants.begin(), kAllVariants.end()};
  unsigned jobs = 1;
};

/// Rows for one base graph, in (pattern, kind, variant) report order.
/// Disconnected or edgeless base graphs get an inapplicable bound on every row.
std::vector<AuditRow> audit_graph(const Graph& g, const AuditOptions& options);

using AuditSink = std::function<void(const AuditRow&)>;

/// Streams rows in corpus order regardless of options.jobs.
void run_audit(GraphStream& corpus, const AuditOptions& options, const AuditSink& sink);
std::vector<AuditRow> run_audit(const CorpusSpec& spec, const AuditOptions& options);

/// What a crosscheck row compares.
enum class CheckKind {
  Degree,           // constructed degree vs closed-form prediction (match: equal)
  EccCap,           // eccentricity in a connected transform vs cap (match: actual <= cap)
  ComplementDegree  // deg in G^p + deg in G^partner(p) vs n+m-1 (match: equal)
};

std::string_view to_string(CheckKind c);

struct CrosscheckRow {
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;
  SignPattern pattern;
  CheckKind check = CheckKind::Degree;
  std::size_t index = 0;  // provenance index in the transform
  Provenance provenance;
  std::int64_t actual = 0;
  std::optional<std::int64_t> expected;  // nullopt: undefined cap
  bool match = false;
};

/// Degree rows for every pattern and transformed vertex, eccentricity-cap rows
/// for connected transforms, then complement-degree rows for each pattern
/// whose partner sorts after it.
std::vector<CrosscheckRow> crosscheck_graph(const Graph& g,
                                            const std::vector<SignPattern>& patterns);

using CrosscheckSink = std::function<void(const CrosscheckRow&)>;

void degree_crosscheck(GraphStream& corpus, const std::vector<SignPattern>& patterns,
                       unsigned jobs, const CrosscheckSink& sink);
std::vector<CrosscheckRow> degree_crosscheck(const CorpusSpec& spec,
                                             const std::vector<SignPattern>& patterns,
                                             unsigned jobs = 1);

}  // namespace eccaudit
