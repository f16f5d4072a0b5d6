#include <gtest/gtest.h>

#include "eccaudit/audit.hpp"
#include "eccaudit/graph6.hpp"
#include "oracle.hpp"

using namespace eccaudit;

namespace {

const Graph kP3 = build_graph(3, {{0, 1}, {1, 2}});
const Graph kC4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});

AuditRow one(const Graph& g, const char* p, BoundKind k) {
  AuditOptions o;
  o.patterns = {SignPattern::parse(p)};
  o.kinds = {k};
  o.variants = {BoundVariant::Statement};
  const auto rows = audit_graph(g, o);
  EXPECT_EQ(rows.size(), 1u);
  return rows.at(0);
}

}  // namespace

TEST(Classify, Rules) {
  EXPECT_EQ(classify(Rational(1), BoundValue::of(2)), Verdict::Holds);
  EXPECT_EQ(classify(Rational(2), BoundValue::of(2)), Verdict::Holds);
  EXPECT_EQ(classify(Rational(3), BoundValue::of(2)), Verdict::Violated);
  EXPECT_EQ(classify(std::nullopt, BoundValue::of(2)), Verdict::Undefined);
  EXPECT_EQ(classify(std::nullopt, BoundValue::inapplicable("x")), Verdict::Undefined);
  EXPECT_EQ(classify(Rational(1), BoundValue::inapplicable("x")), Verdict::Inapplicable);
  EXPECT_EQ(classify(Rational(1), BoundValue::undefined("x")), Verdict::Undefined);
}

TEST(Audit, TotalGraphOfP3) {
  const auto r = one(kP3, "+++", BoundKind::M1Eci);
  EXPECT_EQ(r.exact, Rational(68));
  EXPECT_EQ(r.bound.value, 92);
  EXPECT_EQ(r.slack, Rational(24));
  EXPECT_EQ(r.verdict, Verdict::Holds);
}

TEST(Audit, PlusMinusMinusOfP3) {
  const auto r = one(kP3, "+--", BoundKind::Eci1);
  EXPECT_EQ(r.exact, Rational(76));
  EXPECT_EQ(r.bound.value, 128);
  EXPECT_EQ(r.slack, Rational(52));
  EXPECT_EQ(r.verdict, Verdict::Holds);
}

TEST(Audit, MinusPlusPlusOfC4) {
  const auto m = one(kC4, "-++", BoundKind::M1Eci);
  EXPECT_EQ(m.exact, Rational(200));
  EXPECT_EQ(m.bound.value, 300);
  EXPECT_EQ(m.verdict, Verdict::Holds);
  const auto i = one(kC4, "-++", BoundKind::IEci);
  EXPECT_EQ(i.exact, Rational(7, 6));
  EXPECT_EQ(i.bound.value, Rational(13, 36));
  EXPECT_EQ(i.verdict, Verdict::Violated);
  EXPECT_EQ(i.slack, Rational(13, 36) - Rational(7, 6));
}

TEST(Audit, MinusPlusMinusOfP3IsUndefined) {
  AuditOptions o;
  o.patterns = {SignPattern::parse("-+-")};
  const auto rows = audit_graph(kP3, o);
  EXPECT_EQ(rows.size(), 5u);  // four kinds plus the ECI1 proof variant
  for (const auto& r : rows) {
    EXPECT_FALSE(r.transform_connected);
    EXPECT_FALSE(r.exact.has_value());
    EXPECT_FALSE(r.slack.has_value());
    EXPECT_EQ(r.verdict, Verdict::Undefined);
  }
}

TEST(Audit, RowOrderAndCount) {
  const auto rows = audit_graph(kC4, AuditOptions{});
  ASSERT_EQ(rows.size(), 35u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto a = std::tie(rows[i - 1].pattern, rows[i - 1].kind, rows[i - 1].variant);
    const auto b = std::tie(rows[i].pattern, rows[i].kind, rows[i].variant);
    EXPECT_LT(a, b);
  }
  EXPECT_EQ(rows.front().pattern.to_string(), "+++");
  EXPECT_EQ(rows.back().pattern.to_string(), "---");
}

TEST(Audit, OptionsAreNormalized) {
  AuditOptions o;
  o.patterns = {SignPattern::parse("---"), SignPattern::parse("+++"), SignPattern::parse("---")};
  o.kinds = {BoundKind::M1Eci1, BoundKind::IEci};
  o.variants = {BoundVariant::Statement};
  const auto rows = audit_graph(kC4, o);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].pattern.to_string(), "+++");
  EXPECT_EQ(rows[0].kind, BoundKind::IEci);
  EXPECT_EQ(rows[3].kind, BoundKind::M1Eci1);
}

TEST(Audit, SkippedBaseGraphsStillReportExact) {
  AuditOptions o;
  o.patterns = {SignPattern::parse("-++")};
  o.kinds = {BoundKind::M1Eci};
  const Graph two_k2 = build_graph(4, {{0, 1}, {2, 3}});
  const auto rows = audit_graph(two_k2, o);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].exact.has_value());
  EXPECT_EQ(rows[0].bound.status, BoundValue::Status::Inapplicable);
  EXPECT_EQ(rows[0].verdict, Verdict::Inapplicable);
  const auto edgeless = audit_graph(build_graph(3, {}), o);
  EXPECT_EQ(edgeless[0].bound.status, BoundValue::Status::Inapplicable);
}

TEST(Audit, ExactMatchesOracle) {
  for (const Graph& g : enumerate_labeled(4, true, false)) {
    const auto a = oracle::adjacency(g);
    for (const auto& r : audit_graph(g, AuditOptions{})) {
      const auto idx = oracle::ecc_invariants(oracle::transform(a, r.pattern));
      ASSERT_EQ(idx.has_value(), r.exact.has_value());
      if (!idx) continue;
      std::optional<Rational> want;
      switch (r.kind) {
        case BoundKind::IEci: want = idx->i_eci; break;
        case BoundKind::M1Eci: want = Rational(idx->m1_eci); break;
        case BoundKind::Eci1: want = Rational(idx->eci1); break;
        case BoundKind::M1Eci1: want = Rational(idx->m1_eci1); break;
      }
      EXPECT_EQ(r.exact, want) << r.graph6;
    }
  }
}

TEST(Audit, ParallelMatchesSerial) {
  AuditOptions serial;
  AuditOptions parallel;
  parallel.jobs = 4;
  const auto a = run_audit(EnumerateSource{1, 5, true, false}, serial);
  const auto b = run_audit(EnumerateSource{1, 5, true, false}, parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].graph6, b[i].graph6);
    EXPECT_EQ(a[i].exact, b[i].exact);
    EXPECT_EQ(a[i].verdict, b[i].verdict);
  }
}

TEST(Audit, CorpusErrorsPropagate) {
  EXPECT_THROW(run_audit(FileSource{"/nonexistent.g6"}, AuditOptions{}), CorpusError);
}

TEST(Crosscheck, TotalGraphOfP3AllMatch) {
  const auto rows = crosscheck_graph(kP3, {SignPattern::parse("+++")});
  std::size_t degree_rows = 0;
  for (const auto& r : rows) {
    if (r.check == CheckKind::Degree) ++degree_rows;
    EXPECT_TRUE(r.match);
  }
  EXPECT_EQ(degree_rows, 5u);
}

TEST(Crosscheck, MinusMinusPlusOfP3ReportsMismatch) {
  const auto rows = crosscheck_graph(kP3, {SignPattern::parse("--+")});
  std::vector<std::size_t> bad;
  for (const auto& r : rows) {
    if (r.check != CheckKind::Degree) continue;
    if (!r.match) {
      bad.push_back(r.index);
      EXPECT_EQ(r.actual, 2);
      EXPECT_EQ(r.expected, 3);
    }
  }
  EXPECT_EQ(bad, (std::vector<std::size_t>{0, 2}));
}

TEST(Crosscheck, MinusPlusPlusOfC4AllMatch) {
  const auto rows = crosscheck_graph(kC4, {SignPattern::parse("-++")});
  std::size_t degree_rows = 0;
  for (const auto& r : rows) {
    if (r.check == CheckKind::Degree) {
      ++degree_rows;
      EXPECT_TRUE(r.match) << r.index;
    }
  }
  EXPECT_EQ(degree_rows, 8u);
}

TEST(Crosscheck, ComplementDegreeRows) {
  const auto all = std::vector<SignPattern>(all_patterns().begin(), all_patterns().end());
  const auto rows = crosscheck_graph(kC4, all);
  std::size_t n = 0;
  for (const auto& r : rows) {
    if (r.check != CheckKind::ComplementDegree) continue;
    ++n;
    EXPECT_EQ(r.expected, 7);
    EXPECT_TRUE(r.match);
  }
  EXPECT_EQ(n, 4u * 8u);
}

TEST(Crosscheck, DisconnectedTransformHasNoEccRows) {
  const auto rows = crosscheck_graph(kP3, {SignPattern::parse("-+-")});
  for (const auto& r : rows) EXPECT_NE(r.check, CheckKind::EccCap);
}
