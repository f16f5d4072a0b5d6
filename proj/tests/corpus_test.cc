#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "eccaudit/corpus.hpp"
#include "eccaudit/graph6.hpp"

using namespace eccaudit;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("eccaudit_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

std::size_t count(std::size_t n, bool connected, bool dedup) {
  return enumerate_labeled(n, connected, dedup).size();
}

}  // namespace

TEST(Enumerate, ConnectedLabeledCounts) {
  EXPECT_EQ(count(1, true, false), 1u);
  EXPECT_EQ(count(2, true, false), 1u);
  EXPECT_EQ(count(3, true, false), 4u);
  EXPECT_EQ(count(4, true, false), 38u);
  EXPECT_EQ(count(5, true, false), 728u);
}

TEST(Enumerate, AllLabeledCounts) {
  EXPECT_EQ(count(4, false, false), 64u);
  EXPECT_EQ(count(5, false, false), 1024u);
}

TEST(Enumerate, DedupCounts) {
  // Unlabeled graphs: 1, 2, 4, 11, 34, 156; connected: 1, 1, 2, 6, 21, 112.
  const std::size_t all[] = {1, 2, 4, 11, 34, 156};
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(count(n, false, true), all[n - 1]) << n;
    EXPECT_EQ(count(n, true, true), connected[n - 1]) << n;
  }
}

TEST(Enumerate, OrderFollowsMask) {
  LabeledEnumerator e(3, false, false);
  std::vector<std::string> got;
  std::vector<std::uint64_t> masks;
  while (auto g = e.next()) {
    got.push_back(encode_graph6(*g));
    masks.push_back(e.mask());
  }
  EXPECT_EQ(masks, (std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(got.front(), "B?");
  EXPECT_EQ(got.back(), "Bw");
}

TEST(Enumerate, RejectsOversizedOrder) {
  EXPECT_THROW(LabeledEnumerator(kMaxEnumerateOrder + 1, true, false), std::invalid_argument);
  EXPECT_THROW(LabeledEnumerator(kMaxDedupOrder + 1, true, true), std::invalid_argument);
}

TEST(Gnp, Extremes) {
  EXPECT_EQ(gnp(4, Rational(0), 7), build_graph(4, {}));
  EXPECT_EQ(gnp(4, Rational(1), 7).size(), 6u);
  EXPECT_THROW(gnp(4, Rational(3, 2), 7), std::invalid_argument);
}

TEST(Gnp, Deterministic) {
  EXPECT_EQ(gnp(6, Rational(1, 2), 42), gnp(6, Rational(1, 2), 42));
  std::set<std::string> seen;
  for (std::uint64_t s = 0; s < 20; ++s) seen.insert(encode_graph6(gnp(10, Rational(1, 2), s)));
  EXPECT_GT(seen.size(), 15u);
}

TEST(UniformBelow, StaysInRange) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_below(rng, 7), 7u);
}

TEST(RandomTree, SmallAndValid) {
  EXPECT_EQ(random_tree(1, 5), build_graph(1, {}));
  EXPECT_EQ(random_tree(2, 5), build_graph(2, {{0, 1}}));
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph t = random_tree(12, s);
    EXPECT_EQ(t.size(), 11u);
    EXPECT_TRUE(is_connected(t));
  }
  EXPECT_EQ(random_tree(30, 9), random_tree(30, 9));
}

TEST(Graph6File, ReadsGraphs) {
  const auto path = write_temp("ok.g6", ">>graph6<<Bw\nBg\r\n\n");
  const auto graphs = read_graph6_stream(path);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[0], parse_graph6("Bw"));
  EXPECT_EQ(graphs[1], parse_graph6("Bg"));
}

TEST(Graph6File, Empty) {
  EXPECT_TRUE(read_graph6_stream(write_temp("empty.g6", "")).empty());
}

TEST(Graph6File, ErrorNamesLine) {
  const auto path = write_temp("bad.g6", "Bw\n!!\n");
  try {
    read_graph6_stream(path);
    FAIL() << "expected CorpusError";
  } catch (const CorpusError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Graph6File, MissingFile) {
  EXPECT_THROW(read_graph6_stream("/nonexistent/eccaudit.g6"), CorpusError);
}

TEST(OpenCorpus, SpecsAndDescriptions) {
  auto s = open_corpus(EnumerateSource{3, 4, true, false});
  std::size_t k = 0;
  while (s->next()) ++k;
  EXPECT_EQ(k, 42u);
  EXPECT_EQ(describe(EnumerateSource{3, 4, true, false}), "enumerate n=3..4 connected");

  auto t = open_corpus(TreeSource{6, 5, 1});
  k = 0;
  while (auto item = t->next()) {
    EXPECT_EQ(item->graph.size(), 5u);
    ++k;
  }
  EXPECT_EQ(k, 5u);

  auto gs = open_corpus(GnpSource{5, Rational(1, 2), 3, 10});
  auto first = gs->next();
  ASSERT_TRUE(first);
  EXPECT_EQ(first->graph, gnp(5, Rational(1, 2), 10));
  auto second = gs->next();
  ASSERT_TRUE(second);
  EXPECT_EQ(second->graph, gnp(5, Rational(1, 2), 11));
}
