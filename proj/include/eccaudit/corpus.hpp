#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "eccaudit/graph.hpp"
#include "eccaudit/rational.hpp"

namespace eccaudit {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Name of the random-bit generator recorded in report headers. Changing the
/// sampling procedure must bump the version suffix.
inline constexpr const char* kGeneratorName =
    "mt19937_64/v1 (per-graph seed = seed + index; rejection-sampled uniform integers)";

inline constexpr std::size_t kMaxEnumerateOrder = 8;
inline constexpr std::size_t kMaxDedupOrder = 7;

struct EnumerateSource {
  std::size_t n_min = 1;
  std::size_t n_max = 5;
  bool connected_only = true;
  bool dedup = false;
};

struct GnpSource {
  std::size_t n = 8;
  Rational p = Rational(1, 2);
  std::size_t count = 100;
  std::uint64_t seed = 1;
};

struct TreeSource {
  std::size_t n = 8;
  std::size_t count = 100;
  std::uint64_t seed = 1;
};

struct FileSource {
  std::string path;
};

using CorpusSpec = std::variant<EnumerateSource, GnpSource, TreeSource, FileSource>;

/// One-line description for report headers, e.g. "enumerate n=1..5 connected".
std::string describe(const CorpusSpec& spec);

/// A corpus graph and where it came from ("line 3", "#17").
struct CorpusItem {
  Graph graph;
  std::string origin;
};

/// Single-consumer pull stream.
class GraphStream {
 public:
  virtual ~GraphStream() = default;
  virtual std::optional<CorpusItem> next() = 0;
};

/// Uniform integer in [0, bound) from raw 64-bit outputs, by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Each of the n(n-1)/2 pairs, in lexicographic order, is an edge with
/// probability p. p must lie in [0,1] with numerator and denominator below 2^64.
Graph gnp(std::size_t n, const Rational& p, std::uint64_t seed);

/// Uniform labeled tree via a random Pruefer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Every labeled graph on n vertices in increasing order of the edge bitmask,
/// where bit k is the k-th pair in lexicographic order (0,1),(0,2),...,(n-2,n-1).
class LabeledEnumerator {
 public:
  LabeledEnumerator(std::size_t n, bool connected_only, bool dedup);
  std::optional<Graph> next();
  /// Bitmask of the graph most recently returned.
  std::uint64_t mask() const { return mask_ - 1; }

 private:
  bool connected(std::uint64_t mask) const;
  bool canonical(std::uint64_t mask) const;
  Graph build(std::uint64_t mask) const;

  std::size_t n_;
  bool connected_only_;
  bool dedup_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_;
  std::vector<Edge> pairs_;
  // For each non-identity permutation, the image of every pair index.
  std::vector<std::vector<std::uint8_t>> perm_pairs_;
};

std::vector<Graph> enumerate_labeled(std::size_t n, bool connected_only, bool dedup);

/// graph6 file, one graph per nonempty line. A ">>graph6<<" header is
/// tolerated. Malformed lines raise CorpusError naming the line number.
class Graph6FileStream : public GraphStream {
 public:
  explicit Graph6FileStream(const std::string& path);
  std::optional<CorpusItem> next() override;

 private:
  std::string path_;
  std::ifstream in_;
  std::size_t line_ = 0;
};

std::vector<Graph> read_graph6_stream(const std::string& path);

std::unique_ptr<GraphStream> open_corpus(const CorpusSpec& spec);

}  // namespace eccaudit
