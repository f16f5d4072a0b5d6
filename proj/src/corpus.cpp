#include "eccaudit/corpus.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

#include "eccaudit/graph6.hpp"

namespace eccaudit {

namespace {

std::uint64_t to_u64(const Integer& value, const char* what) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw std::invalid_argument(std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

class EnumerateStream : public GraphStream {
 public:
  explicit EnumerateStream(const EnumerateSource& src) : src_(src), n_(src.n_min) {
    if (src.n_min < 1 || src.n_max > kMaxEnumerateOrder || src.n_min > src.n_max) {
      throw std::invalid_argument("enumeration range must satisfy 1 <= n_min <= n_max <= " +
                                  std::to_string(kMaxEnumerateOrder));
    }
    if (src.dedup && src.n_max > kMaxDedupOrder) {
      throw std::invalid_argument("dedup is only supported for n <= " +
                                  std::to_string(kMaxDedupOrder));
    }
    current_.emplace(n_, src.connected_only, src.dedup);
  }

  std::optional<CorpusItem> next() override {
    while (current_) {
      if (auto g = current_->next()) {
        return CorpusItem{std::move(*g), "n=" + std::to_string(n_) + " mask=" +
                                             std::to_string(current_->mask())};
      }
      if (++n_ > src_.n_max) {
        current_.reset();
      } else {
        current_.emplace(n_, src_.connected_only, src_.dedup);
      }
    }
    return std::nullopt;
  }

 private:
  EnumerateSource src_;
  std::size_t n_;
  std::optional<LabeledEnumerator> current_;
};

class GnpStream : public GraphStream {
 public:
  explicit GnpStream(GnpSource src) : src_(std::move(src)) {}
  std::optional<CorpusItem> next() override {
    if (index_ >= src_.count) return std::nullopt;
    const std::uint64_t seed = src_.seed + index_;
    return CorpusItem{gnp(src_.n, src_.p, seed), "#" + std::to_string(index_++)};
  }

 private:
  GnpSource src_;
  std::size_t index_ = 0;
};

class TreeStream : public GraphStream {
 public:
  explicit TreeStream(TreeSource src) : src_(src) {}
  std::optional<CorpusItem> next() override {
    if (index_ >= src_.count) return std::nullopt;
    const std::uint64_t seed = src_.seed + index_;
    return CorpusItem{random_tree(src_.n, seed), "#" + std::to_string(index_++)};
  }

 private:
  TreeSource src_;
  std::size_t index_ = 0;
};

}  // namespace

std::string describe(const CorpusSpec& spec) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EnumerateSource>) {
          out << "enumerate n=" << s.n_min << ".." << s.n_max
              << (s.connected_only ? " connected" : " all") << (s.dedup ? " dedup" : "");
        } else if constexpr (std::is_same_v<T, GnpSource>) {
          out << "gnp n=" << s.n << " p=" << to_string(s.p) << " count=" << s.count
              << " seed=" << s.seed;
        } else if constexpr (std::is_same_v<T, TreeSource>) {
          out << "tree n=" << s.n << " count=" << s.count << " seed=" << s.seed;
        } else {
          out << "file " << s.path;
        }
      },
      spec);
  return out.str();
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;  // largest accepted value
  for (;;) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

Graph gnp(std::size_t n, const Rational& p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw std::invalid_argument("edge probability must lie in [0,1]");
  const std::uint64_t num = to_u64(boost::multiprecision::numerator(p), "probability numerator");
  const std::uint64_t den =
      to_u64(boost::multiprecision::denominator(p), "probability denominator");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (uniform_below(rng, den) < num) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("a tree needs at least one vertex");
  if (n == 1) return Graph::from_edges(1, {});
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(uniform_below(rng, n));

  // Pruefer decoding: repeatedly join the smallest current leaf to the next code entry.
  std::vector<std::size_t> remaining(n, 1);
  for (Vertex c : code) ++remaining[c];
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (remaining[leaf] != 1) ++leaf;
    edges.push_back({std::min(leaf, c), std::max(leaf, c)});
    remaining[leaf] = 0;
    --remaining[c];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v) {
    if (remaining[v] == 1) last.push_back(v);
  }
  edges.push_back({last[0], last[1]});
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

LabeledEnumerator::LabeledEnumerator(std::size_t n, bool connected_only, bool dedup)
    : n_(n), connected_only_(connected_only), dedup_(dedup) {
  if (n < 1 || n > kMaxEnumerateOrder) {
    throw std::invalid_argument("exhaustive enumeration needs 1 <= n <= " +
                                std::to_string(kMaxEnumerateOrder));
  }
  if (dedup && n > kMaxDedupOrder) {
    throw std::invalid_argument("dedup is only supported for n <= " +
                                std::to_string(kMaxDedupOrder));
  }
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) pairs_.push_back({i, j});
  }
  end_ = std::uint64_t{1} << pairs_.size();
  if (dedup_) {
    std::vector<std::uint8_t> index(n * n, 0);
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      index[pairs_[k].first * n + pairs_[k].second] = static_cast<std::uint8_t>(k);
      index[pairs_[k].second * n + pairs_[k].first] = static_cast<std::uint8_t>(k);
    }
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<std::uint8_t> image(pairs_.size());
      for (std::size_t k = 0; k < pairs_.size(); ++k) {
        image[k] = index[perm[pairs_[k].first] * n + perm[pairs_[k].second]];
      }
      perm_pairs_.push_back(std::move(image));
    }
  }
}

bool LabeledEnumerator::connected(std::uint64_t mask) const {
  std::uint32_t adj[kMaxEnumerateOrder] = {};
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if ((mask >> k) & 1u) {
      adj[pairs_[k].first] |= 1u << pairs_[k].second;
      adj[pairs_[k].second] |= 1u << pairs_[k].first;
    }
  }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (std::uint32_t{1} << n_) - 1;
}

bool LabeledEnumerator::canonical(std::uint64_t mask) const {
  for (const auto& image : perm_pairs_) {
    std::uint64_t permuted = 0;
    for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
      permuted |= std::uint64_t{1} << image[std::countr_zero(bits)];
    }
    if (permuted < mask) return false;
  }
  return true;
}

Graph LabeledEnumerator::build(std::uint64_t mask) const {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if ((mask >> k) & 1u) edges.push_back(pairs_[k]);
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n_, edges);
}

std::optional<Graph> LabeledEnumerator::next() {
  while (mask_ < end_) {
    const std::uint64_t mask = mask_++;
    if (connected_only_ && !connected(mask)) continue;
    if (dedup_ && !canonical(mask)) continue;
    return build(mask);
  }
  return std::nullopt;
}

std::vector<Graph> enumerate_labeled(std::size_t n, bool connected_only, bool dedup) {
  LabeledEnumerator e(n, connected_only, dedup);
  std::vector<Graph> out;
  while (auto g = e.next()) out.push_back(std::move(*g));
  return out;
}

Graph6FileStream::Graph6FileStream(const std::string& path) : path_(path), in_(path) {
  if (!in_) throw CorpusError("cannot open graph6 file '" + path + "'");
}

std::optional<CorpusItem> Graph6FileStream::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    try {
      return CorpusItem{parse_graph6(line), "line " + std::to_string(line_)};
    } catch (const std::exception& e) {
      throw CorpusError(path_ + ": line " + std::to_string(line_) + ": " + e.what());
    }
  }
  return std::nullopt;
}

std::vector<Graph> read_graph6_stream(const std::string& path) {
  Graph6FileStream stream(path);
  std::vector<Graph> out;
  while (auto item = stream.next()) out.push_back(std::move(item->graph));
  return out;
}

std::unique_ptr<GraphStream> open_corpus(const CorpusSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::unique_ptr<GraphStream> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EnumerateSource>) {
          return std::make_unique<EnumerateStream>(s);
        } else if constexpr (std::is_same_v<T, GnpSource>) {
          return std::make_unique<GnpStream>(s);
        } else if constexpr (std::is_same_v<T, TreeSource>) {
          if (s.n == 0) throw std::invalid_argument("a tree needs at least one vertex");
          return std::make_unique<TreeStream>(s);
        } else {
          return std::make_unique<Graph6FileStream>(s.path);
        }
      },
      spec);
}

}  // namespace eccaudit
