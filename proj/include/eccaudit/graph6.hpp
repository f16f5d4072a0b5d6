#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "eccaudit/graph.hpp"

namespace eccaudit {

class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest order representable in the short and 4-byte size forms.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Decodes one graph6 record. A leading ">>graph6<<" header is accepted.
/// Rejects characters outside 63..126, wrong lengths and nonzero padding.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 text (no header, no newline).
std::string encode_graph6(const Graph& g);

}  // namespace eccaudit
