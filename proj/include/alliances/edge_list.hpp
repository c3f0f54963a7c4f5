#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alliances/error.hpp"
#include "alliances/graph.hpp"

namespace alliances {

namespace detail {

// Whitespace-separated integer tokens; anything else is a header error,
// which is the one parse bucket the format defines.
class IntTokens {
 public:
  explicit IntTokens(std::string_view text) : text_(text) {}

  bool next(long long& out) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) return false;
    size_t start = pos_;
    if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
    size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      ++digits;
    }
    if (digits == 0 ||
        (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))))
      fail(Err::malformed_header,
           "expected integer token near '" + std::string(text_.substr(start, 12)) + "'");
    out = std::stoll(std::string(text_.substr(start, pos_ - start)));
    return true;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace detail

// Format: "n m" header then m lines "u v". Whitespace-tolerant on input;
// the serializer below emits the canonical form.
inline Graph parse_edge_list(std::string_view text) {
  detail::IntTokens tok(text);
  long long n = 0, m = 0;
  if (!tok.next(n)) fail(Err::malformed_header, "empty input");
  if (!tok.next(m)) fail(Err::malformed_header, "missing edge count");
  if (n < 0 || m < 0) fail(Err::malformed_header, "negative count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!tok.next(u) || !tok.next(v))
      fail(Err::malformed_header, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Err::vertex_out_of_range,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  long long extra = 0;
  if (tok.next(extra)) fail(Err::malformed_header, "trailing data after edge list");
  return Graph::from_edges(static_cast<int>(n), edges);
}

// Canonical form: header, then edges sorted lexicographically with u < v.
inline std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace alliances
