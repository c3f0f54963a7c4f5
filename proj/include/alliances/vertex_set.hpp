#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "alliances/error.hpp"

namespace alliances {

// Subset of a fixed universe {0, ..., n-1}, packed into 64-bit words.
// Membership, insert and erase are O(1); set-wide operations are O(n/64).
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) {
    if (universe < 0) fail(Err::bad_params, "universe must be non-negative");
    n_ = universe;
    words_.assign((universe + 63) / 64, 0);
  }

  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  static VertexSet from_indices(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~0ull;
    s.trim();
    return s;
  }

  int universe() const { return n_; }

  bool contains(int v) const {
    if (v < 0 || v >= n_) return false;
    return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  void insert(int v) {
    require(v);
    words_[static_cast<size_t>(v) >> 6] |= 1ull << (v & 63);
  }

  void erase(int v) {
    require(v);
    words_[static_cast<size_t>(v) >> 6] &= ~(1ull << (v & 63));
  }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& o) const {
    size_t k = std::min(words_.size(), o.words_.size());
    for (size_t i = 0; i < k; ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  int intersection_count(const VertexSet& o) const {
    size_t k = std::min(words_.size(), o.words_.size());
    int c = 0;
    for (size_t i = 0; i < k; ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  bool is_subset_of(const VertexSet& o) const {
    size_t k = std::min(words_.size(), o.words_.size());
    for (size_t i = 0; i < k; ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    for (size_t i = k; i < words_.size(); ++i) {
      if (words_[i]) return false;
    }
    return true;
  }

  VertexSet complement() const {
    VertexSet s(n_);
    for (size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(i * 64) + b);
        w &= w - 1;
      }
    }
  }

  // Bulk assignment from the low bits of a mask; only valid for universes
  // that fit one word. Lets hot enumeration loops reuse one set object.
  void assign_low_bits(std::uint64_t bits) {
    if (n_ > 64) fail(Err::bad_params, "assign_low_bits needs universe <= 64");
    if (!words_.empty()) {
      words_[0] = bits;
      trim();
    } else if (bits != 0) {
      fail(Err::vertex_out_of_range, "bits set outside empty universe");
    }
  }

  std::uint64_t low_bits() const { return words_.empty() ? 0 : words_[0]; }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void require(int v) const {
    if (v < 0 || v >= n_)
      fail(Err::vertex_out_of_range,
           "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
  }

  void trim() {
    if (words_.empty()) return;
    int rem = n_ & 63;
    if (rem) words_.back() &= (~0ull) >> (64 - rem);
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Order by sorted member sequences, e.g. {0,1,3} < {0,2}.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto av = a.to_vector();
  auto bv = b.to_vector();
  return std::lexicographical_compare(av.begin(), av.end(), bv.begin(), bv.end());
}

inline std::string to_csv(const VertexSet& s) {
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

// Accepts "0,2,5" with optional whitespace; an empty string is the empty set.
inline VertexSet parse_vertex_csv(int universe, const std::string& text) {
  VertexSet s(universe);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) return s;
  while (true) {
    skip_ws();
    size_t start = i;
    while (i < text.size() && text[i] != ',') ++i;
    size_t end = i;
    while (end > start && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
    if (end == start) fail(Err::parse_error, "empty vertex entry in '" + text + "'");
    int v = 0;
    try {
      size_t used = 0;
      v = std::stoi(text.substr(start, end - start), &used);
      if (used != end - start) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail(Err::parse_error, "bad vertex '" + text.substr(start, end - start) + "'");
    }
    s.insert(v);
    if (i == text.size()) break;
    ++i;  // skip comma
  }
  return s;
}

}  // namespace alliances
