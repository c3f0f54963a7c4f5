#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "alliances/error.hpp"

namespace alliances {

// Symbolic subset of Z: everything, a half-line, or an explicit finite set.
// Used for the membership conditions a vertex's degree-split difference
// must satisfy, so it has to cover unbounded ranges exactly.
class IntSet {
 public:
  enum class Kind { all, at_least, at_most, finite };

  IntSet() = default;

  static IntSet all() { return IntSet(Kind::all, 0, {}); }
  static IntSet at_least(long long k) { return IntSet(Kind::at_least, k, {}); }
  static IntSet at_most(long long k) { return IntSet(Kind::at_most, k, {}); }

  static IntSet finite(std::vector<long long> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return IntSet(Kind::finite, 0, std::move(elems));
  }

  Kind kind() const { return kind_; }
  long long bound() const { return bound_; }
  const std::vector<long long>& elements() const { return elems_; }

  bool contains(long long x) const {
    switch (kind_) {
      case Kind::all: return true;
      case Kind::at_least: return x >= bound_;
      case Kind::at_most: return x <= bound_;
      case Kind::finite: return std::binary_search(elems_.begin(), elems_.end(), x);
    }
    return false;
  }

  // Mirror through zero: x is in the result iff -x is in this set.
  IntSet negated() const {
    switch (kind_) {
      case Kind::all: return all();
      case Kind::at_least: return at_most(-bound_);
      case Kind::at_most: return at_least(-bound_);
      case Kind::finite: {
        std::vector<long long> neg;
        neg.reserve(elems_.size());
        for (long long x : elems_) neg.push_back(-x);
        return finite(std::move(neg));
      }
    }
    return all();
  }

  // Canonical printer; parse(to_string(s)) == s.
  std::string to_string() const {
    switch (kind_) {
      case Kind::all: return "all";
      case Kind::at_least: return ">=" + std::to_string(bound_);
      case Kind::at_most: return "<=" + std::to_string(bound_);
      case Kind::finite: {
        std::string out = "{";
        for (size_t i = 0; i < elems_.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(elems_[i]);
        }
        out += '}';
        return out;
      }
    }
    return "all";
  }

  // Grammar: "all" | ">=k" | "<=k" | "<k" | "{a,b,...}".
  // "<k" normalizes to the half-line with bound k-1.
  static IntSet parse(std::string_view text) {
    std::string_view t = trim(text);
    if (t == "all") return all();
    if (t.size() >= 2 && t.substr(0, 2) == ">=") return at_least(parse_int(t.substr(2)));
    if (t.size() >= 2 && t.substr(0, 2) == "<=") return at_most(parse_int(t.substr(2)));
    if (!t.empty() && t[0] == '<') return at_most(parse_int(t.substr(1)) - 1);
    if (!t.empty() && t.front() == '{' && t.back() == '}') {
      std::vector<long long> elems;
      std::string_view body = t.substr(1, t.size() - 2);
      if (!trim(body).empty()) {
        size_t pos = 0;
        while (true) {
          size_t comma = body.find(',', pos);
          std::string_view item = comma == std::string_view::npos
                                      ? body.substr(pos)
                                      : body.substr(pos, comma - pos);
          elems.push_back(parse_int(item));
          if (comma == std::string_view::npos) break;
          pos = comma + 1;
        }
      }
      return finite(std::move(elems));
    }
    fail(Err::parse_error, "bad condition set '" + std::string(text) + "'");
  }

  friend bool operator==(const IntSet&, const IntSet&) = default;

 private:
  IntSet(Kind kind, long long bound, std::vector<long long> elems)
      : kind_(kind), bound_(bound), elems_(std::move(elems)) {}

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  }

  static long long parse_int(std::string_view s) {
    s = trim(s);
    if (s.empty()) fail(Err::parse_error, "expected integer");
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(std::string(s), &used);
    } catch (const std::exception&) {
      fail(Err::parse_error, "bad integer '" + std::string(s) + "'");
    }
    if (used != s.size()) fail(Err::parse_error, "bad integer '" + std::string(s) + "'");
    return v;
  }

  Kind kind_ = Kind::all;
  long long bound_ = 0;
  std::vector<long long> elems_;
};

}  // namespace alliances
