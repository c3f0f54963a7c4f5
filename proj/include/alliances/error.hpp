#pragma once

#include <stdexcept>
#include <string>

namespace alliances {

// Every failure the library can raise, so callers can match on kind instead
// of parsing what() strings.
enum class Err {
  malformed_header,
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  unknown_family,
  bad_params,
  parse_error,
  neutrals_overlap_set,
  sigma_rho_out_of_range,
  zero_value_outside_minus_mode,
  graph_too_large_for_exhaustive,
  non_global_spec_unsupported,
  unknown_parameter,
  unknown_proposition,
  bad_threshold,
};

inline const char* to_string(Err e) noexcept {
  switch (e) {
    case Err::malformed_header: return "malformed header";
    case Err::vertex_out_of_range: return "vertex out of range";
    case Err::self_loop: return "self loop";
    case Err::duplicate_edge: return "duplicate edge";
    case Err::unknown_family: return "unknown family";
    case Err::bad_params: return "bad params";
    case Err::parse_error: return "parse error";
    case Err::neutrals_overlap_set: return "neutrals overlap set";
    case Err::sigma_rho_out_of_range: return "sigma/rho out of range";
    case Err::zero_value_outside_minus_mode: return "zero value outside minus mode";
    case Err::graph_too_large_for_exhaustive: return "graph too large for exhaustive search";
    case Err::non_global_spec_unsupported: return "non-global spec unsupported";
    case Err::unknown_parameter: return "unknown parameter";
    case Err::unknown_proposition: return "unknown proposition";
    case Err::bad_threshold: return "bad threshold";
  }
  return "unknown error";
}

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Err kind() const noexcept { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) {
  throw Error(kind, std::string(to_string(kind)) + ": " + msg);
}

}  // namespace alliances
