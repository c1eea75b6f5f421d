#pragma once

// Ring registry: descriptor expressions and per-ring capability flags.
//
//   z | zmod:<n> | gfpoly:<p> | series[:<order>]
//   product:<expr>,<expr>,...   product(<expr>, ...)
//   text:<expr>,<self|q>        text(<expr>, <self|q|rationals>)

#include <string>
#include <string_view>
#include <vector>

#include "edr/ring.hpp"

namespace edr {

struct RingEntry {
  Ring ring;
  bool finite = false;
  /// bezout() is defined for every pair of elements.
  bool bezout_total = false;
  std::string stable_strategy;
  std::string unit_lift_strategy;
};

/// Parses a descriptor expression. Throws ParseError on malformed input
/// and PreconditionError on invalid parameters (composite p, n < 2, ...).
Ring parse_ring(std::string_view expr);

RingEntry registry_entry(const Ring& ring);
RingEntry make_ring(std::string_view expr);

/// Example descriptors covering every shipped kind, for listings.
std::vector<std::string> shipped_ring_examples();

}  // namespace edr
