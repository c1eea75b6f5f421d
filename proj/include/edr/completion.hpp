#pragma once

// Completion of a row a1..an with a1R + ... + anR = dR to an n x n matrix
// of determinant exactly d.

#include <string>
#include <vector>

#include "edr/matrix.hpp"

namespace edr {

struct TraceEntry {
  std::string name;
  std::vector<Element> values;
};

struct CompletionResult {
  Matrix matrix;
  Element d;
  /// Intermediate witnesses of the construction, in order.
  std::vector<TraceEntry> trace;
};

/// Throws PreconditionError when d does not divide some a_i or the a_i do
/// not generate dR.
CompletionResult complete_row(const std::vector<Element>& a, const Element& d);

/// complete_row(a, 1).
CompletionResult complete_unimodular(const std::vector<Element>& a);

Json completion_to_json(const CompletionResult& r, bool include_trace);

}  // namespace edr
