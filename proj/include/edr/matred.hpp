#pragma once

// Diagonal reduction P·A·Q = D with d_11 | d_22 | ... over Bezout rings.

#include <string>
#include <vector>

#include "edr/matrix.hpp"

namespace edr {

/// Invertible factor emitted by reduce_2x2, with its inverse.
struct ElementaryFactor {
  std::string name;
  bool left = true;
  Matrix M;
  Matrix Minv;
};

struct ReductionResult {
  Matrix P, D, Q;
  Matrix Pinv, Qinv;
  /// Diagonal entries are canonical associates, zeros last.
  bool normalized = false;
  /// reduce_2x2 only: P and Q as ordered products of these.
  std::vector<ElementaryFactor> factors;
};

struct ColumnReduction {
  Element d;
  Matrix Q;     // (a b)·Q = (d 0), det Q = 1
  Matrix Qinv;
};

ColumnReduction column_reduce(const Element& a, const Element& b);

/// A = [[a, 0], [b, c]] with aR + bR + cR = R. D = diag(1, δ).
ReductionResult reduce_2x2(const Matrix& A);

/// Throws Unsupported for rings without total Bezout certificates.
ReductionResult diagonal_reduce(const Matrix& A);

struct VerificationReport {
  bool ok = true;
  std::string failure;  // first failing condition
  explicit operator bool() const { return ok; }
};

VerificationReport verify_reduction(const Matrix& A, const ReductionResult& r);

Json reduction_to_json(const ReductionResult& r, bool verified);

}  // namespace edr
