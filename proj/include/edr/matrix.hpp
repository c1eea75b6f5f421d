#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "edr/ring.hpp"
#include "edr/text.hpp"

namespace edr {

/// Dense row-major matrix over a ring.
class Matrix {
 public:
  /// rows x cols zero matrix; both dimensions must be >= 1.
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  static Matrix identity(const Ring& ring, std::size_t n);
  /// Throws PreconditionError on ragged or empty input and
  /// DescriptorMismatch on foreign entries.
  static Matrix from_rows(const Ring& ring, const std::vector<std::vector<Element>>& rows);
  static Matrix from_integers(const Ring& ring, const std::vector<std::vector<long long>>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  /// Bounds- and ring-checked assignment.
  void set(std::size_t i, std::size_t j, const Element& e);

  std::vector<Element> row(std::size_t i) const;
  bool is_square() const { return rows_ == cols_; }
  bool is_identity() const;
  bool is_diagonal() const;
  Matrix transpose() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// Rows (i, j) <- [[a, b], [c, d]] · rows (i, j).
  void mix_rows(std::size_t i, std::size_t j, const Element& a, const Element& b, const Element& c,
                const Element& d);
  /// Cols (i, j) <- cols (i, j) · [[a, b], [c, d]].
  void mix_cols(std::size_t i, std::size_t j, const Element& a, const Element& b, const Element& c,
                const Element& d);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Element> data_;
};

/// Exact determinant by division-free cofactor expansion over column
/// subsets; square matrices only.
Element determinant(const Matrix& m);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Ring& ring, const Json& rows);
/// Column-aligned grid, one row per line.
std::string format_matrix(const Matrix& m);

}  // namespace edr
