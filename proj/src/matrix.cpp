#include "edr/matrix.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace edr {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw PreconditionError("matrix dimensions must be positive");
  data_.assign(rows * cols, ring_.zero());
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<Element>>& rows) {
  if (rows.empty() || rows[0].empty()) throw PreconditionError("matrix must have at least one entry");
  Matrix m(ring, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw PreconditionError("ragged matrix: row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(m.cols_));
    }
    for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_integers(const Ring& ring, const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Element>> out;
  for (const auto& r : rows) {
    std::vector<Element> row;
    for (long long v : r) row.push_back(ring.from_integer(mpz_class(std::to_string(v))));
    out.push_back(std::move(row));
  }
  return from_rows(ring, out);
}

void Matrix::set(std::size_t i, std::size_t j, const Element& e) {
  if (i >= rows_ || j >= cols_) throw PreconditionError("matrix index out of range");
  if (e.ring() != ring_) {
    throw DescriptorMismatch("descriptor mismatch: matrix over " + ring_.expression() +
                             ", entry in " + e.ring().expression());
  }
  (*this)(i, j) = e;
}

std::vector<Element> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_)};
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void Matrix::mix_rows(std::size_t i, std::size_t j, const Element& a, const Element& b,
                      const Element& c, const Element& d) {
  for (std::size_t k = 0; k < cols_; ++k) {
    Element x = (*this)(i, k), y = (*this)(j, k);
    (*this)(i, k) = a * x + b * y;
    (*this)(j, k) = c * x + d * y;
  }
}

void Matrix::mix_cols(std::size_t i, std::size_t j, const Element& a, const Element& b,
                      const Element& c, const Element& d) {
  for (std::size_t k = 0; k < rows_; ++k) {
    Element x = (*this)(k, i), y = (*this)(k, j);
    (*this)(k, i) = x * a + y * c;
    (*this)(k, j) = x * b + y * d;
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.ring_ != b.ring_) {
    throw DescriptorMismatch("descriptor mismatch: " + a.ring_.expression() + " vs " +
                             b.ring_.expression());
  }
  if (a.cols_ != b.rows_) throw PreconditionError("matrix shapes do not match for multiplication");
  Matrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Element& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + x * b(k, j);
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Element determinant(const Matrix& m) {
  if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 20) throw Unsupported("determinant expansion is limited to 20x20");
  // minor(mask): determinant of the last popcount(mask) rows restricted to
  // the columns in mask.
  std::unordered_map<std::uint32_t, Element> memo;
  std::function<Element(std::uint32_t)> minor = [&](std::uint32_t mask) -> Element {
    if (mask == 0) return m.ring().one();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
    Element acc = m.ring().zero();
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      const Element& x = m(row, j);
      if (!x.is_zero()) {
        Element term = x * minor(mask & ~(1u << j));
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor((1u << n) - 1);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Ring& ring, const Json& rows) {
  if (!rows.is_array() || rows.items().empty()) {
    throw ParseError("rows must be a nonempty array of arrays", rows.position());
  }
  std::vector<std::vector<Element>> out;
  for (const auto& r : rows.items()) {
    if (!r.is_array() || r.items().empty()) throw ParseError("each row must be a nonempty array", r.position());
    if (!out.empty() && r.items().size() != out[0].size()) {
      throw ParseError("ragged matrix: row has " + std::to_string(r.items().size()) +
                           " entries, expected " + std::to_string(out[0].size()),
                       r.position());
    }
    std::vector<Element> row;
    for (const auto& e : r.items()) row.push_back(element_from_json(ring, e));
    out.push_back(std::move(row));
  }
  return Matrix::from_rows(ring, out);
}

std::string format_matrix(const Matrix& m) {
  std::vector<std::string> cells;
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(format_element(m(i, j)));
      width[j] = std::max(width[j], cells.back().size());
    }
  }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      if (j) out += ' ';
      out.append(width[j] - c.size(), ' ');
      out += c;
    }
    out += '\n';
  }
  return out;
}

}  // namespace edr
