#pragma once

#include <span>
#include <string>
#include <vector>

#include "mfcat/poly/polynomial.hpp"

namespace mfcat {

// Dense row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(Ring ring, std::size_t n);
  // c * Id_n for a polynomial c.
  static PolyMatrix scalar(const Polynomial& c, std::size_t n);
  static PolyMatrix from_rows(Ring ring, const std::vector<std::vector<Polynomial>>& rows);
  // Parses a matrix given as rows of polynomial strings. A zero-row input
  // yields a 0 x `cols_if_empty` matrix.
  static PolyMatrix parse(Ring ring, const std::vector<std::vector<std::string>>& rows,
                          std::size_t cols_if_empty = 0);
  static PolyMatrix column(Ring ring, std::span<const Polynomial> entries);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<Polynomial>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  std::vector<Polynomial> column_vector(std::size_t c) const;
  long max_degree() const;

  PolyMatrix operator-() const;
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Polynomial& c, const PolyMatrix& a);
  std::vector<Polynomial> apply(std::span<const Polynomial> v) const;

  PolyMatrix transpose() const;
  PolyMatrix embed(const Ring& target, std::span<const std::size_t> var_map) const;
  void set_block(std::size_t row, std::size_t col, const PolyMatrix& block);
  PolyMatrix block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const;

  std::vector<std::vector<std::string>> to_strings() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b);
// [[a, b], [c, d]]
PolyMatrix block_matrix(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d);
PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace mfcat
