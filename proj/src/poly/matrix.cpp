#include "mfcat/poly/matrix.hpp"

#include "mfcat/error.hpp"

namespace mfcat {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::identity(Ring ring, std::size_t n) {
  return scalar(Polynomial::constant(ring, 1), n);
}

PolyMatrix PolyMatrix::scalar(const Polynomial& c, std::size_t n) {
  PolyMatrix m(c.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

PolyMatrix PolyMatrix::from_rows(Ring ring, const std::vector<std::vector<Polynomial>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::LengthMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      require_same_ring(ring, rows[r][c].ring());
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::parse(Ring ring, const std::vector<std::vector<std::string>>& rows, std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  PolyMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::SchemaError, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Polynomial::parse(ring, rows[r][c]);
  }
  return m;
}

PolyMatrix PolyMatrix::column(Ring ring, std::span<const Polynomial> entries) {
  PolyMatrix m(ring, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : entries_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

std::vector<Polynomial> PolyMatrix::column_vector(std::size_t c) const {
  std::vector<Polynomial> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

long PolyMatrix::max_degree() const {
  long d = -1;
  for (const auto& p : entries_) d = std::max(d, p.total_degree());
  return d;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix m = *this;
  for (auto& p : m.entries_) p = -p;
  return m;
}

namespace {
void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::LengthMismatch, "matrix shape mismatch");
}
}  // namespace

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
  return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.cols_ != b.rows_) throw Error(ErrorCode::LengthMismatch, "matrix product shape mismatch");
  PolyMatrix m(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Polynomial& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        m(i, j) += aik * b(k, j);
      }
    }
  }
  return m;
}

PolyMatrix operator*(const Polynomial& c, const PolyMatrix& a) {
  PolyMatrix m = a;
  for (auto& p : m.entries_) p = c * p;
  return m;
}

std::vector<Polynomial> PolyMatrix::apply(std::span<const Polynomial> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::LengthMismatch, "vector length does not match matrix");
  std::vector<Polynomial> out(rows_, Polynomial(ring_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix m(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  }
  return m;
}

PolyMatrix PolyMatrix::embed(const Ring& target, std::span<const std::size_t> var_map) const {
  PolyMatrix m(target, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i].embed(target, var_map);
  return m;
}

void PolyMatrix::set_block(std::size_t row, std::size_t col, const PolyMatrix& block) {
  require_same_ring(ring_, block.ring_);
  if (row + block.rows_ > rows_ || col + block.cols_ > cols_) throw Error(ErrorCode::LengthMismatch, "block out of range");
  for (std::size_t i = 0; i < block.rows_; ++i) {
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(row + i, col + j) = block(i, j);
  }
}

PolyMatrix PolyMatrix::block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const {
  if (row + rows > rows_ || col + cols > cols_) throw Error(ErrorCode::LengthMismatch, "block out of range");
  PolyMatrix m(ring_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(row + i, col + j);
  }
  return m;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return same_ring(a.ring_, b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring(), b.ring());
  PolyMatrix m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

PolyMatrix block_matrix(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
    throw Error(ErrorCode::LengthMismatch, "incompatible block shapes");
  }
  PolyMatrix m(a.ring(), a.rows() + c.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  m.set_block(a.rows(), 0, c);
  m.set_block(a.rows(), a.cols(), d);
  return m;
}

PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_ring(a.ring(), b.ring());
  PolyMatrix m(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return m;
}

}  // namespace mfcat
