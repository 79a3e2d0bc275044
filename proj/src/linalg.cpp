#include "secant/linalg.hpp"

#include <sstream>

#include "secant/errors.hpp"

namespace secant {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t k) {
  Matrix m(field, k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols,
                         const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(field, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::from_ints(const Field& field,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatchError("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

std::vector<Scalar> Matrix::row_vector(std::size_t r) const {
  auto view = row(r);
  return {view.begin(), view.end()};
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) {
    throw DimensionMismatchError("append_row: expected " + std::to_string(cols_) +
                                 " entries, got " + std::to_string(values.size()));
  }
  for (const auto& v : values) {
    if (!(v.field() == field_)) throw FieldMismatchError("append_row: foreign field");
    data_.push_back(v);
  }
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatchError("matrix product extents");
  if (!(a.field_ == b.field_)) throw FieldMismatchError("matrix product fields");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw DimensionMismatchError("matrix-vector extents");
  std::vector<Scalar> out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw DimensionMismatchError("stack: column counts differ");
  Matrix out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

Echelon row_echelon(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < a.rows() && a.at(pivot_row, col).is_zero()) ++pivot_row;
    if (pivot_row == a.rows()) continue;
    if (pivot_row != lead) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(lead, c), a.at(pivot_row, c));
    }
    const Scalar scale = a.at(lead, col).inv();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(lead, c) *= scale;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, col).is_zero()) continue;
      const Scalar factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= factor * a.at(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  Matrix reduced(m.field(), 0, m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) reduced.append_row(a.row(r));
  return {std::move(reduced), std::move(pivots)};
}

namespace {

int bareiss_rank(const Matrix& m) {
  // Clear denominators row by row, then eliminate over Z.
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).fraction().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m.at(r, c).fraction();
      a[r][c] = q.get_num() * (lcm / q.get_den());
    }
  }
  mpz_class prev = 1;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < m.rows() && a[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    std::swap(a[lead], a[pivot_row]);
    for (std::size_t r = lead + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        a[r][c] = (a[lead][col] * a[r][c] - a[r][col] * a[lead][c]);
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[lead][col];
    ++lead;
  }
  return static_cast<int>(lead);
}

}  // namespace

int rank(const Matrix& m) {
  if (m.empty()) return 0;
  if (!m.field().is_prime_field()) return bareiss_rank(m);
  return static_cast<int>(row_echelon(m).pivots.size());
}

Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  Matrix basis(f, 0, m.cols());
  const Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(r, free);
    basis.append_row(v);
  }
  return basis;
}

Matrix reduce_modulo_rowspace(const Matrix& v, const Matrix& s) {
  if (v.cols() != s.cols()) {
    throw DimensionMismatchError("reduce_modulo_rowspace: column counts differ");
  }
  Matrix out = v;
  if (s.rows() == 0) return out;
  const Echelon e = row_echelon(s);
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      const std::size_t pc = e.pivots[k];
      if (out.at(r, pc).is_zero()) continue;
      const Scalar factor = out.at(r, pc);
      for (std::size_t c = 0; c < out.cols(); ++c) out.at(r, c) -= factor * e.reduced.at(k, c);
    }
  }
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m.at(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

}  // namespace secant
