#include "opdef/matrix.hpp"

#include <utility>

namespace opdef {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::column_list() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw InputError("matrix-vector shape mismatch");
  Vector y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(x[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (sgn(a) != 0) y[r] += a * x[c];
    }
  }
  return y;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) m(i, j) += x * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum shape mismatch");
  Matrix m(a);
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference shape mismatch");
  Matrix m(a);
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Gauss-Jordan elimination restricted to pivots in columns [0, pivot_cols).
std::vector<std::size_t> eliminate(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Scalar inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (sgn(m(row, c)) != 0) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rref rref(Matrix a) {
  auto pivots = eliminate(a, a.cols());
  return Rref{std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).rank(); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw InputError("solve: right-hand side has wrong length");
  return LinearSolver(a).solve(b);
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  const Rref r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> image_basis(const Matrix& a) {
  const Rref r = rref(a.transpose());
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < r.rank(); ++i) basis.push_back(r.reduced.row(i));
  return basis;
}

CokerProjection coker_projection(const Matrix& a) {
  const Rref r = rref(a.transpose());
  const std::size_t m = a.rows();
  std::vector<bool> is_pivot(m, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  CokerProjection out;
  for (std::size_t i = 0; i < r.rank(); ++i) out.image.push_back(r.reduced.row(i));
  for (std::size_t k = 0; k < m; ++k)
    if (!is_pivot[k]) out.complement.push_back(k);
  out.projection = Matrix(out.complement.size(), m);
  for (std::size_t j = 0; j < out.complement.size(); ++j) {
    const std::size_t k = out.complement[j];
    out.projection(j, k) = 1;
    for (std::size_t i = 0; i < r.rank(); ++i) out.projection(j, r.pivots[i]) = -r.reduced(i, k);
  }
  return out;
}

LinearSolver::LinearSolver(const Matrix& a) : rows_(a.rows()), cols_(a.cols()) {
  Matrix aug(rows_, cols_ + rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = a(r, c);
    aug(r, cols_ + r) = 1;
  }
  pivots_ = eliminate(aug, cols_);
  reduced_ = Matrix(rows_, cols_);
  transform_ = Matrix(rows_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) reduced_(r, c) = aug(r, c);
    for (std::size_t c = 0; c < rows_; ++c) transform_(r, c) = aug(r, cols_ + c);
  }
}

Vector LinearSolver::reduce(const Vector& b) const {
  if (b.size() != rows_) throw InputError("solve: right-hand side has wrong length");
  return transform_.apply(b);
}

std::optional<Vector> LinearSolver::solve(const Vector& b) const {
  const Vector c = reduce(b);
  for (std::size_t r = pivots_.size(); r < rows_; ++r)
    if (sgn(c[r]) != 0) return std::nullopt;
  Vector x(cols_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = c[i];
  return x;
}

bool LinearSolver::in_image(const Vector& b) const {
  const Vector c = reduce(b);
  for (std::size_t r = pivots_.size(); r < rows_; ++r)
    if (sgn(c[r]) != 0) return false;
  return true;
}

std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(vectors, dim));
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
  std::vector<Vector> both(a);
  both.insert(both.end(), b.begin(), b.end());
  const auto r = span_rank(both, dim);
  return r == span_rank(a, dim) && r == span_rank(b, dim);
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const Rref r = rref(Matrix::from_rows(vectors, dim));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < r.rank(); ++i) out.push_back(r.reduced.row(i));
  return out;
}

}  // namespace opdef
