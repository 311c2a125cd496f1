#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "opdef/scalar.hpp"

namespace opdef {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> column_list() const;

  Matrix transpose() const;
  Vector apply(const Vector& x) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Rref {
  Matrix reduced;                  // reduced row-echelon form, same shape as input
  std::vector<std::size_t> pivots; // pivot column of each nonzero row, ascending
  std::size_t rank() const { return pivots.size(); }
};

Rref rref(Matrix a);
std::size_t rank(const Matrix& a);

/// Some x with A x = b, free variables of the RREF set to zero; nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Kernel basis: one vector per free column, that entry set to 1.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Column-space basis: nonzero rows of rref(A^T).
std::vector<Vector> image_basis(const Matrix& a);

/// Complement of im(A) spanned by unit vectors e_k (k not a pivot of the image RREF).
/// `projection` maps y to its coordinates along that complement; y lies in im(A)
/// iff the projection vanishes.
struct CokerProjection {
  Matrix projection;                          // (rows(A) - rank) x rows(A)
  std::vector<std::size_t> complement;        // indices k of the unit vectors spanning the complement
  std::vector<Vector> image;                  // RREF basis of im(A)
  std::size_t dim() const { return complement.size(); }
};

CokerProjection coker_projection(const Matrix& a);

/// Caches the row reduction of A so that A x = b can be solved for many b.
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix& a);

  std::optional<Vector> solve(const Vector& b) const;
  bool in_image(const Vector& b) const;
  std::size_t rank() const { return pivots_.size(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  // transform_ * A = reduced (RREF); only rows >= rank of transform_ matter for consistency.
  Vector reduce(const Vector& b) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Matrix transform_;
  Matrix reduced_;
  std::vector<std::size_t> pivots_;
};

/// Subspace utilities on column-vector lists.
std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t dim);
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim);
/// RREF-canonical basis of span(vectors).
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);

}  // namespace opdef
