#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "char2forms/field.hpp"

namespace char2forms {

/// Dense matrix over GF(2^m). This is the Gram-matrix type used by every
/// classification routine; all entries share one context and values are
/// stored as raw element bits.
class Matrix {
 public:
  Matrix(const FieldCtx& ctx, int rows, int cols);
  static Matrix identity(const FieldCtx& ctx, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldCtx& ctx() const { return *ctx_; }
  bool is_square() const { return rows_ == cols_; }

  std::uint16_t get(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, std::uint16_t v);
  FieldElem at(int i, int j) const { return FieldElem(*ctx_, get(i, j)); }

  Matrix operator+(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  Matrix transpose() const;
  Matrix scaled(std::uint16_t c) const;

  bool is_zero() const;
  bool is_symmetric() const;      // square only
  bool is_zero_diagonal() const;  // square only
  bool is_invertible() const;     // square only
  bool is_diagonal() const;

  int rank() const;
  /// Echelonized kernel basis (row vectors), deterministic: one vector per
  /// free column of the reduced echelon form, free columns left to right.
  std::vector<std::vector<std::uint16_t>> kernel_basis() const;
  std::optional<Matrix> inverse() const;

  Matrix block(int r0, int c0, int nrows, int ncols) const;
  void set_block(int r0, int c0, const Matrix& b);
  /// Row-major flattening, used by the span/echelon machinery.
  std::vector<std::uint16_t> vectorized() const { return a_; }
  static Matrix from_vector(const FieldCtx& ctx, int rows, int cols,
                            const std::vector<std::uint16_t>& v);

  std::uint16_t trace_value() const;
  std::uint16_t determinant() const;

 private:
  void require_same_ctx(const Matrix& o) const;
  const FieldCtx* ctx_;
  int rows_, cols_;
  std::vector<std::uint16_t> a_;
};

// Standard matrices. All are square of size n over ctx.
Matrix s_form(const FieldCtx& ctx, int n);                    // antidiag(1,...,1)
Matrix pi_form(const FieldCtx& ctx, int n);                   // Pi_n, both parities of n
Matrix j_form(const FieldCtx& ctx, int n);                    // J_n; in char 2 equal to Pi_n (n even)
Matrix z_form(const FieldCtx& ctx, int n);                    // diag(Pi_2,...,Pi_2), n even
Matrix zhat_form(const FieldCtx& ctx, int n);                 // diag(1, Z(n-1)), n odd
Matrix ztilde_form(const FieldCtx& ctx, int n, int r);        // diag(Z(r), 0)
Matrix stilde_form(const FieldCtx& ctx, int n, int m);        // S(m) block in the upper right corner
Matrix y_form(const FieldCtx& ctx, int n, int r);             // 1_r block at rows 1..r, cols r+1..2r
Matrix ytilde_form(const FieldCtx& ctx, int n, int r);        // y_form + unit at (2r+1, 2r+1)
Matrix unit_matrix(const FieldCtx& ctx, int n, int i, int j); // E^{ij}, 0-based
Matrix t_form(const FieldCtx& ctx, int n, int i, int j);      // I + E^{ii}+E^{jj}+E^{ij}+E^{ji}

/// Bit-packed GF(2) matrix, one machine word per row (n <= 64). Fast path
/// for the exhaustive oracle; agrees with Matrix on mul/rank/kernel.
class PackedMatrixF2 {
 public:
  PackedMatrixF2(int rows, int cols);
  static PackedMatrixF2 from_matrix(const Matrix& m);
  Matrix to_matrix() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int i, int j) const { return (w_[i] >> j) & 1; }
  void set(int i, int j, bool v);

  PackedMatrixF2 operator+(const PackedMatrixF2& o) const;
  PackedMatrixF2 operator*(const PackedMatrixF2& o) const;
  bool operator==(const PackedMatrixF2& o) const = default;
  PackedMatrixF2 transpose() const;
  int rank() const;
  std::vector<std::uint64_t> kernel_basis() const;  // vectors as bit masks

 private:
  int rows_, cols_;
  std::vector<std::uint64_t> w_;
};

}  // namespace char2forms
