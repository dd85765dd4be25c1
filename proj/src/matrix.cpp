#include "char2forms/matrix.hpp"

#include <cassert>
#include <string>

namespace char2forms {

Matrix::Matrix(const FieldCtx& ctx, int rows, int cols)
    : ctx_(&ctx), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
}

Matrix Matrix::identity(const FieldCtx& ctx, int n) {
  Matrix m(ctx, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Matrix::set(int i, int j, std::uint16_t v) {
  if (v >= ctx_->order()) throw DomainError("entry out of field range");
  a_[static_cast<size_t>(i) * cols_ + j] = v;
}

void Matrix::require_same_ctx(const Matrix& o) const {
  if (ctx_ != o.ctx_) throw DomainError("matrix field context mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_ctx(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix addition dimension mismatch");
  Matrix r(*ctx_, rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] ^ o.a_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_ctx(o);
  if (cols_ != o.rows_) throw DomainError("matrix multiplication dimension mismatch");
  Matrix r(*ctx_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::uint16_t aik = get(i, k);
      if (!aik) continue;
      for (int j = 0; j < o.cols_; ++j) {
        std::uint16_t v = o.get(k, j);
        if (v) r.a_[static_cast<size_t>(i) * o.cols_ + j] ^= ctx_->mul(aik, v);
      }
    }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return ctx_ == o.ctx_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::transpose() const {
  Matrix r(*ctx_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, get(i, j));
  return r;
}

Matrix Matrix::scaled(std::uint16_t c) const {
  Matrix r(*ctx_, rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = ctx_->mul(a_[k], c);
  return r;
}

bool Matrix::is_zero() const {
  for (auto v : a_)
    if (v) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) throw DomainError("symmetry is defined for square matrices");
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

bool Matrix::is_zero_diagonal() const {
  if (!is_square()) throw DomainError("zero-diagonal is defined for square matrices");
  for (int i = 0; i < rows_; ++i)
    if (get(i, i)) return false;
  return true;
}

bool Matrix::is_invertible() const {
  if (!is_square()) throw DomainError("invertibility is defined for square matrices");
  return rank() == rows_;
}

bool Matrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && get(i, j)) return false;
  return true;
}

namespace {

// Forward elimination with deterministic pivoting: columns left to right,
// pivot row = first unused row with a nonzero entry.
int echelonize(const FieldCtx& ctx, std::vector<std::vector<std::uint16_t>>& rows,
               std::vector<int>* pivot_cols) {
  if (rows.empty()) return 0;
  const int ncols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    std::uint16_t s = ctx.inv(rows[r][c]);
    for (int j = c; j < ncols; ++j) rows[r][j] = ctx.mul(rows[r][j], s);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || !rows[i][c]) continue;
      std::uint16_t f = rows[i][c];
      for (int j = c; j < ncols; ++j)
        rows[i][j] = ctx.add(rows[i][j], ctx.mul(f, rows[r][j]));
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

int Matrix::rank() const {
  std::vector<std::vector<std::uint16_t>> rows(rows_);
  for (int i = 0; i < rows_; ++i)
    rows[i].assign(a_.begin() + static_cast<size_t>(i) * cols_,
                   a_.begin() + static_cast<size_t>(i + 1) * cols_);
  return echelonize(*ctx_, rows, nullptr);
}

std::vector<std::vector<std::uint16_t>> Matrix::kernel_basis() const {
  std::vector<std::vector<std::uint16_t>> rows(rows_);
  for (int i = 0; i < rows_; ++i)
    rows[i].assign(a_.begin() + static_cast<size_t>(i) * cols_,
                   a_.begin() + static_cast<size_t>(i + 1) * cols_);
  std::vector<int> pivots;
  int r = echelonize(*ctx_, rows, &pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint16_t>> kernel;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint16_t> v(cols_, 0);
    v[f] = 1;
    for (int i = 0; i < r; ++i) v[pivots[i]] = rows[i][f];  // -x = x in char 2
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) throw DomainError("inverse of non-square matrix");
  const int n = rows_;
  std::vector<std::vector<std::uint16_t>> rows(n, std::vector<std::uint16_t>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = get(i, j);
    rows[i][n + i] = 1;
  }
  std::vector<int> pivots;
  int r = echelonize(*ctx_, rows, &pivots);
  if (r < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(*ctx_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.set(i, j, rows[i][n + j]);
  return inv;
}

Matrix Matrix::block(int r0, int c0, int nrows, int ncols) const {
  if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
    throw DomainError("block out of range");
  Matrix b(*ctx_, nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) b.set(i, j, get(r0 + i, c0 + j));
  return b;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DomainError("block out of range");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) set(r0 + i, c0 + j, b.get(i, j));
}

Matrix Matrix::from_vector(const FieldCtx& ctx, int rows, int cols,
                           const std::vector<std::uint16_t>& v) {
  if (static_cast<size_t>(rows) * cols != v.size()) throw DomainError("vector length mismatch");
  Matrix m(ctx, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, v[static_cast<size_t>(i) * cols + j]);
  return m;
}

std::uint16_t Matrix::trace_value() const {
  if (!is_square()) throw DomainError("trace of non-square matrix");
  std::uint16_t t = 0;
  for (int i = 0; i < rows_; ++i) t ^= get(i, i);
  return t;
}

// Row swaps carry no sign in characteristic 2.
std::uint16_t Matrix::determinant() const {
  if (!is_square()) throw DomainError("determinant of non-square matrix");
  const int n = rows_;
  std::vector<std::vector<std::uint16_t>> rows(n);
  for (int i = 0; i < n; ++i)
    rows[i].assign(a_.begin() + static_cast<size_t>(i) * n,
                   a_.begin() + static_cast<size_t>(i + 1) * n);
  std::uint16_t det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (rows[i][c]) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    std::swap(rows[c], rows[p]);
    det = ctx_->mul(det, rows[c][c]);
    std::uint16_t inv = ctx_->inv(rows[c][c]);
    for (int i = c + 1; i < n; ++i) {
      if (!rows[i][c]) continue;
      std::uint16_t f = ctx_->mul(rows[i][c], inv);
      for (int j = c; j < n; ++j) rows[i][j] = ctx_->add(rows[i][j], ctx_->mul(f, rows[c][j]));
    }
  }
  return det;
}

Matrix s_form(const FieldCtx& ctx, int n) {
  Matrix m(ctx, n, n);
  for (int i = 0; i < n; ++i) m.set(i, n - 1 - i, 1);
  return m;
}

Matrix pi_form(const FieldCtx& ctx, int n) {
  Matrix m(ctx, n, n);
  int k = n / 2;
  if (n % 2 == 0) {
    for (int i = 0; i < k; ++i) {
      m.set(i, k + i, 1);
      m.set(k + i, i, 1);
    }
  } else {
    for (int i = 0; i < k; ++i) {
      m.set(i, k + 1 + i, 1);
      m.set(k + 1 + i, i, 1);
    }
    m.set(k, k, 1);
  }
  return m;
}

// J_{2n} = [[0, 1_n], [-1_n, 0]]; with -1 = 1 this is the even Pi block form.
Matrix j_form(const FieldCtx& ctx, int n) {
  if (n % 2) throw DomainError("J form needs even size");
  return pi_form(ctx, n);
}

Matrix z_form(const FieldCtx& ctx, int n) {
  if (n % 2) throw DomainError("Z form needs even size");
  Matrix m(ctx, n, n);
  for (int i = 0; i + 1 < n; i += 2) {
    m.set(i, i + 1, 1);
    m.set(i + 1, i, 1);
  }
  return m;
}

Matrix zhat_form(const FieldCtx& ctx, int n) {
  if (n % 2 == 0) throw DomainError("Zhat form needs odd size");
  Matrix m(ctx, n, n);
  m.set(0, 0, 1);
  m.set_block(1, 1, z_form(ctx, n - 1));
  return m;
}

Matrix ztilde_form(const FieldCtx& ctx, int n, int r) {
  if (r % 2 || r < 0 || r > n) throw DomainError("Ztilde rank must be even and <= n");
  Matrix m(ctx, n, n);
  m.set_block(0, 0, z_form(ctx, r));
  return m;
}

Matrix stilde_form(const FieldCtx& ctx, int n, int m) {
  if (m < 0 || 2 * m > n) throw DomainError("Stilde parameter must satisfy 0 <= 2m <= n");
  Matrix s(ctx, n, n);
  for (int i = 0; i < m; ++i) s.set(i, n - 1 - i, 1);
  return s;
}

Matrix y_form(const FieldCtx& ctx, int n, int r) {
  if (r < 0 || 2 * r > n) throw DomainError("Y form needs 0 <= 2r <= n");
  Matrix m(ctx, n, n);
  for (int i = 0; i < r; ++i) m.set(i, r + i, 1);
  return m;
}

Matrix ytilde_form(const FieldCtx& ctx, int n, int r) {
  if (r < 0 || 2 * r + 1 > n) throw DomainError("Ytilde form needs 0 <= 2r+1 <= n");
  Matrix m = y_form(ctx, n, r);
  m.set(2 * r, 2 * r, 1);
  return m;
}

Matrix unit_matrix(const FieldCtx& ctx, int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("unit matrix index out of range");
  Matrix m(ctx, n, n);
  m.set(i, j, 1);
  return m;
}

Matrix t_form(const FieldCtx& ctx, int n, int i, int j) {
  Matrix m = Matrix::identity(ctx, n);
  m.set(i, i, m.get(i, i) ^ 1);
  m.set(j, j, m.get(j, j) ^ 1);
  m.set(i, j, m.get(i, j) ^ 1);
  m.set(j, i, m.get(j, i) ^ 1);
  return m;
}

PackedMatrixF2::PackedMatrixF2(int rows, int cols) : rows_(rows), cols_(cols), w_(rows, 0) {
  if (cols > 64) throw DomainError("packed matrix supports at most 64 columns");
}

PackedMatrixF2 PackedMatrixF2::from_matrix(const Matrix& m) {
  if (m.ctx().degree() != 1) throw DomainError("packed matrices require GF(2)");
  PackedMatrixF2 p(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.get(i, j)) p.w_[i] |= std::uint64_t{1} << j;
  return p;
}

Matrix PackedMatrixF2::to_matrix() const {
  Matrix m(FieldCtx::get(1), rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (get(i, j)) m.set(i, j, 1);
  return m;
}

void PackedMatrixF2::set(int i, int j, bool v) {
  if (v)
    w_[i] |= std::uint64_t{1} << j;
  else
    w_[i] &= ~(std::uint64_t{1} << j);
}

PackedMatrixF2 PackedMatrixF2::operator+(const PackedMatrixF2& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("packed addition dimension mismatch");
  PackedMatrixF2 r(rows_, cols_);
  for (int i = 0; i < rows_; ++i) r.w_[i] = w_[i] ^ o.w_[i];
  return r;
}

PackedMatrixF2 PackedMatrixF2::operator*(const PackedMatrixF2& o) const {
  if (cols_ != o.rows_) throw DomainError("packed multiplication dimension mismatch");
  PackedMatrixF2 r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    std::uint64_t row = w_[i], acc = 0;
    while (row) {
      int j = __builtin_ctzll(row);
      row &= row - 1;
      acc ^= o.w_[j];
    }
    r.w_[i] = acc;
  }
  return r;
}

PackedMatrixF2 PackedMatrixF2::transpose() const {
  PackedMatrixF2 r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (get(i, j)) r.w_[j] |= std::uint64_t{1} << i;
  return r;
}

int PackedMatrixF2::rank() const {
  std::vector<std::uint64_t> rows = w_;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if ((rows[i] >> c) & 1) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    for (int i = 0; i < rows_; ++i)
      if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

std::vector<std::uint64_t> PackedMatrixF2::kernel_basis() const {
  std::vector<std::uint64_t> rows = w_;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if ((rows[i] >> c) & 1) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    for (int i = 0; i < rows_; ++i)
      if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  std::uint64_t pivot_mask = 0;
  for (int c : pivots) pivot_mask |= std::uint64_t{1} << c;
  std::vector<std::uint64_t> kernel;
  for (int f = 0; f < cols_; ++f) {
    if ((pivot_mask >> f) & 1) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (int i = 0; i < r; ++i)
      if ((rows[i] >> f) & 1) v |= std::uint64_t{1} << pivots[i];
    kernel.push_back(v);
  }
  return kernel;
}

}  // namespace char2forms
