#include "char2forms/matrix.hpp"

#include <gtest/gtest.h>

#include "char2forms/io.hpp"
#include "test_util.hpp"

using namespace char2forms;
using testutil::random_invertible;
using testutil::random_matrix;
using testutil::random_symmetric;

namespace {
const FieldCtx& f2 = FieldCtx::get(1);
const FieldCtx& f4 = FieldCtx::get(2);
}  // namespace

TEST(StandardForms, AntidiagonalS) {
  Matrix s = s_form(f2, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(s.get(i, j), i + j == 2 ? 1 : 0);
}

TEST(StandardForms, ZIsPiBlocks) {
  Matrix z = z_form(f2, 4);
  Matrix expected(f2, 4, 4);
  expected.set_block(0, 0, pi_form(f2, 2));
  expected.set_block(2, 2, pi_form(f2, 2));
  EXPECT_EQ(z, expected);
  EXPECT_THROW(z_form(f2, 3), DomainError);
}

TEST(StandardForms, TFormIsSymmetricInvertibleTransposition) {
  Matrix t = t_form(f2, 3, 0, 1);
  EXPECT_TRUE(t.is_symmetric());
  EXPECT_TRUE(t.is_invertible());
  Matrix expected = Matrix::identity(f2, 3) + unit_matrix(f2, 3, 0, 0) + unit_matrix(f2, 3, 1, 1) +
                    unit_matrix(f2, 3, 0, 1) + unit_matrix(f2, 3, 1, 0);
  EXPECT_EQ(t, expected);
  // In characteristic 2 the T matrix is the transposition permutation.
  EXPECT_EQ(t * t, Matrix::identity(f2, 3));
}

TEST(StandardForms, JFormEqualsPiInChar2) {
  EXPECT_EQ(j_form(f2, 6), pi_form(f2, 6));
  EXPECT_THROW(j_form(f2, 5), DomainError);
}

TEST(StandardForms, PiOdd) {
  Matrix p = pi_form(f2, 5);
  EXPECT_TRUE(p.is_symmetric());
  EXPECT_TRUE(p.is_invertible());
  EXPECT_EQ(p.get(2, 2), 1);
  EXPECT_EQ(p.get(0, 3), 1);
  EXPECT_EQ(p.get(1, 4), 1);
}

TEST(StandardForms, ZhatAndStilde) {
  Matrix zh = zhat_form(f2, 3);
  EXPECT_EQ(zh.get(0, 0), 1);
  EXPECT_EQ(zh.get(1, 2), 1);
  EXPECT_EQ(zh.get(2, 1), 1);
  Matrix st = stilde_form(f2, 5, 1);
  EXPECT_EQ(st.get(0, 4), 1);
  EXPECT_EQ(st.rank(), 1);
  EXPECT_EQ((st + st.transpose()).rank(), 2);
  EXPECT_THROW(stilde_form(f2, 3, 2), DomainError);
}

TEST(StandardForms, YForms) {
  Matrix y = y_form(f2, 4, 1);
  EXPECT_EQ(y.get(0, 1), 1);
  EXPECT_EQ(y.rank(), 1);
  Matrix yt = ytilde_form(f2, 4, 1);
  EXPECT_EQ(yt.get(2, 2), 1);
  EXPECT_THROW(ytilde_form(f2, 4, 2), DomainError);
}

TEST(MatrixOps, MulIdentityAndTransposeInvolution) {
  std::mt19937_64 rng(11);
  Matrix b = random_matrix(f4, 5, rng);
  EXPECT_EQ(Matrix::identity(f4, 5) * b, b);
  EXPECT_EQ(b.transpose().transpose(), b);
}

TEST(MatrixOps, DimensionMismatch) {
  Matrix a(f2, 2, 2), b(f2, 3, 3);
  EXPECT_THROW(a * b, DomainError);
  EXPECT_THROW(a + b, DomainError);
  Matrix rect(f2, 2, 3);
  EXPECT_THROW(rect.is_symmetric(), DomainError);
}

TEST(MatrixOps, RankExamples) {
  EXPECT_EQ(Matrix::identity(f2, 5).rank(), 5);
  EXPECT_TRUE(Matrix::identity(f2, 5).kernel_basis().empty());
  EXPECT_EQ(z_form(f2, 6).rank(), 6);
  Matrix st = stilde_form(f2, 5, 1);
  EXPECT_EQ((st + st.transpose()).rank(), 2);
}

TEST(MatrixOps, KernelDeterministicAndCorrect) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    Matrix a = random_matrix(f4, 5, rng);
    auto ker = a.kernel_basis();
    EXPECT_EQ(static_cast<int>(ker.size()), 5 - a.rank());
    for (const auto& v : ker) {
      for (int i = 0; i < 5; ++i) {
        std::uint16_t acc = 0;
        for (int j = 0; j < 5; ++j) acc = f4.add(acc, f4.mul(a.get(i, j), v[j]));
        EXPECT_EQ(acc, 0);
      }
    }
    EXPECT_EQ(ker, a.kernel_basis());
  }
}

TEST(MatrixOps, InverseRoundTrip) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 25; ++t) {
    Matrix m = random_invertible(f4, 4, rng);
    auto inv = m.inverse();
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(m * *inv, Matrix::identity(f4, 4));
  }
  Matrix sing(f2, 2, 2);
  EXPECT_FALSE(sing.inverse().has_value());
}

TEST(MatrixOps, Predicates) {
  Matrix z = z_form(f2, 4);
  EXPECT_TRUE(z.is_symmetric());
  EXPECT_TRUE(z.is_zero_diagonal());
  EXPECT_TRUE(z.is_invertible());
  Matrix id = Matrix::identity(f2, 4);
  EXPECT_TRUE(id.is_symmetric());
  EXPECT_FALSE(id.is_zero_diagonal());
  Matrix e12 = unit_matrix(f2, 2, 0, 1);
  EXPECT_FALSE(e12.is_symmetric());
  EXPECT_TRUE(e12.is_zero_diagonal());
  EXPECT_FALSE(e12.is_invertible());
}

TEST(MatrixOps, RankInvariants) {
  std::mt19937_64 rng(19);
  for (const FieldCtx* f : {&f2, &f4}) {
    for (int t = 0; t < 30; ++t) {
      Matrix a = random_matrix(*f, 5, rng);
      EXPECT_EQ(a.rank(), a.transpose().rank());
      Matrix m = random_invertible(*f, 5, rng);
      EXPECT_EQ((m * a * m.transpose()).rank(), a.rank());
    }
  }
}

// Congruence preserves symmetry and, for symmetric matrices, the
// zero-diagonal property.
TEST(MatrixOps, CongruencePreservesSymmetryAndZeroDiagonal) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    Matrix b = testutil::random_symmetric_zero_diagonal(f4, 5, rng);
    Matrix m = random_invertible(f4, 5, rng);
    Matrix c = m * b * m.transpose();
    EXPECT_TRUE(c.is_symmetric());
    EXPECT_TRUE(c.is_zero_diagonal());
    Matrix s = random_symmetric(f4, 5, rng);
    EXPECT_TRUE((m * s * m.transpose()).is_symmetric());
  }
}

TEST(MatrixOps, Determinant) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    Matrix a = random_matrix(f4, 4, rng);
    EXPECT_EQ(a.determinant() != 0, a.is_invertible());
    Matrix b = random_matrix(f4, 4, rng);
    EXPECT_EQ((a * b).determinant(), f4.mul(a.determinant(), b.determinant()));
  }
}

TEST(PackedF2, AgreesWithGenericUpTo64) {
  std::mt19937_64 rng(31);
  for (int n : {1, 3, 8, 17, 33, 64}) {
    for (int t = 0; t < 5; ++t) {
      Matrix a = random_matrix(f2, n, rng), b = random_matrix(f2, n, rng);
      PackedMatrixF2 pa = PackedMatrixF2::from_matrix(a), pb = PackedMatrixF2::from_matrix(b);
      EXPECT_EQ((pa * pb).to_matrix(), a * b);
      EXPECT_EQ((pa + pb).to_matrix(), a + b);
      EXPECT_EQ(pa.transpose().to_matrix(), a.transpose());
      EXPECT_EQ(pa.rank(), a.rank());
      auto pk = pa.kernel_basis();
      auto gk = a.kernel_basis();
      ASSERT_EQ(pk.size(), gk.size());
      for (size_t i = 0; i < pk.size(); ++i)
        for (int j = 0; j < n; ++j)
          EXPECT_EQ((pk[i] >> j) & 1, gk[i][j]);
    }
  }
  EXPECT_THROW(PackedMatrixF2::from_matrix(random_matrix(f4, 2, rng)), DomainError);
}

TEST(MatrixText, RoundTripAndErrors) {
  std::mt19937_64 rng(37);
  for (const FieldCtx* f : {&f2, &f4, &FieldCtx::get(8)}) {
    Matrix m = random_matrix(*f, 4, rng);
    EXPECT_EQ(matrix_from_text(matrix_to_text(m)), m);
  }
  EXPECT_EQ(matrix_from_text("2 1\n0 1\n1 0\n"), pi_form(f2, 2));
  Matrix g(f4, 1, 1);
  g.set(0, 0, 3);
  EXPECT_EQ(matrix_from_text("1 2\n3\n"), g);
  EXPECT_THROW(matrix_from_text("2 1\n0 1\n1\n"), ParseError);   // truncated
  EXPECT_THROW(matrix_from_text("2 1\n0 1\n1 0\n1\n"), ParseError);  // trailing
  EXPECT_THROW(matrix_from_text("2 1\n0 2\n1 0\n"), ParseError);  // entry out of range
  EXPECT_THROW(matrix_from_text("x"), ParseError);
  EXPECT_THROW(matrix_from_text("2 99\n0 1\n1 0\n"), ParseError);
}
