#include "char2forms/lie.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace char2forms;
using testutil::random_invertible;
using testutil::random_matrix;
using testutil::random_symmetric;

namespace {
const FieldCtx& f2 = FieldCtx::get(1);
const FieldCtx& f4 = FieldCtx::get(2);

std::vector<int> derived_dims(const AlgebraBasis& g, int depth) {
  std::vector<int> dims{g.dim()};
  for (const auto& t : derived_series(g, depth).terms) dims.push_back(t.dim());
  return dims;
}
}  // namespace

TEST(Preserver, IdentityFormGivesSymmetricMatrices) {
  AlgebraBasis g = o_I(f2, 3);
  EXPECT_EQ(g.dim(), 6);
  for (const auto& b : g.basis()) EXPECT_TRUE(b.is_symmetric());
  EXPECT_TRUE(g.same_span(AlgebraBasis::from_span(
      f2, 3, {f_gen(f2, 3, 0, 1), f_gen(f2, 3, 0, 2), f_gen(f2, 3, 1, 2), unit_matrix(f2, 3, 0, 0),
              unit_matrix(f2, 3, 1, 1), unit_matrix(f2, 3, 2, 2)})));
}

TEST(Preserver, PiFormShape) {
  AlgebraBasis g = o_Pi(f2, 4);
  EXPECT_EQ(g.dim(), 10);  // k^2 + k(k+1) at k = 2
  // Shape: [[A, B], [C, A^T]] with B, C symmetric.
  for (const auto& x : g.basis()) {
    Matrix a = x.block(0, 0, 2, 2), b = x.block(0, 2, 2, 2);
    Matrix c = x.block(2, 0, 2, 2), d = x.block(2, 2, 2, 2);
    EXPECT_EQ(d, a.transpose());
    EXPECT_TRUE(b.is_symmetric());
    EXPECT_TRUE(c.is_symmetric());
  }
}

TEST(Preserver, DefiningRelationHolds) {
  std::mt19937_64 rng(3);
  for (const FieldCtx* f : {&f2, &f4}) {
    for (int t = 0; t < 10; ++t) {
      Matrix b = random_matrix(*f, 4, rng);
      AlgebraBasis g = preserver(b);
      for (const auto& x : g.basis())
        EXPECT_TRUE((x.transpose() * b + b * x).is_zero());
    }
  }
}

TEST(SociologicalPreserver, SymmetricFormsGiveFullGl) {
  std::mt19937_64 rng(5);
  Matrix s = random_symmetric(f4, 3, rng);
  EXPECT_EQ(sociological_preserver(s).dim(), 9);
}

TEST(SociologicalPreserver, StildeDimensions) {
  // Class preserver of stilde(2,1): the polar form is S(2), dimension 3.
  EXPECT_EQ(sociological_preserver(stilde_form(f2, 2, 1)).dim(), 3);
  EXPECT_EQ(o_S(f2, 2).dim(), 3);
  // stilde(4,1): dim o_S(2) + dim gl(2) + 2*2 = 11.
  EXPECT_EQ(sociological_preserver(stilde_form(f2, 4, 1)).dim(), 11);
  // Non-degenerate class: same fingerprint profile as the S(2k) preserver.
  EXPECT_EQ(fingerprint(sociological_preserver(stilde_form(f2, 4, 2))),
            fingerprint(o_S(f2, 4)));
}

TEST(Bracket, GeneratorRelations) {
  // [X, X] = 0.
  std::mt19937_64 rng(7);
  Matrix x = random_matrix(f4, 4, rng);
  EXPECT_TRUE(bracket(x, x).is_zero());

  // [F^{ik}, F^{kj}] = F^{ij} for distinct i, j, k.
  for (int n : {3, 4, 5})
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (i == j || j == k || i == k) continue;
          EXPECT_EQ(bracket(f_gen(f2, n, i, k), f_gen(f2, n, k, j)), f_gen(f2, n, i, j));
        }

  // [sum E^{2i-1,2i}, sum E^{2i,2i-1}] = 1_n inside the S(n) preserver.
  for (int k : {1, 2, 3}) {
    int n = 2 * k;
    Matrix up(f2, n, n), dn(f2, n, n);
    for (int i = 0; i < k; ++i) {
      up.set(2 * i, 2 * i + 1, 1);
      dn.set(2 * i + 1, 2 * i, 1);
    }
    EXPECT_EQ(bracket(up, dn), Matrix::identity(f2, n));
  }
}

TEST(Bracket, DoubleAdActsAsProjector) {
  // [F^{ij}, [F^{ij}, F^{kl}]] = F^{kl} iff the index sets share one element.
  for (int n : {4, 5}) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = k + 1; l < n; ++l) {
            Matrix lhs = bracket(f_gen(f2, n, i, j), bracket(f_gen(f2, n, i, j), f_gen(f2, n, k, l)));
            int common = (i == k) + (i == l) + (j == k) + (j == l);
            if (common == 1)
              EXPECT_EQ(lhs, f_gen(f2, n, k, l));
            else
              EXPECT_TRUE(lhs.is_zero());
          }
  }
}

TEST(Bracket, OPiGeneratorRelations) {
  const int k = 3;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      for (int kk = 0; kk < k; ++kk) {
        if (kk == i || kk == j) continue;
        EXPECT_EQ(bracket(opi_h(f2, k, i, kk), opi_f1(f2, k, i, j)), opi_f1(f2, k, i, j));
        EXPECT_EQ(bracket(opi_h(f2, k, i, kk), opi_f2(f2, k, i, j)), opi_f2(f2, k, i, j));
        EXPECT_EQ(bracket(opi_h(f2, k, i, kk), opi_g(f2, k, i, j)), opi_g(f2, k, i, j));
      }
      EXPECT_EQ(bracket(opi_f1(f2, k, i, j), opi_f2(f2, k, i, j)), opi_h(f2, k, i, j));
    }
  EXPECT_EQ(bracket(opi_k1(f2, k), opi_k2(f2, k)), opi_k0(f2, k));
}

TEST(AlgebraBasis, ClosureChecked) {
  // span{E^{01}} alone is closed; {E^{01}, E^{12}} at n = 3 is not.
  EXPECT_NO_THROW(AlgebraBasis::from_span(f2, 2, {unit_matrix(f2, 2, 0, 1)}));
  EXPECT_THROW(
      AlgebraBasis::from_span(f2, 3, {unit_matrix(f2, 3, 0, 1), unit_matrix(f2, 3, 1, 2)}),
      DomainError);
}

TEST(DerivedSeries, SmallOrthogonalAlgebras) {
  EXPECT_EQ(derived_dims(o_I(f2, 2), 3), (std::vector<int>{3, 1, 0}));
  AlgebraBasis d1 = derived_series(o_I(f2, 2), 1).terms[0];
  EXPECT_TRUE(d1.same_span(AlgebraBasis::from_span(f2, 2, {s_form(f2, 2)})));

  EXPECT_EQ(derived_dims(o_I(f2, 4), 3), (std::vector<int>{10, 6, 6}));
  EXPECT_EQ(derived_dims(o_Pi(f2, 4), 5), (std::vector<int>{10, 6, 5, 1, 0}));
}

TEST(DerivedSeries, OIDerivedIsZeroDiagonal) {
  for (const FieldCtx* f : {&f2, &f4})
    for (int n = 3; n <= 6; ++n) {
      DerivedSeries ds = derived_series(o_I(*f, n), 2);
      EXPECT_TRUE(ds.terms[0].same_span(zd_algebra(*f, n))) << "n=" << n;
      EXPECT_TRUE(ds.terms[1].same_span(ds.terms[0]));
      EXPECT_EQ(ds.stabilized_at, 1);
    }
}

namespace {
// Conjectural o_Pi derived terms: [[A,B],[C,A^T]], B, C zero-diagonal
// symmetric, optionally tr A = 0.
AlgebraBasis opi_derived_shape(const FieldCtx& f, int k, bool trace_zero) {
  std::vector<Matrix> mats;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      mats.push_back(opi_g(f, k, i, j));
    }
  if (trace_zero) {
    for (int i = 1; i < k; ++i) mats.push_back(opi_h(f, k, 0, i));
  } else {
    for (int i = 0; i < k; ++i) {
      Matrix d(f, k, k);
      d.set(i, i, 1);
      Matrix m(f, 2 * k, 2 * k);
      m.set_block(0, 0, d);
      m.set_block(k, k, d);
      mats.push_back(m);
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      mats.push_back(opi_f1(f, k, i, j));
      mats.push_back(opi_f2(f, k, i, j));
    }
  return AlgebraBasis::from_span(f, 2 * k, mats, false);
}
}  // namespace

TEST(DerivedSeries, OPiShapesAsSpanEqualities) {
  for (const FieldCtx* f : {&f2, &f4})
    for (int k : {3, 4}) {
      DerivedSeries ds = derived_series(o_Pi(*f, 2 * k), 3);
      EXPECT_TRUE(ds.terms[0].same_span(opi_derived_shape(*f, k, false))) << "k=" << k;
      EXPECT_TRUE(ds.terms[1].same_span(opi_derived_shape(*f, k, true))) << "k=" << k;
      EXPECT_TRUE(ds.terms[2].same_span(ds.terms[1])) << "k=" << k;
    }
}

TEST(Center, Examples) {
  for (int n : {3, 4, 5}) {
    AlgebraBasis z = center(o_I(f2, n));
    EXPECT_EQ(z.dim(), 1);
    EXPECT_TRUE(z.contains(Matrix::identity(f2, n)));
  }
  AlgebraBasis g1 = gl_algebra(f4, 1);
  EXPECT_EQ(center(g1).dim(), 1);
}

TEST(Center, SeparatingInvariantOfTheTwoOrthogonalSeries) {
  for (const FieldCtx* f : {&f2, &f4})
    for (int k = 1; k <= 3; ++k) {
      AlgebraBasis gi = o_I(*f, 2 * k), gs = o_S(*f, 2 * k);
      AlgebraBasis di = derived_series(gi, 1).terms[0], ds = derived_series(gs, 1).terms[0];
      EXPECT_EQ(intersect_algebras(center(gi), di).dim(), 0) << "k=" << k;
      EXPECT_GE(intersect_algebras(center(gs), ds).dim(), 1) << "k=" << k;
    }
}

TEST(IdealClosure, Examples) {
  AlgebraBasis g = derived_series(o_I(f2, 3), 1).terms[0];
  EXPECT_EQ(ideal_closure(g, Matrix(f2, 3, 3)).dim(), 0);
  EXPECT_EQ(ideal_closure(g, f_gen(f2, 3, 0, 1)).dim(), g.dim());
  EXPECT_THROW(ideal_closure(g, Matrix::identity(f2, 3)), DomainError);

  // The center of the second derived of o_Pi(8) is its own closure.
  AlgebraBasis opi2 = derived_series(o_Pi(f2, 8), 2).terms[1];
  AlgebraBasis closure = ideal_closure(opi2, Matrix::identity(f2, 8));
  EXPECT_EQ(closure.dim(), 1);
  EXPECT_TRUE(closure.contains(Matrix::identity(f2, 8)));
}

TEST(IsSimple, SmallCertificates) {
  SimplicityResult r3 = is_simple(derived_series(o_I(f2, 3), 1).terms[0]);
  EXPECT_TRUE(r3.simple);

  // Abelian algebras are not simple.
  AlgebraBasis diag2 = AlgebraBasis::from_span(
      f2, 2, {unit_matrix(f2, 2, 0, 0), unit_matrix(f2, 2, 1, 1)});
  SimplicityResult ra = is_simple(diag2);
  EXPECT_FALSE(ra.simple);
  ASSERT_TRUE(ra.proper_ideal.has_value());
  EXPECT_EQ(ra.proper_ideal->dim(), 1);

  AlgebraBasis one = AlgebraBasis::from_span(f2, 2, {Matrix::identity(f2, 2)});
  EXPECT_FALSE(is_simple(one).simple);

  // Field and envelope guards.
  EXPECT_THROW(is_simple(o_I(f4, 3)), DomainError);
  EXPECT_THROW(is_simple(o_Pi(f2, 8)), DomainError);  // dim 36
}

TEST(IsSimple, OPi6SecondDerivedIsSimple) {
  AlgebraBasis g = derived_series(o_Pi(f2, 6), 2).terms[1];
  EXPECT_EQ(g.dim(), 14);
  EXPECT_TRUE(is_simple(g).simple);
}

TEST(IsSimple, OPi8SecondDerivedHasCentralWitness) {
  AlgebraBasis g = derived_series(o_Pi(f2, 8), 2).terms[1];
  EXPECT_EQ(g.dim(), 27);
  SimplicityResult r = is_simple(g);
  EXPECT_FALSE(r.simple);
  ASSERT_TRUE(r.proper_ideal.has_value());
  EXPECT_EQ(r.proper_ideal->dim(), 1);
  EXPECT_TRUE(r.proper_ideal->contains(Matrix::identity(f2, 8)));
}

TEST(QuotientByCenter, AbelianGivesZero) {
  AlgebraBasis diag2 = AlgebraBasis::from_span(
      f2, 2, {unit_matrix(f2, 2, 0, 0), unit_matrix(f2, 2, 1, 1)});
  EXPECT_EQ(quotient_by_center(diag2).dim(), 0);
}

TEST(QuotientByCenter, SecondDerivedQuotientsDiffer) {
  // o_S^(2)(4)/Z versus o_I^(2)(4): fingerprints differ.
  AlgebraBasis qs = quotient_by_center(derived_series(o_S(f2, 4), 2).terms[1]);
  AlgebraBasis gi = derived_series(o_I(f2, 4), 2).terms[1];
  EXPECT_NE(fingerprint(qs), fingerprint(gi));
}

TEST(Fingerprint, ZeroAlgebraAndNoniso) {
  AlgebraBasis zero = AlgebraBasis::from_span(f2, 2, {});
  Fingerprint fz = fingerprint(zero);
  for (int e : fz.entries) EXPECT_EQ(e, 0);

  for (int k = 1; k <= 3; ++k) {
    Fingerprint fi = fingerprint(o_I(f2, 2 * k)), fs = fingerprint(o_S(f2, 2 * k));
    EXPECT_NE(fi, fs) << "k=" << k;
    EXPECT_EQ(fi.entries[5], 0);  // dim(center cap derived)
    EXPECT_GE(fs.entries[5], 1);
  }
}

TEST(Fingerprint, InvariantPartIsCongruenceInvariant) {
  std::mt19937_64 rng(11);
  for (const FieldCtx* f : {&f2, &f4})
    for (int t = 0; t < 10; ++t) {
      Matrix b = random_matrix(*f, 3, rng);
      Matrix m = random_invertible(*f, 3, rng);
      Fingerprint fb = fingerprint(preserver(b));
      Fingerprint fc = fingerprint(preserver(m * b * m.transpose()));
      EXPECT_EQ(fb.invariant_part(), fc.invariant_part());
    }
}

// The diagonal-subalgebra entry is tied to the matrix realization:
// congruent forms can disagree there, which is why it is excluded from the
// invariant part of the fingerprint.
TEST(Fingerprint, DiagonalEntryDependsOnRepresentative) {
  Matrix m(f2, 2, 2);
  m.set(0, 0, 1);
  m.set(0, 1, 1);
  m.set(1, 1, 1);
  Matrix b = Matrix::identity(f2, 2);
  Fingerprint fb = fingerprint(preserver(b));
  Fingerprint fc = fingerprint(preserver(m * b * m.transpose()));
  EXPECT_EQ(fb.invariant_part(), fc.invariant_part());
  EXPECT_NE(fb.entries[6], fc.entries[6]);
}

TEST(DiagonalSubalgebra, CartanIntersections) {
  // o_S^(1)(2k+1): diagonal matrices diag(a_1..a_k, 0, a_k..a_1).
  for (int k : {1, 2, 3}) {
    int n = 2 * k + 1;
    AlgebraBasis d = diagonal_subalgebra(derived_series(o_S(f2, n), 1).terms[0]);
    EXPECT_EQ(d.dim(), k);
    for (const auto& x : d.basis()) {
      EXPECT_TRUE(x.is_diagonal());
      EXPECT_EQ(x.get(k, k), 0);
      for (int i = 0; i < k; ++i) EXPECT_EQ(x.get(i, i), x.get(n - 1 - i, n - 1 - i));
    }
  }
  // Zero-diagonal algebras meet the diagonal trivially.
  EXPECT_EQ(diagonal_subalgebra(zd_algebra(f2, 5)).dim(), 0);
  // B = diag(1_2, S(2k-2)): the derived preserver meets the diagonal in
  // dimension k-1.
  for (int k : {2, 3}) {
    int n = 2 * k;
    Matrix b(f2, n, n);
    b.set_block(0, 0, Matrix::identity(f2, 2));
    b.set_block(2, 2, s_form(f2, n - 2));
    AlgebraBasis d = diagonal_subalgebra(derived_series(preserver(b), 1).terms[0]);
    EXPECT_EQ(d.dim(), k - 1);
  }
}

TEST(Preserver, DimensionExamples) {
  EXPECT_EQ(o_I(f2, 3).dim(), 6);
  EXPECT_EQ(o_I(f4, 4).dim(), 10);
  EXPECT_EQ(o_Pi(f4, 4).dim(), 10);
  EXPECT_EQ(o_S(f2, 5).dim(), 15);
}
