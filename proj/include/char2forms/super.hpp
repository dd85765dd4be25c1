#pragma once

#include <optional>
#include <string>
#include <vector>

#include "char2forms/lie.hpp"
#include "char2forms/matrix.hpp"

namespace char2forms {

enum class Parity { even, odd };

struct SuperDim {
  int n0 = 0, n1 = 0;
  int total() const { return n0 + n1; }
  bool operator==(const SuperDim&) const = default;
};

/// Supermatrix in the standard format (even coordinates first). Only
/// homogeneous matrices exist as values: even ones are block-diagonal,
/// odd ones block-off-diagonal.
class SuperMatrix {
 public:
  SuperMatrix(SuperDim sdim, Parity parity, Matrix entries);
  static SuperMatrix even_from_blocks(const Matrix& b00, const Matrix& b11);
  static SuperMatrix odd_from_blocks(const Matrix& b01, const Matrix& b10);

  SuperDim sdim() const { return sdim_; }
  Parity parity() const { return parity_; }
  const Matrix& entries() const { return mat_; }
  const FieldCtx& ctx() const { return mat_.ctx(); }

  Matrix block00() const { return mat_.block(0, 0, sdim_.n0, sdim_.n0); }
  Matrix block01() const { return mat_.block(0, sdim_.n0, sdim_.n0, sdim_.n1); }
  Matrix block10() const { return mat_.block(sdim_.n0, 0, sdim_.n1, sdim_.n0); }
  Matrix block11() const { return mat_.block(sdim_.n0, sdim_.n0, sdim_.n1, sdim_.n1); }

  bool operator==(const SuperMatrix& o) const {
    return sdim_ == o.sdim_ && parity_ == o.parity_ && mat_ == o.mat_;
  }

 private:
  SuperDim sdim_;
  Parity parity_;
  Matrix mat_;
};

/// Matrix square of an odd supermatrix; the result is even. The bracket of
/// odd elements is recovered as (x+y)^2 - x^2 - y^2.
SuperMatrix squaring(const SuperMatrix& x);

/// Supermatrix Lie superalgebra: echelonized homogeneous bases, closed
/// under bracket and under squaring of odd elements (verified along with
/// the squaring axioms on construction).
class SuperAlgebraBasis {
 public:
  static SuperAlgebraBasis from_span(const FieldCtx& ctx, SuperDim sdim,
                                     const std::vector<SuperMatrix>& mats,
                                     bool check_closed = true);

  SuperDim sdim() const { return sdim_; }
  const FieldCtx& ctx() const { return *ctx_; }
  const std::vector<SuperMatrix>& even_basis() const { return even_; }
  const std::vector<SuperMatrix>& odd_basis() const { return odd_; }
  int even_dim() const { return static_cast<int>(even_.size()); }
  int odd_dim() const { return static_cast<int>(odd_.size()); }
  int dim() const { return even_dim() + odd_dim(); }
  bool same_span(const SuperAlgebraBasis& o) const;
  bool contains(const Matrix& m) const;

 private:
  SuperAlgebraBasis(const FieldCtx& ctx, SuperDim sdim) : ctx_(&ctx), sdim_(sdim) {}
  const FieldCtx* ctx_;
  SuperDim sdim_;
  std::vector<SuperMatrix> even_, odd_;
};

/// Lie superalgebra preserving a homogeneous bilinear form: the kernel of
/// X -> X^T B + B X intersected with each homogeneous component.
SuperAlgebraBasis super_preserver(const SuperMatrix& form);

// Canonical forms and the named preservers built on them.
SuperMatrix oo_form(const FieldCtx& ctx, int n0, int n1, bool pi0, bool pi1);
SuperMatrix pe_form(const FieldCtx& ctx, int k);  // odd symmetric Pi_{2k}
SuperAlgebraBasis oo_II(const FieldCtx& ctx, int n0, int n1);
SuperAlgebraBasis oo_IPi(const FieldCtx& ctx, int n0, int n1);
SuperAlgebraBasis oo_PiPi(const FieldCtx& ctx, int n0, int n1);
SuperAlgebraBasis pe(const FieldCtx& ctx, int k);

struct SuperDerivedSeries {
  std::vector<SuperAlgebraBasis> terms;
  int stabilized_at = -1;
};
/// Derived terms are spans of brackets of homogeneous basis pairs plus
/// squares of odd basis elements.
SuperDerivedSeries super_derived_series(const SuperAlgebraBasis& g, int depth);

enum class SuperFamily { oo_II, oo_IPi, oo_PiPi, pe };

struct StructureCheck {
  std::string condition;
  bool holds;
};
/// Verifies the structural description of a derived term of a named family
/// as a span equality plus the per-element conditions (zero trace,
/// zero-diagonal blocks, vanishing half-supertrace).
std::vector<StructureCheck> super_structure_checks(const SuperAlgebraBasis& term,
                                                   SuperFamily family, int level);

/// For an even matrix in the oo_PiPi shape: the sum of the first halves of
/// the two diagonal blocks' diagonals.
FieldElem half_supertrace(const SuperMatrix& x);

/// Drops the superstructure; bracket and multiplication are unchanged.
AlgebraBasis forgetful(const SuperAlgebraBasis& g);

struct SuperSimplicityResult {
  bool simple;
  /// Basis of a proper nonzero super ideal when one exists (superstructure
  /// dropped; ideals need not be homogeneously generated).
  std::optional<std::vector<Matrix>> proper_ideal;
};
/// Exhaustive over GF(2), dim <= 22: ideals are subspaces stable under
/// bracketing with the algebra and under squaring of odd components.
SuperSimplicityResult super_is_simple(const SuperAlgebraBasis& g);

/// Graded center {x : [x, g] = 0}.
SuperAlgebraBasis super_center(const SuperAlgebraBasis& g);
/// Exhaustive simplicity of g / center(g) as a superalgebra with squaring.
bool super_central_quotient_is_simple(const SuperAlgebraBasis& g);

// Named generators of the structure lemmas, for tests.
SuperMatrix ooii_f(const FieldCtx& ctx, SuperDim sdim, int i, int j);   // E^{ij}+E^{ji}
SuperMatrix ooii_h(const FieldCtx& ctx, SuperDim sdim, int i, int j);   // E^{ii}+E^{jj}
SuperMatrix ooipi_f(const FieldCtx& ctx, SuperDim sdim, int i, int j);  // even block F^{ij}
SuperMatrix ooipi_g(const FieldCtx& ctx, SuperDim sdim, int i, int j);  // C = E^{ij}
SuperMatrix ooipi_h(const FieldCtx& ctx, SuperDim sdim, int i);         // odd-block pair unit
SuperMatrix ooipi_iod(const FieldCtx& ctx, SuperDim sdim);              // odd-block identity

}  // namespace char2forms
