#pragma once

#include <array>
#include <optional>
#include <vector>

#include "char2forms/matrix.hpp"
#include "char2forms/vecspace.hpp"

namespace char2forms {

/// A matrix Lie algebra given by an echelonized basis. The basis is the
/// canonical RREF of the spanning set (vectorized row-major), so equal
/// algebras have identical basis lists. Construction verifies bracket
/// closure unless the caller already knows it holds.
class AlgebraBasis {
 public:
  static AlgebraBasis from_span(const FieldCtx& ctx, int n, const std::vector<Matrix>& mats,
                                bool check_closed = true);

  int n() const { return n_; }
  const FieldCtx& ctx() const { return *ctx_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const EchelonSpace& space() const { return space_; }
  bool contains(const Matrix& m) const { return space_.contains(m.vectorized()); }
  bool same_span(const AlgebraBasis& o) const { return space_ == o.space_; }
  bool is_abelian() const;

 private:
  AlgebraBasis(const FieldCtx& ctx, int n, EchelonSpace space);
  const FieldCtx* ctx_;
  int n_;
  EchelonSpace space_;
  std::vector<Matrix> basis_;
};

/// XY + YX; the Lie bracket in characteristic 2.
Matrix bracket(const Matrix& x, const Matrix& y);

/// Lie algebra preserving a bilinear form: kernel of X -> X^T B + B X.
AlgebraBasis preserver(const Matrix& b);
/// Transformations preserving the class of B modulo symmetric forms;
/// equals preserver(B + B^T).
AlgebraBasis sociological_preserver(const Matrix& b);

AlgebraBasis o_I(const FieldCtx& ctx, int n);
AlgebraBasis o_S(const FieldCtx& ctx, int n);
AlgebraBasis o_Pi(const FieldCtx& ctx, int n);
AlgebraBasis gl_algebra(const FieldCtx& ctx, int n);
AlgebraBasis zd_algebra(const FieldCtx& ctx, int n);  // symmetric zero-diagonal matrices

struct DerivedSeries {
  /// terms[i] is g^(i+1). The list stops early once the series stabilizes.
  std::vector<AlgebraBasis> terms;
  /// Level l (1-based) with g^(l+1) = g^(l), or -1 if not reached in depth.
  int stabilized_at = -1;
};
DerivedSeries derived_series(const AlgebraBasis& g, int depth);

AlgebraBasis center(const AlgebraBasis& g);
/// Smallest subspace containing seed and stable under bracketing with g.
AlgebraBasis ideal_closure(const AlgebraBasis& g, const Matrix& seed);

struct SimplicityResult {
  bool simple;
  /// A proper nonzero ideal when one exists (absent for abelian dim 1).
  std::optional<AlgebraBasis> proper_ideal;
};
/// Exhaustive simplicity certificate over GF(2): every nonzero element's
/// ideal closure is enumerated (2^dim - 1 seeds, dim <= 27). A nonzero
/// proper center short-circuits the enumeration, since it is itself a
/// proper ideal.
SimplicityResult is_simple(const AlgebraBasis& g);

/// g / center(g), realized faithfully by the adjoint action of a
/// complement basis; bracket closure of the image is re-verified.
AlgebraBasis quotient_by_center(const AlgebraBasis& g);

/// (dim g, dim g1, dim g2, dim g3, dim center, dim center cap g1,
///  dim diagonal subalgebra). Equal fingerprints are the implemented
/// Lie-equivalence test; the first six entries are isomorphism
/// invariants, the diagonal entry depends on the matrix realization.
struct Fingerprint {
  std::array<int, 7> entries{};
  bool operator==(const Fingerprint&) const = default;
  auto operator<=>(const Fingerprint&) const = default;
  std::array<int, 6> invariant_part() const {
    return {entries[0], entries[1], entries[2], entries[3], entries[4], entries[5]};
  }
};
Fingerprint fingerprint(const AlgebraBasis& g);

AlgebraBasis diagonal_subalgebra(const AlgebraBasis& g);
AlgebraBasis intersect_algebras(const AlgebraBasis& a, const AlgebraBasis& b);

// Named generators used by the structure lemmas, exposed for tests.
Matrix f_gen(const FieldCtx& ctx, int n, int i, int j);  // E^{ij} + E^{ji}
// Generators inside o_Pi(2k), blocks [[A,B],[C,A^T]]:
Matrix opi_f1(const FieldCtx& ctx, int k, int i, int j);  // B = E^{ij}+E^{ji}
Matrix opi_f2(const FieldCtx& ctx, int k, int i, int j);  // C = E^{ij}+E^{ji}
Matrix opi_g(const FieldCtx& ctx, int k, int i, int j);   // A = E^{ij}
Matrix opi_h(const FieldCtx& ctx, int k, int i, int j);   // A = E^{ii}+E^{jj}
Matrix opi_k0(const FieldCtx& ctx, int k);                // A = E^{11}
Matrix opi_k1(const FieldCtx& ctx, int k);                // B = E^{11}
Matrix opi_k2(const FieldCtx& ctx, int k);                // C = E^{11}

}  // namespace char2forms
