#pragma once

#include <optional>
#include <string>
#include <vector>

#include "char2forms/matrix.hpp"
#include "char2forms/super.hpp"

namespace char2forms {

/// Congruence class of a symmetric bilinear form: over GF(2^m) the pair
/// (rank, fully isotropic) determines the class.
struct SymClass {
  int n = 0;
  int rank = 0;
  bool fully_isotropic = false;
  bool operator==(const SymClass&) const = default;
};

/// Result of a congruence reduction: witness * input * witness^T = canonical.
struct SymCanonResult {
  SymClass label;
  Matrix canonical;
  Matrix witness;
  bool verify(const Matrix& input) const;
};

/// diag(Z(r), 0) for a symmetric zero-diagonal input (rank r is even).
SymCanonResult reduce_zero_diagonal(const Matrix& b);

/// 1-block canonical form for symmetric inputs: diag(1_r, 0) when the form
/// is not fully isotropic, diag(Z(r), 0) when it is. Degenerate inputs
/// split off the radical first.
SymCanonResult reduce_symmetric(const Matrix& b);

struct EquivResult {
  bool equivalent;
  std::optional<Matrix> witness;  // witness * B * witness^T = C
};
EquivResult equiv_symmetric(const Matrix& b, const Matrix& c);

/// Class of B modulo symmetric matrices. Certificate:
/// input = witness_m * canonical * witness_m^T + witness_a, witness_a symmetric.
struct SocioCanonResult {
  int rank = 0;  // rank(B + B^T), always even
  Matrix canonical;  // stilde_form(n, rank/2)
  Matrix witness_m;
  Matrix witness_a;
  bool verify(const Matrix& input) const;
};
SocioCanonResult sociological_canon(const Matrix& b);
EquivResult sociological_equiv(const Matrix& b, const Matrix& c);  // witness maps C to B modulo symmetric

/// Quadratic-form class of B modulo symmetric zero-diagonal matrices.
///
/// Over GF(2^m) there are three class kinds per polar rank 2r:
///   Y      — the quadratic form vanishes on the radical, Arf invariant 0;
///   ArfOne — vanishes on the radical, Arf invariant 1 (these classes are
///            absorbed into Y over an algebraically closed field but are
///            genuine over a finite field);
///   Ytilde — nonzero on the radical (needs n >= 2r+1).
enum class AlbertVariant { Y, Ytilde, ArfOne };
std::string albert_variant_name(AlbertVariant v);

struct AlbertCanonResult {
  int r = 0;  // rank(B + B^T) / 2
  AlbertVariant variant = AlbertVariant::Y;
  Matrix canonical;
  Matrix witness_m;
  Matrix witness_a;  // symmetric zero-diagonal
  bool verify(const Matrix& input) const;
};
AlbertCanonResult albert_canon(const Matrix& b);
/// Canonical matrix of a given Albert class.
Matrix albert_canonical_matrix(const FieldCtx& ctx, int n, int r, AlbertVariant v);

/// Blockwise reduction of an even symmetric super form.
struct SuperEvenCanonResult {
  SymClass label0, label1;
  SuperMatrix canonical;
  SuperMatrix witness;  // even; witness * input * witness^T = canonical
  bool verify(const SuperMatrix& input) const;
};
SuperEvenCanonResult super_even_canon(const SuperMatrix& b);

/// Odd symmetric non-degenerate form on (k|k) -> Pi_{2k}.
struct SuperOddSymCanonResult {
  SuperMatrix canonical;
  SuperMatrix witness;  // even
  bool verify(const SuperMatrix& input) const;
};
SuperOddSymCanonResult super_odd_sym_canon(const SuperMatrix& b);

struct JordanBlockSpec {
  std::uint16_t eigenvalue;
  int size;
  bool operator==(const JordanBlockSpec&) const = default;
};

/// Odd form with invertible blocks A (upper), C (lower): canonical
/// [[0, 1_k], [L, 0]] with L the Jordan form of C (A^T)^{-1}. Fails with
/// DomainError when the characteristic polynomial does not split.
struct SuperOddNonsymCanonResult {
  std::vector<JordanBlockSpec> blocks;  // sorted: eigenvalue asc, size desc
  SuperMatrix canonical;
  SuperMatrix witness;  // even
  bool verify(const SuperMatrix& input) const;
};
SuperOddNonsymCanonResult super_odd_nonsym_canon(const SuperMatrix& b);

/// Jordan normal form over the given field: J = P^{-1} X P with blocks
/// sorted by (eigenvalue as integer, size descending).
struct JordanResult {
  std::vector<JordanBlockSpec> blocks;
  Matrix jordan;
  Matrix transform;  // transform * X * transform^{-1} = jordan
};
JordanResult jordan_form(const Matrix& x);

/// The explicit odd-size matrix with M M^T = zhat_form(n) used to convert
/// diag(1, Z(n-1)) to the identity class.
Matrix zhat_factor(const FieldCtx& ctx, int n);

}  // namespace char2forms
