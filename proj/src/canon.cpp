#include "char2forms/canon.hpp"

#include <algorithm>
#include <cassert>

namespace char2forms {

namespace {

Matrix strict_lower(const Matrix& c) {
  Matrix l(c.ctx(), c.rows(), c.cols());
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < i; ++j) l.set(i, j, c.get(i, j));
  return l;
}

Matrix diag_scale(const FieldCtx& ctx, int n, int pos, std::uint16_t v) {
  Matrix d = Matrix::identity(ctx, n);
  d.set(pos, pos, v);
  return d;
}

Matrix swap_matrix(const FieldCtx& ctx, int n, int i, int j) {
  Matrix p = Matrix::identity(ctx, n);
  p.set(i, i, 0);
  p.set(j, j, 0);
  p.set(i, j, 1);
  p.set(j, i, 1);
  return p;
}

// Running congruence c = w * input * w^T + a, with a accumulating symmetric
// (zero-diagonal, for the quadratic relations) offsets.
struct CongruenceState {
  Matrix c, w, a;

  explicit CongruenceState(const Matrix& input)
      : c(input),
        w(Matrix::identity(input.ctx(), input.rows())),
        a(input.ctx(), input.rows(), input.rows()) {}

  void congr(const Matrix& m) {
    c = m * c * m.transpose();
    w = m * w;
    a = m * a * m.transpose();
  }
  void addsym(const Matrix& s) {
    c = c + s;
    a = a + s;
  }
  // Moves everything below the diagonal to the offset; with a symmetric
  // residual c + c^T this leaves c upper triangular.
  void clean_lower() {
    Matrix l = strict_lower(c);
    if (!l.is_zero()) addsym(l + l.transpose());
  }
};

// Extracts hyperbolic pairs from the trailing symmetric zero-diagonal block
// starting at `pos`; returns the number of pairs placed.
int zd_reduce_region(CongruenceState& st, int pos) {
  const FieldCtx& ctx = st.c.ctx();
  const int n = st.c.rows();
  int pairs = 0;
  for (;;) {
    int pi = -1, pj = -1;
    for (int i = pos; i < n && pi < 0; ++i)
      for (int j = pos; j < n; ++j)
        if (st.c.get(i, j)) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    // The first row-major hit in a symmetric zero-diagonal block has j > i.
    if (pi != pos) {
      st.congr(swap_matrix(ctx, n, pos, pi));
      if (pj == pos) pj = pi;
    }
    if (pj != pos + 1) st.congr(swap_matrix(ctx, n, pos + 1, pj));
    std::uint16_t v = st.c.get(pos, pos + 1);
    if (v != 1) st.congr(diag_scale(ctx, n, pos, ctx.inv(v)));
    // Clear the two columns below the Pi_2 block: rows r >= pos+2 get
    // K = C_low * Pi_2^{-1}, which swaps the two column entries.
    Matrix m = Matrix::identity(ctx, n);
    bool nontrivial = false;
    for (int r = pos + 2; r < n; ++r) {
      std::uint16_t k0 = st.c.get(r, pos + 1), k1 = st.c.get(r, pos);
      if (k0 || k1) nontrivial = true;
      m.set(r, pos, k0);
      m.set(r, pos + 1, k1);
    }
    if (nontrivial) st.congr(m);
    pos += 2;
    ++pairs;
  }
  return pairs;
}

}  // namespace

bool SymCanonResult::verify(const Matrix& input) const {
  return witness.is_invertible() && witness * input * witness.transpose() == canonical;
}

SymCanonResult reduce_zero_diagonal(const Matrix& b) {
  if (!b.is_square() || !b.is_symmetric()) throw DomainError("input is not symmetric");
  if (!b.is_zero_diagonal()) throw DomainError("input is not zero-diagonal");
  CongruenceState st(b);
  int pairs = zd_reduce_region(st, 0);
  int r = 2 * pairs;
  Matrix canonical = ztilde_form(b.ctx(), b.rows(), r);
  if (!(st.c == canonical)) throw DomainError("zero-diagonal reduction failed to canonicalize");
  return {SymClass{b.rows(), r, true}, canonical, st.w};
}

SymCanonResult reduce_symmetric(const Matrix& b) {
  if (!b.is_square() || !b.is_symmetric()) throw DomainError("input is not symmetric");
  const FieldCtx& ctx = b.ctx();
  const int n = b.rows();
  CongruenceState st(b);
  int s = 0;
  for (;;) {
    int piv = -1;
    for (int i = s; i < n; ++i)
      if (st.c.get(i, i)) {
        piv = i;
        break;
      }
    if (piv < 0) break;
    if (piv != s) st.congr(swap_matrix(ctx, n, s, piv));
    std::uint16_t d = st.c.get(s, s);
    if (d != 1) st.congr(diag_scale(ctx, n, s, ctx.sqrt(ctx.inv(d))));
    Matrix m = Matrix::identity(ctx, n);
    bool nontrivial = false;
    for (int r = s + 1; r < n; ++r) {
      std::uint16_t k = st.c.get(r, s);
      if (k) nontrivial = true;
      m.set(r, s, k);
    }
    if (nontrivial) st.congr(m);
    ++s;
  }
  int pairs = zd_reduce_region(st, s);
  int r = s + 2 * pairs;
  bool fully_isotropic = (s == 0);
  if (s > 0 && pairs > 0) {
    // diag(1_s, Z(2t)) = diag(1_{s-1}, Zhat(2t+1)) and M M^T = Zhat folds the
    // hyperbolic tail into identity pivots.
    Matrix mhat = zhat_factor(ctx, 2 * pairs + 1);
    Matrix v = Matrix::identity(ctx, n);
    v.set_block(s - 1, s - 1, *mhat.inverse());
    st.congr(v);
  }
  Matrix canonical(ctx, n, n);
  if (fully_isotropic) {
    canonical = ztilde_form(ctx, n, r);
  } else {
    for (int i = 0; i < r; ++i) canonical.set(i, i, 1);
  }
  if (!(st.c == canonical)) throw DomainError("symmetric reduction failed to canonicalize");
  return {SymClass{n, r, fully_isotropic}, canonical, st.w};
}

EquivResult equiv_symmetric(const Matrix& b, const Matrix& c) {
  if (&b.ctx() != &c.ctx() || b.rows() != c.rows())
    throw DomainError("equivalence needs forms of equal size over one field");
  SymCanonResult rb = reduce_symmetric(b), rc = reduce_symmetric(c);
  if (!(rb.label == rc.label)) return {false, std::nullopt};
  Matrix m = *rc.witness.inverse() * rb.witness;
  return {true, m};
}

bool SocioCanonResult::verify(const Matrix& input) const {
  if (!witness_m.is_invertible() || !witness_a.is_symmetric()) return false;
  return input == witness_m * canonical * witness_m.transpose() + witness_a;
}

SocioCanonResult sociological_canon(const Matrix& b) {
  if (!b.is_square()) throw DomainError("sociological reduction needs a square matrix");
  const FieldCtx& ctx = b.ctx();
  const int n = b.rows();
  Matrix polar = b + b.transpose();
  SymCanonResult zd = reduce_zero_diagonal(polar);
  const int r = zd.label.rank, m = r / 2;
  // Permute the adjacent-pair layout Z(r) + 0 onto the split antidiagonal
  // pattern stilde + stilde^T: pair (2k, 2k+1) -> (k, n-1-k).
  std::vector<int> sigma(n, -1);
  for (int k = 0; k < m; ++k) {
    sigma[k] = 2 * k;
    sigma[n - 1 - k] = 2 * k + 1;
  }
  for (int a = m; a < n - m; ++a) sigma[a] = r + (a - m);
  Matrix p(ctx, n, n);
  for (int a = 0; a < n; ++a) p.set(a, sigma[a], 1);
  Matrix u = p * zd.witness;
  Matrix canonical = stilde_form(ctx, n, m);
  Matrix wm = *u.inverse();
  Matrix wa = b + wm * canonical * wm.transpose();
  if (!wa.is_symmetric()) throw DomainError("sociological offset failed to symmetrize");
  return {r, canonical, wm, wa};
}

EquivResult sociological_equiv(const Matrix& b, const Matrix& c) {
  if (&b.ctx() != &c.ctx() || b.rows() != c.rows())
    throw DomainError("equivalence needs forms of equal size over one field");
  SocioCanonResult rb = sociological_canon(b), rc = sociological_canon(c);
  if (rb.rank != rc.rank) return {false, std::nullopt};
  Matrix w = rb.witness_m * *rc.witness_m.inverse();
  return {true, w};
}

std::string albert_variant_name(AlbertVariant v) {
  switch (v) {
    case AlbertVariant::Y:
      return "Y";
    case AlbertVariant::Ytilde:
      return "Ytilde";
    case AlbertVariant::ArfOne:
      return "YArf1";
  }
  return "?";
}

Matrix albert_canonical_matrix(const FieldCtx& ctx, int n, int r, AlbertVariant v) {
  switch (v) {
    case AlbertVariant::Y:
      return y_form(ctx, n, r);
    case AlbertVariant::Ytilde:
      return ytilde_form(ctx, n, r);
    case AlbertVariant::ArfOne: {
      if (r < 1) throw DomainError("Arf-1 class needs rank at least 2");
      Matrix m = y_form(ctx, n, r);
      m.set(0, 0, 1);
      m.set(r, r, ctx.trace_one_element());
      return m;
    }
  }
  throw DomainError("bad variant");
}

bool AlbertCanonResult::verify(const Matrix& input) const {
  if (!witness_m.is_invertible()) return false;
  if (!witness_a.is_symmetric() || !witness_a.is_zero_diagonal()) return false;
  return input == witness_m * canonical * witness_m.transpose() + witness_a;
}

namespace {

// Shears acting on the quadratic pair block at (x, y) = (2k, 2k+1); the
// off-diagonal stays 1 after clean_lower, the named diagonal cell moves by
// a*t^2 + t (lower shear, cell y) or t^2*b + t (upper shear, cell x).
void pair_shear_lower(CongruenceState& st, int x, int y, std::uint16_t t) {
  if (!t) return;
  Matrix e = Matrix::identity(st.c.ctx(), st.c.rows());
  e.set(y, x, t);
  st.congr(e);
  st.clean_lower();
}

void pair_shear_upper(CongruenceState& st, int x, int y, std::uint16_t t) {
  if (!t) return;
  Matrix e = Matrix::identity(st.c.ctx(), st.c.rows());
  e.set(x, y, t);
  st.congr(e);
  st.clean_lower();
}

void pair_scale(CongruenceState& st, int x, int y, std::uint16_t u) {
  const FieldCtx& ctx = st.c.ctx();
  if (u == 1) return;
  Matrix d = Matrix::identity(ctx, st.c.rows());
  d.set(x, x, u);
  d.set(y, y, ctx.inv(u));
  st.congr(d);
  st.clean_lower();
}

// Makes the pair block hyperbolic ([[0,1],[0,0]]); requires the Arf
// condition trace(ab) = 0 to hold.
void hyperbolize_pair(CongruenceState& st, int k) {
  const FieldCtx& ctx = st.c.ctx();
  const int x = 2 * k, y = 2 * k + 1;
  std::uint16_t a = st.c.get(x, x), b = st.c.get(y, y);
  if (a == 0 && b == 0) return;
  if (a == 0) {
    pair_shear_lower(st, x, y, b);
  } else if (b == 0) {
    pair_shear_upper(st, x, y, a);
  } else {
    auto z = ctx.artin_schreier_root(ctx.mul(a, b));
    if (!z) throw DomainError("pair block is anisotropic");
    pair_shear_lower(st, x, y, ctx.div(*z, a));
    pair_shear_upper(st, x, y, st.c.get(x, x));
  }
  if (st.c.get(x, x) || st.c.get(y, y) || st.c.get(x, y) != 1)
    throw DomainError("pair normalization failed");
}

}  // namespace

AlbertCanonResult albert_canon(const Matrix& b) {
  if (!b.is_square()) throw DomainError("quadratic reduction needs a square matrix");
  const FieldCtx& ctx = b.ctx();
  const int n = b.rows();
  CongruenceState st(b);

  // Polar reduction: c + c^T becomes diag(Z(2r), 0) and stays there.
  Matrix polar = b + b.transpose();
  SymCanonResult zd = reduce_zero_diagonal(polar);
  const int r2 = zd.label.rank, r = r2 / 2;
  st.congr(zd.witness);
  st.clean_lower();

  // Radical square part: diagonal cells past the polar rank.
  bool radical_square = false;
  for (int p = r2; p < n; ++p)
    if (st.c.get(p, p)) radical_square = true;
  if (radical_square) {
    int j0 = -1;
    for (int p = r2; p < n; ++p)
      if (st.c.get(p, p)) {
        j0 = p;
        break;
      }
    if (j0 != r2) {
      st.congr(swap_matrix(ctx, n, r2, j0));
      st.clean_lower();
    }
    std::uint16_t v = st.c.get(r2, r2);
    if (v != 1) {
      st.congr(diag_scale(ctx, n, r2, ctx.sqrt(ctx.inv(v))));
      st.clean_lower();
    }
    for (int p = r2 + 1; p < n; ++p) {
      std::uint16_t d = st.c.get(p, p);
      if (!d) continue;
      Matrix e = Matrix::identity(ctx, n);
      e.set(p, r2, ctx.sqrt(d));
      st.congr(e);
      st.clean_lower();
    }
  }

  // Pair blocks: hyperbolize where the Arf condition allows, collect the
  // anisotropic leftovers.
  std::vector<int> anisotropic;
  for (int k = 0; k < r; ++k) {
    const int x = 2 * k, y = 2 * k + 1;
    std::uint16_t a = st.c.get(x, x), bb = st.c.get(y, y);
    if (a && bb && ctx.trace(ctx.mul(a, bb)) == 1) {
      anisotropic.push_back(k);
      continue;
    }
    hyperbolize_pair(st, k);
  }

  if (radical_square) {
    // A radical square absorbs anisotropic blocks: after scaling the block
    // to (1, ab), adding the radical coordinate to x makes Q(x) vanish.
    for (int k : anisotropic) {
      const int x = 2 * k, y = 2 * k + 1;
      pair_scale(st, x, y, ctx.sqrt(ctx.inv(st.c.get(x, x))));
      Matrix e = Matrix::identity(ctx, n);
      e.set(x, r2, 1);
      st.congr(e);
      st.clean_lower();
      hyperbolize_pair(st, k);
    }
    anisotropic.clear();
  }
  while (anisotropic.size() >= 2) {
    // Combine two anisotropic planes; the pair regains Arf 0.
    int k2 = anisotropic.back();
    anisotropic.pop_back();
    int k1 = anisotropic.back();
    anisotropic.pop_back();
    const int x1 = 2 * k1, y1 = 2 * k1 + 1, x2 = 2 * k2, y2 = 2 * k2 + 1;
    std::uint16_t a1 = st.c.get(x1, x1), a2 = st.c.get(x2, x2);
    std::uint16_t u = ctx.sqrt(ctx.div(a1, a2));
    Matrix m0 = Matrix::identity(ctx, n);
    m0.set(x1, x2, u);  // row x1 := e_{x1} + u e_{x2}, an isotropic vector
    m0.set(y2, y1, u);  // row y2 := u e_{y1} + e_{y2}, completing the split
    st.congr(m0);
    st.clean_lower();
    hyperbolize_pair(st, k1);
    hyperbolize_pair(st, k2);
  }
  AlbertVariant variant = AlbertVariant::Y;
  if (radical_square) variant = AlbertVariant::Ytilde;
  if (!anisotropic.empty()) {
    variant = AlbertVariant::ArfOne;
    int k = anisotropic[0];
    const int x = 2 * k, y = 2 * k + 1;
    pair_scale(st, x, y, ctx.sqrt(ctx.inv(st.c.get(x, x))));
    // Shift the remaining cell inside its Artin-Schreier coset to the
    // canonical trace-1 element.
    std::uint16_t target = ctx.trace_one_element();
    std::uint16_t cur = st.c.get(y, y);
    if (cur != target) {
      auto z = ctx.artin_schreier_root(ctx.add(cur, target));
      if (!z) throw DomainError("Arf normalization failed");
      pair_shear_lower(st, x, y, *z);
    }
    if (k != 0) {
      st.congr(swap_matrix(ctx, n, 0, x));
      st.congr(swap_matrix(ctx, n, 1, y));
      st.clean_lower();
    }
  }

  // Adjacent pairs (2k, 2k+1) -> (k, r+k).
  std::vector<int> sigma(n, -1);
  for (int k = 0; k < r; ++k) {
    sigma[k] = 2 * k;
    sigma[r + k] = 2 * k + 1;
  }
  for (int p = r2; p < n; ++p) sigma[p] = p;
  Matrix perm(ctx, n, n);
  for (int a = 0; a < n; ++a) perm.set(a, sigma[a], 1);
  st.congr(perm);
  st.clean_lower();

  Matrix canonical = albert_canonical_matrix(ctx, n, r, variant);
  if (!(st.c == canonical)) throw DomainError("quadratic reduction failed to canonicalize");
  Matrix wm = *st.w.inverse();
  Matrix wa = wm * st.a * wm.transpose();
  AlbertCanonResult res{r, variant, canonical, wm, wa};
  if (!res.verify(b)) throw DomainError("quadratic certificate failed");
  return res;
}

bool SuperEvenCanonResult::verify(const SuperMatrix& input) const {
  if (witness.parity() != Parity::even) return false;
  const Matrix& w = witness.entries();
  return w.is_invertible() && w * input.entries() * w.transpose() == canonical.entries();
}

SuperEvenCanonResult super_even_canon(const SuperMatrix& b) {
  if (b.parity() != Parity::even) throw DomainError("expected an even super form");
  Matrix b0 = b.block00(), b1 = b.block11();
  if (!b0.is_symmetric() || !b1.is_symmetric())
    throw DomainError("even super form must have symmetric blocks");
  SymCanonResult r0 = reduce_symmetric(b0), r1 = reduce_symmetric(b1);
  return {r0.label, r1.label,
          SuperMatrix::even_from_blocks(r0.canonical, r1.canonical),
          SuperMatrix::even_from_blocks(r0.witness, r1.witness)};
}

bool SuperOddSymCanonResult::verify(const SuperMatrix& input) const {
  if (witness.parity() != Parity::even) return false;
  const Matrix& w = witness.entries();
  return w.is_invertible() && w * input.entries() * w.transpose() == canonical.entries();
}

SuperOddSymCanonResult super_odd_sym_canon(const SuperMatrix& b) {
  if (b.parity() != Parity::odd) throw DomainError("expected an odd super form");
  if (b.sdim().n0 != b.sdim().n1)
    throw DomainError("odd symmetric form needs equal even and odd dimensions");
  if (!b.entries().is_symmetric()) throw DomainError("odd form is not symmetric");
  const int k = b.sdim().n0;
  const FieldCtx& ctx = b.ctx();
  Matrix upper = b.block01();
  auto inv = upper.inverse();
  if (!inv) throw DomainError("odd symmetric form is degenerate");
  Matrix w = Matrix::identity(ctx, 2 * k);
  w.set_block(k, k, inv->transpose());
  SuperMatrix witness(b.sdim(), Parity::even, w);
  SuperMatrix canonical(b.sdim(), Parity::odd, pi_form(ctx, 2 * k));
  SuperOddSymCanonResult res{canonical, witness};
  if (!res.verify(b)) throw DomainError("odd symmetric certificate failed");
  return res;
}

bool SuperOddNonsymCanonResult::verify(const SuperMatrix& input) const {
  if (witness.parity() != Parity::even) return false;
  const Matrix& w = witness.entries();
  return w.is_invertible() && w * input.entries() * w.transpose() == canonical.entries();
}

SuperOddNonsymCanonResult super_odd_nonsym_canon(const SuperMatrix& b) {
  if (b.parity() != Parity::odd) throw DomainError("expected an odd super form");
  if (b.sdim().n0 != b.sdim().n1)
    throw DomainError("non-degenerate odd form needs equal even and odd dimensions");
  const int k = b.sdim().n0;
  const FieldCtx& ctx = b.ctx();
  Matrix a = b.block01(), c = b.block10();
  auto ainv = a.inverse(), cinv = c.inverse();
  if (!ainv || !cinv) throw DomainError("odd form blocks are not invertible");
  Matrix x = c * ainv->transpose();
  JordanResult jr = jordan_form(x);
  Matrix mj = jr.transform;
  Matrix w(ctx, 2 * k, 2 * k);
  w.set_block(0, 0, *(a * mj.transpose()).inverse());
  w.set_block(k, k, mj);
  Matrix canon_mat(ctx, 2 * k, 2 * k);
  canon_mat.set_block(0, k, Matrix::identity(ctx, k));
  canon_mat.set_block(k, 0, jr.jordan);
  SuperOddNonsymCanonResult res{jr.blocks, SuperMatrix(b.sdim(), Parity::odd, canon_mat),
                                SuperMatrix(b.sdim(), Parity::even, w)};
  if (!res.verify(b)) throw DomainError("odd non-symmetric certificate failed");
  return res;
}

Matrix zhat_factor(const FieldCtx& ctx, int n) {
  if (n % 2 == 0) throw DomainError("the Zhat factor has odd size");
  Matrix m(ctx, n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      bool one = false;
      if (i == 1 || j == 1)
        one = true;
      else if (j == i)
        one = true;
      else if (j == i + 1)
        one = (i % 2 == 1);
      else if (j > i + 1)
        one = true;
      if (one) m.set(i - 1, j - 1, 1);
    }
  return m;
}

}  // namespace char2forms
