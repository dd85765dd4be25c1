#include "char2forms/super.hpp"

#include <algorithm>
#include <random>

namespace char2forms {

namespace {

bool block_is_zero(const Matrix& m, int r0, int c0, int nr, int nc) {
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j)
      if (m.get(r0 + i, c0 + j)) return false;
  return true;
}

void check_format(SuperDim sdim, Parity parity, const Matrix& m) {
  int n = sdim.total();
  if (!m.is_square() || m.rows() != n) throw DomainError("supermatrix size does not match sdim");
  if (parity == Parity::even) {
    if (!block_is_zero(m, 0, sdim.n0, sdim.n0, sdim.n1) ||
        !block_is_zero(m, sdim.n0, 0, sdim.n1, sdim.n0))
      throw DomainError("even supermatrix must be block-diagonal in the standard format");
  } else {
    if (!block_is_zero(m, 0, 0, sdim.n0, sdim.n0) ||
        !block_is_zero(m, sdim.n0, sdim.n0, sdim.n1, sdim.n1))
      throw DomainError("odd supermatrix must be block-off-diagonal in the standard format");
  }
}

}  // namespace

SuperMatrix::SuperMatrix(SuperDim sdim, Parity parity, Matrix entries)
    : sdim_(sdim), parity_(parity), mat_(std::move(entries)) {
  check_format(sdim_, parity_, mat_);
}

SuperMatrix SuperMatrix::even_from_blocks(const Matrix& b00, const Matrix& b11) {
  SuperDim sd{b00.rows(), b11.rows()};
  Matrix m(b00.ctx(), sd.total(), sd.total());
  m.set_block(0, 0, b00);
  m.set_block(sd.n0, sd.n0, b11);
  return SuperMatrix(sd, Parity::even, std::move(m));
}

SuperMatrix SuperMatrix::odd_from_blocks(const Matrix& b01, const Matrix& b10) {
  SuperDim sd{b01.rows(), b01.cols()};
  if (b10.rows() != sd.n1 || b10.cols() != sd.n0)
    throw DomainError("odd supermatrix blocks have inconsistent shapes");
  Matrix m(b01.ctx(), sd.total(), sd.total());
  m.set_block(0, sd.n0, b01);
  m.set_block(sd.n0, 0, b10);
  return SuperMatrix(sd, Parity::odd, std::move(m));
}

SuperMatrix squaring(const SuperMatrix& x) {
  if (x.parity() != Parity::odd) throw DomainError("squaring is defined on odd elements");
  return SuperMatrix(x.sdim(), Parity::even, x.entries() * x.entries());
}

namespace {

Parity bracket_parity(Parity a, Parity b) {
  return a == b ? Parity::even : Parity::odd;
}

SuperMatrix super_bracket(const SuperMatrix& x, const SuperMatrix& y) {
  return SuperMatrix(x.sdim(), bracket_parity(x.parity(), y.parity()),
                     bracket(x.entries(), y.entries()));
}

// Squaring axioms on basis elements; these are identities of the matrix
// square, asserted here because the whole construction rests on them.
void check_squaring_axioms(const SuperAlgebraBasis& g) {
  const FieldCtx& ctx = g.ctx();
  std::mt19937_64 rng(0xC2F0);
  for (const auto& x : g.odd_basis()) {
    Matrix sq = x.entries() * x.entries();
    if (!bracket(x.entries(), sq).is_zero()) throw DomainError("[x, x^2] != 0");
    for (int t = 0; t < 4; ++t) {
      std::uint16_t a = static_cast<std::uint16_t>(rng() % ctx.order());
      Matrix ax = x.entries().scaled(a);
      if (!(ax * ax == sq.scaled(ctx.mul(a, a)))) throw DomainError("(ax)^2 != a^2 x^2");
    }
    for (const auto& y : g.even_basis())
      if (!(bracket(sq, y.entries()) ==
            bracket(x.entries(), bracket(x.entries(), y.entries()))))
        throw DomainError("[x^2, y] != [x, [x, y]]");
  }
}

}  // namespace

SuperAlgebraBasis SuperAlgebraBasis::from_span(const FieldCtx& ctx, SuperDim sdim,
                                               const std::vector<SuperMatrix>& mats,
                                               bool check_closed) {
  const int n = sdim.total();
  EchelonSpace even_space(ctx, n * n), odd_space(ctx, n * n);
  for (const auto& m : mats) {
    if (m.sdim() != sdim || &m.ctx() != &ctx) throw DomainError("spanning supermatrix mismatch");
    (m.parity() == Parity::even ? even_space : odd_space).insert(m.entries().vectorized());
  }
  SuperAlgebraBasis g(ctx, sdim);
  for (const auto& r : even_space.rows())
    g.even_.emplace_back(sdim, Parity::even, Matrix::from_vector(ctx, n, n, r));
  for (const auto& r : odd_space.rows())
    g.odd_.emplace_back(sdim, Parity::odd, Matrix::from_vector(ctx, n, n, r));
  if (check_closed) {
    std::vector<const SuperMatrix*> all;
    for (const auto& b : g.even_) all.push_back(&b);
    for (const auto& b : g.odd_) all.push_back(&b);
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j)
        if (!g.contains(bracket(all[i]->entries(), all[j]->entries())))
          throw DomainError("super basis is not closed under the bracket");
    for (const auto& o : g.odd_)
      if (!g.contains(o.entries() * o.entries()))
        throw DomainError("super basis is not closed under squaring");
    check_squaring_axioms(g);
  }
  return g;
}

bool SuperAlgebraBasis::same_span(const SuperAlgebraBasis& o) const {
  if (sdim_ != o.sdim_ || even_.size() != o.even_.size() || odd_.size() != o.odd_.size())
    return false;
  for (size_t i = 0; i < even_.size(); ++i)
    if (!(even_[i] == o.even_[i])) return false;
  for (size_t i = 0; i < odd_.size(); ++i)
    if (!(odd_[i] == o.odd_[i])) return false;
  return true;
}

bool SuperAlgebraBasis::contains(const Matrix& m) const {
  // Split into homogeneous components and reduce each against its span.
  const int n = sdim_.total();
  Matrix ev(m.ctx(), n, n), od(m.ctx(), n, n);
  ev.set_block(0, 0, m.block(0, 0, sdim_.n0, sdim_.n0));
  ev.set_block(sdim_.n0, sdim_.n0, m.block(sdim_.n0, sdim_.n0, sdim_.n1, sdim_.n1));
  od.set_block(0, sdim_.n0, m.block(0, sdim_.n0, sdim_.n0, sdim_.n1));
  od.set_block(sdim_.n0, 0, m.block(sdim_.n0, 0, sdim_.n1, sdim_.n0));
  EchelonSpace es(ctx(), n * n), os(ctx(), n * n);
  for (const auto& b : even_) es.insert(b.entries().vectorized());
  for (const auto& b : odd_) os.insert(b.entries().vectorized());
  return es.contains(ev.vectorized()) && os.contains(od.vectorized());
}

SuperAlgebraBasis super_preserver(const SuperMatrix& form) {
  const FieldCtx& ctx = form.ctx();
  const SuperDim sd = form.sdim();
  const int n = sd.total();
  const Matrix& b = form.entries();
  // Variables restricted to one homogeneous component at a time.
  auto solve_component = [&](Parity p) {
    std::vector<std::pair<int, int>> vars;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool i0 = i < sd.n0, j0 = j < sd.n0;
        bool even_slot = (i0 == j0);
        if ((p == Parity::even) == even_slot) vars.emplace_back(i, j);
      }
    Matrix sys(ctx, n * n, static_cast<int>(vars.size()));
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const int row = k * n + l;
        for (size_t c = 0; c < vars.size(); ++c) {
          auto [a, bb] = vars[c];
          std::uint16_t coeff = 0;
          if (bb == k) coeff = ctx.add(coeff, b.get(a, l));  // X_{ak} B_{al}
          if (bb == l) coeff = ctx.add(coeff, b.get(k, a));  // B_{ka} X_{al}
          if (coeff) sys.set(row, static_cast<int>(c), coeff);
        }
      }
    std::vector<SuperMatrix> out;
    for (const auto& v : sys.kernel_basis()) {
      Matrix x(ctx, n, n);
      for (size_t c = 0; c < vars.size(); ++c)
        if (v[c]) x.set(vars[c].first, vars[c].second, v[c]);
      out.emplace_back(sd, p, std::move(x));
    }
    return out;
  };
  std::vector<SuperMatrix> basis = solve_component(Parity::even);
  for (auto& m : solve_component(Parity::odd)) basis.push_back(std::move(m));
  for (const auto& x : basis)
    if (!(x.entries().transpose() * b + b * x.entries()).is_zero())
      throw DomainError("super preserver solution failed the defining relation");
  return SuperAlgebraBasis::from_span(ctx, sd, basis, /*check_closed=*/true);
}

SuperMatrix oo_form(const FieldCtx& ctx, int n0, int n1, bool pi0, bool pi1) {
  Matrix b0 = pi0 ? pi_form(ctx, n0) : Matrix::identity(ctx, n0);
  Matrix b1 = pi1 ? pi_form(ctx, n1) : Matrix::identity(ctx, n1);
  return SuperMatrix::even_from_blocks(b0, b1);
}

SuperMatrix pe_form(const FieldCtx& ctx, int k) {
  return SuperMatrix::odd_from_blocks(Matrix::identity(ctx, k), Matrix::identity(ctx, k));
}

SuperAlgebraBasis oo_II(const FieldCtx& ctx, int n0, int n1) {
  return super_preserver(oo_form(ctx, n0, n1, false, false));
}
SuperAlgebraBasis oo_IPi(const FieldCtx& ctx, int n0, int n1) {
  if (n1 % 2) throw DomainError("oo_IPi needs even odd-dimension");
  return super_preserver(oo_form(ctx, n0, n1, false, true));
}
SuperAlgebraBasis oo_PiPi(const FieldCtx& ctx, int n0, int n1) {
  if (n0 % 2 || n1 % 2) throw DomainError("oo_PiPi needs both dimensions even");
  return super_preserver(oo_form(ctx, n0, n1, true, true));
}
SuperAlgebraBasis pe(const FieldCtx& ctx, int k) { return super_preserver(pe_form(ctx, k)); }

SuperDerivedSeries super_derived_series(const SuperAlgebraBasis& g, int depth) {
  SuperDerivedSeries out;
  for (int level = 1; level <= depth; ++level) {
    const SuperAlgebraBasis& cur = out.terms.empty() ? g : out.terms.back();
    std::vector<SuperMatrix> span;
    std::vector<const SuperMatrix*> all;
    for (const auto& b : cur.even_basis()) all.push_back(&b);
    for (const auto& b : cur.odd_basis()) all.push_back(&b);
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j) span.push_back(super_bracket(*all[i], *all[j]));
    for (const auto& o : cur.odd_basis()) span.push_back(squaring(o));
    SuperAlgebraBasis next = SuperAlgebraBasis::from_span(g.ctx(), g.sdim(), span, false);
    bool stable = next.same_span(cur);
    bool zero = next.dim() == 0;
    out.terms.push_back(std::move(next));
    if (stable) {
      out.stabilized_at = level - 1;
      break;
    }
    if (zero) {
      out.stabilized_at = level;
      break;
    }
  }
  return out;
}

namespace {

// Conjectural spaces for the structure lemmas.
std::vector<SuperMatrix> shape_oo_II_derived(const FieldCtx& ctx, SuperDim sd) {
  // Symmetric supermatrices of trace 0.
  std::vector<SuperMatrix> mats;
  const int n = sd.total();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool i0 = i < sd.n0, j0 = j < sd.n0;
      mats.emplace_back(sd, i0 == j0 ? Parity::even : Parity::odd, f_gen(ctx, n, i, j));
    }
  for (int i = 1; i < n; ++i) {
    Matrix h = unit_matrix(ctx, n, 0, 0) + unit_matrix(ctx, n, i, i);
    mats.emplace_back(sd, Parity::even, h);
  }
  return mats;
}

std::vector<SuperMatrix> shape_oo_IPi_derived(const FieldCtx& ctx, SuperDim sd) {
  // [[A0, C^T Pi], [C, Pi A1]] with A0 symmetric zero-diagonal, A1 symmetric.
  std::vector<SuperMatrix> mats;
  Matrix pi1 = pi_form(ctx, sd.n1);
  for (int i = 0; i < sd.n0; ++i)
    for (int j = i + 1; j < sd.n0; ++j)
      mats.push_back(SuperMatrix::even_from_blocks(f_gen(ctx, sd.n0, i, j), Matrix(ctx, sd.n1, sd.n1)));
  for (int i = 0; i < sd.n1; ++i)
    for (int j = i; j < sd.n1; ++j) {
      Matrix a1 = (i == j) ? unit_matrix(ctx, sd.n1, i, i) : f_gen(ctx, sd.n1, i, j);
      mats.push_back(SuperMatrix::even_from_blocks(Matrix(ctx, sd.n0, sd.n0), pi1 * a1));
    }
  for (int i = 0; i < sd.n1; ++i)
    for (int j = 0; j < sd.n0; ++j) {
      Matrix c(ctx, sd.n1, sd.n0);
      c.set(i, j, 1);
      mats.push_back(SuperMatrix::odd_from_blocks(c.transpose() * pi1, c));
    }
  return mats;
}

std::vector<SuperMatrix> shape_oo_PiPi_derived(const FieldCtx& ctx, SuperDim sd, bool half_trace_zero) {
  // [[Pi A0, Pi C^T Pi], [C, Pi A1]] with A0, A1 symmetric zero-diagonal,
  // optionally with vanishing half-supertrace.
  std::vector<SuperMatrix> mats;
  Matrix pi0 = pi_form(ctx, sd.n0), pi1 = pi_form(ctx, sd.n1);
  for (int i = 0; i < sd.n0; ++i)
    for (int j = i + 1; j < sd.n0; ++j)
      mats.push_back(SuperMatrix::even_from_blocks(pi0 * f_gen(ctx, sd.n0, i, j), Matrix(ctx, sd.n1, sd.n1)));
  for (int i = 0; i < sd.n1; ++i)
    for (int j = i + 1; j < sd.n1; ++j)
      mats.push_back(SuperMatrix::even_from_blocks(Matrix(ctx, sd.n0, sd.n0), pi1 * f_gen(ctx, sd.n1, i, j)));
  for (int i = 0; i < sd.n1; ++i)
    for (int j = 0; j < sd.n0; ++j) {
      Matrix c(ctx, sd.n1, sd.n0);
      c.set(i, j, 1);
      mats.push_back(SuperMatrix::odd_from_blocks(pi0 * c.transpose() * pi1, c));
    }
  if (!half_trace_zero) return mats;
  // Filter the even part by the half-supertrace condition.
  SuperAlgebraBasis full = SuperAlgebraBasis::from_span(ctx, sd, mats, false);
  std::vector<SuperMatrix> out;
  std::vector<const SuperMatrix*> evens;
  for (const auto& b : full.even_basis()) evens.push_back(&b);
  // Solve the single linear condition on even coordinates.
  std::vector<std::uint16_t> coeff;
  for (const auto* b : evens) coeff.push_back(half_supertrace(*b).bits());
  // Basis of the kernel of the functional.
  int pivot = -1;
  for (size_t i = 0; i < coeff.size(); ++i)
    if (coeff[i]) {
      pivot = static_cast<int>(i);
      break;
    }
  for (size_t i = 0; i < evens.size(); ++i) {
    if (static_cast<int>(i) == pivot) continue;
    if (coeff[i] && pivot >= 0) {
      std::uint16_t f = ctx.div(coeff[i], coeff[pivot]);
      out.emplace_back(sd, Parity::even, evens[i]->entries() + evens[pivot]->entries().scaled(f));
    } else {
      out.push_back(*evens[i]);
    }
  }
  for (const auto& b : full.odd_basis()) out.push_back(b);
  return out;
}

std::vector<SuperMatrix> shape_pe_derived(const FieldCtx& ctx, int k, bool trace_zero) {
  // [[A, C], [D, A^T]] with C, D symmetric zero-diagonal, optionally tr A = 0.
  std::vector<SuperMatrix> mats;
  SuperDim sd{k, k};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (trace_zero && i == j) continue;
      Matrix a = unit_matrix(ctx, k, i, j);
      mats.push_back(SuperMatrix::even_from_blocks(a, a.transpose()));
    }
  if (trace_zero)
    for (int i = 1; i < k; ++i) {
      Matrix a = unit_matrix(ctx, k, 0, 0) + unit_matrix(ctx, k, i, i);
      mats.push_back(SuperMatrix::even_from_blocks(a, a));
    }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      mats.push_back(SuperMatrix::odd_from_blocks(f_gen(ctx, k, i, j), Matrix(ctx, k, k)));
      mats.push_back(SuperMatrix::odd_from_blocks(Matrix(ctx, k, k), f_gen(ctx, k, i, j)));
    }
  return mats;
}

bool span_equals(const SuperAlgebraBasis& term, const std::vector<SuperMatrix>& shape) {
  SuperAlgebraBasis expected = SuperAlgebraBasis::from_span(term.ctx(), term.sdim(), shape, false);
  return term.same_span(expected);
}

}  // namespace

std::vector<StructureCheck> super_structure_checks(const SuperAlgebraBasis& term,
                                                   SuperFamily family, int level) {
  const FieldCtx& ctx = term.ctx();
  const SuperDim sd = term.sdim();
  std::vector<StructureCheck> out;
  auto add = [&out](std::string cond, bool ok) { out.push_back({std::move(cond), ok}); };

  switch (family) {
    case SuperFamily::oo_II: {
      bool sym = true, tr0 = true;
      for (const auto& b : term.even_basis()) {
        sym = sym && b.entries().is_symmetric();
        tr0 = tr0 && b.entries().trace_value() == 0;
      }
      for (const auto& b : term.odd_basis()) sym = sym && b.entries().is_symmetric();
      add("every element symmetric", sym);
      add("every element has trace 0", tr0);
      add("span equals symmetric trace-0 supermatrices",
          span_equals(term, shape_oo_II_derived(ctx, sd)));
      break;
    }
    case SuperFamily::oo_IPi: {
      bool zd = true;
      for (const auto& b : term.even_basis()) zd = zd && b.block00().is_zero_diagonal();
      add("even-even block zero-diagonal", zd);
      add("span equals the expected shape", span_equals(term, shape_oo_IPi_derived(ctx, sd)));
      break;
    }
    case SuperFamily::oo_PiPi: {
      bool zd = true;
      Matrix pi0 = pi_form(ctx, sd.n0), pi1 = pi_form(ctx, sd.n1);
      for (const auto& b : term.even_basis()) {
        zd = zd && (pi0 * b.block00()).is_zero_diagonal() && (pi1 * b.block11()).is_zero_diagonal();
      }
      add("Pi-twisted diagonal blocks zero-diagonal", zd);
      if (level >= 2) {
        bool ht = true;
        for (const auto& b : term.even_basis()) ht = ht && half_supertrace(b).bits() == 0;
        add("half-supertrace vanishes", ht);
      }
      add("span equals the expected shape",
          span_equals(term, shape_oo_PiPi_derived(ctx, sd, level >= 2)));
      break;
    }
    case SuperFamily::pe: {
      bool zd = true, tr0 = true;
      for (const auto& b : term.odd_basis())
        zd = zd && b.block01().is_zero_diagonal() && b.block10().is_zero_diagonal();
      for (const auto& b : term.even_basis()) tr0 = tr0 && b.block00().trace_value() == 0;
      add("off-diagonal blocks zero-diagonal", zd);
      if (level >= 2) add("tr A = 0", tr0);
      add("span equals the expected shape",
          span_equals(term, shape_pe_derived(ctx, sd.n0, level >= 2)));
      break;
    }
  }
  return out;
}

FieldElem half_supertrace(const SuperMatrix& x) {
  if (x.parity() != Parity::even) throw DomainError("half-supertrace needs an even supermatrix");
  const SuperDim sd = x.sdim();
  if (sd.n0 % 2 || sd.n1 % 2) throw DomainError("half-supertrace needs even block dimensions");
  const FieldCtx& ctx = x.ctx();
  Matrix a0 = pi_form(ctx, sd.n0) * x.block00();
  Matrix a1 = pi_form(ctx, sd.n1) * x.block11();
  if (!a0.is_symmetric() || !a1.is_symmetric())
    throw DomainError("supermatrix is not of the oo_PiPi shape");
  std::uint16_t acc = 0;
  for (int i = 0; i < sd.n0 / 2; ++i) acc = ctx.add(acc, x.block00().get(i, i));
  for (int i = 0; i < sd.n1 / 2; ++i) acc = ctx.add(acc, x.block11().get(i, i));
  return FieldElem(ctx, acc);
}

AlgebraBasis forgetful(const SuperAlgebraBasis& g) {
  std::vector<Matrix> mats;
  for (const auto& b : g.even_basis()) mats.push_back(b.entries());
  for (const auto& b : g.odd_basis()) mats.push_back(b.entries());
  return AlgebraBasis::from_span(g.ctx(), g.sdim().total(), mats, /*check_closed=*/true);
}

namespace {

// Coordinate view over GF(2) with squaring data for ideal closures.
struct SuperCoord {
  int dim = 0;
  std::uint32_t odd_mask = 0;
  std::vector<std::vector<std::uint32_t>> ad;  // coords of [b_i, b_j]
  std::vector<std::uint32_t> sq;               // coords of b_i^2 (odd i), else 0

  std::uint32_t apply_ad(int i, std::uint32_t v) const {
    std::uint32_t acc = 0;
    while (v) {
      int j = __builtin_ctz(v);
      v &= v - 1;
      acc ^= ad[i][j];
    }
    return acc;
  }

  std::uint32_t square_of(std::uint32_t v) const {
    std::uint32_t vo = v & odd_mask, acc = 0;
    for (std::uint32_t w = vo; w;) {
      int i = __builtin_ctz(w);
      w &= w - 1;
      acc ^= sq[i];
      for (std::uint32_t u = w; u;) {
        int j = __builtin_ctz(u);
        u &= u - 1;
        acc ^= ad[i][j];
      }
    }
    return acc;
  }
};

struct BitSpan {
  std::array<std::uint32_t, 32> row{};
  std::uint32_t pivot_mask = 0;
  int dim = 0;
  std::uint32_t reduce(std::uint32_t v) const {
    while (v) {
      int p = 31 - __builtin_clz(v);
      if (!((pivot_mask >> p) & 1)) return v;
      v ^= row[p];
    }
    return 0;
  }
  bool insert(std::uint32_t v) {
    v = reduce(v);
    if (!v) return false;
    int p = 31 - __builtin_clz(v);
    row[p] = v;
    pivot_mask |= 1u << p;
    ++dim;
    return true;
  }
};

SuperCoord super_coordinatize(const SuperAlgebraBasis& g) {
  if (g.ctx().degree() != 1) throw DomainError("exhaustive super enumeration requires GF(2)");
  const int n = g.sdim().total();
  std::vector<Matrix> basis;
  for (const auto& b : g.even_basis()) basis.push_back(b.entries());
  for (const auto& b : g.odd_basis()) basis.push_back(b.entries());
  SuperCoord c;
  c.dim = static_cast<int>(basis.size());
  if (c.dim > 22) throw DomainError("super algebra exceeds the exhaustive envelope of dim 22");
  EchelonSpace space(g.ctx(), n * n);
  for (const auto& b : basis) space.insert(b.vectorized());
  auto coords_of = [&](const Matrix& m) {
    auto coords = space.coordinates(m.vectorized());
    if (!coords) throw DomainError("element left the super algebra");
    std::uint32_t mask = 0;
    for (int k = 0; k < c.dim; ++k)
      if ((*coords)[k]) mask |= 1u << k;
    return mask;
  };
  // The echelon space reorders basis vectors; rebuild the basis list in
  // echelon order so coordinates and parities stay aligned.
  // Even and odd vectorized supports are disjoint, so each echelon row is
  // itself homogeneous; recompute the parity mask from the rows.
  std::vector<Matrix> ech_basis;
  c.odd_mask = 0;
  for (int k = 0; k < c.dim; ++k) {
    Matrix m = Matrix::from_vector(g.ctx(), n, n, space.rows()[k]);
    bool odd = !block_is_zero(m, 0, g.sdim().n0, g.sdim().n0, g.sdim().n1) ||
               !block_is_zero(m, g.sdim().n0, 0, g.sdim().n1, g.sdim().n0);
    if (odd) c.odd_mask |= 1u << k;
    ech_basis.push_back(std::move(m));
  }
  c.ad.assign(c.dim, std::vector<std::uint32_t>(c.dim, 0));
  c.sq.assign(c.dim, 0);
  for (int i = 0; i < c.dim; ++i) {
    for (int j = i + 1; j < c.dim; ++j) {
      std::uint32_t m = coords_of(bracket(ech_basis[i], ech_basis[j]));
      c.ad[i][j] = m;
      c.ad[j][i] = m;
    }
    if ((c.odd_mask >> i) & 1) c.sq[i] = coords_of(ech_basis[i] * ech_basis[i]);
  }
  return c;
}

// Smallest subspace containing seed, stable under ad and under squaring of
// odd components. Aborts early at full dimension.
BitSpan super_closure(const SuperCoord& alg, std::uint32_t seed) {
  BitSpan span;
  std::uint32_t stack[32];
  int top = 0;
  if (span.insert(seed)) stack[top++] = seed;
  while (top && span.dim < alg.dim) {
    std::uint32_t v = stack[--top];
    for (int i = 0; i < alg.dim && span.dim < alg.dim; ++i) {
      std::uint32_t u = span.reduce(alg.apply_ad(i, v));
      if (u) {
        span.insert(u);
        stack[top++] = u;
      }
    }
    std::uint32_t s = span.reduce(alg.square_of(v));
    if (s && span.dim < alg.dim) {
      span.insert(s);
      stack[top++] = s;
    }
  }
  return span;
}

}  // namespace

SuperSimplicityResult super_is_simple(const SuperAlgebraBasis& g) {
  SuperCoord alg = super_coordinatize(g);
  if (alg.dim == 0) return {false, std::nullopt};
  const int n = g.sdim().total();
  std::vector<Matrix> basis;
  for (const auto& b : g.even_basis()) basis.push_back(b.entries());
  for (const auto& b : g.odd_basis()) basis.push_back(b.entries());
  EchelonSpace space(g.ctx(), n * n);
  for (const auto& b : basis) space.insert(b.vectorized());
  std::vector<Matrix> ech_basis;
  for (const auto& r : space.rows()) ech_basis.push_back(Matrix::from_vector(g.ctx(), n, n, r));

  bool abelian = true;
  for (int i = 0; i < alg.dim && abelian; ++i)
    for (int j = i + 1; j < alg.dim && abelian; ++j)
      if (alg.ad[i][j]) abelian = false;
  for (int i = 0; i < alg.dim && abelian; ++i)
    if (alg.sq[i]) abelian = false;

  auto masks_to_matrices = [&](const BitSpan& span) {
    std::vector<Matrix> out;
    for (int p = 0; p < 32; ++p)
      if ((span.pivot_mask >> p) & 1) {
        Matrix x(g.ctx(), n, n);
        for (int k = 0; k < alg.dim; ++k)
          if ((span.row[p] >> k) & 1) x = x + ech_basis[k];
        out.push_back(std::move(x));
      }
    return out;
  };

  if (abelian) {
    if (alg.dim == 1) return {false, std::nullopt};
    BitSpan one = super_closure(alg, 1u);
    return {false, masks_to_matrices(one)};
  }
  const std::uint64_t total = (std::uint64_t{1} << alg.dim) - 1;
  for (std::uint64_t s = 1; s <= total; ++s) {
    BitSpan span = super_closure(alg, static_cast<std::uint32_t>(s));
    if (span.dim < alg.dim) return {false, masks_to_matrices(span)};
  }
  return {true, std::nullopt};
}

SuperAlgebraBasis super_center(const SuperAlgebraBasis& g) {
  AlgebraBasis plain = forgetful(g);
  AlgebraBasis z = center(plain);
  const SuperDim sd = g.sdim();
  const int n = sd.total();
  std::vector<SuperMatrix> parts;
  for (const auto& m : z.basis()) {
    Matrix ev(g.ctx(), n, n), od(g.ctx(), n, n);
    ev.set_block(0, 0, m.block(0, 0, sd.n0, sd.n0));
    ev.set_block(sd.n0, sd.n0, m.block(sd.n0, sd.n0, sd.n1, sd.n1));
    od.set_block(0, sd.n0, m.block(0, sd.n0, sd.n0, sd.n1));
    od.set_block(sd.n0, 0, m.block(sd.n0, 0, sd.n1, sd.n0));
    if (!ev.is_zero()) parts.emplace_back(sd, Parity::even, ev);
    if (!od.is_zero()) parts.emplace_back(sd, Parity::odd, od);
  }
  return SuperAlgebraBasis::from_span(g.ctx(), sd, parts, false);
}

bool super_central_quotient_is_simple(const SuperAlgebraBasis& g) {
  SuperCoord alg = super_coordinatize(g);
  // Center coordinates: masks commuting with every basis vector.
  std::vector<std::uint32_t> center_rows;
  {
    // Solve ad(v) = 0: dim equations of dim bits each.
    // Build the matrix with columns = basis index, rows = (j, coordinate).
    Matrix sys(FieldCtx::get(1), alg.dim * alg.dim, alg.dim);
    for (int i = 0; i < alg.dim; ++i)
      for (int j = 0; j < alg.dim; ++j)
        for (int k = 0; k < alg.dim; ++k)
          if ((alg.ad[i][j] >> k) & 1) sys.set(j * alg.dim + k, i, 1);
    for (const auto& v : sys.kernel_basis()) {
      std::uint32_t m = 0;
      for (int i = 0; i < alg.dim; ++i)
        if (v[i]) m |= 1u << i;
      center_rows.push_back(m);
    }
  }
  BitSpan zspan;
  for (auto m : center_rows) zspan.insert(m);
  // Quotient coordinates: complement positions of the center's pivots.
  std::vector<int> rep;  // quotient coordinate -> original coordinate
  for (int k = 0; k < alg.dim; ++k)
    if (!((zspan.pivot_mask >> k) & 1)) rep.push_back(k);
  const int qdim = static_cast<int>(rep.size());
  if (qdim == 0) return false;
  auto project = [&](std::uint32_t v) {
    v = zspan.reduce(v);
    std::uint32_t out = 0;
    for (int q = 0; q < qdim; ++q)
      if ((v >> rep[q]) & 1) out |= 1u << q;
    return out;
  };
  SuperCoord quot;
  quot.dim = qdim;
  quot.ad.assign(qdim, std::vector<std::uint32_t>(qdim, 0));
  quot.sq.assign(qdim, 0);
  quot.odd_mask = 0;
  for (int q = 0; q < qdim; ++q) {
    if ((alg.odd_mask >> rep[q]) & 1) quot.odd_mask |= 1u << q;
    if ((alg.odd_mask >> rep[q]) & 1) quot.sq[q] = project(alg.sq[rep[q]]);
  }
  for (int a = 0; a < qdim; ++a)
    for (int b = a + 1; b < qdim; ++b) {
      std::uint32_t m = project(alg.ad[rep[a]][rep[b]]);
      quot.ad[a][b] = m;
      quot.ad[b][a] = m;
    }
  bool abelian = true;
  for (int a = 0; a < qdim && abelian; ++a) {
    for (int b = a + 1; b < qdim && abelian; ++b)
      if (quot.ad[a][b]) abelian = false;
    if (quot.sq[a]) abelian = false;
  }
  if (abelian) return false;
  const std::uint64_t total = (std::uint64_t{1} << qdim) - 1;
  for (std::uint64_t s = 1; s <= total; ++s) {
    BitSpan span = super_closure(quot, static_cast<std::uint32_t>(s));
    if (span.dim < qdim) return false;
  }
  return true;
}

SuperMatrix ooii_f(const FieldCtx& ctx, SuperDim sdim, int i, int j) {
  bool i0 = i < sdim.n0, j0 = j < sdim.n0;
  return SuperMatrix(sdim, i0 == j0 ? Parity::even : Parity::odd, f_gen(ctx, sdim.total(), i, j));
}

SuperMatrix ooii_h(const FieldCtx& ctx, SuperDim sdim, int i, int j) {
  Matrix h = unit_matrix(ctx, sdim.total(), i, i) + unit_matrix(ctx, sdim.total(), j, j);
  return SuperMatrix(sdim, Parity::even, h);
}

SuperMatrix ooipi_f(const FieldCtx& ctx, SuperDim sdim, int i, int j) {
  return SuperMatrix::even_from_blocks(f_gen(ctx, sdim.n0, i, j), Matrix(ctx, sdim.n1, sdim.n1));
}

SuperMatrix ooipi_g(const FieldCtx& ctx, SuperDim sdim, int i, int j) {
  Matrix c(ctx, sdim.n1, sdim.n0);
  c.set(i, j, 1);
  return SuperMatrix::odd_from_blocks(c.transpose() * pi_form(ctx, sdim.n1), c);
}

SuperMatrix ooipi_h(const FieldCtx& ctx, SuperDim sdim, int i) {
  int k = sdim.n1 / 2;
  Matrix lr(ctx, sdim.n1, sdim.n1);
  if (i < k)
    lr.set(i, i + k, 1);
  else
    lr.set(i, i - k, 1);
  return SuperMatrix::even_from_blocks(Matrix(ctx, sdim.n0, sdim.n0), lr);
}

SuperMatrix ooipi_iod(const FieldCtx& ctx, SuperDim sdim) {
  return SuperMatrix::even_from_blocks(Matrix(ctx, sdim.n0, sdim.n0), pi_form(ctx, sdim.n1));
}

}  // namespace char2forms
