#include "char2forms/lie.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "char2forms/parallel.hpp"

namespace char2forms {

int thread_count() {
  if (const char* env = std::getenv("CHAR2FORMS_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void parallel_chunks(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  int workers = thread_count();
  if (workers <= 1 || total < 1024) {
    fn(0, total);
    return;
  }
  // Dynamic chunking: per-seed cost varies, so workers pull fixed-size
  // ranges from a shared counter.
  const std::uint64_t chunk = std::max<std::uint64_t>(1024, total / (64 * workers));
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::uint64_t b = next.fetch_add(chunk);
        if (b >= total) break;
        fn(b, std::min(total, b + chunk));
      }
    });
  }
  for (auto& th : pool) th.join();
}

AlgebraBasis::AlgebraBasis(const FieldCtx& ctx, int n, EchelonSpace space)
    : ctx_(&ctx), n_(n), space_(std::move(space)) {
  for (const auto& row : space_.rows()) basis_.push_back(Matrix::from_vector(ctx, n, n, row));
}

AlgebraBasis AlgebraBasis::from_span(const FieldCtx& ctx, int n, const std::vector<Matrix>& mats,
                                     bool check_closed) {
  EchelonSpace space(ctx, n * n);
  for (const auto& m : mats) {
    if (&m.ctx() != &ctx || m.rows() != n || m.cols() != n)
      throw DomainError("spanning matrix has wrong size or context");
    space.insert(m.vectorized());
  }
  AlgebraBasis g(ctx, n, std::move(space));
  if (check_closed) {
    for (size_t i = 0; i < g.basis_.size(); ++i)
      for (size_t j = i + 1; j < g.basis_.size(); ++j)
        if (!g.contains(bracket(g.basis_[i], g.basis_[j])))
          throw DomainError("basis is not closed under the bracket");
  }
  return g;
}

bool AlgebraBasis::is_abelian() const {
  for (size_t i = 0; i < basis_.size(); ++i)
    for (size_t j = i + 1; j < basis_.size(); ++j)
      if (!bracket(basis_[i], basis_[j]).is_zero()) return false;
  return true;
}

Matrix bracket(const Matrix& x, const Matrix& y) { return x * y + y * x; }

AlgebraBasis preserver(const Matrix& b) {
  if (!b.is_square()) throw DomainError("preserver needs a square form matrix");
  const FieldCtx& ctx = b.ctx();
  const int n = b.rows();
  // Unknown X is vectorized as columns (a,b) -> a*n+b of an n^2 x n^2 system;
  // equation (k,l): sum_a X_{ak} B_{al} + sum_a B_{ka} X_{al} = 0.
  Matrix sys(ctx, n * n, n * n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const int row = k * n + l;
      for (int a = 0; a < n; ++a) {
        std::uint16_t c1 = b.get(a, l);  // coefficient of X_{ak}
        if (c1) sys.set(row, a * n + k, ctx.add(sys.get(row, a * n + k), c1));
        std::uint16_t c2 = b.get(k, a);  // coefficient of X_{al}
        if (c2) sys.set(row, a * n + l, ctx.add(sys.get(row, a * n + l), c2));
      }
    }
  std::vector<Matrix> basis;
  for (const auto& v : sys.kernel_basis()) basis.push_back(Matrix::from_vector(ctx, n, n, v));
  AlgebraBasis g = AlgebraBasis::from_span(ctx, n, basis, /*check_closed=*/true);
  for (const auto& x : g.basis())
    if (!(x.transpose() * b + b * x).is_zero())
      throw DomainError("preserver solution failed the defining relation");
  return g;
}

AlgebraBasis sociological_preserver(const Matrix& b) {
  return preserver(b + b.transpose());
}

AlgebraBasis o_I(const FieldCtx& ctx, int n) { return preserver(Matrix::identity(ctx, n)); }
AlgebraBasis o_S(const FieldCtx& ctx, int n) { return preserver(s_form(ctx, n)); }
AlgebraBasis o_Pi(const FieldCtx& ctx, int n) { return preserver(pi_form(ctx, n)); }

AlgebraBasis gl_algebra(const FieldCtx& ctx, int n) {
  std::vector<Matrix> mats;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mats.push_back(unit_matrix(ctx, n, i, j));
  return AlgebraBasis::from_span(ctx, n, mats, false);
}

AlgebraBasis zd_algebra(const FieldCtx& ctx, int n) {
  std::vector<Matrix> mats;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) mats.push_back(f_gen(ctx, n, i, j));
  return AlgebraBasis::from_span(ctx, n, mats, false);
}

DerivedSeries derived_series(const AlgebraBasis& g, int depth) {
  DerivedSeries out;
  for (int level = 1; level <= depth; ++level) {
    const AlgebraBasis& cur = out.terms.empty() ? g : out.terms.back();
    std::vector<Matrix> brackets;
    for (size_t i = 0; i < cur.basis().size(); ++i)
      for (size_t j = i + 1; j < cur.basis().size(); ++j)
        brackets.push_back(bracket(cur.basis()[i], cur.basis()[j]));
    AlgebraBasis next = AlgebraBasis::from_span(g.ctx(), g.n(), brackets, false);
    bool stable = next.same_span(cur);
    bool zero = next.dim() == 0;
    out.terms.push_back(std::move(next));
    if (stable) {
      out.stabilized_at = level - 1;  // g^(level) = g^(level-1)
      break;
    }
    if (zero) {
      out.stabilized_at = level;
      break;
    }
  }
  return out;
}

AlgebraBasis center(const AlgebraBasis& g) {
  const int d = g.dim(), n = g.n();
  const FieldCtx& ctx = g.ctx();
  // Solve sum_i c_i [b_i, b_j] = 0 for all j: rows are coefficient vectors.
  Matrix sys(ctx, d, d * n * n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix br = bracket(g.basis()[i], g.basis()[j]);
      auto v = br.vectorized();
      for (int k = 0; k < n * n; ++k) sys.set(i, j * n * n + k, v[k]);
    }
  std::vector<Matrix> result;
  for (const auto& coeffs : sys.transpose().kernel_basis()) {
    Matrix x(ctx, n, n);
    for (int i = 0; i < d; ++i)
      if (coeffs[i]) x = x + g.basis()[i].scaled(coeffs[i]);
    result.push_back(std::move(x));
  }
  return AlgebraBasis::from_span(ctx, n, result, false);
}

namespace {

// Echelon basis over GF(2) packed in words, highest pivot bit first.
struct BitEchelon {
  std::array<std::uint32_t, 32> row{};  // indexed by pivot position
  std::uint32_t pivot_mask = 0;
  int dim = 0;

  // Reduces v until its top bit is an unclaimed pivot (or v vanishes).
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

// Structure-constant view of an algebra over GF(2) with dim <= 32:
// elements are coordinate bitmasks, ad tables give bracket columns.
struct CoordAlgebra {
  int dim;
  std::vector<std::uint32_t> ad;  // ad[i*dim+j] = coords([b_i, b_j])
  // A small Lie-generating set; an ideal is stable under all of g iff it
  // is stable under the ad of each generator (ad[a,b] = [ad a, ad b]).
  int n_gens = 0;
  std::vector<std::uint32_t> gen_cols;  // gen_cols[j*n_gens + t] = ad(gen_t)(e_j)

  std::uint32_t apply_ad(int i, std::uint32_t v) const {
    std::uint32_t acc = 0, w = v;
    const std::uint32_t* row = ad.data() + static_cast<size_t>(i) * dim;
    while (w) {
      int j = __builtin_ctz(w);
      w &= w - 1;
      acc ^= row[j];
    }
    return acc;
  }
  std::uint32_t apply_elem_ad(std::uint32_t elem, std::uint32_t v) const {
    std::uint32_t acc = 0;
    while (elem) {
      int i = __builtin_ctz(elem);
      elem &= elem - 1;
      acc ^= apply_ad(i, v);
    }
    return acc;
  }
};

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

CoordAlgebra coordinatize(const AlgebraBasis& g) {
  if (g.ctx().degree() != 1) throw DomainError("exhaustive enumeration requires GF(2)");
  CoordAlgebra c;
  c.dim = g.dim();
  c.ad.assign(static_cast<size_t>(c.dim) * c.dim, 0);
  for (int i = 0; i < c.dim; ++i)
    for (int j = i + 1; j < c.dim; ++j) {
      auto coords = g.space().coordinates(bracket(g.basis()[i], g.basis()[j]).vectorized());
      if (!coords) throw DomainError("bracket left the algebra");
      std::uint32_t mask = 0;
      for (int k = 0; k < c.dim; ++k)
        if ((*coords)[k]) mask |= 1u << k;
      c.ad[static_cast<size_t>(i) * c.dim + j] = mask;
      c.ad[static_cast<size_t>(j) * c.dim + i] = mask;  // [x,y] = [y,x] in char 2
    }
  // Greedy Lie-generating set, preferring deterministic pseudo-random
  // elements (rich supports generate quickly) and falling back to basis
  // vectors until the generated subalgebra is everything.
  BitEchelon span;
  std::vector<std::uint32_t> gens, members, work;
  std::uint64_t rand_state = 0x00c2f0c2f0ull;
  const std::uint32_t full_mask =
      c.dim == 32 ? ~0u : ((1u << c.dim) - 1);
  int candidates_tried = 0;
  while (span.dim < c.dim) {
    std::uint32_t cand;
    if (candidates_tried < 64) {
      cand = static_cast<std::uint32_t>(splitmix64(rand_state)) & full_mask;
      ++candidates_tried;
    } else {
      cand = 0;
      for (int k = 0; k < c.dim; ++k)
        if (span.reduce(1u << k)) {
          cand = 1u << k;
          break;
        }
    }
    if (!span.reduce(cand)) continue;
    gens.push_back(cand);
    span.insert(cand);
    members.push_back(cand);
    work.push_back(cand);
    while (!work.empty()) {
      std::uint32_t v = work.back();
      work.pop_back();
      for (size_t mi = 0; mi < members.size(); ++mi) {
        std::uint32_t br = c.apply_elem_ad(members[mi], v);
        if (br && span.insert(br)) {
          members.push_back(br);
          work.push_back(br);
        }
      }
    }
  }
  c.n_gens = static_cast<int>(gens.size());
  c.gen_cols.assign(static_cast<size_t>(c.dim) * c.n_gens, 0);
  for (int t = 0; t < c.n_gens; ++t)
    for (int j = 0; j < c.dim; ++j)
      c.gen_cols[static_cast<size_t>(j) * c.n_gens + t] =
          c.apply_elem_ad(gens[t], 1u << j);
  return c;
}

// Ideal closure in coordinates; aborts early at full dimension. Stability
// under the ad of the generating set implies stability under all of g.
BitEchelon bit_closure(const CoordAlgebra& alg, std::uint32_t seed) {
  BitEchelon ech;
  std::uint32_t stack[32];
  int top = 0;
  if (ech.insert(seed)) stack[top++] = seed;
  std::uint32_t acc[32];
  while (top && ech.dim < alg.dim) {
    std::uint32_t v = stack[--top];
    for (int t = 0; t < alg.n_gens; ++t) acc[t] = 0;
    while (v) {
      int j = __builtin_ctz(v);
      v &= v - 1;
      const std::uint32_t* cols = alg.gen_cols.data() + static_cast<size_t>(j) * alg.n_gens;
      for (int t = 0; t < alg.n_gens; ++t) acc[t] ^= cols[t];
    }
    for (int t = 0; t < alg.n_gens; ++t) {
      std::uint32_t u = ech.reduce(acc[t]);
      if (u) {
        ech.insert(u);
        stack[top++] = u;
        if (ech.dim == alg.dim) return ech;
      }
    }
  }
  return ech;
}

AlgebraBasis subspace_from_masks(const AlgebraBasis& g, const std::vector<std::uint32_t>& masks) {
  std::vector<Matrix> mats;
  for (auto m : masks) {
    Matrix x(g.ctx(), g.n(), g.n());
    for (int k = 0; k < g.dim(); ++k)
      if ((m >> k) & 1) x = x + g.basis()[k];
    mats.push_back(std::move(x));
  }
  return AlgebraBasis::from_span(g.ctx(), g.n(), mats, false);
}

constexpr int kSimplicityEnvelopeDim = 27;  // largest instance needed: o_Pi^(2)(8)

}  // namespace

AlgebraBasis ideal_closure(const AlgebraBasis& g, const Matrix& seed) {
  auto coords = g.space().coordinates(seed.vectorized());
  if (!coords) throw DomainError("ideal seed lies outside the algebra");
  // Generic-field fixed point iteration.
  EchelonSpace closure(g.ctx(), g.n() * g.n());
  std::vector<Matrix> work;
  if (closure.insert(seed.vectorized())) work.push_back(seed);
  while (!work.empty()) {
    Matrix v = std::move(work.back());
    work.pop_back();
    for (const auto& b : g.basis()) {
      Matrix u = bracket(v, b);
      auto reduced = closure.reduce(u.vectorized());
      bool zero = std::all_of(reduced.begin(), reduced.end(), [](std::uint16_t x) { return x == 0; });
      if (!zero) {
        closure.insert(u.vectorized());
        work.push_back(Matrix::from_vector(g.ctx(), g.n(), g.n(), reduced));
      }
    }
  }
  std::vector<Matrix> mats;
  for (const auto& r : closure.rows()) mats.push_back(Matrix::from_vector(g.ctx(), g.n(), g.n(), r));
  return AlgebraBasis::from_span(g.ctx(), g.n(), mats, false);
}

SimplicityResult is_simple(const AlgebraBasis& g) {
  if (g.ctx().degree() != 1)
    throw DomainError("simplicity certificates are exhaustive and restricted to GF(2)");
  if (g.dim() > kSimplicityEnvelopeDim)
    throw DomainError("algebra dimension " + std::to_string(g.dim()) +
                      " exceeds the exhaustive envelope " + std::to_string(kSimplicityEnvelopeDim));
  if (g.dim() == 0) return {false, std::nullopt};
  if (g.is_abelian()) {
    if (g.dim() == 1) return {false, std::nullopt};
    return {false, subspace_from_masks(g, {1u})};
  }
  // A nonzero proper center is itself a proper ideal.
  AlgebraBasis z = center(g);
  if (z.dim() > 0 && z.dim() < g.dim()) return {false, z};

  CoordAlgebra alg = coordinatize(g);
  const std::uint64_t total = (std::uint64_t{1} << alg.dim) - 1;
  // Every chunk is scanned in ascending order and stops at its first proper
  // closure; the minimum across chunks makes the witness deterministic.
  std::atomic<std::uint64_t> min_bad{~std::uint64_t{0}};
  parallel_chunks(total, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t s = begin; s < end; ++s) {
      std::uint32_t seed = static_cast<std::uint32_t>(s + 1);
      BitEchelon ech = bit_closure(alg, seed);
      if (ech.dim < alg.dim) {
        std::uint64_t cur = min_bad.load();
        while (s + 1 < cur && !min_bad.compare_exchange_weak(cur, s + 1)) {
        }
        break;
      }
    }
  });
  if (min_bad.load() != ~std::uint64_t{0}) {
    BitEchelon ech = bit_closure(alg, static_cast<std::uint32_t>(min_bad.load()));
    std::vector<std::uint32_t> masks;
    for (int p = 0; p < 32; ++p)
      if ((ech.pivot_mask >> p) & 1) masks.push_back(ech.row[p]);
    return {false, subspace_from_masks(g, masks)};
  }
  return {true, std::nullopt};
}

AlgebraBasis quotient_by_center(const AlgebraBasis& g) {
  AlgebraBasis z = center(g);
  // Complement: basis vectors of g whose leading pivot is not a pivot of z.
  std::set<int> zpivots(z.space().pivots().begin(), z.space().pivots().end());
  std::vector<Matrix> complement;
  {
    // Rebuild g's echelon on top of z's so complement pivots are disjoint.
    EchelonSpace ext(g.ctx(), g.n() * g.n());
    for (const auto& r : z.space().rows()) ext.insert(r);
    for (const auto& b : g.basis()) {
      auto before = ext.dim();
      ext.insert(b.vectorized());
      if (ext.dim() > before) complement.push_back(b);
    }
  }
  // Adjoint action of complement representatives on g: faithful on g/Z.
  const int d = g.dim();
  std::vector<Matrix> ad_mats;
  for (const auto& c : complement) {
    Matrix ad(g.ctx(), d, d);
    for (int j = 0; j < d; ++j) {
      auto coords = g.space().coordinates(bracket(c, g.basis()[j]).vectorized());
      if (!coords) throw DomainError("bracket left the algebra");
      for (int i = 0; i < d; ++i) ad.set(i, j, (*coords)[i]);
    }
    ad_mats.push_back(std::move(ad));
  }
  return AlgebraBasis::from_span(g.ctx(), d, ad_mats, /*check_closed=*/true);
}

Fingerprint fingerprint(const AlgebraBasis& g) {
  Fingerprint fp;
  fp.entries[0] = g.dim();
  DerivedSeries ds = derived_series(g, 3);
  for (int i = 0; i < 3; ++i) {
    if (i < static_cast<int>(ds.terms.size()))
      fp.entries[1 + i] = ds.terms[i].dim();
    else
      fp.entries[1 + i] = ds.terms.empty() ? 0 : ds.terms.back().dim();
  }
  AlgebraBasis z = center(g);
  fp.entries[4] = z.dim();
  if (!ds.terms.empty())
    fp.entries[5] = intersect(z.space(), ds.terms[0].space()).dim();
  fp.entries[6] = diagonal_subalgebra(g).dim();
  return fp;
}

AlgebraBasis diagonal_subalgebra(const AlgebraBasis& g) {
  const int d = g.dim(), n = g.n();
  const FieldCtx& ctx = g.ctx();
  // Solve for coefficient vectors whose combination has zero off-diagonal.
  const int noff = n * n - n;
  Matrix sys(ctx, noff, d);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < d; ++k) sys.set(row, k, g.basis()[k].get(i, j));
      ++row;
    }
  std::vector<Matrix> result;
  for (const auto& coeffs : sys.kernel_basis()) {
    Matrix x(ctx, n, n);
    for (int k = 0; k < d; ++k)
      if (coeffs[k]) x = x + g.basis()[k].scaled(coeffs[k]);
    result.push_back(std::move(x));
  }
  return AlgebraBasis::from_span(ctx, n, result, false);
}

AlgebraBasis intersect_algebras(const AlgebraBasis& a, const AlgebraBasis& b) {
  if (a.n() != b.n() || &a.ctx() != &b.ctx()) throw DomainError("intersecting incompatible algebras");
  EchelonSpace s = intersect(a.space(), b.space());
  std::vector<Matrix> mats;
  for (const auto& r : s.rows()) mats.push_back(Matrix::from_vector(a.ctx(), a.n(), a.n(), r));
  return AlgebraBasis::from_span(a.ctx(), a.n(), mats, false);
}

Matrix f_gen(const FieldCtx& ctx, int n, int i, int j) {
  if (i == j) throw DomainError("F generator needs distinct indices");
  Matrix m(ctx, n, n);
  m.set(i, j, 1);
  m.set(j, i, 1);
  return m;
}

namespace {
Matrix opi_embed(const FieldCtx& ctx, int k, const Matrix& a, const Matrix& b, const Matrix& c) {
  Matrix m(ctx, 2 * k, 2 * k);
  m.set_block(0, 0, a);
  m.set_block(0, k, b);
  m.set_block(k, 0, c);
  m.set_block(k, k, a.transpose());
  return m;
}
}  // namespace

Matrix opi_f1(const FieldCtx& ctx, int k, int i, int j) {
  return opi_embed(ctx, k, Matrix(ctx, k, k), f_gen(ctx, k, i, j), Matrix(ctx, k, k));
}
Matrix opi_f2(const FieldCtx& ctx, int k, int i, int j) {
  return opi_embed(ctx, k, Matrix(ctx, k, k), Matrix(ctx, k, k), f_gen(ctx, k, i, j));
}
Matrix opi_g(const FieldCtx& ctx, int k, int i, int j) {
  if (i == j) throw DomainError("G generator needs distinct indices");
  return opi_embed(ctx, k, unit_matrix(ctx, k, i, j), Matrix(ctx, k, k), Matrix(ctx, k, k));
}
Matrix opi_h(const FieldCtx& ctx, int k, int i, int j) {
  if (i == j) throw DomainError("H generator needs distinct indices");
  Matrix a = unit_matrix(ctx, k, i, i) + unit_matrix(ctx, k, j, j);
  return opi_embed(ctx, k, a, Matrix(ctx, k, k), Matrix(ctx, k, k));
}
Matrix opi_k0(const FieldCtx& ctx, int k) {
  return opi_embed(ctx, k, unit_matrix(ctx, k, 0, 0), Matrix(ctx, k, k), Matrix(ctx, k, k));
}
Matrix opi_k1(const FieldCtx& ctx, int k) {
  return opi_embed(ctx, k, Matrix(ctx, k, k), unit_matrix(ctx, k, 0, 0), Matrix(ctx, k, k));
}
Matrix opi_k2(const FieldCtx& ctx, int k) {
  return opi_embed(ctx, k, Matrix(ctx, k, k), Matrix(ctx, k, k), unit_matrix(ctx, k, 0, 0));
}

}  // namespace char2forms
