#include "char2forms/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace char2forms {

std::string predicate_name(Predicate p) {
  switch (p) {
    case Predicate::nondeg_nonsym:
      return "nondeg-nonsym";
    case Predicate::nondeg_sym:
      return "nondeg-sym";
    case Predicate::all_sym:
      return "all-sym";
    case Predicate::all:
      return "all";
  }
  return "?";
}

std::string equivalence_name(Equivalence e) {
  switch (e) {
    case Equivalence::congruence:
      return "congruence";
    case Equivalence::sociological:
      return "sociological";
    case Equivalence::albert:
      return "albert";
  }
  return "?";
}

Predicate parse_predicate(const std::string& s) {
  if (s == "nondeg-nonsym" || s == "nondegenerate-nonsymmetric") return Predicate::nondeg_nonsym;
  if (s == "nondeg-sym" || s == "nondegenerate-symmetric") return Predicate::nondeg_sym;
  if (s == "all-sym" || s == "all-symmetric") return Predicate::all_sym;
  if (s == "all") return Predicate::all;
  throw ParseError("unknown predicate: " + s);
}

Equivalence parse_equivalence(const std::string& s) {
  if (s == "congruence") return Equivalence::congruence;
  if (s == "sociological" || s == "socio") return Equivalence::sociological;
  if (s == "albert") return Equivalence::albert;
  throw ParseError("unknown equivalence: " + s);
}

std::uint32_t pack_gf2(const Matrix& m) {
  if (m.ctx().degree() != 1 || m.rows() > 5 || !m.is_square())
    throw DomainError("packing expects a square GF(2) matrix, n <= 5");
  std::uint32_t bits = 0;
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.get(i, j)) bits |= std::uint32_t{1} << (i * n + j);
  return bits;
}

Matrix unpack_gf2(std::uint32_t bits, int n) {
  Matrix m(FieldCtx::get(1), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((bits >> (i * n + j)) & 1) m.set(i, j, 1);
  return m;
}

std::uint32_t packed_mul(std::uint32_t a, std::uint32_t b, int n) {
  std::uint32_t r = 0;
  const std::uint32_t row_mask = (1u << n) - 1;
  for (int i = 0; i < n; ++i) {
    std::uint32_t arow = (a >> (i * n)) & row_mask, acc = 0;
    while (arow) {
      int k = __builtin_ctz(arow);
      arow &= arow - 1;
      acc ^= (b >> (k * n)) & row_mask;
    }
    r |= acc << (i * n);
  }
  return r;
}

std::uint32_t packed_transpose(std::uint32_t a, int n) {
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((a >> (i * n + j)) & 1) r |= std::uint32_t{1} << (j * n + i);
  return r;
}

std::uint32_t packed_congruence(std::uint32_t g, std::uint32_t b, int n) {
  return packed_mul(packed_mul(g, b, n), packed_transpose(g, n), n);
}

bool packed_invertible(std::uint32_t a, int n) {
  const std::uint32_t row_mask = (1u << n) - 1;
  std::uint32_t rows[5];
  for (int i = 0; i < n; ++i) rows[i] = (a >> (i * n)) & row_mask;
  int rank = 0;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = rank; i < n; ++i)
      if ((rows[i] >> c) & 1) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[rank], rows[p]);
    for (int i = 0; i < n; ++i)
      if (i != rank && ((rows[i] >> c) & 1)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank == n;
}

bool packed_symmetric(std::uint32_t a, int n) { return a == packed_transpose(a, n); }

std::vector<std::uint32_t> all_invertible_packed(int n) {
  std::vector<std::uint32_t> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t b = 0; b < total; ++b)
    if (packed_invertible(static_cast<std::uint32_t>(b), n))
      out.push_back(static_cast<std::uint32_t>(b));
  return out;
}

namespace {

// Row-major lexicographic order on packed matrices: entry (0,0) first.
bool lex_less(std::uint32_t a, std::uint32_t b, int n) {
  for (int idx = 0; idx < n * n; ++idx) {
    int ba = (a >> idx) & 1, bb = (b >> idx) & 1;
    if (ba != bb) return ba < bb;
  }
  return false;
}

struct UnionFind {
  std::vector<std::int32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::int32_t find(std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool satisfies(std::uint32_t b, int n, Predicate p) {
  switch (p) {
    case Predicate::all:
      return true;
    case Predicate::all_sym:
      return packed_symmetric(b, n);
    case Predicate::nondeg_sym:
      return packed_symmetric(b, n) && packed_invertible(b, n);
    case Predicate::nondeg_nonsym:
      return !packed_symmetric(b, n) && packed_invertible(b, n);
  }
  return false;
}

}  // namespace

std::uint64_t gl_order(int n) {
  std::uint64_t o = 1;
  for (int i = 0; i < n; ++i) o *= (std::uint64_t{1} << n) - (std::uint64_t{1} << i);
  return o;
}

OrbitCensus enumerate_classes(int n, Predicate predicate, Equivalence equivalence) {
  if (n < 1 || n > 4) throw DomainError("census envelope is 1 <= n <= 4");
  const std::uint32_t total = std::uint32_t{1} << (n * n);

  // Transvections generate GL(n, 2); offsets extend the action for the
  // quotient equivalences.
  std::vector<std::uint32_t> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::uint32_t t = 0;
      for (int d = 0; d < n; ++d) t |= std::uint32_t{1} << (d * n + d);
      t |= std::uint32_t{1} << (i * n + j);
      gens.push_back(t);
    }
  std::vector<std::uint32_t> offsets;
  if (equivalence != Equivalence::congruence) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (i == j && equivalence == Equivalence::albert) continue;
        std::uint32_t a = std::uint32_t{1} << (i * n + j);
        if (i != j) a |= std::uint32_t{1} << (j * n + i);
        offsets.push_back(a);
      }
  }

  UnionFind uf(total);
  for (std::uint32_t b = 0; b < total; ++b) {
    for (auto g : gens) uf.unite(b, packed_congruence(g, b, n));
    for (auto a : offsets) uf.unite(b, b ^ a);
  }

  // Deterministic class order: by first (numerically smallest) member.
  std::vector<std::int32_t> root_to_class(total, -1);
  std::vector<std::uint32_t> class_rep;     // lex-min satisfying member
  std::vector<std::uint64_t> class_size;    // satisfying members only
  std::vector<std::uint64_t> class_total;   // all members
  std::vector<std::int32_t> class_index_of(total, -1);
  for (std::uint32_t b = 0; b < total; ++b) {
    std::int32_t root = uf.find(static_cast<std::int32_t>(b));
    std::int32_t& cls = root_to_class[root];
    bool sat = satisfies(b, n, predicate);
    if (cls < 0) {
      if (!sat) continue;
      cls = static_cast<std::int32_t>(class_rep.size());
      class_rep.push_back(b);
      class_size.push_back(0);
      class_total.push_back(0);
    }
    if (sat) {
      ++class_size[cls];
      if (lex_less(b, class_rep[cls], n)) class_rep[cls] = b;
    }
  }
  // A second pass catches class members smaller than the first satisfying
  // member and fills the full partition map.
  for (std::uint32_t b = 0; b < total; ++b) {
    std::int32_t cls = root_to_class[uf.find(static_cast<std::int32_t>(b))];
    class_index_of[b] = cls;
    if (cls >= 0) ++class_total[cls];
  }

  std::uint64_t group_order = gl_order(n);
  for (auto off : offsets) {
    (void)off;
    group_order *= 2;
  }
  for (std::size_t c = 0; c < class_total.size(); ++c)
    if (group_order % class_total[c] != 0)
      throw DomainError("orbit size does not divide the acting group order");

  OrbitCensus census;
  census.n = n;
  census.predicate = predicate;
  census.equivalence = equivalence;
  for (std::size_t c = 0; c < class_rep.size(); ++c) {
    census.representatives.push_back(unpack_gf2(class_rep[c], n));
    census.orbit_sizes.push_back(class_size[c]);
  }
  census.class_ids = std::move(class_index_of);
  return census;
}

int census_class_of(const OrbitCensus& census, const Matrix& m) {
  return census.class_ids[pack_gf2(m)];
}

LieClusters lie_equiv_cluster(const std::vector<Matrix>& reps) {
  LieClusters out;
  for (const auto& r : reps) out.fingerprints.push_back(fingerprint(preserver(r)));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    bool placed = false;
    for (auto& cluster : out.clusters) {
      if (out.fingerprints[cluster[0]] == out.fingerprints[i]) {
        cluster.push_back(static_cast<int>(i));
        placed = true;
        break;
      }
    }
    if (!placed) out.clusters.push_back({static_cast<int>(i)});
  }
  return out;
}

AlgebraBasis brute_preserver(const Matrix& b) {
  if (b.ctx().degree() != 1 || b.rows() > 4)
    throw DomainError("brute preserver envelope is GF(2), n <= 4");
  const int n = b.rows();
  const std::uint32_t bb = pack_gf2(b);
  const std::uint32_t total = std::uint32_t{1} << (n * n);
  std::vector<Matrix> sols;
  for (std::uint32_t x = 0; x < total; ++x) {
    std::uint32_t lhs = packed_mul(packed_transpose(x, n), bb, n) ^ packed_mul(bb, x, n);
    if (lhs == 0) sols.push_back(unpack_gf2(x, n));
  }
  return AlgebraBasis::from_span(b.ctx(), n, sols, /*check_closed=*/true);
}

}  // namespace char2forms
