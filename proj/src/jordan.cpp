#include <algorithm>
#include <string>

#include "char2forms/canon.hpp"
#include "char2forms/vecspace.hpp"

namespace char2forms {

namespace {

using Poly = std::vector<std::uint16_t>;  // coefficients, ascending degree

int pdeg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i]) return i;
  return -1;
}

Poly ptrim(Poly p) {
  p.resize(static_cast<size_t>(std::max(0, pdeg(p) + 1)));
  return p;
}

Poly pmul(const FieldCtx& f, const Poly& a, const Poly& b) {
  if (pdeg(a) < 0 || pdeg(b) < 0) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j]) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return ptrim(r);
}

Poly pmod(const FieldCtx& f, Poly a, const Poly& m) {
  int dm = pdeg(m);
  if (dm < 0) throw DomainError("polynomial modulus is zero");
  std::uint16_t lead_inv = f.inv(m[dm]);
  for (int d = pdeg(a); d >= dm; d = pdeg(a)) {
    std::uint16_t q = f.mul(a[d], lead_inv);
    for (int i = 0; i <= dm; ++i) a[d - dm + i] = f.add(a[d - dm + i], f.mul(q, m[i]));
  }
  return ptrim(a);
}

Poly pgcd(const FieldCtx& f, Poly a, Poly b) {
  a = ptrim(a);
  b = ptrim(b);
  while (pdeg(b) >= 0) {
    Poly r = pmod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  int d = pdeg(a);
  if (d >= 0) {
    std::uint16_t s = f.inv(a[d]);
    for (auto& c : a) c = f.mul(c, s);
  }
  return a;
}

std::uint16_t peval(const FieldCtx& f, const Poly& p, std::uint16_t x) {
  std::uint16_t acc = 0;
  for (int i = pdeg(p); i >= 0; --i) acc = f.add(f.mul(acc, x), p[i]);
  return acc;
}

// Synthetic division by (x - root); remainder must be zero.
Poly pdeflate(const FieldCtx& f, const Poly& p, std::uint16_t root) {
  int d = pdeg(p);
  Poly q(d, 0);
  std::uint16_t carry = 0;
  for (int i = d; i >= 1; --i) {
    carry = f.add(p[i], f.mul(carry, root));
    q[i - 1] = carry;
  }
  if (f.add(p[0], f.mul(carry, root)) != 0) throw DomainError("deflation by a non-root");
  return q;
}

std::string poly_to_string(const Poly& p) {
  std::string s;
  for (int i = pdeg(p); i >= 0; --i) {
    if (!p[i]) continue;
    if (!s.empty()) s += " + ";
    if (p[i] != 1 || i == 0) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "%x", p[i]);
      s += buf;
      if (i > 0) s += "*";
    }
    if (i == 1)
      s += "x";
    else if (i > 1)
      s += "x^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

// Characteristic polynomial via Hessenberg reduction; exact over the field.
Poly char_poly(const Matrix& x) {
  const FieldCtx& f = x.ctx();
  const int n = x.rows();
  Matrix h = x;
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (h.get(i, j)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      // similarity swap of rows and columns piv <-> j+1
      for (int c = 0; c < n; ++c) {
        auto t = h.get(piv, c);
        h.set(piv, c, h.get(j + 1, c));
        h.set(j + 1, c, t);
      }
      for (int r = 0; r < n; ++r) {
        auto t = h.get(r, piv);
        h.set(r, piv, h.get(r, j + 1));
        h.set(r, j + 1, t);
      }
    }
    std::uint16_t d = f.inv(h.get(j + 1, j));
    for (int i = j + 2; i < n; ++i) {
      std::uint16_t fac = f.mul(h.get(i, j), d);
      if (!fac) continue;
      for (int c = 0; c < n; ++c) h.set(i, c, f.add(h.get(i, c), f.mul(fac, h.get(j + 1, c))));
      for (int r = 0; r < n; ++r) h.set(r, j + 1, f.add(h.get(r, j + 1), f.mul(fac, h.get(r, i))));
    }
  }
  // p_k(x) = (x + h_kk) p_{k-1}(x) + sum_i h_{ik} (prod subdiagonals) p_{i-1}(x)
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (int k = 1; k <= n; ++k) {
    Poly xk = {f.add(0, h.get(k - 1, k - 1)), 1};  // x + h_{k-1,k-1}
    Poly acc = pmul(f, xk, p[k - 1]);
    std::uint16_t sub = 1;
    for (int i = k - 1; i >= 1; --i) {
      sub = f.mul(sub, h.get(i, i - 1));
      if (!sub) break;
      std::uint16_t coeff = f.mul(h.get(i - 1, k - 1), sub);
      if (!coeff) continue;
      Poly term = p[i - 1];
      for (auto& c : term) c = f.mul(c, coeff);
      term.resize(std::max(term.size(), acc.size()), 0);
      for (size_t t = 0; t < acc.size(); ++t) term[t] = f.add(term[t], acc[t]);
      acc = ptrim(term);
    }
    p[k] = acc;
  }
  return p[n];
}

// Smallest-degree factor found by distinct-degree splitting, for error
// reporting when the characteristic polynomial does not split.
Poly smallest_nonlinear_factor(const FieldCtx& f, Poly rem) {
  int deg = pdeg(rem);
  for (int d = 2; d <= deg; ++d) {
    // x^(q^d) mod rem, q = 2^m: square x repeatedly m*d times.
    Poly h = {0, 1};
    for (int s = 0; s < f.degree() * d; ++s) h = pmod(f, pmul(f, h, h), rem);
    // gcd(rem, h - x)
    Poly diff = h;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = f.add(diff[1], 1);
    Poly g = pgcd(f, rem, diff);
    if (pdeg(g) > 0) return g;
  }
  return rem;
}

}  // namespace

JordanResult jordan_form(const Matrix& x) {
  if (!x.is_square()) throw DomainError("Jordan form of a non-square matrix");
  const FieldCtx& f = x.ctx();
  const int n = x.rows();

  // Eigenvalues and algebraic multiplicities straight from the
  // characteristic polynomial.
  std::vector<std::pair<std::uint16_t, int>> eigen;  // (value, algebraic multiplicity)
  Poly rem = char_poly(x);
  for (std::uint32_t lv = 0; lv < f.order() && pdeg(rem) > 0; ++lv) {
    auto lam = static_cast<std::uint16_t>(lv);
    int mult = 0;
    while (pdeg(rem) > 0 && peval(f, rem, lam) == 0) {
      rem = pdeflate(f, rem, lam);
      ++mult;
    }
    if (mult) eigen.emplace_back(lam, mult);
  }
  if (pdeg(rem) > 0) {
    Poly factor = smallest_nonlinear_factor(f, rem);
    throw DomainError("characteristic polynomial does not split over " + f.name() +
                      "; irreducible factor: " + poly_to_string(factor));
  }

  // Jordan chains per eigenvalue, largest blocks first.
  struct Chain {
    std::uint16_t eigenvalue;
    std::vector<std::vector<std::uint16_t>> vectors;  // N^{s-1} t, ..., N t, t
  };
  std::vector<Chain> chains;
  for (auto [lam, mult] : eigen) {
    Matrix nmat = x + Matrix::identity(f, n).scaled(lam);
    std::vector<EchelonSpace> kernels;  // kernels of N^1, N^2, ...
    Matrix pw = Matrix::identity(f, n);
    for (;;) {
      pw = pw * nmat;
      EchelonSpace ker(f, n);
      for (const auto& v : pw.kernel_basis()) ker.insert(v);
      bool stalled = !kernels.empty() && ker.dim() == kernels.back().dim();
      kernels.push_back(ker);
      if (ker.dim() == mult) break;
      if (stalled) throw DomainError("generalized eigenspace fell short of the multiplicity");
    }
    const int smax = static_cast<int>(kernels.size());
    auto apply_n = [&](const std::vector<std::uint16_t>& v) {
      std::vector<std::uint16_t> out(n, 0);
      for (int i = 0; i < n; ++i) {
        std::uint16_t acc = 0;
        for (int j = 0; j < n; ++j) acc = f.add(acc, f.mul(nmat.get(i, j), v[j]));
        out[i] = acc;
      }
      return out;
    };
    // Descend levels; `down` holds images of higher chains at this level.
    std::vector<std::vector<std::uint16_t>> down;
    std::vector<std::pair<int, std::vector<std::uint16_t>>> tops;  // (level, top)
    for (int s = smax; s >= 1; --s) {
      EchelonSpace avoid(f, n);
      if (s >= 2)
        for (const auto& r : kernels[s - 2].rows()) avoid.insert(r);
      for (const auto& v : down) avoid.insert(v);
      for (const auto& cand : kernels[s - 1].rows()) {
        if (avoid.insert(cand)) tops.emplace_back(s, cand);
      }
      std::vector<std::vector<std::uint16_t>> next_down;
      for (const auto& v : down) next_down.push_back(apply_n(v));
      for (const auto& [lvl, t] : tops)
        if (lvl == s) next_down.push_back(apply_n(t));
      down = std::move(next_down);
    }
    std::stable_sort(tops.begin(), tops.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [lvl, t] : tops) {
      Chain ch{lam, {}};
      std::vector<std::vector<std::uint16_t>> desc{t};
      for (int i = 1; i < lvl; ++i) desc.push_back(apply_n(desc.back()));
      for (int i = lvl - 1; i >= 0; --i) ch.vectors.push_back(desc[i]);
      chains.push_back(std::move(ch));
    }
  }
  std::stable_sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) {
    if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
    return a.vectors.size() > b.vectors.size();
  });

  JordanResult res{{}, Matrix(f, n, n), Matrix(f, n, n)};
  Matrix p(f, n, n);
  int col = 0;
  for (const auto& ch : chains) {
    int size = static_cast<int>(ch.vectors.size());
    res.blocks.push_back({ch.eigenvalue, size});
    for (int k = 0; k < size; ++k) {
      for (int i = 0; i < n; ++i) p.set(i, col + k, ch.vectors[k][i]);
      res.jordan.set(col + k, col + k, ch.eigenvalue);
      if (k + 1 < size) res.jordan.set(col + k, col + k + 1, 1);
    }
    col += size;
  }
  auto pinv = p.inverse();
  if (!pinv || !(x * p == p * res.jordan))
    throw DomainError("Jordan basis construction failed");
  res.transform = *pinv;
  return res;
}

}  // namespace char2forms
