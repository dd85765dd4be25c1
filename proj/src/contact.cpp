#include "char2forms/contact.hpp"

#include <algorithm>

namespace char2forms {

namespace {

struct ParitySplit {
  int n0 = 0, n1 = 0;
  bool sorted = true;  // all even variables precede all odd ones
};

ParitySplit split_parities(const std::vector<Parity>& ps) {
  ParitySplit s;
  bool seen_odd = false;
  for (auto p : ps) {
    if (p == Parity::even) {
      ++s.n0;
      if (seen_odd) s.sorted = false;
    } else {
      ++s.n1;
      seen_odd = true;
    }
  }
  return s;
}

int polar_rank(const Matrix& b) { return (b + b.transpose()).rank(); }

// Case of purely even variables: contact iff the class of B modulo
// symmetric forms is non-degenerate.
bool contact_even_block(const Matrix& b, int* r_out) {
  int r = polar_rank(b);
  *r_out = r / 2;
  return r == b.rows();
}

// Case of purely odd variables: contact iff the quadratic form of B is
// non-degenerate, i.e. the polar form has full rank, or it falls short by
// one and the quadratic form does not vanish on its radical. (The radical
// evaluation, rather than a zero-diagonal test, is what stays invariant
// under the admissible transformations B -> M B M^T + A.)
bool contact_odd_block(const Matrix& b, int* r_out) {
  const FieldCtx& f = b.ctx();
  Matrix polar = b + b.transpose();
  int r = polar.rank();
  *r_out = r / 2;
  if (b.rows() == r) return true;
  if (b.rows() != r + 1) return false;
  for (const auto& v : polar.kernel_basis()) {
    std::uint16_t q = 0;
    for (int i = 0; i < b.rows(); ++i) {
      if (!v[i]) continue;
      for (int j = 0; j < b.cols(); ++j)
        q = f.add(q, f.mul(v[i], f.mul(b.get(i, j), v[j])));
    }
    if (q) return true;
  }
  return false;
}

std::string subscript(const std::string& var, int i) { return var + "_" + std::to_string(i); }

std::string pq_terms(int k) {
  std::string s;
  for (int i = 1; i <= k; ++i)
    s += " + " + subscript("p", i) + " d" + subscript("q", i);
  return s;
}

std::string xi_eta_terms(int l) {
  std::string s;
  for (int i = 1; i <= l; ++i)
    s += " + " + subscript("ξ", i) + " d" + subscript("η", i);
  return s;
}

}  // namespace

ContactVerdict is_contact(const OneFormSpec& spec) {
  const Matrix& b = spec.b;
  if (!b.is_square() || b.rows() != spec.n())
    throw DomainError("form matrix size does not match the variable count");
  ParitySplit split = split_parities(spec.var_parities);
  if (!split.sorted)
    throw DomainError("mixed parities must list even variables first");

  ContactVerdict v;
  if (spec.x0 == Parity::odd) {
    // Pericontact case: B is an odd form on (n0|n1).
    v.kind = ContactKind::pericontact;
    SuperDim sd{split.n0, split.n1};
    SuperMatrix odd_b(sd, Parity::odd, b);  // validates the block layout
    Matrix c = odd_b.block01(), d = odd_b.block10();
    int r = (d + c.transpose()).rank();
    v.r = r;
    v.contact = (r == split.n0) && (split.n0 == split.n1);
    if (v.contact) {
      std::string s = "dτ";
      for (int i = 1; i <= split.n0; ++i)
        s += " + " + subscript("ξ", i) + " d" + subscript("q", i);
      v.canonical_expression = s;
    }
    return v;
  }

  if (split.n1 == 0) {
    v.kind = ContactKind::even_vars;
    v.contact = contact_even_block(b, &v.r);
    if (v.contact) v.canonical_expression = "dt" + pq_terms(v.r);
    return v;
  }
  if (split.n0 == 0) {
    v.kind = ContactKind::odd_vars;
    v.contact = contact_odd_block(b, &v.r);
    if (v.contact) {
      std::string s = "dt" + pq_terms(v.r);
      if (spec.n() == 2 * v.r + 1)
        s += " + " + subscript("x", spec.n()) + " d" + subscript("x", spec.n());
      v.canonical_expression = s;
    }
    return v;
  }

  // Mixed variables with even x0: B must be an even form; both blocks must
  // pass their own test.
  v.kind = ContactKind::mixed;
  SuperDim sd{split.n0, split.n1};
  SuperMatrix even_b(sd, Parity::even, b);  // validates the block layout
  int r0 = 0, r1 = 0;
  bool c0 = contact_even_block(even_b.block00(), &r0);
  bool c1 = contact_odd_block(even_b.block11(), &r1);
  v.r = r0 + r1;
  v.contact = c0 && c1;
  if (v.contact) {
    std::string s = "dt" + pq_terms(r0) + xi_eta_terms(r1);
    if (split.n1 == 2 * r1 + 1) s += " + θ dθ";
    v.canonical_expression = s;
  }
  return v;
}

std::string canonical_contact_expression(const OneFormSpec& spec) {
  ContactVerdict v = is_contact(spec);
  if (!v.contact) throw DomainError("the 1-form is not contact");
  return v.canonical_expression;
}

}  // namespace char2forms
