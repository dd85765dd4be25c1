#include "char2forms/field.hpp"

#include <array>
#include <cassert>
#include <charconv>
#include <mutex>

namespace char2forms {
namespace {

// One fixed modulus per degree, so witnesses are reproducible. All entries
// are primitive, which the constructor re-verifies (full exp cycle).
// m = 1 is the prime field; its "modulus" is the degree-1 polynomial x and
// arithmetic never consults it.
constexpr std::array<std::uint32_t, 17> kModuli = {
    0,       // unused
    0x2,     // x
    0x7,     // x^2+x+1
    0xB,     // x^3+x+1
    0x13,    // x^4+x+1
    0x25,    // x^5+x^2+1
    0x43,    // x^6+x+1
    0x89,    // x^7+x^3+1
    0x11D,   // x^8+x^4+x^3+x^2+1
    0x211,   // x^9+x^4+1
    0x409,   // x^10+x^3+1
    0x805,   // x^11+x^2+1
    0x1053,  // x^12+x^6+x^4+x+1
    0x201B,  // x^13+x^4+x^3+x+1
    0x4443,  // x^14+x^10+x^6+x+1
    0x8003,  // x^15+x+1
    0x1100B  // x^16+x^12+x^3+x+1
};

int poly_degree(std::uint32_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

// Carry-less product of two F_2[x] polynomials.
std::uint64_t poly_mul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t r = 0;
  for (int i = 0; a >> i; ++i)
    if ((a >> i) & 1) r ^= static_cast<std::uint64_t>(b) << i;
  return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint32_t mod) {
  int dm = poly_degree(mod);
  for (int i = 63; i >= dm; --i)
    if ((a >> i) & 1) a ^= static_cast<std::uint64_t>(mod) << (i - dm);
  return a;
}

bool is_irreducible(std::uint32_t p) {
  int d = poly_degree(p);
  if (d < 1) return false;
  for (std::uint32_t q = 2; poly_degree(q) <= d / 2; ++q) {
    if (poly_degree(q) < 1) continue;
    if (poly_mod(p, q) == 0) return false;
  }
  return true;
}

}  // namespace

FieldCtx::FieldCtx(int m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
  if (poly_degree(modulus) != m || (m > 1 && !is_irreducible(modulus)))
    throw DomainError("modulus is not irreducible of degree " + std::to_string(m));
  if (m > 1) {
    const std::uint32_t n = order();
    exp_.assign(n - 1, 0);
    log_.assign(n, 0);
    std::uint32_t v = 1;
    for (std::uint32_t k = 0; k < n - 1; ++k) {
      if (k > 0 && v == 1) throw DomainError("modulus is not primitive");
      exp_[k] = static_cast<std::uint16_t>(v);
      log_[v] = static_cast<std::uint16_t>(k);
      v <<= 1;
      if (v >= n) v ^= modulus;
    }
    if (v != 1) throw DomainError("modulus is not primitive");
  }
  trace_one_ = 0;
  for (std::uint32_t a = 0; a < order(); ++a) {
    if (trace(static_cast<std::uint16_t>(a)) == 1) {
      trace_one_ = static_cast<std::uint16_t>(a);
      break;
    }
  }
}

const FieldCtx& FieldCtx::get(int degree) {
  if (degree < 1 || degree > 16)
    throw DomainError("field degree must be in 1..16, got " + std::to_string(degree));
  static std::array<const FieldCtx*, 17> cache{};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[degree]) cache[degree] = new FieldCtx(degree, kModuli[degree]);
  return *cache[degree];
}

const FieldCtx& FieldCtx::parse_name(std::string_view name) {
  if (name.substr(0, 4) != "gf2_") throw ParseError("bad field name: " + std::string(name));
  int m = 0;
  auto digits = name.substr(4);
  auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
  if (ec != std::errc() || p != digits.data() + digits.size())
    throw ParseError("bad field name: " + std::string(name));
  return get(m);
}

std::uint16_t FieldCtx::inv(std::uint16_t a) const {
  if (a == 0) throw DomainError("division by zero in " + name());
  if (m_ == 1) return 1;
  return exp_[(order() - 1 - log_[a]) % (order() - 1)];
}

std::uint16_t FieldCtx::sqrt(std::uint16_t a) const {
  std::uint16_t r = a;
  for (int i = 0; i < m_ - 1; ++i) r = mul(r, r);
  return r;
}

std::uint16_t FieldCtx::pow(std::uint16_t a, std::uint64_t e) const {
  std::uint16_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint16_t FieldCtx::trace(std::uint16_t a) const {
  std::uint16_t acc = 0, v = a;
  for (int i = 0; i < m_; ++i) {
    acc ^= v;
    v = mul(v, v);
  }
  assert(acc <= 1);
  return acc;
}

std::optional<std::uint16_t> FieldCtx::artin_schreier_root(std::uint16_t c) const {
  for (std::uint32_t z = 0; z < order(); ++z) {
    auto zz = static_cast<std::uint16_t>(z);
    if (add(mul(zz, zz), zz) == c) return zz;
  }
  return std::nullopt;
}

std::string FieldElem::to_hex() const {
  char buf[8];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, bits_, 16);
  (void)ec;
  return std::string(buf, p);
}

FieldElem FieldElem::from_hex(const FieldCtx& ctx, std::string_view text) {
  std::uint32_t v = 0;
  if (text.empty()) throw ParseError("empty field element");
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 16);
  if (ec != std::errc() || p != text.data() + text.size())
    throw ParseError("bad field element: " + std::string(text));
  if (v >= ctx.order())
    throw ParseError("element " + std::string(text) + " out of range for " + ctx.name());
  return FieldElem(ctx, static_cast<std::uint16_t>(v));
}

}  // namespace char2forms
