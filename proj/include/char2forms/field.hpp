#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "char2forms/errors.hpp"

namespace char2forms {

/// Arithmetic context for GF(2^m), 1 <= m <= 16.
///
/// Each degree has one fixed modulus (see kModuli in field.cpp), so element
/// encodings and all derived witnesses are reproducible across runs.
/// Contexts are immutable singletons; compare them by address.
///
/// Elements are polynomial residues packed into the low m bits of a
/// uint16_t. For m >= 2 multiplication and inversion go through
/// generator-power tables (the modulus is primitive, so x generates the
/// full cycle of length 2^m - 1); m == 1 is branch-free bit arithmetic.
class FieldCtx {
 public:
  static const FieldCtx& get(int degree);
  /// Parses a context name of the form "gf2_<m>".
  static const FieldCtx& parse_name(std::string_view name);

  int degree() const { return m_; }
  std::uint32_t order() const { return 1u << m_; }
  std::uint32_t modulus() const { return modulus_; }
  std::string name() const { return "gf2_" + std::to_string(m_); }

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const {
    return a ^ b;
  }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    if (m_ == 1) return a & b;
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= order() - 1) s -= order() - 1;
    return exp_[s];
  }
  std::uint16_t inv(std::uint16_t a) const;
  std::uint16_t div(std::uint16_t a, std::uint16_t b) const {
    return mul(a, inv(b));
  }
  /// The unique square root (Frobenius is bijective): a^(2^(m-1)).
  std::uint16_t sqrt(std::uint16_t a) const;
  std::uint16_t pow(std::uint16_t a, std::uint64_t e) const;
  /// Absolute trace to GF(2): sum of a^(2^i), i < m. Returns 0 or 1.
  std::uint16_t trace(std::uint16_t a) const;
  /// Smallest z with z^2 + z = c, if one exists (iff trace(c) == 0).
  std::optional<std::uint16_t> artin_schreier_root(std::uint16_t c) const;
  /// Smallest element of trace 1.
  std::uint16_t trace_one_element() const { return trace_one_; }

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

 private:
  FieldCtx(int m, std::uint32_t modulus);

  int m_;
  std::uint32_t modulus_;
  std::uint16_t trace_one_;
  std::vector<std::uint16_t> exp_, log_;
};

/// A field element bundled with its owning context.
///
/// Mixing elements of different contexts throws DomainError. The raw-bits
/// interface on FieldCtx is what the matrix kernels use; FieldElem is the
/// boxed value for public results and I/O.
class FieldElem {
 public:
  FieldElem(const FieldCtx& ctx, std::uint16_t bits) : ctx_(&ctx), bits_(bits) {
    if (bits >= ctx.order()) throw DomainError("element bits out of field range");
  }

  std::uint16_t bits() const { return bits_; }
  const FieldCtx& ctx() const { return *ctx_; }

  FieldElem operator+(const FieldElem& o) const {
    return FieldElem(same_ctx(o), ctx_->add(bits_, o.bits_));
  }
  FieldElem operator*(const FieldElem& o) const {
    return FieldElem(same_ctx(o), ctx_->mul(bits_, o.bits_));
  }
  FieldElem operator/(const FieldElem& o) const {
    return FieldElem(same_ctx(o), ctx_->div(bits_, o.bits_));
  }
  FieldElem inverse() const { return FieldElem(*ctx_, ctx_->inv(bits_)); }
  FieldElem sqrt() const { return FieldElem(*ctx_, ctx_->sqrt(bits_)); }
  bool operator==(const FieldElem& o) const {
    return ctx_ == o.ctx_ && bits_ == o.bits_;
  }

  /// Lowercase hex of the bit representation, e.g. "3" for g+1 in GF(4).
  std::string to_hex() const;
  static FieldElem from_hex(const FieldCtx& ctx, std::string_view text);

 private:
  const FieldCtx& same_ctx(const FieldElem& o) const {
    if (ctx_ != o.ctx_) throw DomainError("field context mismatch");
    return *ctx_;
  }
  const FieldCtx* ctx_;
  std::uint16_t bits_;
};

}  // namespace char2forms
