#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "char2forms/field.hpp"

namespace char2forms {

/// A subspace of ctx^len kept in reduced row echelon form. RREF is a
/// canonical basis, so two spans are equal iff their row lists are equal,
/// and every dimension or membership question is deterministic.
class EchelonSpace {
 public:
  EchelonSpace(const FieldCtx& ctx, int len);

  int dim() const { return static_cast<int>(rows_.size()); }
  int length() const { return len_; }
  const FieldCtx& ctx() const { return *ctx_; }
  const std::vector<std::vector<std::uint16_t>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Reduces v against the basis and inserts the residual if nonzero.
  /// Returns true when the dimension grew.
  bool insert(std::vector<std::uint16_t> v);
  bool contains(const std::vector<std::uint16_t>& v) const;
  std::vector<std::uint16_t> reduce(std::vector<std::uint16_t> v) const;
  /// Coordinates of v in terms of rows(), or nullopt if v is outside.
  std::optional<std::vector<std::uint16_t>> coordinates(
      const std::vector<std::uint16_t>& v) const;

  bool operator==(const EchelonSpace& o) const {
    return len_ == o.len_ && rows_ == o.rows_;
  }

 private:
  const FieldCtx* ctx_;
  int len_;
  std::vector<std::vector<std::uint16_t>> rows_;  // sorted by pivot column
  std::vector<int> pivots_;
};

EchelonSpace intersect(const EchelonSpace& a, const EchelonSpace& b);

}  // namespace char2forms
