#include "char2forms/vecspace.hpp"

#include <algorithm>

#include "char2forms/errors.hpp"

namespace char2forms {

EchelonSpace::EchelonSpace(const FieldCtx& ctx, int len) : ctx_(&ctx), len_(len) {}

bool EchelonSpace::insert(std::vector<std::uint16_t> v) {
  if (static_cast<int>(v.size()) != len_) throw DomainError("vector length mismatch");
  // Forward-reduce against existing rows.
  for (size_t k = 0; k < rows_.size(); ++k) {
    std::uint16_t c = v[pivots_[k]];
    if (!c) continue;
    for (int j = 0; j < len_; ++j) v[j] = ctx_->add(v[j], ctx_->mul(c, rows_[k][j]));
  }
  int p = -1;
  for (int j = 0; j < len_; ++j)
    if (v[j]) {
      p = j;
      break;
    }
  if (p < 0) return false;
  std::uint16_t s = ctx_->inv(v[p]);
  for (int j = p; j < len_; ++j) v[j] = ctx_->mul(v[j], s);
  // Back-reduce existing rows so the basis stays in RREF.
  for (size_t k = 0; k < rows_.size(); ++k) {
    std::uint16_t c = rows_[k][p];
    if (!c) continue;
    for (int j = 0; j < len_; ++j) rows_[k][j] = ctx_->add(rows_[k][j], ctx_->mul(c, v[j]));
  }
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  size_t idx = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

std::vector<std::uint16_t> EchelonSpace::reduce(std::vector<std::uint16_t> v) const {
  if (static_cast<int>(v.size()) != len_) throw DomainError("vector length mismatch");
  for (size_t k = 0; k < rows_.size(); ++k) {
    std::uint16_t c = v[pivots_[k]];
    if (!c) continue;
    for (int j = 0; j < len_; ++j) v[j] = ctx_->add(v[j], ctx_->mul(c, rows_[k][j]));
  }
  return v;
}

bool EchelonSpace::contains(const std::vector<std::uint16_t>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint16_t x) { return x == 0; });
}

std::optional<std::vector<std::uint16_t>> EchelonSpace::coordinates(
    const std::vector<std::uint16_t>& v) const {
  std::vector<std::uint16_t> coords(rows_.size(), 0);
  std::vector<std::uint16_t> w = v;
  for (size_t k = 0; k < rows_.size(); ++k) {
    std::uint16_t c = w[pivots_[k]];
    if (!c) continue;
    coords[k] = c;
    for (int j = 0; j < len_; ++j) w[j] = ctx_->add(w[j], ctx_->mul(c, rows_[k][j]));
  }
  for (auto x : w)
    if (x) return std::nullopt;
  return coords;
}

// Zassenhaus: reduce the stacked rows [a|a] and [b|0]; rows whose left half
// vanished span the intersection in their right half.
EchelonSpace intersect(const EchelonSpace& a, const EchelonSpace& b) {
  if (a.length() != b.length() || &a.ctx() != &b.ctx())
    throw DomainError("intersecting incompatible spaces");
  const FieldCtx& ctx = a.ctx();
  const int len = a.length();
  EchelonSpace doubled(ctx, 2 * len);
  for (const auto& r : a.rows()) {
    std::vector<std::uint16_t> v(2 * len, 0);
    std::copy(r.begin(), r.end(), v.begin());
    std::copy(r.begin(), r.end(), v.begin() + len);
    doubled.insert(std::move(v));
  }
  for (const auto& r : b.rows()) {
    std::vector<std::uint16_t> v(2 * len, 0);
    std::copy(r.begin(), r.end(), v.begin());
    doubled.insert(std::move(v));
  }
  EchelonSpace result(ctx, len);
  for (const auto& r : doubled.rows()) {
    bool left_zero = std::all_of(r.begin(), r.begin() + len, [](std::uint16_t x) { return x == 0; });
    if (left_zero)
      result.insert(std::vector<std::uint16_t>(r.begin() + len, r.end()));
  }
  return result;
}

}  // namespace char2forms
