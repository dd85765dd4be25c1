#pragma once

#include <random>

#include "char2forms/matrix.hpp"

namespace char2forms::testutil {

inline Matrix random_matrix(const FieldCtx& ctx, int n, std::mt19937_64& rng) {
  Matrix m(ctx, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, static_cast<std::uint16_t>(rng() % ctx.order()));
  return m;
}

inline Matrix random_symmetric(const FieldCtx& ctx, int n, std::mt19937_64& rng) {
  Matrix m(ctx, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto v = static_cast<std::uint16_t>(rng() % ctx.order());
      m.set(i, j, v);
      m.set(j, i, v);
    }
  return m;
}

inline Matrix random_symmetric_zero_diagonal(const FieldCtx& ctx, int n, std::mt19937_64& rng) {
  Matrix m = random_symmetric(ctx, n, rng);
  for (int i = 0; i < n; ++i) m.set(i, i, 0);
  return m;
}

inline Matrix random_invertible(const FieldCtx& ctx, int n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(ctx, n, rng);
    if (m.is_invertible()) return m;
  }
}

inline Matrix random_invertible_symmetric(const FieldCtx& ctx, int n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_symmetric(ctx, n, rng);
    if (m.is_invertible()) return m;
  }
}

}  // namespace char2forms::testutil
