#include "char2forms/field.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace char2forms;

TEST(FieldCtx, PublishedModuli) {
  EXPECT_EQ(FieldCtx::get(1).modulus(), 0x2u);
  EXPECT_EQ(FieldCtx::get(2).modulus(), 0x7u);
  EXPECT_EQ(FieldCtx::get(8).modulus(), 0x11Du);
  for (int m = 1; m <= 16; ++m) {
    const FieldCtx& f = FieldCtx::get(m);
    EXPECT_EQ(f.degree(), m);
    EXPECT_EQ(f.order(), 1u << m);
    EXPECT_EQ(f.name(), "gf2_" + std::to_string(m));
  }
}

TEST(FieldCtx, DegreeOutOfRange) {
  EXPECT_THROW(FieldCtx::get(0), DomainError);
  EXPECT_THROW(FieldCtx::get(17), DomainError);
}

TEST(FieldCtx, ParseName) {
  EXPECT_EQ(&FieldCtx::parse_name("gf2_4"), &FieldCtx::get(4));
  EXPECT_THROW(FieldCtx::parse_name("gf3_2"), ParseError);
  EXPECT_THROW(FieldCtx::parse_name("gf2_"), ParseError);
  EXPECT_THROW(FieldCtx::parse_name("gf2_4x"), ParseError);
}

TEST(FieldCtx, Gf4MultiplicationTable) {
  // g = residue of x encodes as 2; g*g = g+1 reduces via x^2+x+1.
  const FieldCtx& f = FieldCtx::get(2);
  EXPECT_EQ(f.mul(2, 2), 3);
  EXPECT_EQ(f.mul(2, 3), 1);
  EXPECT_EQ(f.mul(3, 3), 2);
}

// The exponent table is a full cycle: powers of the generator hit every
// nonzero element exactly once before returning to 1.
TEST(FieldCtx, GeneratorCycleLength) {
  for (int m : {2, 3, 4, 8}) {
    const FieldCtx& f = FieldCtx::get(m);
    std::uint16_t v = 2;  // the residue of x
    std::uint32_t steps = 1;
    std::vector<bool> seen(f.order(), false);
    seen[v] = true;
    while (v != 1) {
      v = f.mul(v, 2);
      ASSERT_FALSE(seen[v]) << "cycle collision in gf2_" << m;
      seen[v] = true;
      ++steps;
    }
    EXPECT_EQ(steps, f.order() - 1);
  }
}

TEST(FieldCtx, AddIsInvolutionAndMulIdentity) {
  for (int m : {1, 2, 3, 4}) {
    const FieldCtx& f = FieldCtx::get(m);
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      EXPECT_EQ(f.add(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(a)), 0u);
      EXPECT_EQ(f.mul(1, static_cast<std::uint16_t>(a)), a);
    }
  }
}

TEST(FieldCtx, SqrtExhaustive) {
  const FieldCtx& g4 = FieldCtx::get(2);
  EXPECT_EQ(g4.sqrt(0), 0);
  EXPECT_EQ(g4.sqrt(1), 1);
  EXPECT_EQ(g4.sqrt(2), 3);  // (g+1)^2 = g
  for (int m = 1; m <= 8; ++m) {
    const FieldCtx& f = FieldCtx::get(m);
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      std::uint16_t r = f.sqrt(static_cast<std::uint16_t>(a));
      EXPECT_EQ(f.mul(r, r), a);
      EXPECT_EQ(f.sqrt(f.mul(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(a))), a);
    }
  }
}

TEST(FieldCtx, InverseExhaustive) {
  for (int m = 1; m <= 8; ++m) {
    const FieldCtx& f = FieldCtx::get(m);
    for (std::uint32_t a = 1; a < f.order(); ++a)
      EXPECT_EQ(f.mul(f.inv(static_cast<std::uint16_t>(a)), static_cast<std::uint16_t>(a)), 1u);
    EXPECT_THROW(f.inv(0), DomainError);
    EXPECT_THROW(f.div(1, 0), DomainError);
  }
}

TEST(FieldCtx, RingAxiomsRandomTriples) {
  std::mt19937_64 rng(7);
  for (int m = 1; m <= 16; ++m) {
    const FieldCtx& f = FieldCtx::get(m);
    for (int t = 0; t < 200; ++t) {
      auto a = static_cast<std::uint16_t>(rng() % f.order());
      auto b = static_cast<std::uint16_t>(rng() % f.order());
      auto c = static_cast<std::uint16_t>(rng() % f.order());
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      // Squaring is additive in characteristic 2.
      EXPECT_EQ(f.mul(f.add(a, b), f.add(a, b)), f.add(f.mul(a, a), f.mul(b, b)));
    }
  }
}

TEST(FieldCtx, TraceAndArtinSchreier) {
  for (int m : {1, 2, 3, 4, 8}) {
    const FieldCtx& f = FieldCtx::get(m);
    EXPECT_EQ(f.trace(f.trace_one_element()), 1u);
    int solvable = 0;
    for (std::uint32_t c = 0; c < f.order(); ++c) {
      auto root = f.artin_schreier_root(static_cast<std::uint16_t>(c));
      EXPECT_EQ(root.has_value(), f.trace(static_cast<std::uint16_t>(c)) == 0);
      if (root) {
        EXPECT_EQ(f.add(f.mul(*root, *root), *root), c);
        ++solvable;
      }
    }
    EXPECT_EQ(solvable, static_cast<int>(f.order() / 2));
  }
}

TEST(FieldElem, CtxMismatchAndHex) {
  FieldElem a(FieldCtx::get(2), 3);
  FieldElem b(FieldCtx::get(3), 3);
  EXPECT_THROW(a + b, DomainError);
  EXPECT_EQ(a.to_hex(), "3");
  EXPECT_EQ(FieldElem::from_hex(FieldCtx::get(2), "3"), a);
  EXPECT_EQ(FieldElem(FieldCtx::get(16), 0xbeef).to_hex(), "beef");
  EXPECT_THROW(FieldElem::from_hex(FieldCtx::get(2), "4"), ParseError);
  EXPECT_THROW(FieldElem::from_hex(FieldCtx::get(2), "zz"), ParseError);
  EXPECT_THROW(FieldElem(FieldCtx::get(1), 2), DomainError);
}
