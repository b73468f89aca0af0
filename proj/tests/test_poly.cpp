// Copyright 2026 The arpq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "arpq/error.hpp"
#include "arpq/poly.hpp"
#include "support.hpp"

namespace arpq {
namespace {

PBPoly x(std::uint32_t q) { return PBPoly::variable(q); }

TEST(PBPoly, AddIdentityAndCancellation) {
  PBPoly p = x(0) + 2.0 * x(0) * x(1);
  EXPECT_EQ(add(p, PBPoly()), p);
  PBPoly z = x(1) - x(1);
  EXPECT_TRUE(z.terms().empty());
  EXPECT_TRUE(z.is_zero());
}

TEST(PBPoly, ScaleIsLinear) {
  PBPoly p = x(0) * x(1) + PBPoly::constant(3);
  PBPoly s = scale(p, 2);
  EXPECT_DOUBLE_EQ(s.coefficient({0, 1}), 2.0);
  EXPECT_DOUBLE_EQ(s.constant_term(), 6.0);
  EXPECT_TRUE(scale(p, 0).is_zero());
}

TEST(PBPoly, SquareUsesIdempotence) {
  PBPoly s = x(0) + x(1);
  PBPoly sq = multiply(s, s);
  EXPECT_EQ(sq.terms().size(), 3u);
  EXPECT_DOUBLE_EQ(sq.coefficient({0}), 1.0);
  EXPECT_DOUBLE_EQ(sq.coefficient({1}), 1.0);
  EXPECT_DOUBLE_EQ(sq.coefficient({0, 1}), 2.0);
}

TEST(PBPoly, OverlappingProductCollapses) {
  PBPoly p = multiply(x(0) * x(1), x(1) * x(2));
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_DOUBLE_EQ(p.coefficient({0, 1, 2}), 1.0);
  EXPECT_EQ(p.degree(), 3u);
}

TEST(PBPoly, AddTermNormalisesIndices) {
  PBPoly p;
  p.add_term({2, 0, 2}, 1.5);
  EXPECT_DOUBLE_EQ(p.coefficient({0, 2}), 1.5);
  p.add_term({0, 2}, -1.5);
  EXPECT_TRUE(p.is_zero());
}

TEST(PBPoly, QuarticCrossTermsMatchHandExpansion) {
  // (2 x0 x1 + 3 x2 x3 - 4)^2 expanded by hand.
  PBPoly s = 2.0 * x(0) * x(1) + 3.0 * x(2) * x(3) - PBPoly::constant(4);
  PBPoly sq = s * s;
  PBPoly hand;
  hand.add_term({0, 1}, 4 - 16);
  hand.add_term({2, 3}, 9 - 24);
  hand.add_term({0, 1, 2, 3}, 12);
  hand.add_constant(16);
  EXPECT_EQ(sq, hand);
  for (std::uint64_t b = 0; b < 16; ++b) {
    const double direct = std::pow(2.0 * (b & 1) * (b >> 1 & 1) + 3.0 * (b >> 2 & 1) * (b >> 3 & 1) - 4, 2);
    EXPECT_DOUBLE_EQ(testing::naive_eval(sq, b), direct);
  }
}

TEST(PBPoly, RingLawsOnRandomPolys) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = testing::random_poly(rng, 6, 3, 6);
    auto b = testing::random_poly(rng, 6, 3, 6);
    auto c = testing::random_poly(rng, 6, 3, 6);
    for (std::uint64_t bits = 0; bits < 64; ++bits) {
      auto as = to_assignment(bits, 6);
      EXPECT_NEAR(evaluate(a * b, as), evaluate(b * a, as), 1e-9);
      EXPECT_NEAR(evaluate((a * b) * c, as), evaluate(a * (b * c), as), 1e-8);
      EXPECT_NEAR(evaluate(a * b, as), evaluate(a, as) * evaluate(b, as), 1e-9);
      EXPECT_NEAR(evaluate(a + b, as), evaluate(a, as) + evaluate(b, as), 1e-9);
    }
  }
}

TEST(PBPoly, RegistryMismatchIsRejected) {
  auto r1 = std::make_shared<VarRegistry>();
  r1->add(VarId::slack(0), "z[0]");
  auto r2 = std::make_shared<VarRegistry>();
  r2->add(VarId::slack(0), "z[0]");
  EXPECT_THROW(add(PBPoly::variable(0, r1), PBPoly::variable(0, r2)), InvalidInput);
  EXPECT_THROW(multiply(PBPoly::variable(0, r1), PBPoly::variable(0, r2)), InvalidInput);
  EXPECT_NO_THROW(add(PBPoly::variable(0, r1), PBPoly::constant(1)));
}

TEST(DropConstant, SplitsConstantAndKeepsArgmin) {
  auto [zero, c] = drop_constant(PBPoly::constant(4.5));
  EXPECT_TRUE(zero.is_zero());
  EXPECT_DOUBLE_EQ(c, 4.5);
  PBPoly p = x(0) - 2.0 * x(1);
  auto [same, none] = drop_constant(p);
  EXPECT_EQ(same, p);
  EXPECT_DOUBLE_EQ(none, 0.0);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto q = testing::random_poly(rng, 10, 3, 15);
    auto [d, k] = drop_constant(q);
    std::uint64_t best_q = 0, best_d = 0;
    for (std::uint64_t b = 1; b < 1024; ++b) {
      if (testing::naive_eval(q, b) < testing::naive_eval(q, best_q)) best_q = b;
      if (testing::naive_eval(d, b) < testing::naive_eval(d, best_d)) best_d = b;
    }
    EXPECT_EQ(best_q, best_d);
    EXPECT_NEAR(testing::naive_eval(d, 5) + k, testing::naive_eval(q, 5), 1e-12);
  }
}

TEST(Substitute, FixesVariable) {
  PBPoly p = x(0) * x(1);
  EXPECT_EQ(substitute(p, 0, true), x(1));
  EXPECT_TRUE(substitute(p, 0, false).is_zero());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto q = testing::random_poly(rng, 6, 4, 10);
    const auto v = static_cast<std::uint32_t>(trial % 6);
    for (bool bit : {false, true}) {
      auto s = substitute(q, v, bit);
      for (std::uint64_t b = 0; b < 64; ++b) {
        const std::uint64_t fixed = bit ? (b | 1ULL << v) : (b & ~(1ULL << v));
        EXPECT_NEAR(testing::naive_eval(s, b), testing::naive_eval(q, fixed), 1e-9);
      }
    }
  }
}

TEST(Evaluate, BasicsAndMissingVariable) {
  PBPoly p = x(0) + 2.0 * x(0) * x(1) + PBPoly::constant(0.5);
  std::vector<std::uint8_t> zeros{0, 0};
  std::vector<std::uint8_t> ones{1, 1};
  EXPECT_DOUBLE_EQ(evaluate(p, zeros), 0.5);
  EXPECT_DOUBLE_EQ(evaluate(p, ones), 3.5);
  std::vector<std::uint8_t> short_assignment{1};
  EXPECT_THROW(evaluate(p, short_assignment), InvalidInput);
}

TEST(Evaluate, CompiledAndTableAgreeWithNaive) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = testing::random_poly(rng, 9, 4, 20);
    CompiledPoly cp(p);
    auto table = energy_table(p, 9);
    for (std::uint64_t b = 0; b < 512; ++b) {
      const double want = testing::naive_eval(p, b);
      EXPECT_NEAR(evaluate(p, to_assignment(b, 9)), want, 1e-9);
      EXPECT_NEAR(cp(b), want, 1e-9);
      EXPECT_NEAR(table[b], want, 1e-9);
    }
  }
}

TEST(ToSpin, SingleAndPairTerms) {
  SpinPoly s = to_spin(x(0));
  EXPECT_DOUBLE_EQ(s.terms().at({0}), 0.5);
  EXPECT_DOUBLE_EQ(s.constant_term(), 0.5);
  SpinPoly t = to_spin(x(0) * x(1));
  EXPECT_DOUBLE_EQ(t.constant_term(), 0.25);
  EXPECT_DOUBLE_EQ(t.terms().at({0}), 0.25);
  EXPECT_DOUBLE_EQ(t.terms().at({1}), 0.25);
  EXPECT_DOUBLE_EQ(t.terms().at({0, 1}), 0.25);
}

TEST(ToSpin, EquivalentOnAllBitstringsAndDegreeBounded) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + trial % 9;
    auto p = testing::random_poly(rng, n, 4, 12);
    SpinPoly s = to_spin(p, n);
    EXPECT_LE(s.degree(), p.degree());
    for (std::uint64_t b = 0; b < (1ULL << n); ++b) {
      std::vector<std::int8_t> z(n);
      for (std::size_t q = 0; q < n; ++q) z[q] = static_cast<std::int8_t>(2 * ((b >> q) & 1) - 1);
      EXPECT_NEAR(evaluate_spin(s, z), testing::naive_eval(p, b), 1e-9);
    }
  }
}

TEST(Bitstring, MostSignificantQubitFirst) {
  EXPECT_EQ(bitstring(0b0011, 4), "0011");
  EXPECT_EQ(bitstring(1, 3), "001");
  EXPECT_EQ(from_assignment(to_assignment(37, 8)), 37u);
}

TEST(TextFormat, RoundTripsExactly) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = testing::random_poly(rng, 8, 4, 10);
    EXPECT_EQ(parse_poly_text(to_text(p)), p);
  }
  EXPECT_EQ(to_text(PBPoly()), "0\n");
  auto reg = std::make_shared<VarRegistry>();
  reg->add(VarId::node(1, 2), "x[1,2]");
  reg->add(VarId::slack(0), "z[0]");
  PBPoly p(reg);
  p.add_term({0, 1}, -2.5);
  p.add_constant(1);
  EXPECT_EQ(parse_poly_text(to_text(p), reg), p);
  EXPECT_THROW(parse_poly_text("1 * nope", reg), InvalidInput);
}

}  // namespace
}  // namespace arpq
