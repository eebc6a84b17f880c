#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "generators.hpp"
#include "spincent/blade.hpp"

using namespace spincent;

namespace {

/// Product of basis blades by literally concatenating index lists, bubble-sorting with one sign
/// per swap and cancelling adjacent equal pairs with e_i e_i = -1.
BladeProduct bubble_product(const Blade& a, const Blade& b) {
  std::vector<unsigned> w = a.indices();
  for (unsigned i : b.indices()) w.push_back(i);
  int sign = 1;
  for (std::size_t pass = 0; pass < w.size(); ++pass)
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        sign = -sign;
      }
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i + 1 < w.size() && w[i] == w[i + 1]) {
      sign = -sign;
      ++i;
    } else {
      out.push_back(w[i]);
    }
  }
  return {sign, Blade::from_indices(a.n, out)};
}

}  // namespace

TEST(BladeProduct, MatchesBubbleSortOracleExhaustively) {
  for (unsigned n = 1; n <= 6; ++n)
    for (std::uint32_t x = 0; x < (1u << n); ++x)
      for (std::uint32_t y = 0; y < (1u << n); ++y) {
        Blade a(n, x);
        Blade b(n, y);
        BladeProduct p = blade_product(a, b);
        BladeProduct q = bubble_product(a, b);
        ASSERT_EQ(p.sign, q.sign) << a << " * " << b;
        ASSERT_EQ(p.result, q.result);
      }
}

TEST(BladeProduct, MatchesOracleOnRandomLargeBlades) {
  gen::Source src;
  for (int t = 0; t < 2000; ++t) {
    Blade a = src.blade(16);
    Blade b = src.blade(16);
    BladeProduct p = blade_product(a, b);
    BladeProduct q = bubble_product(a, b);
    ASSERT_EQ(p.sign, q.sign);
    ASSERT_EQ(p.result, q.result);
  }
}

TEST(Clifford, GeneratorRelations) {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= n; ++j) {
        CliffordElement ei = CliffordElement::generator(n, i);
        CliffordElement ej = CliffordElement::generator(n, j);
        CliffordElement s = clifford_mul(ei, ej) + clifford_mul(ej, ei);
        EXPECT_EQ(s, CliffordElement::scalar(n, Rational(i == j ? -2 : 0)));
      }
}

TEST(Clifford, AssociativeOnAllBladeTriples) {
  for (unsigned n = 1; n <= 5; ++n)
    for (std::uint32_t x = 0; x < (1u << n); ++x)
      for (std::uint32_t y = 0; y < (1u << n); ++y)
        for (std::uint32_t z = 0; z < (1u << n); ++z) {
          CliffordElement a{Blade(n, x)};
          CliffordElement b{Blade(n, y)};
          CliffordElement c{Blade(n, z)};
          ASSERT_EQ(clifford_mul(clifford_mul(a, b), c), clifford_mul(a, clifford_mul(b, c)));
        }
}

TEST(Clifford, BilinearAndAssociativeOnRandomElements) {
  gen::Source src;
  for (int t = 0; t < 100; ++t) {
    const unsigned n = static_cast<unsigned>(src.integer(1, 6));
    CliffordElement a = src.element(n, 4);
    CliffordElement b = src.element(n, 4);
    CliffordElement c = src.element(n, 4);
    EXPECT_EQ(clifford_mul(clifford_mul(a, b), c), clifford_mul(a, clifford_mul(b, c)));
    EXPECT_EQ(clifford_mul(a, b + c), clifford_mul(a, b) + clifford_mul(a, c));
    Rational s = src.rational();
    EXPECT_EQ(clifford_mul(a * s, b), clifford_mul(a, b) * s);
  }
}

TEST(Clifford, CommutatorConvention) {
  const unsigned n = 3;
  CliffordElement e12{Blade::from_indices(n, {1, 2})};
  CliffordElement e23{Blade::from_indices(n, {2, 3})};
  CliffordElement e13{Blade::from_indices(n, {1, 3})};
  EXPECT_EQ(commutator(e12, e23), e13 * Rational(-2));
  EXPECT_EQ(clifford_mul(e12, e12), CliffordElement::scalar(n, Rational(-1)));
}

TEST(Clifford, SpinBracketsCloseOnBivectors) {
  for (unsigned r = 2; r <= 6; ++r) {
    SpinSubalgebraSpec spec(r, r);
    auto gens = spin_generators(spec);
    for (const auto& a : gens)
      for (const auto& b : gens) {
        CliffordElement c = commutator(a, b);
        for (const auto& [m, coeff] : c.terms()) EXPECT_EQ(std::popcount(m), 2);
      }
  }
}

TEST(SpinPairs, LexicographicAndIndexed) {
  auto p = spin_pairs(4);
  ASSERT_EQ(p.size(), 6u);
  EXPECT_EQ(p.front(), std::make_pair(1u, 2u));
  EXPECT_EQ(p[2], std::make_pair(1u, 4u));
  EXPECT_EQ(p.back(), std::make_pair(3u, 4u));
  for (unsigned r = 2; r <= 9; ++r) {
    auto pairs = spin_pairs(r);
    for (std::size_t k = 0; k < pairs.size(); ++k) EXPECT_EQ(pair_index(r, pairs[k].first, pairs[k].second), k);
  }
  EXPECT_THROW(pair_index(4, 2, 2), std::out_of_range);
}

TEST(Lemma, PredicateEqualsBruteForceForAllSmallCases) {
  for (unsigned n = 1; n <= 7; ++n)
    for (unsigned r = 1; r <= n; ++r) {
      SpinSubalgebraSpec spec(r, n);
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        Blade b(n, m);
        ASSERT_EQ(lemma_commute_predicate(b, spec), commutes_with_spin_bruteforce(CliffordElement(b), spec))
            << "n=" << n << " r=" << r << " blade " << b;
      }
    }
}

TEST(Lemma, ExamplesInCl4) {
  SpinSubalgebraSpec spec(3, 4);
  EXPECT_TRUE(lemma_commute_predicate(Blade::from_indices(4, {4}), spec));
  EXPECT_TRUE(lemma_commute_predicate(Blade::from_indices(4, {1, 2, 3}), spec));
  EXPECT_FALSE(lemma_commute_predicate(Blade::from_indices(4, {1, 4}), spec));
  auto c = clifford_centralizer(spec, Parity::all);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(clifford_centralizer(spec, Parity::even).size(), 2u);
}

TEST(Lemma, CentralizerIsClosedUnderMultiplication) {
  for (unsigned n = 2; n <= 7; ++n)
    for (unsigned r = 1; r <= n; ++r) {
      SpinSubalgebraSpec spec(r, n);
      for (Parity parity : {Parity::all, Parity::even}) {
        auto blades = clifford_centralizer(spec, parity);
        std::vector<std::uint32_t> masks;
        for (const auto& b : blades) masks.push_back(b.mask);
        for (const auto& a : blades)
          for (const auto& b : blades) {
            auto p = blade_product(a, b);
            EXPECT_TRUE(std::binary_search(masks.begin(), masks.end(), p.result.mask));
          }
      }
    }
}

TEST(Blade, RejectsInvalidInput) {
  EXPECT_THROW(Blade(17, 0), std::invalid_argument);
  EXPECT_THROW(Blade::from_indices(3, {4}), std::invalid_argument);
  EXPECT_THROW(Blade::from_indices(3, {1, 1}), std::invalid_argument);
  EXPECT_THROW(SpinSubalgebraSpec(4, 3), std::invalid_argument);
  EXPECT_THROW(blade_product(Blade(3, 1), Blade(4, 1)), std::invalid_argument);
  EXPECT_EQ(Blade::from_indices(12, {1, 10}).name(), "e1,10");
  EXPECT_EQ(Blade::from_indices(4, {1, 3}).name(), "e13");
}
