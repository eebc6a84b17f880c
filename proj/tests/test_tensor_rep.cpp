#include <gtest/gtest.h>

#include "spincent/centralizer.hpp"
#include "spincent/tensor_rep.hpp"

using namespace spincent;

TEST(LambdaK, DimensionsAreBinomialAndBracketsHold) {
  for (unsigned r = 2; r <= 7; ++r)
    for (unsigned k = 0; k <= r; ++k) {
      LinearRep l = lambda_k_rep(r, k);
      EXPECT_EQ(l.dim, binomial(r, k));
      EXPECT_TRUE(verify_representation(l)) << "r=" << r << " k=" << k;
    }
  EXPECT_THROW(lambda_k_rep(3, 4), std::invalid_argument);
}

TEST(LambdaK, SchurOrthogonalityForOddR) {
  for (unsigned r : {3u, 5u})
    for (unsigned j = 0; j <= r / 2; ++j)
      for (unsigned k = 0; k <= r / 2; ++k)
        EXPECT_EQ(hom_dimension(lambda_k_rep(r, j), lambda_k_rep(r, k)), j == k ? 1u : 0u);
}

TEST(Squares, DimensionsAndRepresentationProperty) {
  for (unsigned r = 2; r <= 6; ++r)
    for (FormLabel l : labels_for(r)) {
      LinearRep d = as_linear(realize_rep(r, l));
      LinearRep e = exterior_square(d);
      LinearRep s = sym0_square(d);
      EXPECT_EQ(e.dim, d.dim * (d.dim - 1) / 2);
      EXPECT_EQ(s.dim, d.dim * (d.dim + 1) / 2 - 1);
      EXPECT_TRUE(verify_representation(e));
      EXPECT_TRUE(verify_representation(s));
    }
}

TEST(Squares, ExteriorInvariantsEqualAntisymmetricCommutant) {
  for (unsigned r = 2; r <= 9; ++r)
    for (FormLabel l : labels_for(r)) {
      RealRep rep = realize_rep(r, l);
      EXPECT_EQ(trivial_multiplicity(exterior_square(as_linear(rep))), so_centralizer_of(rep.spin_mats, rep.dim).size())
          << "r=" << r;
    }
}

TEST(Squares, EndDimensionSplitsIntoSymmetricAndAntisymmetricParts) {
  for (unsigned r = 2; r <= 8; ++r)
    for (FormLabel l : labels_for(r)) {
      LinearRep d = as_linear(realize_rep(r, l));
      const std::size_t end = hom_dimension(d, d);
      EXPECT_EQ(end, 1 + trivial_multiplicity(sym0_square(d)) + trivial_multiplicity(exterior_square(d))) << "r=" << r;
    }
}

TEST(Hom, EqualsInvariantsOfDualTensor) {
  for (unsigned r = 2; r <= 5; ++r)
    for (FormLabel la : labels_for(r))
      for (FormLabel lb : labels_for(r)) {
        LinearRep a = as_linear(realize_rep(r, la));
        LinearRep b = as_linear(realize_rep(r, lb));
        EXPECT_EQ(hom_dimension(a, b), trivial_multiplicity(tensor_product(dual(a), b))) << "r=" << r;
      }
}

TEST(Hom, AdditiveOverDirectSums) {
  for (unsigned r = 3; r <= 5; ++r) {
    LinearRep v = lambda_k_rep(r, 1);
    LinearRep t = trivial_rep(r);
    LinearRep d = as_linear(realize_rep(r, labels_for(r).front()));
    LinearRep sum = direct_sum(direct_sum(v, t), d);
    for (const LinearRep* a : {&v, &t, &d})
      EXPECT_EQ(hom_dimension(*a, sum), hom_dimension(*a, v) + hom_dimension(*a, t) + hom_dimension(*a, d));
    EXPECT_EQ(hom_dimension(t, tensor_with_trivial(t, 3)), 3u);
  }
}

TEST(EndType, SpinorTypesByResidue) {
  // R for r = 0, 1, 7; C for r = 2, 6; H for r = 3, 4, 5 (mod 8).
  const EndType expected[] = {EndType::real,         EndType::real,         EndType::complex,
                              EndType::quaternionic, EndType::quaternionic, EndType::quaternionic,
                              EndType::complex,      EndType::real};
  for (unsigned r = 2; r <= 9; ++r)
    for (FormLabel l : labels_for(r))
      EXPECT_EQ(endomorphism_type(as_linear(realize_rep(r, l))), expected[r % 8]) << "r=" << r;
  EXPECT_EQ(endomorphism_type(direct_sum(trivial_rep(3), trivial_rep(3))), EndType::reducible);
  EXPECT_EQ(endomorphism_type(lambda_k_rep(4, 2)), EndType::reducible);
}

TEST(Multiplicities, SquareOfThreeDimensionalSpinor) {
  LinearRep d = as_linear(realize_rep(3));
  MultiplicityTable t = lambda_multiplicities(tensor_product(d, d));
  EXPECT_EQ(t.entries.at(lambda_label(0)), 4u);
  EXPECT_EQ(t.entries.at(lambda_label(1)), 4u);
  EXPECT_TRUE(t.complete());
}

TEST(Restriction, DimensionsAddUp) {
  for (unsigned r = 2; r <= 9; ++r)
    for (const auto& b : branching_check(r)) EXPECT_TRUE(b.dims_add_up) << b.source;
  EXPECT_THROW(branching_check(10), std::invalid_argument);
}

TEST(Restriction, SubalgebraGeneratorsAreKept) {
  LinearRep d = as_linear(realize_rep(5));
  LinearRep s = restrict_rep(d, 3);
  EXPECT_EQ(s.gens.size(), 3u);
  EXPECT_TRUE(s.gens[pair_index(3, 2, 3)] == d.gens[pair_index(5, 2, 3)]);
  EXPECT_TRUE(verify_representation(s));
}

TEST(Phi, ParityRuleByDegreeIsExhaustiveForSmallR) {
  for (unsigned r : {1u, 2u, 7u})
    for (const auto& p : phi_parity_observed(r)) {
      if (phi_corrected_lambda2_vanishes(p.degree)) {
        EXPECT_TRUE(p.symmetric) << "r=" << r << " s=" << p.degree;
      }
      if (phi_corrected_sym2_vanishes(p.degree)) {
        EXPECT_TRUE(p.antisymmetric) << "r=" << r << " s=" << p.degree;
      }
    }
}

TEST(Phi, SurjectiveOntoRealForm) {
  for (unsigned r : {1u, 2u, 7u}) EXPECT_TRUE(phi_surjectivity_check(r)) << "r=" << r;
  EXPECT_THROW(phi_degrees(3), std::invalid_argument);
}
