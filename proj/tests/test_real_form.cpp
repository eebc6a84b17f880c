#include <gtest/gtest.h>

#include "generators.hpp"
#include "spincent/real_form.hpp"
#include "spincent/tensor_rep.hpp"

using namespace spincent;

namespace {

/// The literal identity <g v, w> = conj<v, g w> on standard basis vectors.
bool literal_hermitian_identity(const AntilinearMap& g) { return hermitian_symmetry_holds(g, 1); }

}  // namespace

TEST(Gamma, SquareSignsByResidue) {
  const int expected[] = {0, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1};
  for (unsigned n = 1; n <= 11; ++n) EXPECT_EQ(build_gamma(n).square_sign(), expected[n]) << "n=" << n;
}

TEST(Gamma, EquivariantForAllSmallN) {
  for (unsigned n = 1; n <= 11; ++n) EXPECT_TRUE(gamma_equivariance_check(n)) << "n=" << n;
  EXPECT_THROW(gamma_equivariance_check(12), std::invalid_argument);
}

TEST(Gamma, PlainConjugationIsNotCompatibleForN2) {
  AntilinearMap plain{CMatrix::identity(2)};
  EXPECT_FALSE(gamma_equivariance_check(2, plain));
}

TEST(Gamma, LiteralHermitianIdentityFailsExactlyForQuaternionicStructures) {
  for (unsigned n = 1; n <= 11; ++n) {
    AntilinearMap g = build_gamma(n);
    const int sigma = g.square_sign();
    EXPECT_EQ(literal_hermitian_identity(g), sigma > 0) << "n=" << n;
    EXPECT_TRUE(hermitian_symmetry_holds(g, sigma));
    EXPECT_TRUE(hermitian_isometry_holds(g));
  }
}

TEST(Gamma, FrameFormulaMatchesMatrix) {
  gen::Source src;
  for (unsigned n = 2; n <= 10; ++n) {
    const unsigned k = n / 2;
    AntilinearMap g = build_gamma(n);
    for (int t = 0; t < 10; ++t) {
      FrameVec v;
      for (std::uint32_t idx = 0; idx < (1u << k); ++idx)
        if (src.coin()) v.emplace_back(idx, src.gaussian());
      CVector lhs = frame_to_standard(k, frame_gamma(k, v));
      CVector rhs = g.apply(frame_to_standard(k, v));
      EXPECT_EQ(lhs, rhs) << "n=" << n;
    }
  }
}

TEST(FramePairing, IsStandardPairingScaled) {
  gen::Source src;
  for (unsigned k = 0; k <= 4; ++k)
    for (int t = 0; t < 10; ++t) {
      FrameVec v;
      FrameVec w;
      for (std::uint32_t idx = 0; idx < (1u << k); ++idx) {
        if (src.coin()) v.emplace_back(idx, src.gaussian());
        if (src.coin()) w.emplace_back(idx, src.gaussian());
      }
      Gaussian standard = hermitian(frame_to_standard(k, v), frame_to_standard(k, w));
      EXPECT_EQ(frame_pairing(v, w) * Gaussian(Rational(1u << k)), standard);
    }
}

TEST(RealForm, DimensionsRealnessAndOrthogonality) {
  for (unsigned r = 1; r <= 12; ++r)
    for (FormLabel l : labels_for(r)) {
      RealForm f = build_real_form(r, l);
      EXPECT_EQ(f.dim(), d_dim(r)) << "r=" << r;
      EXPECT_TRUE(real_form_pairings_real(f)) << "r=" << r;
      // gamma fixes the form when it squares to +Id; for r = 2 (mod 8) the form is a chirality half instead.
      const int sigma = build_gamma(f.ambient).square_sign();
      for (const auto& v : f.basis) {
        FrameVec g = frame_gamma(f.k(), v);
        if (sigma > 0) {
          EXPECT_EQ(g, v) << "r=" << r;
        } else {
          FrameVec minus = v;
          for (auto& e : minus) e.second = -e.second;
          EXPECT_EQ(frame_gamma(f.k(), g), minus) << "r=" << r;
        }
      }
    }
}

TEST(RealForm, LabelsRequiredExactlyForMultipleOfFour) {
  EXPECT_THROW(build_real_form(4), std::invalid_argument);
  EXPECT_THROW(build_real_form(3, FormLabel::plus), std::invalid_argument);
  EXPECT_NO_THROW(build_real_form(8, FormLabel::minus));
}

TEST(RealRep, GeneratorsAreComplexStructures) {
  for (unsigned r = 1; r <= 12; ++r)
    for (FormLabel l : labels_for(r)) {
      RealRep rep = realize_rep(r, l);
      ASSERT_EQ(rep.spin_mats.size(), r * (r - 1) / 2);
      for (const auto& g : rep.spin_mats) {
        EXPECT_TRUE(is_antisymmetric(g));
        EXPECT_TRUE(squares_to_minus_identity(g));
      }
    }
}

TEST(RealRep, BracketsMatchClifford) {
  for (unsigned r = 2; r <= 9; ++r)
    for (FormLabel l : labels_for(r)) EXPECT_TRUE(verify_representation(as_linear(realize_rep(r, l)))) << "r=" << r;
}

TEST(RealRep, PlusAndMinusDifferOnTheVolume) {
  for (unsigned r : {4u, 8u}) {
    RealRep p = realize_rep(r, FormLabel::plus);
    RealRep m = realize_rep(r, FormLabel::minus);
    RMatrix vp = volume_action(p, r);
    RMatrix vm = volume_action(m, r);
    EXPECT_TRUE(vp == RMatrix::identity(p.dim) || vp == RMatrix::identity(p.dim).scaled(Rational(-1)));
    EXPECT_TRUE(vm == vp.scaled(Rational(-1)));
  }
}

TEST(RealRep, VolumeIsComplexStructureForResidueTwo) {
  for (unsigned r : {2u, 6u, 10u}) {
    RealRep rep = realize_rep(r);
    RMatrix j = volume_action(rep, r);
    EXPECT_TRUE(squares_to_minus_identity(j));
    for (const auto& g : rep.spin_mats) EXPECT_TRUE(commutator(j, g).is_zero_matrix());
  }
}

TEST(Dimensions, ResidueFormulasAndPeriodicity) {
  const std::size_t d[] = {0, 1, 2, 4, 4, 8, 8, 8, 8};
  const unsigned v[] = {0, 1, 1, 1, 2, 1, 1, 1, 2};
  for (unsigned r = 1; r <= 8; ++r) {
    EXPECT_EQ(d_dim(r), d[r]);
    EXPECT_EQ(v_count(r), v[r]);
  }
  for (unsigned r = 1; r <= 24; ++r) EXPECT_EQ(d_dim(r + 8), 16 * d_dim(r));
}
