#include <gtest/gtest.h>

#include "spincent/centralizer.hpp"

using namespace spincent;

namespace {

std::size_t oracle_dim(unsigned r, std::size_t m) {
  switch (r % 8) {
    case 1: case 7: return m * (m - 1) / 2;
    case 2: case 6: return m * m;
    default: return m * (2 * m + 1);
  }
}

bool in_span(const std::vector<RMatrix>& basis, const RMatrix& x) {
  std::vector<SparseVec<Rational>> flat;
  for (const auto& b : basis) flat.push_back(flatten(b));
  if (flat.empty()) return x.is_zero_matrix();
  SpanSolver<Rational> s(x.rows() * x.cols(), flat);
  return s.solve(flatten(x)).has_value();
}

}  // namespace

TEST(Centralizer, BasisCommutesWithEveryGeneratorAndCloses) {
  for (auto [r, m] : std::vector<std::pair<unsigned, std::size_t>>{{2, 2}, {3, 2}, {5, 1}, {6, 2}, {7, 3}}) {
    EmbeddedSpin emb = build_embedding_t1(r, m);
    CentralizerBasis cb = so_centralizer(emb);
    EXPECT_EQ(cb.size(), oracle_dim(r, m)) << "r=" << r << " m=" << m;
    for (const auto& x : cb.basis) {
      EXPECT_TRUE(is_antisymmetric(x));
      for (const auto& g : emb.gens) EXPECT_TRUE(commutator(x, g).is_zero_matrix());
    }
    for (std::size_t a = 0; a < cb.basis.size(); ++a)
      for (std::size_t b = a + 1; b < cb.basis.size(); ++b) EXPECT_TRUE(in_span(cb.basis, commutator(cb.basis[a], cb.basis[b])));
  }
}

TEST(Centralizer, TwoBlockDimensions) {
  auto sp = [](std::size_t m) { return m * (2 * m + 1); };
  auto so = [](std::size_t m) { return m * (m - 1) / 2; };
  EXPECT_EQ(so_centralizer(build_embedding_t2(4, 1, 2)).size(), sp(1) + sp(2));
  EXPECT_EQ(so_centralizer(build_embedding_t2(8, 2, 3)).size(), so(2) + so(3));
  EXPECT_EQ(so_centralizer(build_embedding_t2(4, 0, 2)).size(), sp(2));
}

TEST(Centralizer, FloatBackendAgreesOnDimension) {
  for (auto [r, m] : std::vector<std::pair<unsigned, std::size_t>>{{2, 3}, {3, 2}, {7, 2}}) {
    EmbeddedSpin emb = build_embedding_t1(r, m);
    CentralizerBasis f = so_centralizer(emb, Backend::floating);
    EXPECT_EQ(f.size(), so_centralizer(emb).size());
    EXPECT_GT(f.tolerance, 0.0);
  }
}

TEST(Centralizer, RejectsOversizedAndMisshapenInputs) {
  EXPECT_THROW(so_centralizer(build_embedding_t1(9, 17)), std::invalid_argument);
  EXPECT_THROW(build_embedding_t1(4, 1), std::invalid_argument);
  EXPECT_THROW(build_embedding_t1(3, 0), std::invalid_argument);
  EXPECT_THROW(expected_centralizer(8, Shape::single(1)), std::invalid_argument);
  EXPECT_THROW(expected_centralizer(3, Shape::pair(1, 1)), std::invalid_argument);
  EXPECT_THROW(expected_centralizer(0, Shape::single(1)), std::invalid_argument);
}

TEST(Catalog, NamesAndDimensions) {
  EXPECT_EQ(expected_centralizer(5, Shape::single(2)).name(), "sp(2)");
  EXPECT_EQ(expected_centralizer(5, Shape::single(2)).dim(), 10u);
  EXPECT_EQ(expected_centralizer(6, Shape::single(3)).name(), "u(3)");
  EXPECT_EQ(expected_centralizer(9, Shape::single(4)).name(), "so(4)");
  EXPECT_EQ(expected_centralizer(4, Shape::pair(1, 2)).name(), "sp(1)+sp(2)");
  EXPECT_EQ(expected_centralizer(16, Shape::pair(2, 3)).name(), "so(2)+so(3)");
  EXPECT_TRUE(expected_centralizer(1, Shape::single(3)).degenerate);
}

TEST(Catalog, ReferenceModelsAreCompactWithExpectedShape) {
  for (LieType t : {LieType::so, LieType::u, LieType::sp})
    for (std::size_t m = 1; m <= 3; ++m) {
      CatalogEntry e{t, m, 0};
      LieInvariants inv = reference_invariants(e);
      EXPECT_EQ(inv.dim, e.dim());
      EXPECT_EQ(inv.killing.positive, 0u) << e.name();
      EXPECT_EQ(inv.killing.zero, inv.center_dim) << e.name();
      EXPECT_EQ(inv.center_dim + inv.derived_dim, inv.dim) << e.name();
      EXPECT_EQ(inv.center_dim, t == LieType::u ? 1u : (t == LieType::so && m == 2 ? 1u : 0u)) << e.name();
    }
  // so(3) and sp(1) are isomorphic.
  EXPECT_EQ(reference_invariants({LieType::so, 3, 0}), reference_invariants({LieType::sp, 1, 0}));
}

TEST(Classify, UnitaryOneFromComplexStructure) {
  RMatrix j(2, 2);
  j.push(0, 1, Rational(-1));
  j.push(1, 0, Rational(1));
  LieReport rep = lie_classify(std::vector<RMatrix>{j});
  EXPECT_EQ(rep.inv.dim, 1u);
  EXPECT_TRUE(rep.complex_structure.has_value());
  EXPECT_NE(std::find(rep.matches.begin(), rep.matches.end(), "u(1)"), rep.matches.end());
}

TEST(Classify, AbelianPlaneIsUnidentified) {
  RMatrix a = models::unit(4, 0, 1, -1) + models::unit(4, 1, 0, 1);
  RMatrix b = models::unit(4, 2, 3, -1) + models::unit(4, 3, 2, 1);
  LieReport rep = lie_classify(std::vector<RMatrix>{a, b});
  EXPECT_EQ(rep.inv.center_dim, 2u);
  EXPECT_EQ(rep.identified, "unidentified");
  EXPECT_TRUE(rep.matches.empty());
}

TEST(Classify, NonClosedSpanIsRejected) {
  RMatrix a = models::unit(3, 0, 1, -1) + models::unit(3, 1, 0, 1);
  RMatrix b = models::unit(3, 1, 2, -1) + models::unit(3, 2, 1, 1);
  EXPECT_THROW(lie_structure({a, b}), std::exception);
}

TEST(Classify, CentralizerCasesCarryCertificates) {
  for (auto [r, m] : std::vector<std::pair<unsigned, std::size_t>>{{2, 2}, {3, 1}, {5, 2}, {6, 1}, {7, 3}}) {
    CatalogEntry e = expected_centralizer(r, Shape::single(m));
    LieReport rep = lie_classify(so_centralizer(build_embedding_t1(r, m)), e);
    EXPECT_TRUE(rep.invariants_match_expected) << e.name();
    EXPECT_TRUE(rep.certificates_ok) << e.name();
    EXPECT_EQ(rep.identified, e.name());
  }
}

TEST(Quaternions, TripleFromUnitsSatisfiesRelations) {
  auto t = find_quaternion_triple(models::quaternion_units());
  ASSERT_TRUE(t.has_value());
  const RMatrix minus_id = RMatrix::identity(4).scaled(Rational(-1));
  EXPECT_TRUE(t->i * t->i == minus_id);
  EXPECT_TRUE(t->j * t->j == minus_id);
  EXPECT_TRUE(t->k * t->k == minus_id);
  EXPECT_TRUE(t->i * t->j == t->k);
  EXPECT_FALSE(find_quaternion_triple({models::unit(2, 0, 1, -1) + models::unit(2, 1, 0, 1)}).has_value());
}

TEST(StructuralCertificate, SingleBlockCases) {
  for (auto [r, m] : std::vector<std::pair<unsigned, std::size_t>>{{2, 2}, {3, 2}, {7, 2}}) {
    CentralizerBasis cb = so_centralizer(build_embedding_t1(r, m));
    StructuralCertificate c = structural_certificate_t1(r, m, cb);
    EXPECT_TRUE(c.pass) << "r=" << r;
    EXPECT_EQ(c.candidate_rank, cb.size());
  }
}

TEST(Suites, SingleBlockMultiplicityOneAgreesWithFirstSuite) {
  std::vector<CaseRow> p = basic_centralizer_suite(7);
  std::vector<CaseRow> t = single_block_suite({{2, 1}, {3, 1}, {5, 1}, {6, 1}, {7, 1}});
  for (const auto& row : t) {
    auto it = std::find_if(p.begin(), p.end(), 
                           [&](const CaseRow& c) { return c.key == row.key.substr(0, row.key.find(',')); });
    ASSERT_NE(it, p.end()) << row.key;
    EXPECT_EQ(it->computed_dim, row.computed_dim) << row.key;
    EXPECT_TRUE(row.pass);
  }
  for (const auto& row : p) EXPECT_TRUE(row.pass) << row.key;
}
