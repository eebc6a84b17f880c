#pragma once

// Centralizers of embedded spin(r) in so(N), Lie-algebra invariants, catalog identification
// and structural certificates.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincent/blade.hpp"
#include "spincent/linalg.hpp"
#include "spincent/matrix.hpp"
#include "spincent/real_form.hpp"
#include "spincent/tensor_rep.hpp"

namespace spincent {

// ---------------------------------------------------------------------------
// Embeddings R^N = Delta_r (x) R^m, or Delta_r^+ (x) R^m1 + Delta_r^- (x) R^m2

enum class ShapeKind { single, pair };

struct Shape {
  ShapeKind kind = ShapeKind::single;
  std::size_t m1 = 1;
  std::size_t m2 = 0;

  static Shape single(std::size_t m) { return {ShapeKind::single, m, 0}; }
  static Shape pair(std::size_t a, std::size_t b) { return {ShapeKind::pair, a, b}; }

  std::string to_string() const {
    if (kind == ShapeKind::single) return "m=" + std::to_string(m1);
    return "m1=" + std::to_string(m1) + ",m2=" + std::to_string(m2);
  }
};

struct EmbeddedBlock {
  std::shared_ptr<const RealRep> rep;
  std::size_t offset = 0;
  std::size_t m = 0;
};

struct EmbeddedSpin {
  unsigned r = 0;
  std::size_t N = 0;
  Shape shape;
  std::vector<RMatrix> gens;            // images of e_i e_j for spin_pairs(r)
  std::vector<EmbeddedBlock> blocks;    // blocks with m > 0, in order
};

inline EmbeddedSpin build_embedding_t1(unsigned r, std::size_t m) {
  if (r % 4 == 0) throw std::invalid_argument("build_embedding_t1: r = 0 (mod 4) needs the two-block embedding");
  if (m < 1) throw std::invalid_argument("build_embedding_t1: m must be positive");
  auto rep = std::make_shared<const RealRep>(realize_rep(r));
  EmbeddedSpin e;
  e.r = r;
  e.shape = Shape::single(m);
  e.N = rep->dim * m;
  const RMatrix id = RMatrix::identity(m);
  for (const auto& g : rep->spin_mats) e.gens.push_back(kronecker(g, id));
  e.blocks.push_back({rep, 0, m});
  return e;
}

inline EmbeddedSpin build_embedding_t2(unsigned r, std::size_t m1, std::size_t m2) {
  if (r % 4 != 0) throw std::invalid_argument("build_embedding_t2: requires r = 0 (mod 4)");
  if (m1 + m2 < 1) throw std::invalid_argument("build_embedding_t2: m1 + m2 must be positive");
  EmbeddedSpin e;
  e.r = r;
  e.shape = Shape::pair(m1, m2);
  std::vector<std::shared_ptr<const RealRep>> reps;
  std::size_t offset = 0;
  for (auto [label, m] : {std::pair{FormLabel::plus, m1}, std::pair{FormLabel::minus, m2}}) {
    if (m == 0) continue;
    auto rep = std::make_shared<const RealRep>(realize_rep(r, label));
    e.blocks.push_back({rep, offset, m});
    offset += rep->dim * m;
  }
  e.N = offset;
  const std::size_t npairs = spin_pairs(r).size();
  for (std::size_t p = 0; p < npairs; ++p) {
    std::vector<RMatrix> parts;
    for (const auto& b : e.blocks) parts.push_back(kronecker(b.rep->spin_mats[p], RMatrix::identity(b.m)));
    e.gens.push_back(block_diagonal(parts));
  }
  return e;
}

// ---------------------------------------------------------------------------
// so(N) centralizer

enum class Backend { exact, floating };

inline std::string to_string(Backend b) { return b == Backend::exact ? "exact" : "float"; }

inline constexpr std::size_t kMaxExactN = 256;
inline constexpr std::size_t kMaxFloatN = 1024;

struct CentralizerBasis {
  std::size_t N = 0;
  Backend backend = Backend::exact;
  double tolerance = 0.0;                     // float backend only
  std::vector<RMatrix> basis;                 // exact backend
  std::vector<SparseMatrix<double>> basis_float;
  std::shared_ptr<const EmbeddedSpin> source;

  std::size_t size() const { return backend == Backend::exact ? basis.size() : basis_float.size(); }
};

namespace detail {

/// Row of [X, g]_{ab} (a < b) in the variables x_{st}, s < t, with X = sum x_st (E_st - E_ts).
template <class T>
SparseVec<T> commutator_equation(std::size_t n, const SparseMatrix<T>& g, const SparseMatrix<T>& gt, std::size_t a,
                                 std::size_t b) {
  SparseVec<T> row;
  auto var = [&](std::size_t s, std::size_t t, const T& c) {
    if (s == t) return;
    if (s < t) {
      row.emplace_back(wedge_index(n, s, t), c);
    } else {
      T neg = c;
      neg = -neg;
      row.emplace_back(wedge_index(n, t, s), neg);
    }
  };
  for (const auto& [c, v] : gt.row(b)) var(a, c, v);  // sum_c X_ac g_cb
  for (const auto& [c, v] : g.row(a)) {               // - sum_c g_ac X_cb
    T neg = v;
    neg = -neg;
    var(c, b, neg);
  }
  return canonical_sparse(std::move(row));
}

template <class T>
SparseMatrix<T> antisymmetric_from(std::size_t n, const SparseVec<T>& x) {
  std::vector<SparseVec<T>> rows(n);
  std::vector<std::size_t> start(n + 1, 0);
  for (std::size_t a = 0; a < n; ++a) start[a + 1] = start[a] + (n - a - 1);
  for (const auto& [k, v] : x) {
    std::size_t a = static_cast<std::size_t>(std::upper_bound(start.begin(), start.end(), k) - start.begin()) - 1;
    std::size_t b = a + 1 + (k - start[a]);
    rows[a].emplace_back(b, v);
    T neg = v;
    neg = -neg;
    rows[b].emplace_back(a, neg);
  }
  SparseMatrix<T> m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    sort_sparse(rows[a]);
    m.set_row(a, std::move(rows[a]));
  }
  return m;
}

template <class T>
bool commutes(const SparseMatrix<T>& x, const SparseMatrix<T>& g) {
  SparseMatrix<T> c = x * g - g * x;
  if constexpr (std::is_same_v<T, double>) {
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (const auto& e : c.row(i))
        if (std::fabs(e.second) > 1e-7) return false;
    return true;
  } else {
    return c.is_zero_matrix();
  }
}

template <class T>
std::vector<SparseMatrix<T>> solve_centralizer(std::size_t n, unsigned r, const std::vector<SparseMatrix<T>>& gens) {
  Echelon<T> ech(n * (n - 1) / 2);
  if (r > 1) {
    for (std::size_t p : lie_generating_indices(r)) {
      const SparseMatrix<T>& g = gens[p];
      const SparseMatrix<T> gt = g.transpose();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
          SparseVec<T> row = commutator_equation(n, g, gt, a, b);
          if (!row.empty()) ech.insert(std::move(row));
        }
    }
  }
  std::vector<SparseMatrix<T>> out;
  for (const auto& v : ech.nullspace()) out.push_back(antisymmetric_from(n, v));
  for (const auto& x : out)
    for (const auto& g : gens)
      if (!commutes(x, g))
        throw std::logic_error("so_centralizer: Lie-generating subset and full generator set disagree");
  return out;
}

}  // namespace detail

/// Basis of {X in so(N) : [X, g] = 0 for all generators}.
inline CentralizerBasis so_centralizer(const EmbeddedSpin& emb, Backend backend = Backend::exact) {
  const std::size_t limit = backend == Backend::exact ? kMaxExactN : kMaxFloatN;
  if (emb.N > limit)
    throw std::invalid_argument("so_centralizer: N = " + std::to_string(emb.N) + " exceeds the " + to_string(backend) +
                                " backend limit " + std::to_string(limit));
  CentralizerBasis cb;
  cb.N = emb.N;
  cb.backend = backend;
  cb.source = std::make_shared<const EmbeddedSpin>(emb);
  if (emb.N == 0) return cb;
  if (backend == Backend::exact) {
    cb.basis = detail::solve_centralizer<Rational>(emb.N, emb.r, emb.gens);
  } else {
    cb.tolerance = kFloatTolerance;
    std::vector<SparseMatrix<double>> g;
    for (const auto& m : emb.gens) g.push_back(to_double(m));
    cb.basis_float = detail::solve_centralizer<double>(emb.N, emb.r, g);
  }
  return cb;
}

/// Centralizer of an explicit list of antisymmetric generators (Lie-generating order not assumed).
inline std::vector<RMatrix> so_centralizer_of(const std::vector<RMatrix>& gens, std::size_t n) {
  Echelon<Rational> ech(n * (n - 1) / 2);
  for (const auto& g : gens) {
    const RMatrix gt = g.transpose();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        auto row = detail::commutator_equation(n, g, gt, a, b);
        if (!row.empty()) ech.insert(std::move(row));
      }
  }
  std::vector<RMatrix> out;
  for (const auto& v : ech.nullspace()) out.push_back(detail::antisymmetric_from(n, v));
  return out;
}

// ---------------------------------------------------------------------------
// Invariants of a matrix Lie algebra given by a basis

struct LieInvariants {
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  std::size_t derived_dim = 0;
  Signature killing;

  friend bool operator==(const LieInvariants& a, const LieInvariants& b) {
    return a.dim == b.dim && a.center_dim == b.center_dim && a.derived_dim == b.derived_dim && a.killing == b.killing;
  }
};

struct LieStructure {
  LieInvariants inv;
  // c[a][b][k]: coefficient of basis k in [B_a, B_b]
  std::vector<std::vector<std::vector<Rational>>> constants;
  std::vector<SparseVec<Rational>> center;   // coefficient vectors
};

inline LieStructure lie_structure(const std::vector<RMatrix>& basis) {
  LieStructure s;
  const std::size_t n = basis.size();
  s.inv.dim = n;
  if (n == 0) return s;
  const std::size_t N = basis.front().rows();
  std::vector<SparseVec<Rational>> flat;
  for (const auto& b : basis) flat.push_back(flatten(b));
  SpanSolver<Rational> solver(N * N, flat);
  s.constants.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto c = solver.solve(flatten(commutator(basis[a], basis[b])));
      if (!c) throw std::logic_error("lie_structure: bracket leaves the span (not a subalgebra)");
      s.constants[a][b] = *c;
      for (std::size_t k = 0; k < n; ++k) s.constants[b][a][k] = -(*c)[k];
    }
  // Center: sum_a c_a [B_a, B_b] = 0 for all b.
  Echelon<Rational> center_eq(n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t k = 0; k < n; ++k) {
      SparseVec<Rational> row;
      for (std::size_t a = 0; a < n; ++a)
        if (!is_zero(s.constants[a][b][k])) row.emplace_back(a, s.constants[a][b][k]);
      if (!row.empty()) center_eq.insert(std::move(row));
    }
  s.center = center_eq.nullspace();
  s.inv.center_dim = s.center.size();
  Echelon<Rational> derived(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      SparseVec<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(s.constants[a][b][k])) row.emplace_back(k, s.constants[a][b][k]);
      if (!row.empty()) derived.insert(std::move(row));
    }
  s.inv.derived_dim = derived.rank();
  // (ad_a)_{k b} = c[a][b][k]; B(a, b) = tr(ad_a ad_b).
  Matrix<Rational> killing(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Rational t(0);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Rational& x = s.constants[a][l][k];
          const Rational& y = s.constants[b][k][l];
          if (!is_zero(x) && !is_zero(y)) t += x * y;
        }
      killing(a, b) = t;
      killing(b, a) = t;
    }
  s.inv.killing = congruence_signature(killing);
  return s;
}

// ---------------------------------------------------------------------------
// Catalog of expected centralizers and their reference matrix models

enum class LieType { zero, so, u, sp, so_so, sp_sp };

struct CatalogEntry {
  LieType type = LieType::zero;
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  bool degenerate = false;   // r = 1

  std::size_t dim() const {
    auto so = [](std::size_t m) { return m * (m - (m > 0 ? 1 : 0)) / 2; };
    auto sp = [](std::size_t m) { return m * (2 * m + 1); };
    switch (type) {
      case LieType::zero: return 0;
      case LieType::so: return so(m1);
      case LieType::u: return m1 * m1;
      case LieType::sp: return sp(m1);
      case LieType::so_so: return so(m1) + so(m2);
      default: return sp(m1) + sp(m2);
    }
  }

  std::string name() const {
    auto s = [](const char* t, std::size_t m) { return std::string(t) + "(" + std::to_string(m) + ")"; };
    switch (type) {
      case LieType::zero: return "zero";
      case LieType::so: return s("so", m1);
      case LieType::u: return s("u", m1);
      case LieType::sp: return s("sp", m1);
      case LieType::so_so: return s("so", m1) + "+" + s("so", m2);
      default: return s("sp", m1) + "+" + s("sp", m2);
    }
  }
};

namespace models {

inline RMatrix unit(std::size_t n, std::size_t i, std::size_t j, const Rational& c = 1) {
  RMatrix m(n, n);
  m.push(i, j, c);
  return m;
}

inline std::vector<RMatrix> antisymmetric_basis(std::size_t m) {
  std::vector<RMatrix> out;
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t) out.push_back(unit(m, s, t) - unit(m, t, s));
  return out;
}

inline std::vector<RMatrix> symmetric_basis(std::size_t m) {
  std::vector<RMatrix> out;
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s; t < m; ++t) out.push_back(s == t ? unit(m, s, s) : unit(m, s, t) + unit(m, t, s));
  return out;
}

/// Left multiplication by i, j, k on H = R^4 with basis (1, i, j, k).
inline std::vector<RMatrix> quaternion_units() {
  auto build = [](std::initializer_list<std::tuple<int, int, int>> e) {
    RMatrix m(4, 4);
    std::vector<std::tuple<int, int, int>> v(e);
    std::sort(v.begin(), v.end());
    for (auto [i, j, s] : v) m.push(static_cast<std::size_t>(i), static_cast<std::size_t>(j), Rational(s));
    return m;
  };
  // i*1 = i, i*i = -1, i*j = k, i*k = -j
  RMatrix li = build({{0, 1, -1}, {1, 0, 1}, {2, 3, -1}, {3, 2, 1}});
  // j*1 = j, j*i = -k, j*j = -1, j*k = i
  RMatrix lj = build({{0, 2, -1}, {1, 3, 1}, {2, 0, 1}, {3, 1, -1}});
  // k*1 = k, k*i = j, k*j = -i, k*k = -1
  RMatrix lk = build({{0, 3, -1}, {1, 2, -1}, {2, 1, 1}, {3, 0, 1}});
  return {li, lj, lk};
}

inline std::vector<RMatrix> so_model(std::size_t m) { return antisymmetric_basis(m); }

/// u(m) inside so(2m): A (x) Id_2 for antisymmetric A and S (x) J_2 for symmetric S.
inline std::vector<RMatrix> u_model(std::size_t m) {
  RMatrix j2 = unit(2, 0, 1, -1) + unit(2, 1, 0, 1);
  std::vector<RMatrix> out;
  for (const auto& a : antisymmetric_basis(m)) out.push_back(kronecker(a, RMatrix::identity(2)));
  for (const auto& s : symmetric_basis(m)) out.push_back(kronecker(s, j2));
  return out;
}

/// sp(m) inside so(4m): A (x) Id_4 and S (x) L_q for q = i, j, k.
inline std::vector<RMatrix> sp_model(std::size_t m) {
  std::vector<RMatrix> out;
  for (const auto& a : antisymmetric_basis(m)) out.push_back(kronecker(a, RMatrix::identity(4)));
  for (const auto& q : quaternion_units())
    for (const auto& s : symmetric_basis(m)) out.push_back(kronecker(s, q));
  return out;
}

inline std::size_t model_size(const std::vector<RMatrix>& b, std::size_t fallback) {
  return b.empty() ? fallback : b.front().rows();
}

inline std::vector<RMatrix> direct_sum(const std::vector<RMatrix>& a, std::size_t na, const std::vector<RMatrix>& b,
                                       std::size_t nb) {
  std::vector<RMatrix> out;
  for (const auto& x : a) out.push_back(block_diagonal<Rational>({x, RMatrix(nb, nb)}));
  for (const auto& y : b) out.push_back(block_diagonal<Rational>({RMatrix(na, na), y}));
  return out;
}

inline std::vector<RMatrix> reference_model(const CatalogEntry& e) {
  switch (e.type) {
    case LieType::zero: return {};
    case LieType::so: return so_model(e.m1);
    case LieType::u: return u_model(e.m1);
    case LieType::sp: return sp_model(e.m1);
    case LieType::so_so: return direct_sum(so_model(e.m1), e.m1, so_model(e.m2), e.m2);
    default: return direct_sum(sp_model(e.m1), 4 * e.m1, sp_model(e.m2), 4 * e.m2);
  }
}

}  // namespace models

/// Invariants of the catalog entry, read off its explicit matrix model.
inline LieInvariants reference_invariants(const CatalogEntry& e) {
  LieInvariants inv = lie_structure(models::reference_model(e)).inv;
  if (inv.dim != e.dim()) throw std::logic_error("reference_invariants: model dimension mismatch for " + e.name());
  return inv;
}

/// Predicted centralizer by r mod 8: so(m), u(m), sp(m) for one block; so+so or sp+sp for two.
inline CatalogEntry expected_centralizer(unsigned r, const Shape& shape) {
  if (r < 1) throw std::invalid_argument("expected_centralizer: r must be positive");
  CatalogEntry e;
  e.m1 = shape.m1;
  e.m2 = shape.m2;
  e.degenerate = r == 1;
  const unsigned res = r % 8;
  if (shape.kind == ShapeKind::pair) {
    if (r % 4 != 0) throw std::invalid_argument("expected_centralizer: two blocks only for r = 0 (mod 4)");
    e.type = res == 0 ? LieType::so_so : LieType::sp_sp;
    return e;
  }
  if (r % 4 == 0) throw std::invalid_argument("expected_centralizer: r = 0 (mod 4) needs the two-block shape");
  switch (res) {
    case 1: case 7: e.type = LieType::so; break;
    case 2: case 6: e.type = LieType::u; break;
    default: e.type = LieType::sp; break;
  }
  return e;
}

// ---------------------------------------------------------------------------
// Certificates

struct QuaternionTriple {
  RMatrix i;
  RMatrix j;
  RMatrix k;
};

namespace detail {

inline bool scalar_multiple_of_identity(const RMatrix& m, Rational& s) {
  if (m.rows() == 0) return false;
  s = m.at(0, 0);
  return m == RMatrix::identity(m.rows()).scaled(s);
}

/// Rescales x (with x^2 = -c Id, c > 0 a rational square) to square -Id.
inline std::optional<RMatrix> normalize_complex(const RMatrix& x) {
  Rational s;
  if (!scalar_multiple_of_identity(x * x, s) || sgn(s) >= 0) return std::nullopt;
  Rational root;
  if (!rational_sqrt(Rational(-s), root)) return std::nullopt;
  return x.scaled(Rational(1) / root);
}

}  // namespace detail

/// Orthogonalizes a 3-dimensional span for the form x y + y x = -2 q(x, y) Id and checks that it
/// closes into unit quaternions I, J, K = I J.
inline std::optional<QuaternionTriple> find_quaternion_triple(const std::vector<RMatrix>& span) {
  if (span.size() != 3) return std::nullopt;
  auto q = [](const RMatrix& x, const RMatrix& y, Rational& out) {
    Rational s;
    if (!detail::scalar_multiple_of_identity(x * y + y * x, s)) return false;
    out = -s / 2;
    return true;
  };
  std::vector<RMatrix> orth;
  for (const auto& v : span) {
    RMatrix w = v;
    for (const auto& u : orth) {
      Rational quv;
      Rational quu;
      if (!q(u, w, quv) || !q(u, u, quu) || sgn(quu) <= 0) return std::nullopt;
      w = w - u.scaled(quv / quu);
    }
    orth.push_back(w);
  }
  std::vector<RMatrix> unit;
  for (const auto& w : orth) {
    auto n = detail::normalize_complex(w);
    if (!n) return std::nullopt;
    unit.push_back(*n);
  }
  RMatrix k = unit[0] * unit[1];
  if (k == unit[2].scaled(Rational(-1))) unit[2] = k;
  if (k != unit[2]) return std::nullopt;
  if (unit[0] * unit[1] != unit[1].scaled(Rational(-1)) * unit[0]) return std::nullopt;
  return QuaternionTriple{unit[0], unit[1], unit[2]};
}

inline RMatrix lift_block(const EmbeddedSpin& emb, std::size_t block, const RMatrix& q) {
  std::vector<RMatrix> parts;
  for (std::size_t b = 0; b < emb.blocks.size(); ++b) {
    const auto& blk = emb.blocks[b];
    const std::size_t n = blk.rep->dim * blk.m;
    parts.push_back(b == block ? kronecker(q, RMatrix::identity(blk.m)) : RMatrix(n, n));
  }
  return block_diagonal(parts);
}

struct LieReport {
  LieInvariants inv;
  std::string identified = "unidentified";
  std::vector<std::string> matches;              // every catalog entry with equal invariants
  std::optional<CatalogEntry> expected;
  std::optional<LieInvariants> expected_inv;
  bool invariants_match_expected = false;
  std::optional<RMatrix> complex_structure;      // J in the center with J^2 = -Id
  std::vector<QuaternionTriple> quaternion;      // one triple per block, lifted to R^N
  bool certificates_ok = false;
};

namespace detail {

inline std::vector<CatalogEntry> catalog_candidates(std::size_t dim) {
  std::vector<CatalogEntry> out;
  if (dim == 0) out.push_back({LieType::zero, 0, 0});
  for (std::size_t m = 1; m * m <= dim; ++m)
    if (m * m == dim) out.push_back({LieType::u, m, 0});
  for (std::size_t m = 1; m * (2 * m + 1) <= dim; ++m)
    if (m * (2 * m + 1) == dim) out.push_back({LieType::sp, m, 0});
  for (std::size_t m = 2; m * (m - 1) / 2 <= dim; ++m)
    if (m * (m - 1) / 2 == dim) out.push_back({LieType::so, m, 0});
  return out;
}

}  // namespace detail

/// Invariants, catalog identification and certificates for an exact centralizer basis.
inline LieReport lie_classify(const CentralizerBasis& cb, std::optional<CatalogEntry> expected = std::nullopt) {
  if (cb.backend != Backend::exact) throw std::invalid_argument("lie_classify: requires the exact backend");
  LieReport rep;
  LieStructure st = lie_structure(cb.basis);
  rep.inv = st.inv;
  rep.expected = expected;
  std::vector<CatalogEntry> candidates;
  if (expected) candidates.push_back(*expected);
  for (const auto& c : detail::catalog_candidates(rep.inv.dim)) candidates.push_back(c);
  for (const auto& c : candidates) {
    if (c.dim() != rep.inv.dim) continue;
    LieInvariants ref = reference_invariants(c);
    if (expected && c.name() == expected->name()) {
      rep.expected_inv = ref;
      rep.invariants_match_expected = ref == rep.inv;
    }
    if (ref == rep.inv && std::find(rep.matches.begin(), rep.matches.end(), c.name()) == rep.matches.end())
      rep.matches.push_back(c.name());
  }
  if (expected && !rep.expected_inv) rep.expected_inv = reference_invariants(*expected);

  // Complex structure: a central element squaring to a negative scalar.
  if (st.center.size() == 1 && !cb.basis.empty()) {
    RMatrix z(cb.N, cb.N);
    for (const auto& [a, c] : st.center.front()) z = z + cb.basis[a].scaled(c);
    rep.complex_structure = detail::normalize_complex(z);
  }
  // Quaternion triples: the centralizer of each block's spin action in so(d_r), lifted by (x) Id_m.
  bool quaternion_ok = false;
  if (cb.source && !cb.source->blocks.empty()) {
    quaternion_ok = true;
    std::vector<SparseVec<Rational>> flat;
    for (const auto& b : cb.basis) flat.push_back(flatten(b));
    std::optional<SpanSolver<Rational>> solver;
    if (!flat.empty()) solver.emplace(cb.N * cb.N, flat);
    for (std::size_t b = 0; b < cb.source->blocks.size(); ++b) {
      const auto& blk = cb.source->blocks[b];
      auto t = find_quaternion_triple(so_centralizer_of(blk.rep->spin_mats, blk.rep->dim));
      if (!t || !solver) {
        quaternion_ok = false;
        break;
      }
      QuaternionTriple lifted{lift_block(*cb.source, b, t->i), lift_block(*cb.source, b, t->j),
                              lift_block(*cb.source, b, t->k)};
      for (const RMatrix* x : {&lifted.i, &lifted.j, &lifted.k})
        if (!solver->solve(flatten(*x))) quaternion_ok = false;
      rep.quaternion.push_back(std::move(lifted));
    }
  }
  auto certified = [&](const CatalogEntry& c) {
    switch (c.type) {
      case LieType::u: return rep.complex_structure.has_value();
      case LieType::sp: case LieType::sp_sp: return quaternion_ok;
      default: return true;
    }
  };
  if (expected && rep.invariants_match_expected) {
    rep.certificates_ok = certified(*expected);
    if (rep.certificates_ok) rep.identified = expected->name();
  } else if (!rep.matches.empty()) {
    for (const auto& c : candidates)
      if (c.name() == rep.matches.front()) {
        rep.certificates_ok = certified(c) || !cb.source;
        rep.identified = c.name();
        break;
      }
  }
  return rep;
}

/// Invariants and identification for a bare basis of antisymmetric matrices.
inline LieReport lie_classify(const std::vector<RMatrix>& basis) {
  CentralizerBasis cb;
  cb.N = basis.empty() ? 0 : basis.front().rows();
  cb.basis = basis;
  return lie_classify(cb);
}

struct StructuralCertificate {
  bool pass = false;
  std::size_t candidate_count = 0;
  std::size_t candidate_rank = 0;
  std::size_t centralizer_dim = 0;
  bool all_commute = false;
  bool all_in_span = false;
  bool structures_ok = false;     // J^2 = -Id, or I, J, K quaternion relations
  std::vector<std::string> structures;
};

/// Complex or quaternionic structure elements of the Clifford algebra used for each residue.
inline std::vector<Blade> structure_blades(unsigned r, unsigned ambient) {
  switch (r % 8) {
    case 2: case 6: return {Blade::range(ambient, 1, r)};
    case 3: {
      return {Blade::from_indices(ambient, {r + 1, r + 2}), Blade::from_indices(ambient, {r + 1, r + 3}),
              Blade::from_indices(ambient, {r + 2, r + 3})};
    }
    case 5: {
      Blade w = Blade::range(ambient, 1, r);
      return {Blade::from_indices(ambient, {r + 1, r + 2}), Blade(ambient, w.mask | (1u << r)),
              Blade(ambient, w.mask | (1u << (r + 1)))};
    }
    default: return {};
  }
}

/// The centralizer equals Id (x) so(m), plus J (x) Sym^2 R^m for r = +-2, plus {I, J, K} (x) Sym^2 R^m
/// for r = +-3 (mod 8), with J, I, K explicit Clifford elements acting on the real form.
inline StructuralCertificate structural_certificate_t1(unsigned r, std::size_t m, const CentralizerBasis& cb) {
  StructuralCertificate cert;
  if (!cb.source || cb.source->blocks.size() != 1 || cb.backend != Backend::exact)
    throw std::invalid_argument("structural_certificate_t1: needs an exact single-block centralizer");
  const EmbeddedSpin& emb = *cb.source;
  if (emb.r != r || emb.blocks.front().m != m) throw std::invalid_argument("structural_certificate_t1: case mismatch");
  const RealRep& rep = *emb.blocks.front().rep;
  const std::size_t d = rep.dim;
  std::vector<RMatrix> structures;
  for (const Blade& b : structure_blades(r, rep.form->ambient)) {
    structures.push_back(rep.blade_action(b));
    cert.structures.push_back(b.name());
  }
  cert.structures_ok = true;
  for (const auto& s : structures) cert.structures_ok = cert.structures_ok && is_antisymmetric(s) && squares_to_minus_identity(s);
  if (structures.size() == 3) {
    cert.structures_ok = cert.structures_ok && structures[0] * structures[1] == structures[1].scaled(Rational(-1)) * structures[0] &&
                         structures[0] * structures[2] == structures[2].scaled(Rational(-1)) * structures[0] &&
                         structures[1] * structures[2] == structures[2].scaled(Rational(-1)) * structures[1];
  }
  std::vector<RMatrix> cand;
  for (const auto& a : models::antisymmetric_basis(m)) cand.push_back(kronecker(RMatrix::identity(d), a));
  for (const auto& q : structures)
    for (const auto& s : models::symmetric_basis(m)) cand.push_back(kronecker(q, s));
  cert.candidate_count = cand.size();
  cert.centralizer_dim = cb.basis.size();
  cert.all_commute = true;
  for (const auto& c : cand)
    for (const auto& g : emb.gens)
      if (!detail::commutes(c, g)) cert.all_commute = false;
  std::vector<SparseVec<Rational>> flat;
  for (const auto& c : cand) flat.push_back(flatten(c));
  cert.candidate_rank = sparse_rank(flat, cb.N * cb.N);
  cert.all_in_span = true;
  if (!cb.basis.empty()) {
    std::vector<SparseVec<Rational>> basis_flat;
    for (const auto& b : cb.basis) basis_flat.push_back(flatten(b));
    SpanSolver<Rational> solver(cb.N * cb.N, basis_flat);
    for (const auto& f : flat)
      if (!solver.solve(f)) cert.all_in_span = false;
  } else {
    cert.all_in_span = cand.empty();
  }
  cert.pass = cert.structures_ok && cert.all_commute && cert.all_in_span && cert.candidate_rank == cert.candidate_count &&
              cert.candidate_count == cert.centralizer_dim;
  return cert;
}

// ---------------------------------------------------------------------------
// Suites

struct CaseRow {
  std::string key;               // e.g. "r=5,m=2"
  std::string source;            // which table the expectation comes from
  std::string expected_type;
  std::size_t expected_dim = 0;
  std::size_t computed_dim = 0;
  std::size_t center = 0;
  std::size_t derived = 0;
  Signature killing;
  std::string identified;
  bool invariants_match = false;
  bool certificate = true;
  bool pass = false;
  double seconds = 0.0;
  std::string note;
};

inline std::string signature_string(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," + std::to_string(s.zero) + ")";
}

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline CaseRow run_case(const EmbeddedSpin& emb, const CatalogEntry& expected, const std::string& key,
                        const std::string& source, bool with_certificate) {
  auto t0 = std::chrono::steady_clock::now();
  CaseRow row;
  row.key = key;
  row.source = source;
  row.expected_type = expected.name();
  row.expected_dim = expected.dim();
  CentralizerBasis cb = so_centralizer(emb);
  LieReport rep = lie_classify(cb, expected);
  row.computed_dim = rep.inv.dim;
  row.center = rep.inv.center_dim;
  row.derived = rep.inv.derived_dim;
  row.killing = rep.inv.killing;
  row.identified = rep.identified;
  row.invariants_match = rep.invariants_match_expected;
  row.certificate = rep.certificates_ok;
  if (with_certificate && emb.shape.kind == ShapeKind::single) {
    StructuralCertificate sc = structural_certificate_t1(emb.r, emb.shape.m1, cb);
    row.certificate = row.certificate && sc.pass;
    row.note = "structural certificate: " + std::string(sc.pass ? "pass" : "fail") + " (" +
               std::to_string(sc.candidate_count) + " candidates)";
  }
  if (expected.degenerate) row.note += (row.note.empty() ? "" : "; ") + std::string("degenerate r = 1");
  row.pass = row.computed_dim == row.expected_dim && row.invariants_match && row.certificate &&
             row.identified == expected.name();
  row.seconds = seconds_since(t0);
  return row;
}

inline std::string residue_tag(unsigned r) {
  const unsigned res = r % 8;
  switch (res) {
    case 1: case 7: return "+-1";
    case 2: case 6: return "+-2";
    case 3: case 5: return "+-3";
    case 4: return "4";
    default: return "0";
  }
}

}  // namespace detail

/// Centralizer of spin(r) in so(d_r), r = 2..11, and in so(d_r) + so(d_r) for r = 4, 8.
inline std::vector<CaseRow> basic_centralizer_suite(unsigned r_max = 11) {
  std::vector<CaseRow> rows;
  for (unsigned r = 2; r <= r_max; ++r) {
    if (r % 4 == 0) continue;
    CatalogEntry e = expected_centralizer(r, Shape::single(1));
    rows.push_back(detail::run_case(build_embedding_t1(r, 1), e, "r=" + std::to_string(r),
                                    "centralizer table, residue " + detail::residue_tag(r), false));
  }
  for (unsigned r : {4u, 8u}) {
    if (r > r_max) continue;
    auto t0 = std::chrono::steady_clock::now();
    // Block-diagonal centralizer: each block separately, then the full two-block embedding.
    CaseRow row;
    row.key = "r=" + std::to_string(r) + ",blocks=+-";
    row.source = "centralizer table, residue " + detail::residue_tag(r);
    CatalogEntry e = expected_centralizer(r, Shape::pair(1, 1));
    row.expected_type = e.name();
    row.expected_dim = e.dim();
    std::size_t per_block = 0;
    for (FormLabel l : {FormLabel::plus, FormLabel::minus}) {
      RealRep rep = realize_rep(r, l);
      per_block += so_centralizer_of(rep.spin_mats, rep.dim).size();
    }
    CentralizerBasis cb = so_centralizer(build_embedding_t2(r, 1, 1));
    LieReport rep = lie_classify(cb, e);
    row.computed_dim = per_block;
    row.center = rep.inv.center_dim;
    row.derived = rep.inv.derived_dim;
    row.killing = rep.inv.killing;
    row.identified = rep.identified;
    row.invariants_match = rep.invariants_match_expected;
    row.certificate = rep.certificates_ok;
    row.note = "two-block embedding dim " + std::to_string(rep.inv.dim);
    row.pass = per_block == e.dim() && rep.inv.dim == e.dim() && row.invariants_match && row.certificate &&
               row.identified == e.name();
    row.seconds = detail::seconds_since(t0);
    rows.push_back(row);
  }
  return rows;
}

inline std::vector<std::pair<unsigned, std::size_t>> single_block_default_cases() {
  std::vector<std::pair<unsigned, std::size_t>> c;
  for (unsigned r : {2u, 3u, 5u, 6u, 7u})
    for (std::size_t m : {1u, 2u, 3u}) c.emplace_back(r, m);
  for (unsigned r : {9u, 10u, 11u})
    for (std::size_t m : {1u, 2u}) c.emplace_back(r, m);
  return c;
}

inline std::vector<CaseRow> single_block_suite(const std::vector<std::pair<unsigned, std::size_t>>& cases) {
  std::vector<CaseRow> rows;
  for (auto [r, m] : cases) {
    CatalogEntry e = expected_centralizer(r, Shape::single(m));
    rows.push_back(detail::run_case(build_embedding_t1(r, m), e, "r=" + std::to_string(r) + ",m=" + std::to_string(m),
                                    "single-block table, residue " + detail::residue_tag(r), r > 1));
  }
  return rows;
}

struct PairCase {
  unsigned r;
  std::size_t m1;
  std::size_t m2;
};

inline std::vector<PairCase> two_block_default_cases() {
  std::vector<PairCase> c;
  for (unsigned r : {4u, 8u})
    for (auto [a, b] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 2}}) c.push_back({r, a, b});
  return c;
}

inline std::vector<CaseRow> two_block_suite(const std::vector<PairCase>& cases) {
  std::vector<CaseRow> rows;
  for (const auto& c : cases) {
    CatalogEntry e = expected_centralizer(c.r, Shape::pair(c.m1, c.m2));
    rows.push_back(detail::run_case(build_embedding_t2(c.r, c.m1, c.m2), e,
                                    "r=" + std::to_string(c.r) + ",m1=" + std::to_string(c.m1) +
                                        ",m2=" + std::to_string(c.m2),
                                    "two-block table, residue " + detail::residue_tag(c.r), false));
  }
  return rows;
}

}  // namespace spincent
