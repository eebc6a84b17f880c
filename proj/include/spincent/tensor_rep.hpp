#pragma once

// Induced representations of spin(r), fixed-point and isotypic multiplicities,
// the Clifford pairing Phi and restriction to spin(r-1).

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincent/blade.hpp"
#include "spincent/linalg.hpp"
#include "spincent/matrix.hpp"
#include "spincent/real_form.hpp"

namespace spincent {

using RMatrix = SparseMatrix<Rational>;

/// Generators are the images of e_i e_j for spin_pairs(r), in that order.
struct LinearRep {
  unsigned r = 0;
  std::size_t dim = 0;
  std::vector<RMatrix> gens;
};

inline LinearRep as_linear(const RealRep& rep) { return {rep.r, rep.dim, rep.spin_mats}; }

inline LinearRep trivial_rep(unsigned r, std::size_t dim = 1) {
  LinearRep t{r, dim, {}};
  for (std::size_t p = 0; p < spin_pairs(r).size(); ++p) t.gens.emplace_back(dim, dim);
  return t;
}

/// Indices of the Lie-generating subset {e_i e_{i+1}}.
inline std::vector<std::size_t> lie_generating_indices(unsigned r) {
  std::vector<std::size_t> out;
  for (unsigned i = 1; i < r; ++i) out.push_back(pair_index(r, i, i + 1));
  return out;
}

inline LinearRep tensor_with_trivial(const LinearRep& rep, std::size_t m) {
  if (m < 1) throw std::invalid_argument("tensor_with_trivial: m must be positive");
  LinearRep out{rep.r, rep.dim * m, {}};
  const RMatrix id = RMatrix::identity(m);
  for (const auto& g : rep.gens) out.gens.push_back(kronecker(g, id));
  return out;
}

inline LinearRep tensor_product(const LinearRep& a, const LinearRep& b) {
  if (a.r != b.r || a.gens.size() != b.gens.size()) throw std::invalid_argument("tensor_product: mismatched spin(r)");
  LinearRep out{a.r, a.dim * b.dim, {}};
  const RMatrix ia = RMatrix::identity(a.dim);
  const RMatrix ib = RMatrix::identity(b.dim);
  for (std::size_t p = 0; p < a.gens.size(); ++p) out.gens.push_back(kronecker(a.gens[p], ib) + kronecker(ia, b.gens[p]));
  return out;
}

inline LinearRep direct_sum(const LinearRep& a, const LinearRep& b) {
  if (a.r != b.r || a.gens.size() != b.gens.size()) throw std::invalid_argument("direct_sum: mismatched spin(r)");
  LinearRep out{a.r, a.dim + b.dim, {}};
  for (std::size_t p = 0; p < a.gens.size(); ++p) out.gens.push_back(block_diagonal<Rational>({a.gens[p], b.gens[p]}));
  return out;
}

inline LinearRep dual(const LinearRep& a) {
  LinearRep out{a.r, a.dim, {}};
  for (const auto& g : a.gens) out.gens.push_back(g.transpose().scaled(Rational(-1)));
  return out;
}

/// Restriction to spin(r') spanned by e_i e_j with j <= r'.
inline LinearRep restrict_rep(const LinearRep& a, unsigned r_sub) {
  if (r_sub < 1 || r_sub > a.r) throw std::invalid_argument("restrict_rep: need 1 <= r' <= r");
  LinearRep out{r_sub, a.dim, {}};
  for (auto [i, j] : spin_pairs(r_sub)) out.gens.push_back(a.gens[pair_index(a.r, i, j)]);
  return out;
}

namespace detail {

inline void require_orthogonal(const LinearRep& rep, const char* who) {
  for (const auto& g : rep.gens)
    if (!is_antisymmetric(g)) throw std::invalid_argument(std::string(who) + ": generators must be antisymmetric");
}

/// Position of the pair a < b among all pairs of {0..d-1}.
inline std::size_t wedge_index(std::size_t d, std::size_t a, std::size_t b) {
  return a * d - a * (a + 1) / 2 + (b - a - 1);
}

}  // namespace detail

/// Derivation action on the basis e_a ^ e_b (a < b).
inline LinearRep exterior_square(const LinearRep& rep) {
  detail::require_orthogonal(rep, "exterior_square");
  const std::size_t d = rep.dim;
  LinearRep out{rep.r, d * (d - 1) / 2, {}};
  for (const auto& g : rep.gens) {
    const RMatrix gt = g.transpose();  // row a of gt lists the column a of g
    std::vector<SparseVec<Rational>> cols(out.dim);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) {
        SparseVec<Rational> col;
        auto add = [&](std::size_t x, std::size_t y, const Rational& c) {
          if (x == y) return;
          if (x < y) col.emplace_back(detail::wedge_index(d, x, y), c);
          else col.emplace_back(detail::wedge_index(d, y, x), Rational(-c));
        };
        for (const auto& [c, v] : gt.row(a)) add(c, b, v);
        for (const auto& [c, v] : gt.row(b)) add(a, c, v);
        cols[detail::wedge_index(d, a, b)] = canonical_sparse(std::move(col));
      }
    RMatrix m(out.dim, out.dim);
    std::vector<SparseVec<Rational>> rows(out.dim);
    for (std::size_t j = 0; j < out.dim; ++j)
      for (const auto& [i, v] : cols[j]) rows[i].emplace_back(j, v);
    for (std::size_t i = 0; i < out.dim; ++i) m.set_row(i, std::move(rows[i]));
    out.gens.push_back(std::move(m));
  }
  return out;
}

/// Derivation action on the trace-free symmetric square; basis s_ab (a < b) followed by
/// D_a = s_aa - s_{d-1,d-1} for a < d-1.
inline LinearRep sym0_square(const LinearRep& rep) {
  detail::require_orthogonal(rep, "sym0_square");
  const std::size_t d = rep.dim;
  const std::size_t off = d * (d - 1) / 2;
  LinearRep out{rep.r, off + (d == 0 ? 0 : d - 1), {}};
  for (const auto& g : rep.gens) {
    const RMatrix gt = g.transpose();
    // Symmetric-square coordinates: off-diagonal pairs by wedge_index, diagonal a at off + a.
    auto image = [&](std::size_t a, std::size_t b) {
      SparseVec<Rational> col;
      auto add = [&](std::size_t x, std::size_t y, const Rational& c) {
        if (x == y) col.emplace_back(off + x, c);
        else col.emplace_back(detail::wedge_index(d, std::min(x, y), std::max(x, y)), c);
      };
      for (const auto& [c, v] : gt.row(a)) add(c, b, v);
      for (const auto& [c, v] : gt.row(b)) add(a, c, v);
      return canonical_sparse(std::move(col));
    };
    // Re-express a trace-free symmetric tensor in the D_a basis.
    auto to_sym0 = [&](const SparseVec<Rational>& v) {
      SparseVec<Rational> out_v;
      Rational trace(0);
      for (const auto& [i, c] : v) {
        if (i < off) {
          out_v.emplace_back(i, c);
        } else {
          trace += c;
          if (i - off + 1 < d) out_v.emplace_back(i, c);
        }
      }
      if (!is_zero(trace)) throw std::logic_error("sym0_square: image left the trace-free subspace");
      return out_v;
    };
    std::vector<SparseVec<Rational>> cols(out.dim);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) cols[detail::wedge_index(d, a, b)] = to_sym0(image(a, b));
    for (std::size_t a = 0; a + 1 < d; ++a) {
      SparseVec<Rational> v = image(a, a);
      for (auto& e : image(d - 1, d - 1)) v.emplace_back(e.first, Rational(-e.second));
      cols[off + a] = to_sym0(canonical_sparse(std::move(v)));
    }
    RMatrix m(out.dim, out.dim);
    std::vector<SparseVec<Rational>> rows(out.dim);
    for (std::size_t j = 0; j < out.dim; ++j)
      for (const auto& [i, v] : cols[j]) rows[i].emplace_back(j, v);
    for (std::size_t i = 0; i < out.dim; ++i) m.set_row(i, std::move(rows[i]));
    out.gens.push_back(std::move(m));
  }
  return out;
}

/// k-subsets of {0..r-1} as bit masks, in lexicographic order of their sorted index lists.
inline std::vector<std::uint32_t> k_subsets(unsigned r, unsigned k) {
  std::vector<std::uint32_t> out;
  std::vector<unsigned> idx(k);
  for (unsigned t = 0; t < k; ++t) idx[t] = t;
  if (k > r) return out;
  while (true) {
    std::uint32_t m = 0;
    for (unsigned t : idx) m |= 1u << t;
    out.push_back(m);
    int p = static_cast<int>(k) - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == r - k + static_cast<unsigned>(p)) --p;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
    for (auto t = static_cast<std::size_t>(p) + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

/// spin(r) on Lambda^k R^r. On vectors e_i e_j acts by ad: e_i -> 2 e_j, e_j -> -2 e_i.
inline LinearRep lambda_k_rep(unsigned r, unsigned k) {
  if (k > r) throw std::invalid_argument("lambda_k_rep: k must be at most r");
  const std::vector<std::uint32_t> basis = k_subsets(r, k);
  std::map<std::uint32_t, std::size_t> pos;
  for (std::size_t t = 0; t < basis.size(); ++t) pos[basis[t]] = t;
  LinearRep out{r, basis.size(), {}};
  for (auto [i, j] : spin_pairs(r)) {
    const unsigned a = i - 1;
    const unsigned b = j - 1;
    std::vector<SparseVec<Rational>> rows(basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) {
      const std::uint32_t m = basis[t];
      auto between = [&](unsigned x, unsigned y) {
        std::uint32_t lo = std::min(x, y);
        std::uint32_t hi = std::max(x, y);
        std::uint32_t mask = ((1u << hi) - 1u) & ~((1u << (lo + 1)) - 1u);
        return std::popcount(m & mask);
      };
      const bool has_a = (m >> a) & 1u;
      const bool has_b = (m >> b) & 1u;
      if (has_a && !has_b) {
        std::uint32_t img = (m & ~(1u << a)) | (1u << b);
        Rational c = (between(a, b) % 2 == 0) ? 2 : -2;
        rows[pos[img]].emplace_back(t, c);
      } else if (has_b && !has_a) {
        std::uint32_t img = (m & ~(1u << b)) | (1u << a);
        Rational c = (between(a, b) % 2 == 0) ? -2 : 2;
        rows[pos[img]].emplace_back(t, c);
      }
    }
    RMatrix g(basis.size(), basis.size());
    for (std::size_t s = 0; s < basis.size(); ++s) g.set_row(s, canonical_sparse(std::move(rows[s])));
    out.gens.push_back(std::move(g));
  }
  return out;
}

/// [rho(x), rho(y)] = rho([x, y]) for all pairs of generators, with brackets taken in Cl_r.
inline bool verify_representation(const LinearRep& rep) {
  const auto pairs = spin_pairs(rep.r);
  if (rep.gens.size() != pairs.size()) return false;
  for (const auto& g : rep.gens)
    if (g.rows() != rep.dim || g.cols() != rep.dim) return false;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      CliffordElement x(Blade::from_indices(rep.r, {pairs[p].first, pairs[p].second}));
      CliffordElement y(Blade::from_indices(rep.r, {pairs[q].first, pairs[q].second}));
      CliffordElement br = commutator(x, y);
      RMatrix expected(rep.dim, rep.dim);
      for (const auto& [mask, c] : br.terms()) {
        auto ind = Blade(rep.r, mask).indices();
        if (ind.size() != 2) return false;
        expected = expected + rep.gens[pair_index(rep.r, ind[0], ind[1])].scaled(c);
      }
      if (commutator(rep.gens[p], rep.gens[q]) != expected) return false;
    }
  return true;
}

/// Dimension of the common kernel of all generators, solved on the Lie-generating subset and
/// verified against every generator.
inline std::size_t trivial_multiplicity(const LinearRep& rep) {
  if (rep.r <= 1 || rep.gens.empty()) return rep.dim;
  Echelon<Rational> ech(rep.dim);
  for (std::size_t p : lie_generating_indices(rep.r))
    for (std::size_t i = 0; i < rep.dim; ++i) {
      const auto& row = rep.gens[p].row(i);
      if (!row.empty()) ech.insert(row);
    }
  auto kernel = ech.nullspace();
  for (const auto& g : rep.gens)
    for (const auto& v : kernel)
      if (!g.apply(v).empty()) throw std::logic_error("trivial_multiplicity: Lie-generating subset disagrees with full set");
  return kernel.size();
}

/// Basis of Hom_{spin(r)}(A, B) as dim(B) x dim(A) matrices flattened row-major, i.e. the
/// fixed vectors of A* (x) B, from B_g X - X A_g = 0 on the Lie-generating subset.
inline std::vector<SparseVec<Rational>> hom_basis(const LinearRep& a, const LinearRep& b) {
  if (a.r != b.r) throw std::invalid_argument("hom_basis: mismatched spin(r)");
  const std::size_t da = a.dim;
  const std::size_t db = b.dim;
  Echelon<Rational> ech(da * db);
  if (a.r > 1) {
    for (std::size_t p : lie_generating_indices(a.r)) {
      const RMatrix at = a.gens[p].transpose();
      const RMatrix& bg = b.gens[p];
      for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < da; ++j) {
          SparseVec<Rational> row;
          for (const auto& [l, v] : bg.row(i)) row.emplace_back(l * da + j, v);
          for (const auto& [l, v] : at.row(j)) row.emplace_back(i * da + l, Rational(-v));
          row = canonical_sparse(std::move(row));
          if (!row.empty()) ech.insert(std::move(row));
        }
    }
  }
  auto basis = ech.nullspace();
  for (std::size_t p = 0; p < a.gens.size(); ++p)
    for (const auto& v : basis) {
      RMatrix x = unflatten(v, db, da);
      if (b.gens[p] * x != x * a.gens[p]) throw std::logic_error("hom_basis: Lie-generating subset disagrees with full set");
    }
  return basis;
}

inline std::size_t hom_dimension(const LinearRep& a, const LinearRep& b) { return hom_basis(a, b).size(); }

enum class EndType { real, complex, quaternionic, reducible };

inline std::string to_string(EndType t) {
  switch (t) {
    case EndType::real: return "R";
    case EndType::complex: return "C";
    case EndType::quaternionic: return "H";
    default: return "reducible";
  }
}

/// Type of the commutant algebra End_{spin(r)}(A): a division algebra R, C, H, or not.
inline EndType endomorphism_type(const LinearRep& a) {
  auto basis = hom_basis(a, a);
  const std::size_t d = a.dim;
  std::vector<RMatrix> mats;
  for (const auto& v : basis) mats.push_back(unflatten(v, d, d));
  const RMatrix id = RMatrix::identity(d);
  // Trace-free part: subtract (tr X / d) Id.
  std::vector<RMatrix> pure;
  for (const auto& m : mats) {
    RMatrix p = m - id.scaled(m.trace() / Rational(static_cast<long>(d)));
    if (!p.is_zero_matrix()) pure.push_back(p);
  }
  auto scalar_of = [&](const RMatrix& m, Rational& s) {
    s = m.at(0, 0);
    return m == id.scaled(s);
  };
  std::vector<SparseVec<Rational>> flat;
  for (const auto& p : pure) flat.push_back(flatten(p));
  // Keep an independent spanning set of the trace-free part.
  Echelon<Rational> ech(d * d);
  std::vector<RMatrix> indep;
  for (std::size_t t = 0; t < pure.size(); ++t)
    if (ech.insert(flat[t])) indep.push_back(pure[t]);
  if (basis.size() == 1) return EndType::real;
  if (basis.size() != 2 && basis.size() != 4) return EndType::reducible;
  if (indep.size() + 1 != basis.size()) return EndType::reducible;
  // A division algebra iff every trace-free x has x^2 = -q(x) Id with q positive definite.
  const std::size_t n = indep.size();
  Matrix<Rational> gram(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s; t < n; ++t) {
      RMatrix sym = indep[s] * indep[t] + indep[t] * indep[s];
      Rational c;
      if (!scalar_of(sym, c)) return EndType::reducible;
      gram(s, t) = -c / 2;
      gram(t, s) = gram(s, t);
    }
  Signature sig = congruence_signature(gram);
  if (sig.positive != n) return EndType::reducible;
  return n == 1 ? EndType::complex : EndType::quaternionic;
}

inline std::size_t end_dimension(EndType t) {
  switch (t) {
    case EndType::real: return 1;
    case EndType::complex: return 2;
    case EndType::quaternionic: return 4;
    default: return 0;
  }
}

/// Multiplicity of an irreducible A inside B: dim Hom(A, B) / dim End(A), exact or an error.
inline std::size_t isotypic_multiplicity_of(const LinearRep& irreducible, const LinearRep& rep) {
  EndType t = endomorphism_type(irreducible);
  if (t == EndType::reducible) throw std::domain_error("isotypic_multiplicity: target representation is reducible");
  const std::size_t hom = hom_dimension(irreducible, rep);
  const std::size_t end = end_dimension(t);
  if (hom % end != 0) throw std::domain_error("isotypic_multiplicity: Hom dimension not divisible by End dimension");
  return hom / end;
}

/// Multiplicity of Lambda^k R^r in rep. Lambda^k and Lambda^{r-k} are equivalent, so callers
/// report 0 <= k <= floor(r/2).
inline std::size_t isotypic_multiplicity(const LinearRep& rep, unsigned r, unsigned k) {
  if (rep.r != r) throw std::invalid_argument("isotypic_multiplicity: rep is not a spin(r) representation");
  return isotypic_multiplicity_of(lambda_k_rep(r, k), rep);
}

inline std::size_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::size_t c = 1;
  for (unsigned t = 1; t <= k; ++t) c = c * (n - k + t) / t;
  return c;
}

struct MultiplicityTable {
  unsigned r = 0;
  std::size_t ambient_dim = 0;
  std::map<std::string, std::size_t> entries;          // label -> multiplicity
  std::map<std::string, std::size_t> component_dims;   // label -> dimension of the irreducible
  std::size_t accounted() const {
    std::size_t s = 0;
    for (const auto& [l, m] : entries) s += m * component_dims.at(l);
    return s;
  }
  bool complete() const { return accounted() == ambient_dim; }
};

inline std::string lambda_label(unsigned k) { return "Lambda^" + std::to_string(k); }

/// Multiplicities of Lambda^k (0 <= k <= floor(r/2)) in rep.
inline MultiplicityTable lambda_multiplicities(const LinearRep& rep) {
  MultiplicityTable t;
  t.r = rep.r;
  t.ambient_dim = rep.dim;
  for (unsigned k = 0; k <= rep.r / 2; ++k) {
    t.entries[lambda_label(k)] = isotypic_multiplicity(rep, rep.r, k);
    t.component_dims[lambda_label(k)] = binomial(rep.r, k);
  }
  return t;
}

// ---------------------------------------------------------------------------
// The pairing Phi on real forms built from v + gamma(v)

/// <e_J v, w> in the u_eps frame (which carries the 2^-k normalization). Throws when not real.
inline Rational phi_pairing(const RealForm& form, const Blade& j, const FrameVec& v, const FrameVec& w) {
  if (j.n != form.ambient) throw std::invalid_argument("phi_pairing: blade must live in Cl_ambient");
  Gaussian h = frame_pairing(frame_apply(*form.frame, j, v), w);
  if (!is_real(h)) throw std::domain_error("phi_pairing: pairing is not real for " + j.name());
  return h.re;
}

/// Real coefficient of Phi along e_J: <e_J v, w> when real, <-i e_J v, w> when purely imaginary.
inline Rational phi_component(const RealForm& form, const Blade& j, const FrameVec& v, const FrameVec& w) {
  Gaussian h = frame_pairing(frame_apply(*form.frame, j, v), w);
  if (is_real(h)) return h.re;
  if (is_zero(h.re)) return h.im;
  throw std::domain_error("phi_component: pairing is neither real nor imaginary for " + j.name());
}

/// Degrees carried by Phi: even degrees for r = +-1 (mod 8), all degrees for r = 2 (mod 8).
inline std::vector<unsigned> phi_degrees(unsigned r) {
  const unsigned res = r % 8;
  std::vector<unsigned> out;
  if (res == 1 || res == 7) {
    for (unsigned s = 0; s <= r; s += 2) out.push_back(s);
  } else if (res == 2) {
    for (unsigned s = 0; s <= r; ++s) out.push_back(s);
  } else {
    throw std::invalid_argument("phi: defined for r = 1, 2, 7 (mod 8)");
  }
  return out;
}

struct PhiSurjectivity {
  bool all_hit = false;
  std::vector<unsigned> degrees;
  std::vector<bool> hit;
  std::vector<unsigned> non_real_degrees;   // degrees where <e_J v, w> itself is not real
};

/// For each degree, finds a basis pair with a nonzero component on e_1...e_s.
inline PhiSurjectivity phi_surjectivity_report(unsigned r) {
  if (r > 10) throw std::invalid_argument("phi_surjectivity_check: r must be at most 10");
  const RealForm form = build_real_form(r);
  PhiSurjectivity rep;
  rep.degrees = phi_degrees(r);
  for (unsigned s : rep.degrees) {
    Blade j = Blade::range(form.ambient, 1, s);
    bool found = false;
    bool non_real = false;
    for (std::size_t a = 0; a < form.dim() && !found; ++a)
      for (std::size_t b = 0; b < form.dim() && !found; ++b) {
        Gaussian h = frame_pairing(frame_apply(*form.frame, j, form.basis[a]), form.basis[b]);
        if (!is_real(h)) non_real = true;
        if (!is_zero(phi_component(form, j, form.basis[a], form.basis[b]))) found = true;
      }
    rep.hit.push_back(found);
    if (non_real) rep.non_real_degrees.push_back(s);
  }
  rep.all_hit = std::all_of(rep.hit.begin(), rep.hit.end(), [](bool x) { return x; });
  return rep;
}

inline bool phi_surjectivity_check(unsigned r) { return phi_surjectivity_report(r).all_hit; }

struct PhiParityDegree {
  unsigned degree = 0;
  bool symmetric = true;        // component form is symmetric: Phi vanishes on Lambda^2
  bool antisymmetric = true;    // component form is antisymmetric: Phi vanishes on Sym^2
  std::size_t samples = 0;
};

/// Symmetry type of (v, w) -> Phi_J(v, w) per degree, over all basis pairs and blades or over
/// a seeded random sample of (J, v, w) when samples_per_degree > 0.
inline std::vector<PhiParityDegree> phi_parity_observed(unsigned r, std::size_t samples_per_degree = 0,
                                                        std::uint64_t seed = 0) {
  const RealForm form = build_real_form(r);
  std::vector<PhiParityDegree> out;
  std::mt19937_64 rng(seed);
  for (unsigned s : phi_degrees(r)) {
    PhiParityDegree d;
    d.degree = s;
    std::vector<std::uint32_t> blades = k_subsets(r, s);
    auto check = [&](std::uint32_t mask, std::size_t a, std::size_t b) {
      Blade j(form.ambient, mask);
      Rational x = phi_component(form, j, form.basis[a], form.basis[b]);
      Rational y = phi_component(form, j, form.basis[b], form.basis[a]);
      if (x != y) d.symmetric = false;
      if (x != -y) d.antisymmetric = false;
      ++d.samples;
    };
    if (samples_per_degree == 0) {
      for (std::uint32_t mask : blades)
        for (std::size_t a = 0; a < form.dim(); ++a)
          for (std::size_t b = a; b < form.dim(); ++b) check(mask, a, b);
    } else {
      std::uniform_int_distribution<std::size_t> pick_blade(0, blades.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_vec(0, form.dim() - 1);
      for (std::size_t t = 0; t < samples_per_degree; ++t) check(blades[pick_blade(rng)], pick_vec(rng), pick_vec(rng));
    }
    out.push_back(d);
  }
  return out;
}

/// Vanishing pattern asserted in the proofs: Lambda^2 in degrees 0 (mod 4) and Sym^2 in degrees
/// 2 (mod 4); for r = 2 (mod 8) additionally Lambda^2 in degrees 3 and Sym^2 in degrees 1 (mod 4).
inline bool phi_claim_lambda2_vanishes(unsigned r, unsigned s) {
  return s % 4 == 0 || (r % 8 == 2 && s % 4 == 3);
}
inline bool phi_claim_sym2_vanishes(unsigned r, unsigned s) { return s % 4 == 2 || (r % 8 == 2 && s % 4 == 1); }

/// Pattern forced by the adjoint of e_J together with the parity of e_J on the real form:
/// Lambda^2 in degrees 0, 1 (mod 4) and Sym^2 in degrees 2, 3 (mod 4).
inline bool phi_corrected_lambda2_vanishes(unsigned s) { return s % 4 == 0 || s % 4 == 1; }
inline bool phi_corrected_sym2_vanishes(unsigned s) { return s % 4 == 2 || s % 4 == 3; }

// ---------------------------------------------------------------------------
// Restriction to spin(r-1)

struct BranchingEntry {
  std::string target;           // e.g. "Delta_4+"
  std::size_t expected = 0;
  std::size_t computed = 0;
  std::size_t hom_dim = 0;
  std::size_t end_dim = 0;
};

struct BranchingReport {
  unsigned r = 0;
  std::string source;           // e.g. "Delta_5"
  std::vector<BranchingEntry> entries;
  bool dims_add_up = false;
  bool pass = false;
};

inline std::string delta_name(unsigned r, FormLabel l) {
  std::string s = "Delta_" + std::to_string(r);
  if (l == FormLabel::plus) s += "+";
  if (l == FormLabel::minus) s += "-";
  return s;
}

inline std::vector<FormLabel> labels_for(unsigned r) {
  if (r % 4 == 0) return {FormLabel::plus, FormLabel::minus};
  return {FormLabel::none};
}

/// Rows of the restriction table by r mod 8: multiplicity of each irreducible of spin(r-1).
inline std::map<FormLabel, std::size_t> table2_expected(unsigned r) {
  switch (r % 8) {
    case 1: case 5: return {{FormLabel::plus, 1}, {FormLabel::minus, 1}};
    case 2: case 3: return {{FormLabel::none, 2}};
    default: return {{FormLabel::none, 1}};
  }
}

inline std::vector<BranchingReport> branching_check(unsigned r) {
  if (r < 2 || r > 9) throw std::invalid_argument("branching_check: r must be in 2..9");
  std::vector<BranchingReport> out;
  const auto expected = table2_expected(r);
  for (FormLabel src : labels_for(r)) {
    BranchingReport rep;
    rep.r = r;
    rep.source = delta_name(r, src);
    LinearRep restricted = restrict_rep(as_linear(realize_rep(r, src)), r - 1);
    std::size_t covered = 0;
    bool ok = true;
    for (FormLabel tgt : labels_for(r - 1)) {
      LinearRep target = as_linear(realize_rep(r - 1, tgt));
      BranchingEntry e;
      e.target = delta_name(r - 1, tgt);
      e.expected = expected.at(tgt);
      EndType t = endomorphism_type(target);
      e.end_dim = end_dimension(t);
      e.hom_dim = hom_dimension(target, restricted);
      if (e.end_dim == 0 || e.hom_dim % e.end_dim != 0) throw std::domain_error("branching_check: inexact multiplicity");
      e.computed = e.hom_dim / e.end_dim;
      covered += e.computed * target.dim;
      ok = ok && e.computed == e.expected;
      rep.entries.push_back(e);
    }
    rep.dims_add_up = covered == restricted.dim;
    rep.pass = ok && rep.dims_add_up;
    out.push_back(rep);
  }
  return out;
}

}  // namespace spincent
