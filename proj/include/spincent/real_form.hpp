#pragma once

// Antilinear structures on Delta_n, the real forms of the spin modules and their
// realization as rational matrix representations of spin(r) and Cl^0 blades.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincent/blade.hpp"
#include "spincent/linalg.hpp"
#include "spincent/matrix.hpp"
#include "spincent/spinor.hpp"

namespace spincent {

// ---------------------------------------------------------------------------
// Table of dimensions

/// Dimension of an irreducible real Cl^0_r-module.
inline std::size_t d_dim(unsigned r) {
  if (r < 1) throw std::invalid_argument("d_dim: r must be positive");
  const unsigned h = r / 2;
  switch (r % 8) {
    case 1: return std::size_t{1} << h;
    case 2: return std::size_t{1} << h;
    case 3: return std::size_t{1} << (h + 1);
    case 4: return std::size_t{1} << h;
    case 5: return std::size_t{1} << (h + 1);
    case 6: return std::size_t{1} << h;
    case 7: return std::size_t{1} << h;
    default: return std::size_t{1} << (h - 1);
  }
}

/// Number of inequivalent irreducible real Cl^0_r-modules.
inline unsigned v_count(unsigned r) {
  if (r < 1) throw std::invalid_argument("v_count: r must be positive");
  return r % 4 == 0 ? 2 : 1;
}

// ---------------------------------------------------------------------------
// Antilinear maps v -> M conj(v)

inline CVector conj(const CVector& v) {
  CVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(conj(x));
  return out;
}

inline CMatrix conj(const CMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = conj(m(i, j));
  return out;
}

/// Standard Hermitian product, linear in the first slot.
inline Gaussian hermitian(const CVector& v, const CVector& w) {
  if (v.size() != w.size()) throw std::invalid_argument("hermitian: length mismatch");
  Gaussian s;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!is_zero(v[j]) && !is_zero(w[j])) s += v[j] * conj(w[j]);
  return s;
}

struct AntilinearMap {
  CMatrix mat;

  CVector apply(const CVector& v) const { return mat.apply(conj(v)); }

  /// (A o B)(v) = A.mat conj(B.mat) v; the result is linear.
  CMatrix compose_linear(const AntilinearMap& b) const { return mat * conj(b.mat); }

  CMatrix square() const { return compose_linear(*this); }

  /// +1 if the square is Id, -1 if it is -Id, 0 otherwise.
  int square_sign() const {
    CMatrix s = square();
    const CMatrix id = CMatrix::identity(mat.rows());
    if (s == id) return 1;
    if (s == id * Gaussian(-1)) return -1;
    return 0;
  }
};

namespace detail {

/// alpha has matrix [[0, -1], [1, 0]]; beta is plain conjugation.
inline CMatrix alpha_matrix() {
  CMatrix a(2, 2);
  a(0, 1) = Gaussian(-1);
  a(1, 0) = Gaussian(1);
  return a;
}

}  // namespace detail

/// gamma_n = alpha (x) beta (x) alpha (x) ... with floor(n/2) factors. Each residue line of the
/// construction reduces to this alternating pattern; n = 1 gives plain conjugation on C.
inline AntilinearMap build_gamma(unsigned n) {
  if (n < 1) throw std::invalid_argument("build_gamma: n must be positive");
  CMatrix m = CMatrix::identity(1);
  for (unsigned p = 0; p < n / 2; ++p) m = kronecker(m, p % 2 == 0 ? detail::alpha_matrix() : CMatrix::identity(2));
  return {m};
}

/// Predicted sign of gamma_n^2 from the residue of n mod 8.
inline int gamma_square_sign_expected(unsigned n) {
  switch (n % 8) {
    case 0: case 1: case 6: case 7: return 1;
    default: return -1;
  }
}

/// <g v, w> = sigma conj<v, g w> on all basis pairs, where sigma is the sign of g^2.
inline bool hermitian_symmetry_holds(const AntilinearMap& g, int sigma) {
  const std::size_t d = g.mat.rows();
  for (std::size_t a = 0; a < d; ++a) {
    CVector v(d);
    v[a] = Gaussian(1);
    for (std::size_t b = 0; b < d; ++b) {
      CVector w(d);
      w[b] = Gaussian(1);
      Gaussian lhs = hermitian(g.apply(v), w);
      Gaussian rhs = conj(hermitian(v, g.apply(w)));
      if (sigma < 0) rhs = -rhs;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

/// <g v, g w> = conj<v, w> on all basis pairs (and on i-multiples, which antilinearity then covers).
inline bool hermitian_isometry_holds(const AntilinearMap& g) {
  const std::size_t d = g.mat.rows();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      CVector v(d);
      CVector w(d);
      v[a] = Gaussian(1);
      w[b] = Gaussian::i();
      if (hermitian(g.apply(v), g.apply(w)) != conj(hermitian(v, w))) return false;
    }
  return true;
}

/// Checks, for an antilinear map on Delta_n:
///  (i) <g v, g w> = conj<v, w> and <g v, w> = sigma conj<v, g w> with sigma the sign of g^2;
///  (ii) g commutes with kappa(e_i e_j) for all i < j;
///  (iii) g kappa(e_a) = (-1)^{k-1} kappa(e_a) g for every generator (compatibility with Cl_n).
inline bool gamma_equivariance_check(unsigned n, const AntilinearMap& g) {
  const SpinorRep rep = build_kappa(n);
  if (g.mat.rows() != rep.dim() || !g.mat.square()) return false;
  const int sigma = g.square_sign();
  if (sigma == 0) return false;
  if (!hermitian_isometry_holds(g) || !hermitian_symmetry_holds(g, sigma)) return false;
  for (auto [i, j] : spin_pairs(n)) {
    CMatrix k = rep.gens[i - 1] * rep.gens[j - 1];
    if (g.mat * conj(k) != k * g.mat) return false;
  }
  const int graded = (rep.k % 2 == 1) ? 1 : -1;
  for (const auto& kg : rep.gens) {
    CMatrix lhs = g.mat * conj(kg);
    CMatrix rhs = kg * g.mat;
    if (graded < 0) rhs = -rhs;
    if (lhs != rhs) return false;
  }
  return true;
}

inline bool gamma_equivariance_check(unsigned n) {
  if (n > 11) throw std::invalid_argument("gamma_equivariance_check: n must be at most 11");
  return gamma_equivariance_check(n, build_gamma(n));
}

// ---------------------------------------------------------------------------
// Vectors in the u_eps frame

/// Coordinates with respect to u_eps; the frame pairing equals the standard one divided by 2^k.
using FrameVec = SparseVec<Gaussian>;

inline Gaussian frame_pairing(const FrameVec& x, const FrameVec& y) {
  Gaussian s;
  std::size_t p = 0;
  std::size_t q = 0;
  while (p < x.size() && q < y.size()) {
    if (x[p].first < y[q].first) {
      ++p;
    } else if (y[q].first < x[p].first) {
      ++q;
    } else {
      s += x[p].second * conj(y[q].second);
      ++p;
      ++q;
    }
  }
  return s;
}

inline FrameVec frame_apply(const SpinorFrame& frame, const Blade& b, const FrameVec& v) {
  FrameVec out;
  out.reserve(v.size());
  for (const auto& [idx, c] : v) {
    auto [t, p] = frame.act(b, static_cast<std::uint32_t>(idx));
    out.emplace_back(t, c * i_power(static_cast<int>(p)));
  }
  return canonical_sparse(std::move(out));
}

/// gamma_n(u_eps) = phi_eps u_{-eps}, read off factorwise: alpha u_{+} = -i u_{-}, alpha u_{-} = i u_{+},
/// beta u_{+-} = u_{-+}.
inline Gaussian frame_gamma_phase(unsigned k, std::uint32_t idx) {
  Gaussian phase(1);
  for (unsigned p = 1; p <= k; p += 2) {
    bool plus = ((idx >> (k - p)) & 1u) == 0;
    phase = phase * (plus ? -Gaussian::i() : Gaussian::i());
  }
  return phase;
}

inline FrameVec frame_gamma(unsigned k, const FrameVec& v) {
  const std::uint32_t flip = (k == 0) ? 0u : ((1u << k) - 1u);
  FrameVec out;
  out.reserve(v.size());
  for (const auto& [idx, c] : v) {
    auto i = static_cast<std::uint32_t>(idx);
    out.emplace_back(i ^ flip, conj(c) * frame_gamma_phase(k, i));
  }
  return canonical_sparse(std::move(out));
}

/// Standard coordinates of a frame vector.
inline CVector frame_to_standard(unsigned k, const FrameVec& v) {
  CVector out(std::size_t{1} << k);
  for (const auto& [idx, c] : v) {
    CVector u = spinor_basis_vector(sign_vector(k, static_cast<std::uint32_t>(idx)));
    for (std::size_t t = 0; t < u.size(); ++t) out[t] += c * u[t];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Real forms

enum class FormLabel { none, plus, minus };
enum class FormKind { real, quaternionic_ambient };

inline std::string to_string(FormLabel l) {
  switch (l) {
    case FormLabel::plus: return "plus";
    case FormLabel::minus: return "minus";
    default: return "none";
  }
}

inline std::string to_string(FormKind k) { return k == FormKind::real ? "real" : "quaternionic-ambient"; }

struct RealForm {
  unsigned r = 0;
  unsigned ambient = 0;
  FormKind kind = FormKind::real;
  FormLabel label = FormLabel::none;
  std::vector<FrameVec> basis;          // frame coordinates in Delta_ambient
  int projector_sign = 0;               // 0: no projector, otherwise P = (1 + sign * e_1...e_r) / 2
  bool chirality_filter = false;        // only eps with e_1...e_r u_eps = i u_eps
  std::shared_ptr<const SpinorFrame> frame;

  std::size_t dim() const { return basis.size(); }
  unsigned k() const { return ambient / 2; }

  /// Basis columns in the standard coordinates of Delta_ambient.
  std::vector<CVector> real_basis() const {
    std::vector<CVector> out;
    out.reserve(basis.size());
    for (const auto& b : basis) out.push_back(frame_to_standard(k(), b));
    return out;
  }

  Blade volume() const { return Blade::range(ambient, 1, r); }

  FrameVec project(const FrameVec& v) const {
    if (projector_sign == 0) return v;
    FrameVec w = frame_apply(*frame, volume(), v);
    FrameVec out = v;
    for (auto& e : w) {
      if (projector_sign < 0) e.second = -e.second;
      out.push_back(e);
    }
    out = canonical_sparse(std::move(out));
    for (auto& e : out) e.second = e.second * Gaussian(Rational(1, 2));
    return out;
  }
};

inline unsigned real_form_ambient(unsigned r) {
  switch (r % 8) {
    case 1: case 7: case 2: return r;
    case 6: return r + 1;
    case 5: return r + 2;
    case 3: case 4: return r + 3;
    default: return r + 1;
  }
}

namespace detail {

/// First nonzero coordinate gets positive real part (or positive imaginary part if purely imaginary).
inline void canonicalize_sign(FrameVec& v) {
  if (v.empty()) return;
  const Gaussian& lead = v.front().second;
  bool negate = sgn(lead.re) < 0 || (sgn(lead.re) == 0 && sgn(lead.im) < 0);
  if (negate)
    for (auto& e : v) e.second = -e.second;
}

}  // namespace detail

/// Spans of v + gamma(v) over v in {u_eps, i u_eps}, optionally projected by (1 +- e_1...e_r)/2
/// or restricted to one chirality, reduced to an orthogonal basis.
inline RealForm build_real_form(unsigned r, FormLabel label = FormLabel::none) {
  if (r < 1 || r > kMaxCliffordDim) throw std::invalid_argument("build_real_form: r outside 1..16");
  const bool needs_label = r % 4 == 0;
  if (needs_label && label == FormLabel::none)
    throw std::invalid_argument("build_real_form: r = 0 mod 4 requires label plus or minus");
  if (!needs_label && label != FormLabel::none)
    throw std::invalid_argument("build_real_form: label given for r not divisible by 4");
  RealForm f;
  f.r = r;
  f.label = label;
  f.ambient = real_form_ambient(r);
  if (f.ambient > kMaxCliffordDim) throw std::invalid_argument("build_real_form: ambient dimension exceeds 16");
  const unsigned res = r % 8;
  f.kind = (f.ambient != r && (res == 3 || res == 4 || res == 5)) ? FormKind::quaternionic_ambient : FormKind::real;
  if (res == 3) f.projector_sign = 1;
  if (res == 0 || res == 4) f.projector_sign = label == FormLabel::plus ? 1 : -1;
  f.chirality_filter = res == 2;
  f.frame = std::make_shared<SpinorFrame>(f.ambient);
  const unsigned k = f.ambient / 2;
  const Blade vol = f.volume();

  std::vector<FrameVec> candidates;
  for (std::uint32_t idx = 0; idx < (1u << k); ++idx) {
    if (f.chirality_filter) {
      auto [t, p] = f.frame->act(vol, idx);
      if (t != idx) throw std::logic_error("build_real_form: volume element is not diagonal in the frame");
      if (p != 1) continue;
    }
    for (const Gaussian& c : {Gaussian(1), Gaussian::i()}) {
      FrameVec v{{idx, c}};
      FrameVec w = v;
      for (auto& e : frame_gamma(k, v)) w.push_back(e);
      w = f.project(canonical_sparse(std::move(w)));
      if (w.empty()) continue;
      detail::canonicalize_sign(w);
      if (std::find(candidates.begin(), candidates.end(), w) == candidates.end()) candidates.push_back(std::move(w));
    }
  }
  for (auto& w : candidates) {
    bool orthogonal = true;
    for (const auto& b : f.basis)
      if (sgn(frame_pairing(w, b).re) != 0) {
        orthogonal = false;
        break;
      }
    if (orthogonal) f.basis.push_back(std::move(w));
  }
  const std::size_t expected = d_dim(r);
  if (f.basis.size() != expected)
    throw std::logic_error("build_real_form: basis has " + std::to_string(f.basis.size()) + " vectors, expected " +
                           std::to_string(expected));
  const Gaussian n0 = frame_pairing(f.basis.front(), f.basis.front());
  for (std::size_t a = 0; a < f.basis.size(); ++a) {
    if (frame_pairing(f.basis[a], f.basis[a]) != n0) throw std::logic_error("build_real_form: unequal norms");
  }
  return f;
}

/// All Hermitian pairings between basis vectors are real and off-diagonal ones vanish.
inline bool real_form_pairings_real(const RealForm& f) {
  for (std::size_t a = 0; a < f.basis.size(); ++a)
    for (std::size_t b = 0; b < f.basis.size(); ++b) {
      Gaussian h = frame_pairing(f.basis[a], f.basis[b]);
      if (!is_real(h)) return false;
      if (a != b && !is_zero(h)) return false;
    }
  return true;
}

/// Coordinates of frame vectors with respect to an orthogonal real basis.
class RealCoordinates {
 public:
  explicit RealCoordinates(const RealForm& f) : form_(&f) {
    for (std::size_t b = 0; b < f.basis.size(); ++b)
      for (const auto& [idx, c] : f.basis[b]) by_index_[idx].push_back(b);
    norm_ = frame_pairing(f.basis.front(), f.basis.front()).re;
  }

  /// Real coefficients of w in the basis, or nullopt if w is not in the real span.
  std::optional<SparseVec<Rational>> express(const FrameVec& w) const {
    std::vector<std::size_t> cand;
    for (const auto& [idx, c] : w) {
      auto it = by_index_.find(idx);
      if (it == by_index_.end()) return std::nullopt;
      cand.insert(cand.end(), it->second.begin(), it->second.end());
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    SparseVec<Rational> coeffs;
    FrameVec recon;
    for (std::size_t b : cand) {
      Rational c = frame_pairing(w, form_->basis[b]).re / norm_;
      if (is_zero(c)) continue;
      coeffs.emplace_back(b, c);
      for (const auto& [idx, x] : form_->basis[b]) recon.emplace_back(idx, x * Gaussian(c));
    }
    if (canonical_sparse(std::move(recon)) != w) return std::nullopt;
    return coeffs;
  }

 private:
  const RealForm* form_;
  std::map<std::size_t, std::vector<std::size_t>> by_index_;
  Rational norm_;
};

struct RealRep {
  unsigned r = 0;
  std::size_t dim = 0;
  FormLabel label = FormLabel::none;
  std::vector<std::pair<unsigned, unsigned>> pairs;   // (i, j), i < j <= r, lexicographic
  std::vector<SparseMatrix<Rational>> spin_mats;      // image of e_i e_j for each pair
  std::shared_ptr<const RealForm> form;

  /// Real matrix of a blade of Cl_ambient on the form (projected when the form is a projection).
  SparseMatrix<Rational> blade_action(const Blade& b) const {
    if (b.n != form->ambient) throw std::invalid_argument("blade_action: blade must live in Cl_ambient");
    RealCoordinates coords(*form);
    SparseMatrix<Rational> m(dim, dim);
    std::vector<SparseVec<Rational>> cols(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      FrameVec w = form->project(frame_apply(*form->frame, b, form->basis[j]));
      auto c = coords.express(w);
      if (!c) throw std::logic_error("blade_action: " + b.name() + " does not preserve the real form");
      cols[j] = std::move(*c);
    }
    std::vector<SparseVec<Rational>> rows(dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (const auto& [i, v] : cols[j]) rows[i].emplace_back(j, v);
    for (std::size_t i = 0; i < dim; ++i) m.set_row(i, std::move(rows[i]));
    return m;
  }

  const SparseMatrix<Rational>& spin_mat(unsigned i, unsigned j) const { return spin_mats[pair_index(r, i, j)]; }
};

/// Matrices of e_i e_j (i < j <= r) in the real basis of the form.
inline RealRep realize_rep(const RealForm& form) {
  RealRep rep;
  rep.r = form.r;
  rep.dim = form.dim();
  rep.label = form.label;
  rep.form = std::make_shared<RealForm>(form);
  rep.pairs = spin_pairs(form.r);
  for (auto [i, j] : rep.pairs) {
    SparseMatrix<Rational> m = rep.blade_action(Blade::from_indices(form.ambient, {i, j}));
    rep.spin_mats.push_back(std::move(m));
  }
  return rep;
}

inline RealRep realize_rep(unsigned r, FormLabel label = FormLabel::none) {
  return realize_rep(build_real_form(r, label));
}

/// Matrix of the volume element e_1...e_r on the form.
inline SparseMatrix<Rational> volume_action(const RealRep& rep, unsigned r) {
  if (r != rep.r) throw std::invalid_argument("volume_action: r does not match the representation");
  return rep.blade_action(Blade::range(rep.form->ambient, 1, r));
}

}  // namespace spincent
