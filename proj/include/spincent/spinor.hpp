#pragma once

// The complex spinor representation kappa_n of Cl_n on (C^2)^{tensor k}, k = floor(n/2),
// the spinor basis u_eps and the closed-form Clifford action on it.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spincent/blade.hpp"
#include "spincent/matrix.hpp"
#include "spincent/rational.hpp"

namespace spincent {

using CMatrix = Matrix<Gaussian>;
using CVector = std::vector<Gaussian>;

namespace gen2 {

inline CMatrix identity() { return CMatrix::identity(2); }

/// diag(i, -i)
inline CMatrix g1() {
  CMatrix m(2, 2);
  m(0, 0) = Gaussian::i();
  m(1, 1) = -Gaussian::i();
  return m;
}

/// [[0, i], [i, 0]]
inline CMatrix g2() {
  CMatrix m(2, 2);
  m(0, 1) = Gaussian::i();
  m(1, 0) = Gaussian::i();
  return m;
}

/// [[0, -i], [i, 0]]
inline CMatrix t() {
  CMatrix m(2, 2);
  m(0, 1) = -Gaussian::i();
  m(1, 0) = Gaussian::i();
  return m;
}

}  // namespace gen2

/// i^p for p taken mod 4.
inline Gaussian i_power(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return Gaussian(1);
    case 1: return Gaussian::i();
    case 2: return Gaussian(-1);
    default: return -Gaussian::i();
  }
}

struct SpinorRep {
  unsigned n = 0;
  unsigned k = 0;
  std::vector<CMatrix> gens;

  std::size_t dim() const { return std::size_t{1} << k; }
};

namespace detail {

inline CMatrix kron_chain(const std::vector<CMatrix>& factors) {
  CMatrix out = CMatrix::identity(1);
  for (const auto& f : factors) out = kronecker(out, f);
  return out;
}

}  // namespace detail

/// e_{2j-1} -> Id^{k-j} (x) g1 (x) T^{j-1}, e_{2j} likewise with g2, and for odd n
/// e_{2k+1} -> i T^{k}. The leftmost factor is the most significant.
inline SpinorRep build_kappa(unsigned n) {
  if (n < 1) throw std::invalid_argument("build_kappa: n must be positive");
  SpinorRep rep;
  rep.n = n;
  rep.k = n / 2;
  const unsigned k = rep.k;
  for (unsigned j = 1; j <= k; ++j) {
    for (int which = 0; which < 2; ++which) {
      std::vector<CMatrix> f;
      for (unsigned p = 0; p < k - j; ++p) f.push_back(gen2::identity());
      f.push_back(which == 0 ? gen2::g1() : gen2::g2());
      for (unsigned p = 0; p + 1 < j; ++p) f.push_back(gen2::t());
      rep.gens.push_back(detail::kron_chain(f));
    }
  }
  if (n % 2 == 1) {
    std::vector<CMatrix> f(k, gen2::t());
    rep.gens.push_back(detail::kron_chain(f) * Gaussian::i());
  }
  return rep;
}

inline bool verify_clifford_relations(const SpinorRep& rep) {
  const std::size_t d = rep.dim();
  const CMatrix minus_two = CMatrix::identity(d) * Gaussian(-2);
  const CMatrix zero(d, d);
  for (std::size_t a = 0; a < rep.gens.size(); ++a)
    for (std::size_t b = a; b < rep.gens.size(); ++b) {
      const CMatrix& x = rep.gens[a];
      const CMatrix& y = rep.gens[b];
      if (x.rows() != d || y.rows() != d) return false;
      CMatrix s = x * y + y * x;
      if (s != (a == b ? minus_two : zero)) return false;
    }
  return true;
}

/// Product kappa(e_{i1}) ... kappa(e_{is}) for the blade's increasing index list.
inline CMatrix kappa_of_blade(const SpinorRep& rep, const Blade& b) {
  if (b.n != rep.n) throw std::invalid_argument("kappa_of_blade: mismatched ambient dimension");
  CMatrix out = CMatrix::identity(rep.dim());
  for (unsigned i : b.indices()) out = out * rep.gens[i - 1];
  return out;
}

/// eps_alpha in {+1, -1}, alpha = 1..k (stored 0-based).
using SignVector = std::vector<int>;

/// Index of u_eps in the frame: bit (k - alpha) is set iff eps_alpha = -1.
inline std::uint32_t sign_index(const SignVector& eps) {
  std::uint32_t idx = 0;
  for (int e : eps) idx = (idx << 1) | (e < 0 ? 1u : 0u);
  return idx;
}

inline SignVector sign_vector(unsigned k, std::uint32_t idx) {
  SignVector eps(k);
  for (unsigned a = 0; a < k; ++a) eps[a] = ((idx >> (k - 1 - a)) & 1u) ? -1 : 1;
  return eps;
}

/// Unnormalized u_{eps_1} (x) ... (x) u_{eps_k} with u_{+1} = (1, -i), u_{-1} = (1, i).
inline CVector spinor_basis_vector(const SignVector& eps) {
  CVector v{Gaussian(1)};
  for (int e : eps) {
    CVector next;
    next.reserve(v.size() * 2);
    Gaussian second = e > 0 ? -Gaussian::i() : Gaussian::i();
    for (const auto& x : v) {
      next.push_back(x);
      next.push_back(x * second);
    }
    v = std::move(next);
  }
  return v;
}

struct ActionResult {
  Gaussian phase;
  SignVector eps;
};

/// e_j . u_eps = phase . u_eps' from the closed formulas for odd, even and last-odd generators.
inline ActionResult clifford_action_sign(unsigned j, const SignVector& eps, unsigned n) {
  const unsigned k = n / 2;
  if (j < 1 || j > n) throw std::out_of_range("clifford_action_sign: generator index outside {1..n}");
  if (eps.size() != k) throw std::invalid_argument("clifford_action_sign: sign vector must have length floor(n/2)");
  auto e = [&](unsigned alpha) { return eps[alpha - 1]; };
  ActionResult out{Gaussian(1), eps};
  if (n % 2 == 1 && j == n) {
    int prod = 1;
    for (unsigned a = 1; a <= k; ++a) prod *= e(a);
    int sign = ((k % 2 == 0) ? 1 : -1) * prod;
    out.phase = Gaussian::i() * Gaussian(sign);
    return out;
  }
  const unsigned jj = (j + 1) / 2;
  const unsigned flip = k - jj + 1;
  int sign = ((jj - 1) % 2 == 0) ? 1 : -1;
  if (j % 2 == 1) {
    for (unsigned a = k - jj + 2; a <= k; ++a) sign *= e(a);
    out.phase = Gaussian::i() * Gaussian(sign);
  } else {
    for (unsigned a = k - jj + 1; a <= k; ++a) sign *= e(a);
    out.phase = Gaussian(sign);
  }
  out.eps[flip - 1] = -out.eps[flip - 1];
  return out;
}

/// Compares kappa(e_j) u_eps with the closed formula for every generator and every eps.
inline bool cross_check_action(unsigned n) {
  const SpinorRep rep = build_kappa(n);
  const unsigned k = rep.k;
  for (std::uint32_t idx = 0; idx < (1u << k); ++idx) {
    SignVector eps = sign_vector(k, idx);
    CVector u = spinor_basis_vector(eps);
    for (unsigned j = 1; j <= n; ++j) {
      ActionResult r = clifford_action_sign(j, eps, n);
      CVector lhs = rep.gens[j - 1].apply(u);
      CVector rhs = spinor_basis_vector(r.eps);
      for (auto& x : rhs) x = x * r.phase;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

/// Monomial form of the Clifford action in the u_eps frame: e_j u_idx = i^p u_idx'.
class SpinorFrame {
 public:
  explicit SpinorFrame(unsigned n) : n_(n), k_(n / 2) {
    if (n < 1 || n > kMaxCliffordDim) throw std::invalid_argument("SpinorFrame: n outside 1..16");
    const std::uint32_t size = 1u << k_;
    target_.assign(n, std::vector<std::uint32_t>(size));
    power_.assign(n, std::vector<std::uint8_t>(size));
    for (unsigned j = 1; j <= n; ++j)
      for (std::uint32_t idx = 0; idx < size; ++idx) {
        ActionResult r = clifford_action_sign(j, sign_vector(k_, idx), n);
        target_[j - 1][idx] = sign_index(r.eps);
        power_[j - 1][idx] = static_cast<std::uint8_t>(phase_power(r.phase));
      }
  }

  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  std::size_t dim() const { return std::size_t{1} << k_; }

  /// Blade action on a single frame vector; returns (target index, power of i).
  std::pair<std::uint32_t, unsigned> act(const Blade& b, std::uint32_t idx) const {
    if (b.n != n_) throw std::invalid_argument("SpinorFrame::act: mismatched ambient dimension");
    unsigned p = 0;
    std::vector<unsigned> ind = b.indices();
    for (auto it = ind.rbegin(); it != ind.rend(); ++it) {
      p += power_[*it - 1][idx];
      idx = target_[*it - 1][idx];
    }
    return {idx, p % 4};
  }

 private:
  static unsigned phase_power(const Gaussian& z) {
    for (unsigned p = 0; p < 4; ++p)
      if (i_power(static_cast<int>(p)) == z) return p;
    throw std::logic_error("SpinorFrame: phase is not a power of i");
  }

  unsigned n_;
  unsigned k_;
  std::vector<std::vector<std::uint32_t>> target_;
  std::vector<std::vector<std::uint8_t>> power_;
};

}  // namespace spincent
