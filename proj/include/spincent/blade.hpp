#pragma once

// Basis blades and sparse elements of the Clifford algebra Cl_n with e_i^2 = -1.

#include <bit>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincent/rational.hpp"

namespace spincent {

inline constexpr unsigned kMaxCliffordDim = 16;

/// Index i in {1..n} is stored at bit i-1; mask 0 is the unit.
struct Blade {
  unsigned n = 0;
  std::uint32_t mask = 0;

  Blade() = default;
  Blade(unsigned dim, std::uint32_t bits) : n(dim), mask(bits) {
    if (n > kMaxCliffordDim) throw std::invalid_argument("Blade: n exceeds the supported maximum of 16");
    if (n < 32 && (mask >> n) != 0) throw std::invalid_argument("Blade: index outside {1..n}");
  }

  static Blade unit(unsigned n) { return {n, 0}; }

  static Blade from_indices(unsigned n, const std::vector<unsigned>& idx) {
    std::uint32_t m = 0;
    for (unsigned i : idx) {
      if (i < 1 || i > n) throw std::invalid_argument("Blade: index outside {1..n}");
      if (m & (1u << (i - 1))) throw std::invalid_argument("Blade: repeated index");
      m |= 1u << (i - 1);
    }
    return {n, m};
  }

  /// e_1 e_2 ... e_s
  static Blade range(unsigned n, unsigned first, unsigned last) {
    std::uint32_t m = 0;
    for (unsigned i = first; i <= last; ++i) m |= 1u << (i - 1);
    return {n, m};
  }

  unsigned grade() const { return static_cast<unsigned>(std::popcount(mask)); }
  bool even() const { return grade() % 2 == 0; }

  std::vector<unsigned> indices() const {
    std::vector<unsigned> out;
    for (unsigned i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) out.push_back(i);
    return out;
  }

  std::string name() const {
    if (mask == 0) return "1";
    std::string s = "e";
    bool wide = n >= 10;
    for (unsigned i : indices()) {
      if (wide && s.size() > 1) s += ",";
      s += std::to_string(i);
    }
    return s;
  }

  friend bool operator==(const Blade& a, const Blade& b) { return a.n == b.n && a.mask == b.mask; }
  friend bool operator!=(const Blade& a, const Blade& b) { return !(a == b); }
  friend bool operator<(const Blade& a, const Blade& b) { return a.n != b.n ? a.n < b.n : a.mask < b.mask; }
};

inline std::ostream& operator<<(std::ostream& os, const Blade& b) { return os << b.name(); }

struct BladeProduct {
  int sign = 1;
  Blade result;
};

/// Sign from sorting the concatenated index list (one factor -1 per transposition)
/// followed by contracting each repeated index with e_i e_i = -1.
inline BladeProduct blade_product(const Blade& a, const Blade& b) {
  if (a.n != b.n) throw std::invalid_argument("blade_product: mismatched ambient dimension");
  unsigned swaps = 0;
  for (std::uint32_t rest = b.mask; rest != 0; rest &= rest - 1) {
    unsigned y = static_cast<unsigned>(std::countr_zero(rest));
    // Indices of a strictly greater than y must move past y.
    std::uint32_t above = (y + 1 >= 32) ? 0u : (a.mask >> (y + 1));
    swaps += static_cast<unsigned>(std::popcount(above));
  }
  swaps += static_cast<unsigned>(std::popcount(a.mask & b.mask));
  return {(swaps % 2 == 0) ? 1 : -1, Blade(a.n, a.mask ^ b.mask)};
}

class CliffordElement {
 public:
  explicit CliffordElement(unsigned n = 0) : n_(n) {
    if (n > kMaxCliffordDim) throw std::invalid_argument("CliffordElement: n exceeds the supported maximum of 16");
  }
  CliffordElement(const Blade& b, Rational c = 1) : n_(b.n) {  // NOLINT(google-explicit-constructor)
    if (!spincent::is_zero(c)) terms_[b.mask] = std::move(c);
  }

  static CliffordElement scalar(unsigned n, Rational c) { return CliffordElement(Blade::unit(n), std::move(c)); }
  static CliffordElement generator(unsigned n, unsigned i) { return CliffordElement(Blade::from_indices(n, {i})); }

  unsigned n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<std::uint32_t, Rational>& terms() const { return terms_; }

  Rational coeff(const Blade& b) const {
    auto it = terms_.find(b.mask);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool even() const {
    for (const auto& [m, c] : terms_)
      if (std::popcount(m) % 2 != 0) return false;
    return true;
  }

  void add(std::uint32_t mask, const Rational& c) {
    if (spincent::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
      it->second += c;
      if (spincent::is_zero(it->second)) terms_.erase(it);
    }
  }

  CliffordElement& operator+=(const CliffordElement& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  CliffordElement& operator-=(const CliffordElement& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add(m, Rational(-c));
    return *this;
  }
  CliffordElement& operator*=(const Rational& s) {
    if (spincent::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(CliffordElement a, const Rational& s) { return a *= s; }
  friend CliffordElement operator*(const Rational& s, CliffordElement a) { return a *= s; }

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += spincent::to_string(c) + "*" + Blade(n_, m).name();
    }
    return s;
  }

 private:
  void check(const CliffordElement& o) const {
    if (o.n_ != n_) throw std::invalid_argument("CliffordElement: mismatched ambient dimension");
  }

  unsigned n_;
  std::map<std::uint32_t, Rational> terms_;
};

inline CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y) {
  if (x.n() != y.n()) throw std::invalid_argument("clifford_mul: mismatched ambient dimension");
  CliffordElement out(x.n());
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : y.terms()) {
      BladeProduct p = blade_product(Blade(x.n(), ma), Blade(x.n(), mb));
      Rational c = ca * cb;
      if (p.sign < 0) c = -c;
      out.add(p.result.mask, c);
    }
  return out;
}

/// [x, y] = xy - yx. With this convention [e12, e23] = -2 e13.
inline CliffordElement commutator(const CliffordElement& x, const CliffordElement& y) {
  return clifford_mul(x, y) - clifford_mul(y, x);
}

struct SpinSubalgebraSpec {
  unsigned r = 1;
  unsigned n = 1;

  SpinSubalgebraSpec(unsigned rank, unsigned ambient) : r(rank), n(ambient) {
    if (r < 1 || r > n) throw std::invalid_argument("SpinSubalgebraSpec: requires 1 <= r <= n");
    if (n > kMaxCliffordDim) throw std::invalid_argument("SpinSubalgebraSpec: n exceeds the supported maximum of 16");
  }
};

/// Pairs (i, j), 1 <= i < j <= r, in lexicographic order.
inline std::vector<std::pair<unsigned, unsigned>> spin_pairs(unsigned r) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 1; i <= r; ++i)
    for (unsigned j = i + 1; j <= r; ++j) out.emplace_back(i, j);
  return out;
}

/// Position of (i, j) in spin_pairs(r).
inline std::size_t pair_index(unsigned r, unsigned i, unsigned j) {
  if (!(1 <= i && i < j && j <= r)) throw std::out_of_range("pair_index: expected 1 <= i < j <= r");
  std::size_t before = 0;
  for (unsigned a = 1; a < i; ++a) before += r - a;
  return before + (j - i - 1);
}

inline std::vector<CliffordElement> spin_generators(const SpinSubalgebraSpec& spec) {
  std::vector<CliffordElement> out;
  for (auto [i, j] : spin_pairs(spec.r)) out.emplace_back(Blade::from_indices(spec.n, {i, j}));
  return out;
}

inline bool lemma_commute_predicate(const Blade& blade, const SpinSubalgebraSpec& spec) {
  if (blade.n != spec.n) throw std::invalid_argument("lemma_commute_predicate: mismatched ambient dimension");
  std::uint32_t low = (spec.r >= 32) ? ~0u : ((1u << spec.r) - 1u);
  return (blade.mask & low) == 0 || (blade.mask & low) == low;
}

inline bool commutes_with_spin_bruteforce(const CliffordElement& x, const SpinSubalgebraSpec& spec) {
  if (x.n() != spec.n) throw std::invalid_argument("commutes_with_spin_bruteforce: mismatched ambient dimension");
  for (const auto& g : spin_generators(spec))
    if (!commutator(x, g).is_zero()) return false;
  return true;
}

enum class Parity { all, even };

/// Blades spanning C_{Cl_n}(spin(r)) (or its even part), in increasing mask order.
inline std::vector<Blade> clifford_centralizer(const SpinSubalgebraSpec& spec, Parity parity) {
  std::vector<Blade> out;
  const std::uint32_t total = 1u << spec.n;
  for (std::uint32_t m = 0; m < total; ++m) {
    Blade b(spec.n, m);
    if (parity == Parity::even && !b.even()) continue;
    if (lemma_commute_predicate(b, spec)) out.push_back(b);
  }
  return out;
}

}  // namespace spincent
