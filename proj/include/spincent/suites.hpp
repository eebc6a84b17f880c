#pragma once

// Verification suites beyond the centralizer tables. Each row carries the expected value, the
// table it comes from, and the computed value as display strings.

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "spincent/blade.hpp"
#include "spincent/centralizer.hpp"
#include "spincent/real_form.hpp"
#include "spincent/spinor.hpp"
#include "spincent/tensor_rep.hpp"

namespace spincent {

struct CheckRow {
  std::string key;
  std::string source;
  std::string expected;
  std::string computed;
  bool pass = false;
  double seconds = 0.0;
  std::string note;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_;
};

inline std::string join_counts(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// ---------------------------------------------------------------------------

/// Blade commutation predicate against brute-force commutators, all r <= n, all blades.
inline std::vector<CheckRow> lemma_suite(unsigned n_max = 7) {
  std::vector<CheckRow> rows;
  for (unsigned n = 1; n <= n_max; ++n) {
    detail::Stopwatch sw;
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    for (unsigned r = 1; r <= n; ++r) {
      SpinSubalgebraSpec spec(r, n);
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        Blade b(n, m);
        if (lemma_commute_predicate(b, spec) != commutes_with_spin_bruteforce(CliffordElement(b), spec)) ++mismatches;
        ++checked;
      }
    }
    rows.push_back({"n=" + std::to_string(n), "blade commutation criterion", "0 mismatches",
                    std::to_string(mismatches) + " mismatches of " + std::to_string(checked), mismatches == 0,
                    sw.seconds(), ""});
  }
  return rows;
}

/// Sign of gamma_n^2 and spin-equivariance of gamma_n.
inline std::vector<CheckRow> gamma_suite(unsigned n_max = 11) {
  std::vector<CheckRow> rows;
  for (unsigned n = 1; n <= n_max; ++n) {
    detail::Stopwatch sw;
    AntilinearMap g = build_gamma(n);
    const int sign = g.square_sign();
    const int expected = gamma_square_sign_expected(n);
    const bool equivariant = gamma_equivariance_check(n, g);
    rows.push_back({"n=" + std::to_string(n), "gamma square sign by n mod 8",
                    "sign " + std::to_string(expected) + ", equivariant",
                    "sign " + std::to_string(sign) + (equivariant ? ", equivariant" : ", not equivariant"),
                    sign == expected && equivariant, sw.seconds(), ""});
  }
  return rows;
}

/// Realness of all pairings on the real forms and J_ij^2 = -Id for every realized generator.
inline std::vector<CheckRow> structure_suite(unsigned r_max = 12) {
  std::vector<CheckRow> rows;
  for (unsigned r = 1; r <= r_max; ++r)
    for (FormLabel l : labels_for(r)) {
      detail::Stopwatch sw;
      RealRep rep = realize_rep(r, l);
      const bool real = real_form_pairings_real(*rep.form);
      bool square = true;
      bool antisym = true;
      for (const auto& g : rep.spin_mats) {
        square = square && squares_to_minus_identity(g);
        antisym = antisym && is_antisymmetric(g);
      }
      const bool dim_ok = rep.dim == d_dim(r);
      rows.push_back({delta_name(r, l), "real pairings; generator squares",
                      "real pairings, J^2 = -Id, antisymmetric, dim " + std::to_string(d_dim(r)),
                      std::string(real ? "real" : "non-real") + " pairings, J^2 = -Id " + detail::yes_no(square) +
                          ", antisymmetric " + detail::yes_no(antisym) + ", dim " + std::to_string(rep.dim),
                      real && square && antisym && dim_ok, sw.seconds(), ""});
    }
  return rows;
}

// ---------------------------------------------------------------------------

/// Trivial summands of Lambda^2 by residue: +-1 -> 0, +-2 -> 1, +-3 -> 3, 4 -> 3, 0 -> 0.
inline std::size_t expected_lambda2_trivial(unsigned r) {
  switch (r % 8) {
    case 1: case 7: case 0: return 0;
    case 2: case 6: return 1;
    default: return 3;
  }
}

inline std::vector<CheckRow> trivial_suite(unsigned r_min = 2, unsigned r_max = 11) {
  std::vector<CheckRow> rows;
  for (unsigned r = r_min; r <= r_max; ++r) {
    for (FormLabel l : labels_for(r)) {
      detail::Stopwatch sw;
      LinearRep rep = as_linear(realize_rep(r, l));
      const std::size_t l2 = trivial_multiplicity(exterior_square(rep));
      const std::size_t s2 = trivial_multiplicity(sym0_square(rep));
      const std::size_t e = expected_lambda2_trivial(r);
      rows.push_back({delta_name(r, l), "trivial-summand table, residue " + detail::residue_tag(r),
                      "Lambda2=" + std::to_string(e) + " Sym0=0",
                      "Lambda2=" + std::to_string(l2) + " Sym0=" + std::to_string(s2), l2 == e && s2 == 0,
                      sw.seconds(), ""});
    }
    if (r % 4 == 0) {
      detail::Stopwatch sw;
      LinearRep p = as_linear(realize_rep(r, FormLabel::plus));
      LinearRep m = as_linear(realize_rep(r, FormLabel::minus));
      const std::size_t pm = trivial_multiplicity(tensor_product(p, m));
      rows.push_back({delta_name(r, FormLabel::plus) + "(x)" + delta_name(r, FormLabel::minus),
                      "trivial-summand table, residue " + detail::residue_tag(r), "0", std::to_string(pm), pm == 0,
                      sw.seconds(), ""});
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------

/// Multiplicities of Lambda^k, k <= floor(r/2), in Delta_r (x) Delta_r. Lambda^k and Lambda^{r-k}
/// are equivalent, so each identity is stated in this normalized indexing.
inline std::vector<std::size_t> expected_decomposition(unsigned r) {
  std::vector<std::size_t> out(r / 2 + 1, 0);
  switch (r % 8) {
    case 1: case 7:
      // sum of Lambda^{2k}: exactly one of 2k, r - 2k lies in each class
      for (auto& x : out) x = 1;
      break;
    case 2:
      // sum of all Lambda^k: Lambda^{r/2} once, the others twice
      for (unsigned k = 0; k <= r / 2; ++k) out[k] = (2 * k == r) ? 1 : 2;
      break;
    case 3: case 5:
      // 2 Lambda^*: every class appears twice, from k and r - k
      for (auto& x : out) x = 4;
      break;
    default:
      throw std::invalid_argument("expected_decomposition: defined for r = 1, 2, 3, 5, 7 (mod 8)");
  }
  return out;
}

inline std::vector<std::size_t> computed_decomposition(unsigned r) {
  LinearRep rep = as_linear(realize_rep(r));
  MultiplicityTable t = lambda_multiplicities(tensor_product(rep, rep));
  if (!t.complete()) throw std::logic_error("computed_decomposition: Lambda classes do not exhaust the tensor square");
  std::vector<std::size_t> out;
  for (unsigned k = 0; k <= r / 2; ++k) out.push_back(t.entries.at(lambda_label(k)));
  return out;
}

/// Trivial summands in (Delta^+ + Delta^-)^{(x)2}.
inline std::size_t two_block_square_trivial(unsigned r) {
  LinearRep s = direct_sum(as_linear(realize_rep(r, FormLabel::plus)), as_linear(realize_rep(r, FormLabel::minus)));
  return trivial_multiplicity(tensor_product(s, s));
}

/// r = 0 (mod 8): exactly the two trivial summands of the two symmetric squares.
/// r = 4 (mod 8): those two plus three inside each Lambda^2 Delta^+-.
inline std::size_t expected_two_block_square_trivial(unsigned r) {
  if (r % 8 == 0) return 2;
  if (r % 8 == 4) return 2 + 2 * expected_lambda2_trivial(r);
  throw std::invalid_argument("expected_two_block_square_trivial: r must be 0 (mod 4)");
}

inline std::vector<CheckRow> decomp_suite(unsigned r_max = 7) {
  std::vector<CheckRow> rows;
  for (unsigned r : {2u, 3u, 5u, 7u, 9u, 10u}) {
    if (r > r_max) continue;
    detail::Stopwatch sw;
    auto e = expected_decomposition(r);
    auto c = computed_decomposition(r);
    rows.push_back({"r=" + std::to_string(r), "tensor square decomposition, residue " + detail::residue_tag(r),
                    detail::join_counts(e), detail::join_counts(c), e == c, sw.seconds(),
                    "multiplicities of Lambda^0..Lambda^" + std::to_string(r / 2)});
  }
  for (unsigned r : {4u, 8u}) {
    if (r > r_max) continue;
    detail::Stopwatch sw;
    const std::size_t e = expected_two_block_square_trivial(r);
    const std::size_t c = two_block_square_trivial(r);
    rows.push_back({"r=" + std::to_string(r) + ",trivial", "two-block tensor square", std::to_string(e),
                    std::to_string(c), e == c, sw.seconds(), "trivial summands of (Delta+ + Delta-)^2"});
  }
  return rows;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckRow> table2_suite(unsigned r_min = 2, unsigned r_max = 9) {
  std::vector<CheckRow> rows;
  for (unsigned r = r_min; r <= r_max; ++r) {
    detail::Stopwatch sw;
    auto reports = branching_check(r);
    const double t = sw.seconds() / static_cast<double>(reports.empty() ? 1 : reports.size());
    for (const auto& rep : reports) {
      std::string exp;
      std::string got;
      for (const auto& e : rep.entries) {
        if (!exp.empty()) {
          exp += " + ";
          got += " + ";
        }
        exp += std::to_string(e.expected) + " " + e.target;
        got += std::to_string(e.computed) + " " + e.target;
      }
      rows.push_back({rep.source + "|spin(" + std::to_string(r - 1) + ")", "restriction table, r = " +
                          std::to_string(r % 8 == 0 ? 8 : r % 8) + " (mod 8)",
                      exp, got, rep.pass, t, rep.dims_add_up ? "" : "dimensions do not add up"});
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------

struct PhiSuiteOptions {
  std::vector<unsigned> full = {2, 7};
  std::vector<unsigned> sampled = {9, 10};
  std::size_t samples_per_degree = 400;
  std::uint64_t seed = 20240611;
};

/// Surjectivity onto every degree and the stated Lambda^2 / Sym^2 vanishing parities.
inline std::vector<CheckRow> phi_suite(const PhiSuiteOptions& opt = {}) {
  std::vector<CheckRow> rows;
  auto run = [&](unsigned r, std::size_t samples) {
    detail::Stopwatch sw;
    PhiSurjectivity s = phi_surjectivity_report(r);
    std::string hit;
    for (std::size_t i = 0; i < s.degrees.size(); ++i)
      hit += (i ? "," : "") + std::to_string(s.degrees[i]) + (s.hit[i] ? "" : "(miss)");
    rows.push_back({"r=" + std::to_string(r) + ",surjective", "Phi onto each degree", "every degree hit",
                    "degrees " + hit, s.all_hit, sw.seconds(), ""});
    detail::Stopwatch sw2;
    auto observed = phi_parity_observed(r, samples, opt.seed + r);
    const double per = sw2.seconds() / static_cast<double>(observed.empty() ? 1 : observed.size());
    for (const auto& d : observed) {
      const bool l2 = phi_claim_lambda2_vanishes(r, d.degree);
      const bool s2 = phi_claim_sym2_vanishes(r, d.degree);
      auto describe = [](bool lam, bool sym) {
        if (lam && sym) return std::string("vanishes on both");
        if (lam) return std::string("vanishes on Lambda^2");
        if (sym) return std::string("vanishes on Sym^2");
        return std::string("no vanishing");
      };
      const std::string expected = describe(l2, s2);
      const std::string computed = describe(d.symmetric, d.antisymmetric);
      // A stated vanishing must hold; an unstated one must fail on the data.
      const bool pass = (l2 == d.symmetric) && (s2 == d.antisymmetric);
      const bool corrected = phi_corrected_lambda2_vanishes(d.degree) == d.symmetric &&
                             phi_corrected_sym2_vanishes(d.degree) == d.antisymmetric;
      rows.push_back({"r=" + std::to_string(r) + ",degree=" + std::to_string(d.degree),
                      "Phi component parity, residue " + detail::residue_tag(r), expected, computed, pass, per,
                      std::to_string(d.samples) + (samples ? " sampled" : " exhaustive") +
                          " pairs; parity rule by degree mod 4 " + (corrected ? "holds" : "fails")});
    }
  };
  for (unsigned r : opt.full) run(r, 0);
  for (unsigned r : opt.sampled) run(r, opt.samples_per_degree);
  return rows;
}

// ---------------------------------------------------------------------------

/// d_r and v_r from the residue formulas against constructed real forms. Beyond the largest
/// constructible ambient the computed value comes from d_{r+8} = 16 d_r.
inline std::vector<CheckRow> dims_suite(unsigned r_max = 16) {
  std::vector<CheckRow> rows;
  std::vector<std::size_t> built(r_max + 1, 0);
  for (unsigned r = 1; r <= r_max; ++r) {
    detail::Stopwatch sw;
    const std::size_t d = d_dim(r);
    const unsigned v = v_count(r);
    std::size_t cd = 0;
    unsigned cv = 0;
    std::string note;
    if (real_form_ambient(r) <= kMaxCliffordDim) {
      for (FormLabel l : labels_for(r)) {
        RealForm f = build_real_form(r, l);
        if (cv == 0) cd = f.dim();
        else if (f.dim() != cd) cd = 0;
        ++cv;
      }
      note = "constructed real form";
    } else {
      cd = 16 * built[r - 8];
      cv = static_cast<unsigned>(labels_for(r).size());
      note = "periodicity from r-8";
    }
    built[r] = cd;
    rows.push_back({"r=" + std::to_string(r), "dimension table, r = " + std::to_string(r % 8 == 0 ? 8 : r % 8) +
                                                  " (mod 8)",
                    "d=" + std::to_string(d) + " v=" + std::to_string(v),
                    "d=" + std::to_string(cd) + " v=" + std::to_string(cv), cd == d && cv == v, sw.seconds(), note});
  }
  return rows;
}

}  // namespace spincent
