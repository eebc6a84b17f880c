#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "spincent/blade.hpp"
#include "spincent/matrix.hpp"
#include "spincent/rational.hpp"

namespace gen {

inline constexpr std::uint64_t kSeed = 0x5eed5eedULL;

class Source {
 public:
  explicit Source(std::uint64_t seed = kSeed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::uint32_t bits(unsigned n) {
    return n == 0 ? 0u : static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint64_t>(0, (1ull << n) - 1)(rng_));
  }
  bool coin() { return integer(0, 1) == 1; }

  spincent::Rational rational(int span = 9) {
    spincent::Rational q(integer(-span, span), integer(1, span));
    q.canonicalize();
    return q;
  }

  spincent::Gaussian gaussian(int span = 5) { return {rational(span), rational(span)}; }

  spincent::Blade blade(unsigned n) { return {n, bits(n)}; }

  /// Dense-ish sparse matrix with about `fill` percent nonzero entries.
  spincent::SparseMatrix<spincent::Rational> matrix(std::size_t rows, std::size_t cols, int fill = 40) {
    spincent::SparseMatrix<spincent::Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (integer(0, 99) < fill) m.push(i, j, rational());
    return m;
  }

  spincent::CliffordElement element(unsigned n, int terms) {
    spincent::CliffordElement x(n);
    for (int t = 0; t < terms; ++t) x.add(bits(n), rational());
    return x;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
