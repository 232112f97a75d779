#pragma once

#include <cstdint>
#include <random>

#include "rational.hpp"

namespace cohera {

// Deterministic RNG for property suites. mt19937_64 has a standard-mandated
// sequence and values are reduced by modulo, so runs are reproducible across
// platforms and compilers (std::uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform-ish integer in [0, n). n > 0.
  std::int64_t below(std::int64_t n) {
    return static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(n));
  }

  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + below(hi - lo + 1);
  }

  bool coin() { return (eng_() & 1) != 0; }

  // Small-integer coordinate in {-3,...,3}: the sampling distribution used by
  // every property check.
  Rational coord() { return Rational(range(-3, 3)); }

  Vec coords(int dim) {
    Vec v(dim);
    for (auto& x : v) x = coord();
    return v;
  }

  Vec nonzero_coords(int dim) {
    for (;;) {
      Vec v = coords(dim);
      if (!vec_is_zero(v)) return v;
    }
  }

  Vec nonneg_nonzero_coords(int dim) {
    for (;;) {
      Vec v(dim);
      for (auto& x : v) x = Rational(range(0, 3));
      if (!vec_is_zero(v)) return v;
    }
  }

  // Positive rational from a small menu of scales.
  Rational positive_scale() {
    static const int nums[] = {1, 1, 2, 3, 1, 5, 2};
    static const int dens[] = {1, 2, 1, 1, 3, 2, 5};
    const int i = static_cast<int>(below(7));
    Rational r(nums[i], dens[i]);
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cohera
