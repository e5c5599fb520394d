#ifndef NILALG_RNG_HPP
#define NILALG_RNG_HPP

#include <cstdint>
#include <vector>

#include "nilalg/field.hpp"

namespace nilalg {

/// Default seed for every randomized guard and property suite. Reproducible
/// runs depend only on this value (or the --seed override).
inline constexpr std::uint64_t kDefaultSeed = 0x6e696c616c67ULL;

/// SplitMix64: tiny, fully portable generator. std:: distributions are
/// deliberately avoided because their output is not specified across
/// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Derives an independent stream; used to give each guard its own seed.
  Rng fork() { return Rng(next()); }

  /// Small random field element. Over Q/Q(i) heights are kept low so exact
  /// arithmetic in the property suites stays cheap.
  Scalar scalar(const FieldSpec& f) {
    switch (f.kind) {
      case FieldKind::Prime:
        return Scalar::residue(range(0, f.p - 1), f.p);
      case FieldKind::Rational:
        return Scalar::rational(f, small_rat());
      case FieldKind::GaussianRational:
        return Scalar::gaussian(small_rat(), small_rat());
    }
    return Scalar::zero(f);
  }

  Scalar nonzero_scalar(const FieldSpec& f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  std::vector<Scalar> vector(const FieldSpec& f, std::size_t n) {
    std::vector<Scalar> v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) v.push_back(scalar(f));
    return v;
  }

 private:
  BigRat small_rat() { return BigRat(range(-4, 4), range(1, 3)); }

  std::uint64_t state_;
};

}  // namespace nilalg

#endif
