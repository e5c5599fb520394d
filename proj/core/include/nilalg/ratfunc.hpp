#ifndef NILALG_RATFUNC_HPP
#define NILALG_RATFUNC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilalg/field.hpp"

namespace nilalg {

/// Dense univariate polynomial in t over a Scalar field. Coefficients are
/// normalized (no trailing zeros); the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() : field_(FieldSpec::rational()) {}
  explicit Poly(const FieldSpec& f) : field_(f) {}
  static Poly constant(const Scalar& c);
  static Poly t(const FieldSpec& f);
  static Poly from_coeffs(const FieldSpec& f, std::vector<Scalar> coeffs);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coeff(std::size_t k) const;
  const Scalar& leading() const;
  bool is_one() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Quotient and remainder with deg(rem) < deg(divisor).
  std::pair<Poly, Poly> divrem(const Poly& divisor) const;
  Scalar eval(const Scalar& x) const;
  Poly monic() const;

  std::string str() const;

 private:
  FieldSpec field_;
  std::vector<Scalar> coeffs_;
  void trim();
};

/// Monic-normalized gcd.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Reduced fraction of polynomials; denominator monic and nonzero.
class RatFunc {
 public:
  RatFunc() : num_(FieldSpec::rational()), den_(Poly::constant(Scalar::one(FieldSpec::rational()))) {}
  RatFunc(Poly num, Poly den);  // reduces; DivisionByZero on zero denominator
  static RatFunc constant(const Scalar& c) { return RatFunc(Poly::constant(c), Poly::constant(Scalar::one(c.field()))); }
  static RatFunc zero(const FieldSpec& f) { return constant(Scalar::zero(f)); }
  static RatFunc t(const FieldSpec& f) { return RatFunc(Poly::t(f), Poly::constant(Scalar::one(f))); }

  const FieldSpec& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the reduced denominator is the constant 1.
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc inverse() const;
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  /// Evaluation; DivisionByZero when the denominator vanishes at x.
  Scalar eval(const Scalar& x) const;

  std::string str() const;

 private:
  Poly num_, den_;
};

/// Parses "i*t^2 + (1-e)*t^2", "1/t", "-t^3" style expressions. `epsilon`
/// binds the symbol e; `i` requires the Gaussian field.
RatFunc parse_ratfunc(const FieldSpec& f, std::string_view text,
                      const std::optional<Scalar>& epsilon = std::nullopt);

}  // namespace nilalg

#endif
