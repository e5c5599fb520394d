#ifndef NILALG_FIELD_HPP
#define NILALG_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "nilalg/error.hpp"

namespace nilalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class FieldKind { Rational, GaussianRational, Prime };

/// One of the three supported coefficient fields: Q, Q(i), or F_p with p an
/// odd prime. Characteristic 2 is rejected at construction time.
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::int64_t p = 0;  // modulus, Prime only

  static FieldSpec rational() { return {FieldKind::Rational, 0}; }
  static FieldSpec gaussian() { return {FieldKind::GaussianRational, 0}; }
  static FieldSpec prime(std::int64_t p);

  std::int64_t characteristic() const { return kind == FieldKind::Prime ? p : 0; }
  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string str() const;                       // "Q", "Qi", "F7"
  static FieldSpec parse(std::string_view s);    // inverse of str()
};

/// Exact element of a FieldSpec field. Rationals are stored reduced with
/// positive denominator (cpp_rational keeps them canonical); Gaussian values
/// are a pair of such rationals; prime-field values are residues in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rational()) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  /// Embeds an integer (reduces mod p over prime fields).
  static Scalar integer(const FieldSpec& f, long long v);
  /// Embeds a rational; over F_p this is num * den^{-1} (den must be a unit).
  static Scalar rational(const FieldSpec& f, const BigRat& v);
  static Scalar gaussian(const BigRat& re, const BigRat& im);
  static Scalar residue(std::int64_t v, std::int64_t p);
  static Scalar imaginary_unit(const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Exact payload accessors (meaningful for the matching field kind).
  const BigRat& re() const { return re_; }
  const BigRat& im() const { return im_; }
  std::int64_t residue_value() const { return rep_; }

  Scalar operator-() const;
  Scalar inverse() const;  // DivisionByZero on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form: "3/4", "3/4+1/2i", "5 mod 7". parse() accepts the
  /// same plus shorthands ("i", "-i", "2i", bare residues over F_p).
  std::string str() const;
  static Scalar parse(const FieldSpec& f, std::string_view text);

 private:
  FieldSpec field_;
  BigRat re_;
  BigRat im_;
  std::int64_t rep_ = 0;

  static void require_same(const Scalar& a, const Scalar& b);
};

/// True iff x = y^2 for some field element y. ZeroInput on x = 0.
bool is_square(const Scalar& x);

/// Cardinality of F*/(F*)^2: finite(2) for odd-prime fields, infinite for Q
/// and Q(i).
struct SquareClassCount {
  bool finite = false;
  BigInt count = 0;
  static SquareClassCount finite_count(BigInt n) { return {true, std::move(n)}; }
  static SquareClassCount infinite() { return {false, 0}; }
  bool operator==(const SquareClassCount& o) const {
    return finite == o.finite && (!finite || count == o.count);
  }
};

SquareClassCount square_class_count(const FieldSpec& f);

}  // namespace nilalg

#endif
