#include "nilalg/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <sstream>

namespace nilalg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::InvalidField: return "InvalidField";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotASubspace: return "NotASubspace";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMap: return "SingularMap";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::UnknownEntry: return "UnknownEntry";
    case Errc::MissingParam: return "MissingParam";
    case Errc::SingularBasis: return "SingularBasis";
    case Errc::ParseError: return "ParseError";
  }
  return "Error";
}

namespace {

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t acc = 1 % p;
  base = mod_pos(base, p);
  while (exp > 0) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

std::int64_t mod_inverse(std::int64_t v, std::int64_t p) {
  v = mod_pos(v, p);
  if (v == 0) fail(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  return mod_pow(v, p - 2, p);
}

BigInt reduce_mod(const BigInt& v, std::int64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r;
}

bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  BigInt s = boost::multiprecision::sqrt(n);
  if (s * s != n) return false;
  if (root) *root = s;
  return true;
}

// Rational square test on a reduced fraction: positive with square numerator
// and denominator.
bool is_square_rat(const BigRat& x, BigRat* root = nullptr) {
  if (x < 0) return false;
  BigInt rn, rd;
  if (!is_perfect_square(boost::multiprecision::numerator(x), &rn)) return false;
  if (!is_perfect_square(boost::multiprecision::denominator(x), &rd)) return false;
  if (root) *root = BigRat(rn, rd);
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p == 2) fail(Errc::InvalidField, "characteristic 2 is not supported");
  if (!is_prime_i64(p)) fail(Errc::InvalidField, std::to_string(p) + " is not prime");
  if (p >= (std::int64_t{1} << 31))
    fail(Errc::InvalidField, "prime modulus too large (must fit in 31 bits)");
  return {FieldKind::Prime, p};
}

std::string FieldSpec::str() const {
  switch (kind) {
    case FieldKind::Rational: return "Q";
    case FieldKind::GaussianRational: return "Qi";
    case FieldKind::Prime: return "F" + std::to_string(p);
  }
  return "?";
}

FieldSpec FieldSpec::parse(std::string_view s) {
  if (s == "Q") return rational();
  if (s == "Qi") return gaussian();
  if (s.size() >= 2 && s[0] == 'F') {
    std::int64_t p = 0;
    for (char c : s.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(Errc::ParseError, "bad field spec '" + std::string(s) + "'");
      p = p * 10 + (c - '0');
      if (p >= (std::int64_t{1} << 31)) fail(Errc::InvalidField, "prime modulus too large");
    }
    return prime(p);
  }
  fail(Errc::ParseError, "bad field spec '" + std::string(s) + "' (expected Q, Qi or F<p>)");
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return integer(f, 1); }

Scalar Scalar::integer(const FieldSpec& f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::Prime)
    s.rep_ = mod_pos(v, f.p);
  else
    s.re_ = v;
  return s;
}

Scalar Scalar::rational(const FieldSpec& f, const BigRat& v) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::Prime) {
    BigInt den = reduce_mod(boost::multiprecision::denominator(v), f.p);
    if (den == 0) fail(Errc::DivisionByZero, "denominator vanishes mod " + std::to_string(f.p));
    std::int64_t num = static_cast<std::int64_t>(reduce_mod(boost::multiprecision::numerator(v), f.p));
    s.rep_ = num * mod_inverse(static_cast<std::int64_t>(den), f.p) % f.p;
  } else {
    s.re_ = v;
  }
  return s;
}

Scalar Scalar::gaussian(const BigRat& re, const BigRat& im) {
  Scalar s;
  s.field_ = FieldSpec::gaussian();
  s.re_ = re;
  s.im_ = im;
  return s;
}

Scalar Scalar::residue(std::int64_t v, std::int64_t p) {
  Scalar s;
  s.field_ = FieldSpec::prime(p);
  s.rep_ = mod_pos(v, p);
  return s;
}

Scalar Scalar::imaginary_unit(const FieldSpec& f) {
  if (f.kind != FieldKind::GaussianRational)
    fail(Errc::InvalidField, "imaginary unit requires field Qi");
  return gaussian(0, 1);
}

bool Scalar::is_zero() const {
  if (field_.kind == FieldKind::Prime) return rep_ == 0;
  return re_ == 0 && im_ == 0;
}

bool Scalar::is_one() const {
  if (field_.kind == FieldKind::Prime) return rep_ == 1 % field_.p;
  return re_ == 1 && im_ == 0;
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_)
    fail(Errc::MixedFields, a.field_.str() + " vs " + b.field_.str());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.kind == FieldKind::Prime)
    r.rep_ = rep_ == 0 ? 0 : field_.p - rep_;
  else {
    r.re_ = -re_;
    r.im_ = -im_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  Scalar r = *this;
  switch (field_.kind) {
    case FieldKind::Prime:
      r.rep_ = mod_inverse(rep_, field_.p);
      break;
    case FieldKind::Rational:
      r.re_ = 1 / re_;
      break;
    case FieldKind::GaussianRational: {
      BigRat n = re_ * re_ + im_ * im_;
      r.re_ = re_ / n;
      r.im_ = -im_ / n;
      break;
    }
  }
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar r = a;
  if (a.field_.kind == FieldKind::Prime)
    r.rep_ = (a.rep_ + b.rep_) % a.field_.p;
  else {
    r.re_ = a.re_ + b.re_;
    r.im_ = a.im_ + b.im_;
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same(a, b);
  Scalar r = a;
  switch (a.field_.kind) {
    case FieldKind::Prime:
      r.rep_ = a.rep_ * b.rep_ % a.field_.p;
      break;
    case FieldKind::Rational:
      r.re_ = a.re_ * b.re_;
      break;
    case FieldKind::GaussianRational:
      r.re_ = a.re_ * b.re_ - a.im_ * b.im_;
      r.im_ = a.re_ * b.im_ + a.im_ * b.re_;
      break;
  }
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  if (field_.kind == FieldKind::Prime) return rep_ == o.rep_;
  return re_ == o.re_ && im_ == o.im_;
}

namespace {

std::string rat_str(const BigRat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

BigRat parse_rat(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) fail(Errc::ParseError, "empty rational literal");
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) fail(Errc::ParseError, "zero denominator in '" + s + "'");
    return BigRat(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad rational literal '" + s + "'");
  }
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

std::string Scalar::str() const {
  switch (field_.kind) {
    case FieldKind::Prime:
      return std::to_string(rep_) + " mod " + std::to_string(field_.p);
    case FieldKind::Rational:
      return rat_str(re_);
    case FieldKind::GaussianRational: {
      if (im_ == 0) return rat_str(re_);
      std::string out = rat_str(re_);
      out += im_ < 0 ? "-" : "+";
      out += rat_str(boost::multiprecision::abs(im_));
      out += "i";
      return out;
    }
  }
  return "?";
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  switch (f.kind) {
    case FieldKind::Prime: {
      std::string s(text);
      std::size_t mod_pos_idx = s.find(" mod ");
      if (mod_pos_idx != std::string::npos) {
        std::string mod_part = strip_spaces(s.substr(mod_pos_idx + 5));
        std::string val_part = strip_spaces(s.substr(0, mod_pos_idx));
        BigInt written_p;
        try {
          written_p = BigInt(mod_part);
        } catch (const std::exception&) {
          fail(Errc::ParseError, "bad modulus in '" + s + "'");
        }
        if (written_p != f.p)
          fail(Errc::MixedFields, "literal '" + s + "' is not in " + f.str());
        s = val_part;
      } else {
        s = strip_spaces(s);
      }
      BigRat v = parse_rat(s);
      return rational(f, v);
    }
    case FieldKind::Rational: {
      std::string s = strip_spaces(text);
      return rational(f, parse_rat(s));
    }
    case FieldKind::GaussianRational: {
      std::string s = strip_spaces(text);
      if (s.empty()) fail(Errc::ParseError, "empty scalar literal");
      if (s.back() != 'i') return gaussian(parse_rat(s), 0);
      s.pop_back();  // drop the trailing i
      // Split at the last top-level +/- that is not a leading sign.
      std::size_t split = std::string::npos;
      for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
          if (s[k - 1] == '/' ) continue;  // e.g. "1/-2" is rejected later anyway
          split = k;
          break;
        }
      }
      if (split == std::string::npos) {
        // Pure imaginary: "i", "-i", "2i", "-3/4i".
        if (s.empty()) return gaussian(0, 1);
        if (s == "-") return gaussian(0, -1);
        if (s == "+") return gaussian(0, 1);
        return gaussian(0, parse_rat(s));
      }
      BigRat re = parse_rat(s.substr(0, split));
      std::string im_part = s.substr(split);
      BigRat im;
      if (im_part == "+")
        im = 1;
      else if (im_part == "-")
        im = -1;
      else
        im = parse_rat(im_part);
      return gaussian(re, im);
    }
  }
  fail(Errc::ParseError, "unreachable");
}

bool is_square(const Scalar& x) {
  if (x.is_zero()) fail(Errc::ZeroInput, "is_square(0)");
  const FieldSpec& f = x.field();
  switch (f.kind) {
    case FieldKind::Prime:
      // Euler's criterion.
      return mod_pow(x.residue_value(), (f.p - 1) / 2, f.p) == 1 % f.p;
    case FieldKind::Rational:
      return is_square_rat(x.re());
    case FieldKind::GaussianRational: {
      const BigRat& a = x.re();
      const BigRat& b = x.im();
      if (b == 0) return is_square_rat(a) || is_square_rat(-a);
      // (u+vi)^2 = a+bi with u,v rational forces norm a^2+b^2 to be a
      // rational square s^2 and u^2 = (a+s)/2 a rational square.
      BigRat s;
      if (!is_square_rat(a * a + b * b, &s)) return false;
      return is_square_rat((a + s) / 2);
    }
  }
  return false;
}

SquareClassCount square_class_count(const FieldSpec& f) {
  switch (f.kind) {
    case FieldKind::Prime:
      return SquareClassCount::finite_count(2);
    case FieldKind::Rational:
    case FieldKind::GaussianRational:
      return SquareClassCount::infinite();
  }
  return SquareClassCount::infinite();
}

}  // namespace nilalg
