#include "nilalg/ratfunc.hpp"

#include <cctype>
#include <sstream>

namespace nilalg {

Poly Poly::constant(const Scalar& c) {
  Poly p(c.field());
  if (!c.is_zero()) p.coeffs_.push_back(c);
  return p;
}

Poly Poly::t(const FieldSpec& f) {
  Poly p(f);
  p.coeffs_ = {Scalar::zero(f), Scalar::one(f)};
  return p;
}

Poly Poly::from_coeffs(const FieldSpec& f, std::vector<Scalar> coeffs) {
  Poly p(f);
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coeff(std::size_t k) const {
  if (k >= coeffs_.size()) return Scalar::zero(field_);
  return coeffs_[k];
}

const Scalar& Poly::leading() const {
  if (coeffs_.empty()) fail(Errc::ZeroInput, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

Poly Poly::operator+(const Poly& o) const {
  if (field_ != o.field_) fail(Errc::MixedFields, "poly +");
  Poly r(field_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(field_));
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = coeff(k) + o.coeff(k);
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Scalar& c : r.coeffs_) c = -c;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (field_ != o.field_) fail(Errc::MixedFields, "poly *");
  if (is_zero() || o.is_zero()) return Poly(field_);
  Poly r(field_);
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  r.trim();
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
  if (field_ != divisor.field_) fail(Errc::MixedFields, "poly divrem");
  if (divisor.is_zero()) fail(Errc::DivisionByZero, "poly division by zero");
  Poly rem = *this;
  Poly quot(field_);
  if (degree() >= divisor.degree())
    quot.coeffs_.assign(degree() - divisor.degree() + 1, Scalar::zero(field_));
  Scalar lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    std::size_t shift = rem.degree() - divisor.degree();
    Scalar factor = rem.leading() * lead_inv;
    quot.coeffs_[shift] = factor;
    for (std::size_t k = 0; k < divisor.coeffs_.size(); ++k)
      rem.coeffs_[shift + k] -= factor * divisor.coeffs_[k];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  Scalar inv = leading().inverse();
  for (Scalar& c : r.coeffs_) c = c * inv;
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    std::string cs = coeffs_[k].str();
    if (!first) {
      if (!cs.empty() && cs[0] == '-') {
        os << " - ";
        cs = (-coeffs_[k]).str();
      } else {
        os << " + ";
      }
    }
    bool is_unit = cs == "1";
    bool needs_parens = cs.find('+') != std::string::npos ||
                        cs.find('-', 1) != std::string::npos ||
                        cs.find(" mod ") != std::string::npos;
    if (k == 0) {
      os << (needs_parens ? "(" + cs + ")" : cs);
    } else {
      if (!is_unit) os << (needs_parens ? "(" + cs + ")" : cs) << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divrem(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.field() != den_.field()) fail(Errc::MixedFields, "rational function");
  if (den_.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(Scalar::one(num_.field()));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divrem(g).first;
    den_ = den_.divrem(g).first;
  }
  Scalar lead_inv = den_.leading().inverse();
  num_ = num_ * Poly::constant(lead_inv);
  den_ = den_ * Poly::constant(lead_inv);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) fail(Errc::DivisionByZero, "rational function division");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

bool RatFunc::operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

Scalar RatFunc::eval(const Scalar& x) const {
  Scalar d = den_.eval(x);
  if (d.is_zero()) fail(Errc::DivisionByZero, "denominator vanishes at evaluation point");
  return num_.eval(x) / d;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  std::string n = num_.str();
  std::string d = den_.str();
  if (num_.degree() > 0) n = "(" + n + ")";
  if (den_.degree() > 0) d = "(" + d + ")";
  return n + "/" + d;
}

namespace {

struct ExprParser {
  const FieldSpec& field;
  std::string_view text;
  std::size_t pos;
  const std::optional<Scalar>& epsilon;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  RatFunc parse_expr() {
    RatFunc acc = parse_term();
    for (;;) {
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        return acc;
    }
  }

  RatFunc parse_term() {
    RatFunc acc = parse_unary();
    for (;;) {
      if (eat('*'))
        acc = acc * parse_unary();
      else if (eat('/'))
        acc = acc / parse_unary();
      else
        return acc;
    }
  }

  RatFunc parse_unary() {
    if (eat('-')) return -parse_unary();
    if (eat('+')) return parse_unary();
    return parse_factor();
  }

  RatFunc parse_factor() {
    RatFunc base = parse_primary();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail(Errc::ParseError, "expected exponent in rational-function expression");
      unsigned long e = std::stoul(std::string(text.substr(start, pos - start)));
      RatFunc acc = RatFunc::constant(Scalar::one(field));
      for (unsigned long k = 0; k < e; ++k) acc = acc * base;
      return acc;
    }
    return base;
  }

  RatFunc parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail(Errc::ParseError, "unexpected end of expression");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      RatFunc inner = parse_expr();
      if (!eat(')')) fail(Errc::ParseError, "missing ')' in expression");
      return inner;
    }
    if (c == 't') {
      ++pos;
      return RatFunc::t(field);
    }
    if (c == 'i') {
      ++pos;
      return RatFunc::constant(Scalar::imaginary_unit(field));
    }
    if (c == 'e') {
      ++pos;
      if (!epsilon) fail(Errc::MissingParam, "expression uses e but no epsilon value is bound");
      return RatFunc::constant(*epsilon);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      BigInt v(std::string(text.substr(start, pos - start)));
      return RatFunc::constant(Scalar::rational(field, BigRat(v)));
    }
    fail(Errc::ParseError, std::string("unexpected character '") + c + "' in expression");
  }
};

}  // namespace

RatFunc parse_ratfunc(const FieldSpec& f, std::string_view text,
                      const std::optional<Scalar>& epsilon) {
  ExprParser p{f, text, 0, epsilon};
  RatFunc r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    fail(Errc::ParseError, "trailing characters in expression '" + std::string(text) + "'");
  return r;
}

}  // namespace nilalg
