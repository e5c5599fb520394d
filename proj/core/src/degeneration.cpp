#include "nilalg/degeneration.hpp"

namespace nilalg {

namespace {

using RfVec = std::vector<RatFunc>;
using RfMat = std::vector<RfVec>;

RfVec rf_zero_vec(const FieldSpec& f, std::size_t n) {
  return RfVec(n, RatFunc::zero(f));
}

// Bracket of two rational-function vectors through a's constants.
RfVec rf_bracket(const Algebra& a, const RfVec& x, const RfVec& y) {
  const std::size_t n = a.dim();
  RfVec acc = rf_zero_vec(a.field(), n);
  for (const auto& [key, coeffs] : a.constants()) {
    const auto [i, j] = key;
    RatFunc w = x[i] * y[j] - x[j] * y[i];
    if (w.is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k)
      if (!coeffs[k].is_zero()) acc[k] = acc[k] + w * RatFunc::constant(coeffs[k]);
  }
  return acc;
}

// Gauss-Jordan inverse over the rational-function field.
RfMat rf_inverse(const FieldSpec& f, const RfMat& m) {
  const std::size_t n = m.size();
  RfMat a = m;
  RfMat inv(n, rf_zero_vec(f, n));
  for (std::size_t k = 0; k < n; ++k) inv[k][k] = RatFunc::constant(Scalar::one(f));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) fail(Errc::SingularBasis, "parametrized basis matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    RatFunc d = a[col][col].inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] = a[col][c] * d;
      inv[col][c] = inv[col][c] * d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      RatFunc factor = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] = a[r][c] - factor * a[col][c];
        inv[r][c] = inv[r][c] - factor * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

ParametrizedBasis ParametrizedBasis::identity(const FieldSpec& f, std::size_t n) {
  ParametrizedBasis p;
  p.dim = n;
  p.rows.assign(n, rf_zero_vec(f, n));
  for (std::size_t k = 0; k < n; ++k) p.rows[k][k] = RatFunc::constant(Scalar::one(f));
  return p;
}

Matrix ParametrizedBasis::eval(const Scalar& t0) const {
  Matrix m(t0.field(), dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = rows[r][c].eval(t0);
  return m;
}

RfConstants transported_constants(const Algebra& a, const ParametrizedBasis& P) {
  const std::size_t n = a.dim();
  if (P.dim != n) fail(Errc::DimensionMismatch, "parametrized basis dimension");
  const FieldSpec& f = a.field();
  for (const auto& row : P.rows)
    for (const RatFunc& r : row)
      if (r.field() != f) fail(Errc::MixedFields, "parametrized basis field");

  // [E_i, E_j] = sum_k c'_k E_k means coords([E_i,E_j]) = P^T c', so c' is
  // obtained by applying (P^T)^{-1}.
  RfMat pt(n, rf_zero_vec(f, n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) pt[r][c] = P.rows[c][r];
  RfMat pt_inv = rf_inverse(f, pt);

  RfConstants out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RfVec v = rf_bracket(a, P.rows[i], P.rows[j]);
      RfVec c = rf_zero_vec(f, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k)
          if (!pt_inv[r][k].is_zero() && !v[k].is_zero()) c[r] = c[r] + pt_inv[r][k] * v[k];
      out[{i, j}] = std::move(c);
    }
  return out;
}

DegenerationCheck check_degeneration(const Algebra& a, const Algebra& b,
                                     const ParametrizedBasis& P) {
  if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "check_degeneration dims");
  if (a.field() != b.field()) fail(Errc::MixedFields, "check_degeneration fields");
  const std::size_t n = a.dim();
  RfConstants cs = transported_constants(a, P);
  Scalar zero_pt = Scalar::zero(a.field());

  DegenerationCheck res;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::vector<RatFunc>& c = cs[{i, j}];
      Vec expected = b.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!c[k].is_polynomial()) {
          res.verified = false;
          res.reason = "transported constant is not polynomial in t";
          res.i = i + 1;
          res.j = j + 1;
          res.k = k + 1;
          res.entry = c[k].str();
          return res;
        }
        if (c[k].eval(zero_pt) != expected[k]) {
          res.verified = false;
          res.reason = "t = 0 limit does not match the target constant";
          res.i = i + 1;
          res.j = j + 1;
          res.k = k + 1;
          res.entry = c[k].str();
          return res;
        }
      }
    }
  res.verified = true;
  return res;
}

DerObstruction obstruction_der(const Algebra& a, const Algebra& b) {
  DerObstruction o;
  o.der_a = derivations(a).dim;
  o.der_b = derivations(b).dim;
  o.obstructed = o.der_a >= o.der_b;
  return o;
}

}  // namespace nilalg
