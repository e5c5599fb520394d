#include "nilalg/linalg.hpp"

#include <algorithm>

namespace nilalg {

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(Errc::DimensionMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) fail(Errc::MixedFields, "matrix product");
  if (a.cols_ != b.rows_) fail(Errc::DimensionMismatch, "matrix product shapes");
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) fail(Errc::DimensionMismatch, "matrix apply");
  Vec y(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) y[r] += at(r, c) * x[c];
  return y;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& a = res.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(lead, c));
    Scalar inv = a.at(lead, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(lead, c) = a.at(lead, c) * inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, col).is_zero()) continue;
      Scalar factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) = a.at(r, c) - factor * a.at(lead, c);
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) fail(Errc::DimensionMismatch, "inverse of non-square matrix");
  Matrix aug(field_, rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = Scalar::one(field_);
  }
  RrefResult rr = rref(aug);
  if (rr.rank < rows_) fail(Errc::SingularMap, "matrix is singular");
  for (std::size_t k = 0; k < rr.rank; ++k)
    if (rr.pivot_cols[k] != k) fail(Errc::SingularMap, "matrix is singular");
  Matrix inv(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = rr.reduced.at(r, cols_ + c);
  return inv;
}

Scalar Matrix::det() const {
  if (rows_ != cols_) fail(Errc::DimensionMismatch, "det of non-square matrix");
  Matrix a = *this;
  Scalar d = Scalar::one(field_);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t piv = col;
    while (piv < rows_ && a.at(piv, col).is_zero()) ++piv;
    if (piv == rows_) return Scalar::zero(field_);
    if (piv != col) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(a.at(piv, c), a.at(col, c));
      d = -d;
    }
    d = d * a.at(col, col);
    Scalar inv = a.at(col, col).inverse();
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Scalar factor = a.at(r, col) * inv;
      for (std::size_t c = col; c < cols_; ++c)
        a.at(r, c) = a.at(r, c) - factor * a.at(col, c);
    }
  }
  return d;
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, 0, ambient);
  return s;
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(f, ambient);
  for (std::size_t k = 0; k < ambient; ++k) s.pivots_.push_back(k);
  return s;
}

Subspace Subspace::span(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& gens) {
  Matrix m = Matrix::from_rows(f, gens, ambient);
  RrefResult rr = rref(m);
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient;
  s.basis_ = Matrix(f, rr.rank, ambient);
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t c = 0; c < ambient; ++c) s.basis_.at(r, c) = rr.reduced.at(r, c);
  s.pivots_ = rr.pivot_cols;
  return s;
}

bool Subspace::contains_vector(const Vec& v) const {
  if (v.size() != ambient_) fail(Errc::AmbientMismatch, "contains_vector");
  // Reduce v against the echelon basis.
  Vec w = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Scalar coeff = w[pivots_[r]];  // copy: the loop below writes w[pivot]
    if (coeff.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c) w[c] = w[c] - coeff * basis_.at(r, c);
  }
  return is_zero_vec(w);
}

bool Subspace::contains_subspace(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(Errc::AmbientMismatch, "contains_subspace");
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains_vector(other.basis_.row(r))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

Vec Subspace::coordinates_of(const Vec& v) const {
  if (v.size() != ambient_) fail(Errc::AmbientMismatch, "coordinates_of");
  Vec coeffs(dim(), Scalar::zero(field_));
  Vec w = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Scalar coeff = w[pivots_[r]];
    if (coeff.is_zero()) continue;
    coeffs[r] = coeff;
    for (std::size_t c = 0; c < ambient_; ++c) w[c] = w[c] - coeff * basis_.at(r, c);
  }
  if (!is_zero_vec(w)) fail(Errc::NotASubspace, "vector not in subspace");
  return coeffs;
}

Subspace nullspace(const Matrix& m) {
  RrefResult rr = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    Vec v = zero_vec(m.field(), n);
    v[freec] = Scalar::one(m.field());
    for (std::size_t r = 0; r < rr.rank; ++r)
      v[rr.pivot_cols[r]] = -rr.reduced.at(r, freec);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, basis);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
    fail(Errc::AmbientMismatch, "subspace sum");
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < a.dim(); ++r) gens.push_back(a.basis_vector(r));
  for (std::size_t r = 0; r < b.dim(); ++r) gens.push_back(b.basis_vector(r));
  return Subspace::span(a.field(), a.ambient_dim(), gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
    fail(Errc::AmbientMismatch, "subspace intersect");
  const std::size_t n = a.ambient_dim();
  const std::size_t ka = a.dim(), kb = b.dim();
  if (ka == 0 || kb == 0) return Subspace::zero(a.field(), n);
  // Solve sum x_i a_i = sum y_j b_j: nullspace of the n x (ka+kb) matrix
  // [A^T | -B^T].
  Matrix m(a.field(), n, ka + kb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t c = 0; c < n; ++c) m.at(c, i) = a.basis().at(i, c);
  for (std::size_t j = 0; j < kb; ++j)
    for (std::size_t c = 0; c < n; ++c) m.at(c, ka + j) = -b.basis().at(j, c);
  Subspace combos = nullspace(m);
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < combos.dim(); ++r) {
    Vec combo = combos.basis_vector(r);
    Vec v = zero_vec(a.field(), n);
    for (std::size_t i = 0; i < ka; ++i)
      if (!combo[i].is_zero()) v = add(v, scale(combo[i], a.basis_vector(i)));
    gens.push_back(std::move(v));
  }
  return Subspace::span(a.field(), n, gens);
}

Subspace complement_in(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
    fail(Errc::AmbientMismatch, "complement_in");
  if (!b.contains_subspace(a)) fail(Errc::NotASubspace, "complement_in: a is not inside b");
  std::vector<bool> taken(b.ambient_dim(), false);
  for (std::size_t c : a.pivot_cols()) taken[c] = true;
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < b.dim(); ++r)
    if (!taken[b.pivot_cols()[r]]) gens.push_back(b.basis_vector(r));
  return Subspace::span(a.field(), a.ambient_dim(), gens);
}

Vec zero_vec(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t k) {
  Vec v = zero_vec(f, n);
  v[k] = Scalar::one(f);
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vector add");
  Vec r = a;
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vector sub");
  Vec r = a;
  for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (Scalar& s : r) s = c * s;
  return r;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace nilalg
