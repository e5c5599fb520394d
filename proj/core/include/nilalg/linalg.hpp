#ifndef NILALG_LINALG_HPP
#define NILALG_LINALG_HPP

#include <cstddef>
#include <vector>

#include "nilalg/field.hpp"

namespace nilalg {

using Vec = std::vector<Scalar>;

/// Dense matrix over one FieldSpec, row-major. All arithmetic is exact.
class Matrix {
 public:
  Matrix() : field_(FieldSpec::rational()) {}
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows, std::size_t cols);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Vec apply(const Vec& x) const;  // matrix * column vector
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Inverse via Gauss-Jordan; SingularMap if not invertible.
  Matrix inverse() const;
  Scalar det() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by exact Gaussian elimination.
RrefResult rref(const Matrix& m);

/// Subspace of F^n stored as an echelon-reduced basis (rows in RREF with
/// zero rows dropped). Equal subspaces have identical stored bases.
class Subspace {
 public:
  Subspace() : field_(FieldSpec::rational()) {}
  /// Zero subspace of F^n.
  static Subspace zero(const FieldSpec& f, std::size_t ambient);
  static Subspace full(const FieldSpec& f, std::size_t ambient);
  /// Span of arbitrary vectors.
  static Subspace span(const FieldSpec& f, std::size_t ambient, const std::vector<Vec>& gens);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t k) const { return basis_.row(k); }
  std::vector<std::size_t> pivot_cols() const { return pivots_; }

  bool contains_vector(const Vec& v) const;
  bool contains_subspace(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Coefficients of v in the stored basis; NotASubspace if v is outside.
  Vec coordinates_of(const Vec& v) const;

 private:
  FieldSpec field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {v : m v = 0}.
Subspace nullspace(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Direct complement of a inside b (a must be contained in b), chosen
/// deterministically: keep the echelon basis vectors of b whose pivot column
/// is not a pivot column of a.
Subspace complement_in(const Subspace& a, const Subspace& b);

// Small vector helpers shared across modules.
Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t k);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
bool is_zero_vec(const Vec& v);

}  // namespace nilalg

#endif
