#ifndef NILALG_COHOMOLOGY_HPP
#define NILALG_COHOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilalg/algebra.hpp"

namespace nilalg {

/// Number of Delta_ij basis forms in dimension n, and the lexicographic
/// coordinate layout (1,2),(1,3),...,(1,n),(2,3),...  (0-based internally).
std::size_t pair_count(std::size_t n);
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
std::pair<std::size_t, std::size_t> pair_from_index(std::size_t idx, std::size_t n);

/// Skew-symmetric bilinear form theta = sum c_ij Delta_ij (i < j stored,
/// zero coefficients normalized away).
class SkewForm {
 public:
  SkewForm() : field_(FieldSpec::rational()) {}
  SkewForm(const FieldSpec& f, std::size_t dim) : field_(f), dim_(dim) {}
  static SkewForm delta(const FieldSpec& f, std::size_t dim, std::size_t i, std::size_t j);
  static SkewForm from_coords(const FieldSpec& f, std::size_t dim, const Vec& coords);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::map<std::pair<std::size_t, std::size_t>, Scalar>& coeffs() const { return coeffs_; }

  void set(std::size_t i, std::size_t j, const Scalar& c);  // requires i < j
  Scalar coeff(std::size_t i, std::size_t j) const;         // signed, any i, j

  Scalar eval(const Vec& x, const Vec& y) const;
  Matrix gram() const;
  Vec coords() const;  // in the Delta basis
  bool is_zero() const { return coeffs_.empty(); }

  SkewForm operator+(const SkewForm& o) const;
  SkewForm operator-(const SkewForm& o) const;
  friend SkewForm operator*(const Scalar& c, const SkewForm& t);
  bool operator==(const SkewForm& o) const;

  /// "2*D23 + D45" style rendering; parsing lives in io.hpp.
  std::string str() const;

 private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> coeffs_;
};

enum class CocycleFlavor { BL, M };

/// Cocycle space in Delta coordinates. BL solves the linearized condition
/// over all ordered basis quadruples; M additionally imposes the four-term
/// Malcev condition (so z2(M) is a subspace of z2(BL) by construction).
/// Every returned basis form is re-checked against the unlinearized cocycle
/// condition on seeded random pairs.
Subspace z2(const Algebra& a, CocycleFlavor flavor, std::uint64_t seed = kDefaultSeed);

/// Coboundaries: span of (x,y) -> k-th coordinate of [x,y].
Subspace b2(const Algebra& a);

struct CohomologySpace {
  Algebra algebra;
  CocycleFlavor flavor = CocycleFlavor::BL;
  Subspace z2;
  Subspace b2;
  Subspace h2_complement;  // deterministic complement of b2 inside z2
  std::size_t h2_dim() const { return h2_complement.dim(); }
  /// Representative forms of the chosen H^2 basis.
  std::vector<SkewForm> h2_basis_forms() const;
};

CohomologySpace h2(const Algebra& a, CocycleFlavor flavor, std::uint64_t seed = kDefaultSeed);

/// Coordinates of [theta] in the h2_complement basis (NotACocycle if theta
/// is outside z2).
Vec class_of(const CohomologySpace& space, const SkewForm& theta);

/// Tests [theta] in H^2_M inside H^2_BL, i.e. theta in z2(M) + B^2.
bool is_in_h2m(const CohomologySpace& bl_space, const SkewForm& theta,
               std::uint64_t seed = kDefaultSeed);

/// theta^perp = {x : theta(x, A) = 0}.
Subspace theta_perp(const Algebra& a, const SkewForm& theta);

/// Central extension A_theta on A + V with [x+x',y+y'] = [x,y] + theta(x,y).
/// Every theta must lie in z2(a, BL); NotACocycle otherwise.
Algebra extend(const Algebra& a, const std::vector<SkewForm>& thetas,
               std::uint64_t seed = kDefaultSeed);

struct SubspaceTests {
  bool in_ts = false;
  bool in_us = false;
  bool has_ann_component = false;
  // supporting facts
  bool classes_independent = false;
  bool joint_perp_ann_zero = false;
  bool all_classes_in_h2m = false;
};

SubspaceTests subspace_tests(const Algebra& a, const std::vector<SkewForm>& thetas,
                             std::uint64_t seed = kDefaultSeed);

/// Pullback (phi theta)(x,y) = theta(phi x, phi y); phi must be an
/// automorphism of a (validated by transport).
SkewForm act(const Algebra& a, const LinearMap& phi, const SkewForm& theta);

/// delta = C23*C45 - C24*C35 + C25*C34 of a form on a 5-dimensional space
/// (1-based labels); the orbit-separating invariant of the L_5_8 analysis.
Scalar l58_delta(const SkewForm& theta);

}  // namespace nilalg

#endif
