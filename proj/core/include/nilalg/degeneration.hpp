#ifndef NILALG_DEGENERATION_HPP
#define NILALG_DEGENERATION_HPP

#include <map>
#include <string>
#include <vector>

#include "nilalg/algebra.hpp"
#include "nilalg/ratfunc.hpp"

namespace nilalg {

/// Degeneration witness: row i holds the coordinates of the parametrized
/// basis vector E_i^t in the reference basis. The matrix must be invertible
/// over the rational-function field (basis for all but finitely many t).
struct ParametrizedBasis {
  std::size_t dim = 0;
  std::vector<std::vector<RatFunc>> rows;

  static ParametrizedBasis identity(const FieldSpec& f, std::size_t n);
  /// Evaluation at a concrete parameter value (rows stay rows).
  Matrix eval(const Scalar& t0) const;
};

using RfConstants = std::map<Algebra::Key, std::vector<RatFunc>>;

/// Structure constants c'_ij^k(t) of a's product in the basis E_i^t, from an
/// exact linear solve over the rational-function field. SingularBasis when
/// the witness matrix is singular.
RfConstants transported_constants(const Algebra& a, const ParametrizedBasis& P);

struct DegenerationCheck {
  bool verified = false;
  std::string reason;            // empty when verified
  std::size_t i = 0, j = 0, k = 0;  // offending entry (1-based) when failed
  std::string entry;             // its rational-function text
};

/// Verified iff every transported constant is a polynomial in t and the
/// t = 0 limit reproduces b's constants exactly.
DegenerationCheck check_degeneration(const Algebra& a, const Algebra& b,
                                     const ParametrizedBasis& P);

struct DerObstruction {
  bool obstructed = false;  // dim Der(a) >= dim Der(b) rules the degeneration out
  std::size_t der_a = 0;
  std::size_t der_b = 0;
};

/// Necessary condition for a proper degeneration a -> b: the derivation
/// dimension must strictly increase.
DerObstruction obstruction_der(const Algebra& a, const Algebra& b);

}  // namespace nilalg

#endif
