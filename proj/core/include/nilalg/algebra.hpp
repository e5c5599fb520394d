#ifndef NILALG_ALGEBRA_HPP
#define NILALG_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilalg/linalg.hpp"
#include "nilalg/rng.hpp"

namespace nilalg {

/// Anticommutative algebra given by structure constants. Only pairs i < j
/// are stored (0-based); [e_j,e_i] = -[e_i,e_j] and [e_i,e_i] = 0 are
/// structural. Zero brackets are normalized away, so equal algebras have
/// equal constant maps.
class Algebra {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  Algebra() : field_(FieldSpec::rational()) {}
  Algebra(const FieldSpec& f, std::size_t dim) : field_(f), dim_(dim) {}

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::map<Key, Vec>& constants() const { return constants_; }

  /// Sets [e_i, e_j] = coeffs (requires i < j, coeffs of length dim).
  void set_bracket(std::size_t i, std::size_t j, Vec coeffs);
  void set_bracket_unit(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  /// [e_i, e_j] for arbitrary i, j (sign and diagonal handled).
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  bool operator==(const Algebra& o) const;
  bool operator!=(const Algebra& o) const { return !(*this == o); }

 private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::map<Key, Vec> constants_;
};

/// [[x,y],z] + [[y,z],x] + [[z,x],y].
Vec jacobian(const Algebra& a, const Vec& x, const Vec& y, const Vec& z);

enum class IdentityKind { Lie, Malcev, BinaryLie, CD };

const char* identity_name(IdentityKind k);

struct IdentityResult {
  bool holds = true;
  std::vector<Vec> witness;  // first counterexample tuple when !holds
  bool from_guard = false;   // witness came from the randomized unlinearized check
};

/// Scans the identity's multilinear form over all ordered basis tuples and,
/// for Malcev/BinaryLie, additionally samples the unlinearized identity on
/// seeded random tuples as a consistency guard.
IdentityResult check_identity(const Algebra& a, IdentityKind kind,
                              std::uint64_t seed = kDefaultSeed, int guard_samples = 200);

struct PowerFiltration {
  std::vector<Subspace> terms;  // A^1, A^2, ... up to 0 or detected stability
  bool nilpotent = false;
  std::size_t nilindex = 0;  // smallest n with A^n = 0 (when nilpotent)
  std::vector<std::size_t> dims() const;
};

/// A^{n+1} = sum of [A^a, A^b] over a + b = n + 1. The sequence can plateau
/// before dropping further, so stability is only declared once A^{2k} = A^k.
PowerFiltration power_filtration(const Algebra& a);

/// Ann(A) = {x : [x, A] = 0}.
Subspace annihilator(const Algebra& a);

/// Linear map as a matrix acting on coordinate columns: map(e_j) = column j.
struct LinearMap {
  Matrix matrix;
  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }
  Vec apply(const Vec& x) const { return matrix.apply(x); }
};

struct DerivationSpace {
  std::size_t dim = 0;
  std::vector<LinearMap> basis;
};

/// Maps D with D[x,y] = [Dx,y] + [x,Dy], solved exactly on basis pairs.
DerivationSpace derivations(const Algebra& a);

/// Structure constants of the same product in the new basis f_i = p(e_i).
/// SingularMap if p is not invertible.
Algebra transport(const Algebra& a, const LinearMap& p);

/// True iff transport(a, p) equals b constant-for-constant, i.e. p is an
/// isomorphism from b onto a.
bool is_isomorphism(const LinearMap& p, const Algebra& a, const Algebra& b);

struct IdentityFlags {
  bool lie = false, malcev = false, binary_lie = false, cd = false;
  bool operator==(const IdentityFlags& o) const {
    return lie == o.lie && malcev == o.malcev && binary_lie == o.binary_lie && cd == o.cd;
  }
};

IdentityFlags identity_flags(const Algebra& a, std::uint64_t seed = kDefaultSeed);

/// Isomorphism-invariant summary; differing fingerprints certify
/// non-isomorphism. h2 dimensions are supplied by the cohomology solver.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> power_dims;
  bool nilpotent = false;
  std::size_t nilindex = 0;
  std::size_t ann_dim = 0;
  std::size_t der_dim = 0;
  std::size_t h2bl_dim = 0;
  std::size_t h2m_dim = 0;
  IdentityFlags flags;

  bool operator==(const Fingerprint& o) const;
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
  std::string str() const;
};

Fingerprint fingerprint(const Algebra& a, std::uint64_t seed = kDefaultSeed);

/// Exhaustive isomorphism search over a prime field, pruned by the canonical
/// filtration (images of e_i must respect the A^k and Ann memberships that
/// e_i has on the source side, which every isomorphism preserves). Returns
/// an explicit map with transport(a, map) == b, or nullopt when the searched
/// class is exhausted. SearchSpaceTooLarge once `budget` nodes are visited.
std::optional<LinearMap> brute_iso(const Algebra& a, const Algebra& b,
                                   std::uint64_t budget = 200'000'000);

}  // namespace nilalg

#endif
