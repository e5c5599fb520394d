#ifndef NILALG_IO_HPP
#define NILALG_IO_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilalg/algebra.hpp"
#include "nilalg/cohomology.hpp"
#include "nilalg/degeneration.hpp"

namespace nilalg {

/// Algebra file format:
///   {"field":"F3","dim":6,"brackets":[{"i":1,"j":2,"out":[{"k":4,"c":"1"}]},...]}
/// Indices are 1-based, i < j is enforced on load, omitted pairs are zero,
/// and scalars use the canonical Scalar text format. Serialization is
/// canonical (sorted pairs, reduced scalars), so save/load round-trips
/// bit-exactly.
std::string algebra_to_json_text(const Algebra& a);
Algebra algebra_from_json_text(const std::string& text, const std::string& context = "<string>");
Algebra load_algebra_file(const std::string& path);
void save_algebra_file(const Algebra& a, const std::string& path);

/// Skew-form expression syntax: "D45", "2*D23 + D45", "(1/2)*D23 - D45",
/// with single-digit 1-based indices and scalar literals in the given field.
SkewForm parse_skewform(const FieldSpec& f, std::size_t dim, std::string_view text);

/// Matrix file: JSON array of rows of scalar strings; entry [r][c] is row r,
/// column c of a column-acting map (map(e_j) = sum_r m[r][j] e_r).
LinearMap load_matrix_file(const FieldSpec& f, std::size_t dim, const std::string& path);

/// Degeneration witness file:
///   {"field":"Qi",
///    "source":{"catalog":"B_6_3"},
///    "target":{"catalog":"M_6_eps"},
///    "basis":[["t","0",...],...],
///    "epsilon_samples":["0","1","-1","2","1/2"]}
/// source/target may be an inline algebra object, {"file":"path.json"},
/// {"catalog":"name", "params":{"alpha":"1"}}, or a bare string naming a
/// catalog entry (resolved first) or a file path. Basis entries may use the
/// symbols t, i and e; e is bound per epsilon sample.
struct AlgebraRef {
  std::optional<Algebra> inline_algebra;
  std::string catalog_name;
  std::map<std::string, std::string> params;  // raw scalar strings
  std::string file_path;
  bool bare_string = false;  // unresolved name: catalog entry first, else path
};

struct WitnessSpec {
  FieldSpec field;
  AlgebraRef source, target;
  std::vector<std::vector<std::string>> basis_exprs;
  std::vector<std::string> epsilon_samples;
};

WitnessSpec load_witness_file(const std::string& path);

struct WitnessInstance {
  Algebra source, target;
  ParametrizedBasis basis;
  std::optional<Scalar> epsilon;
};

using CatalogBuilder =
    std::function<Algebra(const std::string& name, const std::map<std::string, Scalar>& params,
                          const FieldSpec& field)>;

/// Expands a witness spec into one instance per epsilon sample (or a single
/// instance when no samples are given). Catalog references are resolved by
/// the supplied builder; the family parameter epsilon is forwarded to it.
std::vector<WitnessInstance> instantiate_witness(const WitnessSpec& spec,
                                                 const CatalogBuilder& builder);

}  // namespace nilalg

#endif
