#include "nilalg/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace nilalg {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json(const std::string& text, const std::string& context) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line number for the error report
    std::size_t line = 1;
    for (std::size_t k = 0; k < e.byte && k < text.size(); ++k)
      if (text[k] == '\n') ++line;
    fail(Errc::ParseError,
         context + ": line " + std::to_string(line) + ": " + e.what());
  }
}

[[noreturn]] void field_error(const std::string& context, const std::string& where,
                              const std::string& what) {
  fail(Errc::ParseError, context + ": " + where + ": " + what);
}

}  // namespace

std::string algebra_to_json_text(const Algebra& a) {
  json out;
  out["field"] = a.field().str();
  out["dim"] = a.dim();
  json brackets = json::array();
  for (const auto& [key, coeffs] : a.constants()) {
    json entry;
    entry["i"] = key.first + 1;
    entry["j"] = key.second + 1;
    json outs = json::array();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      outs.push_back(json{{"k", k + 1}, {"c", coeffs[k].str()}});
    }
    entry["out"] = std::move(outs);
    brackets.push_back(std::move(entry));
  }
  out["brackets"] = std::move(brackets);
  return out.dump(2) + "\n";
}

Algebra algebra_from_json_text(const std::string& text, const std::string& context) {
  json j = parse_json(text, context);
  if (!j.is_object()) field_error(context, "<root>", "expected a JSON object");
  if (!j.contains("field") || !j["field"].is_string())
    field_error(context, "field", "missing or not a string");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    field_error(context, "dim", "missing or not a non-negative integer");
  FieldSpec f = FieldSpec::parse(j["field"].get<std::string>());
  std::size_t dim = j["dim"].get<std::size_t>();
  Algebra a(f, dim);
  if (!j.contains("brackets")) return a;
  if (!j["brackets"].is_array()) field_error(context, "brackets", "expected an array");
  std::size_t idx = 0;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const json& entry : j["brackets"]) {
    std::string where = "brackets[" + std::to_string(idx) + "]";
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j"))
      field_error(context, where, "expected an object with i and j");
    if (!entry["i"].is_number_unsigned() || !entry["j"].is_number_unsigned())
      field_error(context, where, "i and j must be positive integers");
    std::size_t i = entry["i"].get<std::size_t>();
    std::size_t jj = entry["j"].get<std::size_t>();
    if (i < 1 || jj < 1 || i >= jj || jj > dim)
      field_error(context, where, "requires 1 <= i < j <= dim");
    if (!seen.insert({i - 1, jj - 1}).second)
      field_error(context, where, "duplicate bracket pair");
    Vec coeffs = zero_vec(f, dim);
    if (entry.contains("out")) {
      if (!entry["out"].is_array()) field_error(context, where + ".out", "expected an array");
      std::size_t oidx = 0;
      for (const json& o : entry["out"]) {
        std::string owhere = where + ".out[" + std::to_string(oidx) + "]";
        if (!o.is_object() || !o.contains("k") || !o.contains("c"))
          field_error(context, owhere, "expected an object with k and c");
        if (!o["k"].is_number_unsigned()) field_error(context, owhere + ".k", "must be positive");
        std::size_t k = o["k"].get<std::size_t>();
        if (k < 1 || k > dim) field_error(context, owhere + ".k", "out of range");
        if (!o["c"].is_string()) field_error(context, owhere + ".c", "must be a scalar string");
        try {
          coeffs[k - 1] = Scalar::parse(f, o["c"].get<std::string>());
        } catch (const Error& e) {
          field_error(context, owhere + ".c", e.what());
        }
        ++oidx;
      }
    }
    a.set_bracket(i - 1, jj - 1, std::move(coeffs));
    ++idx;
  }
  return a;
}

Algebra load_algebra_file(const std::string& path) {
  return algebra_from_json_text(read_file(path), path);
}

void save_algebra_file(const Algebra& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot write file '" + path + "'");
  out << algebra_to_json_text(a);
}

SkewForm parse_skewform(const FieldSpec& f, std::size_t dim, std::string_view text) {
  SkewForm form(f, dim);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool first = true;
  skip_ws();
  if (pos == text.size()) fail(Errc::ParseError, "empty skew-form expression");
  if (text.substr(pos) == "0") return form;
  while (pos < text.size()) {
    skip_ws();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      fail(Errc::ParseError, "expected + or - between skew-form terms");
    }
    if (pos >= text.size()) fail(Errc::ParseError, "dangling sign in skew-form expression");

    Scalar coeff = Scalar::one(f);
    if (text[pos] == '(') {
      std::size_t close = text.find(')', pos);
      if (close == std::string::npos) fail(Errc::ParseError, "missing ')' in coefficient");
      coeff = Scalar::parse(f, text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      skip_ws();
      if (pos >= text.size() || text[pos] != '*')
        fail(Errc::ParseError, "expected '*' after coefficient");
      ++pos;
      skip_ws();
    } else if (text[pos] != 'D') {
      // unparenthesized literal up to the '*'
      std::size_t star = text.find('*', pos);
      if (star == std::string::npos)
        fail(Errc::ParseError, "expected D<i><j> term in skew-form expression");
      coeff = Scalar::parse(f, text.substr(pos, star - pos));
      pos = star + 1;
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != 'D')
      fail(Errc::ParseError, "expected D<i><j> in skew-form expression");
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(Errc::ParseError, "expected first index after D");
    std::size_t i = static_cast<std::size_t>(text[pos] - '0');
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(Errc::ParseError, "expected second index after D");
    std::size_t j = static_cast<std::size_t>(text[pos] - '0');
    ++pos;
    if (i < 1 || j < 1 || i >= j || j > dim)
      fail(Errc::ParseError, "D" + std::to_string(i) + std::to_string(j) +
                                 " requires 1 <= i < j <= dim");
    if (negative) coeff = -coeff;
    form.set(i - 1, j - 1, form.coeff(i - 1, j - 1) + coeff);
    first = false;
    skip_ws();
  }
  return form;
}

LinearMap load_matrix_file(const FieldSpec& f, std::size_t dim, const std::string& path) {
  json j = parse_json(read_file(path), path);
  if (!j.is_array() || j.size() != dim)
    fail(Errc::ParseError, path + ": expected an array of " + std::to_string(dim) + " rows");
  Matrix m(f, dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!j[r].is_array() || j[r].size() != dim)
      fail(Errc::ParseError, path + ": row " + std::to_string(r) + " must have " +
                                 std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c) {
      const json& cell = j[r][c];
      std::string text = cell.is_string() ? cell.get<std::string>() : cell.dump();
      m.at(r, c) = Scalar::parse(f, text);
    }
  }
  return LinearMap{std::move(m)};
}

namespace {

AlgebraRef parse_algebra_ref(const json& j, const std::string& context, const std::string& where) {
  AlgebraRef ref;
  if (j.is_string()) {
    // bare string: resolved as a catalog name first, else as a file path
    ref.catalog_name = j.get<std::string>();
    ref.bare_string = true;
    return ref;
  }
  if (!j.is_object()) field_error(context, where, "expected a string or object");
  if (j.contains("catalog")) {
    ref.catalog_name = j["catalog"].get<std::string>();
    if (j.contains("params")) {
      for (const auto& [key, value] : j["params"].items())
        ref.params[key] = value.get<std::string>();
    }
    return ref;
  }
  if (j.contains("file")) {
    ref.file_path = j["file"].get<std::string>();
    return ref;
  }
  // inline algebra object
  ref.inline_algebra = algebra_from_json_text(j.dump(), context + ":" + where);
  return ref;
}

}  // namespace

WitnessSpec load_witness_file(const std::string& path) {
  json j = parse_json(read_file(path), path);
  if (!j.is_object()) field_error(path, "<root>", "expected a JSON object");
  WitnessSpec spec;
  if (!j.contains("field") || !j["field"].is_string())
    field_error(path, "field", "missing or not a string");
  spec.field = FieldSpec::parse(j["field"].get<std::string>());
  if (!j.contains("source") || !j.contains("target"))
    field_error(path, "source/target", "both are required");
  spec.source = parse_algebra_ref(j["source"], path, "source");
  spec.target = parse_algebra_ref(j["target"], path, "target");
  if (!j.contains("basis") || !j["basis"].is_array())
    field_error(path, "basis", "expected an array of rows");
  for (const json& row : j["basis"]) {
    if (!row.is_array()) field_error(path, "basis", "rows must be arrays of strings");
    std::vector<std::string> exprs;
    for (const json& cell : row) exprs.push_back(cell.get<std::string>());
    spec.basis_exprs.push_back(std::move(exprs));
  }
  if (j.contains("epsilon_samples")) {
    if (!j["epsilon_samples"].is_array())
      field_error(path, "epsilon_samples", "expected an array of scalar strings");
    for (const json& s : j["epsilon_samples"])
      spec.epsilon_samples.push_back(s.get<std::string>());
  }
  return spec;
}

namespace {

Algebra resolve_ref(const AlgebraRef& ref, const FieldSpec& f,
                    const std::optional<Scalar>& epsilon, const CatalogBuilder& builder) {
  if (ref.inline_algebra) {
    if (ref.inline_algebra->field() != f) fail(Errc::MixedFields, "witness algebra field");
    return *ref.inline_algebra;
  }
  if (!ref.file_path.empty()) {
    Algebra a = load_algebra_file(ref.file_path);
    if (a.field() != f) fail(Errc::MixedFields, "witness algebra field");
    return a;
  }
  std::map<std::string, Scalar> params;
  for (const auto& [key, raw] : ref.params) params.emplace(key, Scalar::parse(f, raw));
  if (epsilon && !params.count("epsilon")) params.emplace("epsilon", *epsilon);
  if (!builder) fail(Errc::UnknownEntry, "no catalog resolver available");
  try {
    return builder(ref.catalog_name, params, f);
  } catch (const Error& e) {
    if (ref.bare_string && e.code() == Errc::UnknownEntry) {
      Algebra a = load_algebra_file(ref.catalog_name);
      if (a.field() != f) fail(Errc::MixedFields, "witness algebra field");
      return a;
    }
    throw;
  }
}

}  // namespace

std::vector<WitnessInstance> instantiate_witness(const WitnessSpec& spec,
                                                 const CatalogBuilder& builder) {
  std::vector<std::optional<Scalar>> eps_values;
  if (spec.epsilon_samples.empty())
    eps_values.push_back(std::nullopt);
  else
    for (const std::string& raw : spec.epsilon_samples)
      eps_values.push_back(Scalar::parse(spec.field, raw));

  const std::size_t n = spec.basis_exprs.size();
  std::vector<WitnessInstance> out;
  for (const std::optional<Scalar>& eps : eps_values) {
    WitnessInstance inst;
    inst.epsilon = eps;
    inst.source = resolve_ref(spec.source, spec.field, eps, builder);
    inst.target = resolve_ref(spec.target, spec.field, eps, builder);
    inst.basis.dim = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (spec.basis_exprs[r].size() != n)
        fail(Errc::ParseError, "witness basis must be a square matrix");
      std::vector<RatFunc> row;
      for (const std::string& expr : spec.basis_exprs[r])
        row.push_back(parse_ratfunc(spec.field, expr, eps));
      inst.basis.rows.push_back(std::move(row));
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace nilalg
