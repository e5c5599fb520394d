// nilalg command-line interface: exact verification workbench for small
// nilpotent anticommutative algebras.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "nilalg/catalog.hpp"
#include "nilalg/degeneration.hpp"
#include "nilalg/io.hpp"
#include "nilalg/report.hpp"
#include "nilalg/verify.hpp"

namespace {

using namespace nilalg;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

unsigned thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NILALG_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

// An algebra argument is either a JSON file path or a catalog entry name
// (instantiated over --field with --param values).
Algebra resolve_algebra(const std::string& arg, const std::string& field_spec,
                        const std::vector<std::string>& params) {
  if (std::filesystem::exists(arg)) return load_algebra_file(arg);
  if (!is_catalog_name(arg))
    fail(Errc::UnknownEntry, "'" + arg + "' is neither a file nor a catalog entry");
  FieldSpec f = FieldSpec::parse(field_spec);
  Params p;
  for (const std::string& kv : params) {
    std::size_t eq = kv.find('=');
    if (eq == std::string::npos)
      fail(Errc::ParseError, "--param expects name=value, got '" + kv + "'");
    p.emplace(kv.substr(0, eq), Scalar::parse(f, kv.substr(eq + 1)));
  }
  return build_entry(arg, p, f);
}

std::string vec_str(const Vec& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].str();
  return out + ")";
}

ojson vec_json(const Vec& v) {
  ojson arr = ojson::array();
  for (const Scalar& s : v) arr.push_back(s.str());
  return arr;
}

ojson subspace_json(const Subspace& s) {
  ojson arr = ojson::array();
  for (std::size_t r = 0; r < s.dim(); ++r) arr.push_back(vec_json(s.basis_vector(r)));
  return arr;
}

ojson identity_json(const IdentityResult& r) {
  ojson out;
  out["holds"] = r.holds;
  if (!r.holds) {
    ojson w = ojson::array();
    for (const Vec& v : r.witness) w.push_back(vec_json(v));
    out["counterexample"] = std::move(w);
    out["from_randomized_guard"] = r.from_guard;
  }
  return out;
}

CatalogBuilder catalog_builder() {
  return [](const std::string& name, const std::map<std::string, Scalar>& params,
            const FieldSpec& field) {
    Params p;
    for (const auto& [k, v] : params) p.emplace(k, v);
    return build_entry(name, p, field);
  };
}

void emit(const ojson& payload, const std::string& text, bool json_mode) {
  if (json_mode)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_identities(const Algebra& a, std::uint64_t seed, bool json_mode) {
  ojson out;
  std::string text;
  for (IdentityKind kind :
       {IdentityKind::Lie, IdentityKind::Malcev, IdentityKind::BinaryLie, IdentityKind::CD}) {
    IdentityResult r = check_identity(a, kind, seed);
    out[identity_name(kind)] = identity_json(r);
    text += std::string(identity_name(kind)) + ": " + (r.holds ? "holds" : "counterexample");
    if (!r.holds) {
      text += " at";
      for (const Vec& v : r.witness) text += " " + vec_str(v);
      if (r.from_guard) text += " [randomized unlinearized check]";
    }
    text += "\n";
  }
  emit(out, text, json_mode);
  return kExitOk;
}

int cmd_invariants(const Algebra& a, std::uint64_t seed, bool json_mode) {
  Fingerprint fp = fingerprint(a, seed);
  ojson out;
  out["dim"] = fp.dim;
  out["power_dims"] = fp.power_dims;
  out["nilpotent"] = fp.nilpotent;
  if (fp.nilpotent) out["nilindex"] = fp.nilindex;
  out["ann_dim"] = fp.ann_dim;
  out["der_dim"] = fp.der_dim;
  out["h2bl_dim"] = fp.h2bl_dim;
  out["h2m_dim"] = fp.h2m_dim;
  out["lie"] = fp.flags.lie;
  out["malcev"] = fp.flags.malcev;
  out["binary_lie"] = fp.flags.binary_lie;
  out["cd"] = fp.flags.cd;
  emit(out, fp.str() + "\n", json_mode);
  return kExitOk;
}

int cmd_cohomology(const Algebra& a, const std::string& flavor, std::uint64_t seed,
                   bool json_mode) {
  if (!check_identity(a, IdentityKind::BinaryLie, seed).holds)
    fail(Errc::NotACocycle, "cohomology requires a binary Lie algebra");
  CocycleFlavor fl = flavor == "m" ? CocycleFlavor::M : CocycleFlavor::BL;
  CohomologySpace space = h2(a, fl, seed);
  ojson out;
  out["flavor"] = flavor == "m" ? "M" : "BL";
  out["z2_dim"] = space.z2.dim();
  out["b2_dim"] = space.b2.dim();
  out["h2_dim"] = space.h2_dim();
  ojson basis = ojson::array();
  std::string text = "flavor: " + out["flavor"].get<std::string>() + "\n";
  text += "dim Z2 = " + std::to_string(space.z2.dim()) + ", dim B2 = " +
          std::to_string(space.b2.dim()) + ", dim H2 = " + std::to_string(space.h2_dim()) + "\n";
  text += "H2 basis classes:\n";
  for (const SkewForm& f : space.h2_basis_forms()) {
    basis.push_back(f.str());
    text += "  [" + f.str() + "]\n";
  }
  out["h2_basis"] = std::move(basis);
  emit(out, text, json_mode);
  return kExitOk;
}

int cmd_theta_perp(const Algebra& a, const std::string& expr, bool json_mode) {
  SkewForm theta = parse_skewform(a.field(), a.dim(), expr);
  Subspace perp = theta_perp(a, theta);
  ojson out;
  out["form"] = theta.str();
  out["dim"] = perp.dim();
  out["basis"] = subspace_json(perp);
  std::string text = "theta_perp dim = " + std::to_string(perp.dim()) + "\n";
  for (std::size_t r = 0; r < perp.dim(); ++r) text += "  " + vec_str(perp.basis_vector(r)) + "\n";
  emit(out, text, json_mode);
  return kExitOk;
}

int cmd_extend(const Algebra& a, const std::vector<std::string>& exprs, const std::string& out_path,
               std::uint64_t seed, bool json_mode) {
  std::vector<SkewForm> thetas;
  for (const std::string& e : exprs) thetas.push_back(parse_skewform(a.field(), a.dim(), e));
  Algebra ext = extend(a, thetas, seed);
  std::string payload = algebra_to_json_text(ext);
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    save_algebra_file(ext, out_path);
    if (!json_mode) std::cout << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_subspace_tests(const Algebra& a, const std::vector<std::string>& exprs, std::uint64_t seed,
                       bool json_mode) {
  std::vector<SkewForm> thetas;
  for (const std::string& e : exprs) thetas.push_back(parse_skewform(a.field(), a.dim(), e));
  SubspaceTests st = subspace_tests(a, thetas, seed);
  ojson out;
  out["in_Ts"] = st.in_ts;
  out["in_Us"] = st.in_us;
  out["has_ann_component"] = st.has_ann_component;
  out["classes_independent"] = st.classes_independent;
  out["joint_perp_ann_zero"] = st.joint_perp_ann_zero;
  out["all_classes_in_h2m"] = st.all_classes_in_h2m;
  std::string text;
  text += std::string("in_Ts: ") + (st.in_ts ? "true" : "false") + "\n";
  text += std::string("in_Us: ") + (st.in_us ? "true" : "false") + "\n";
  text += std::string("has_ann_component: ") + (st.has_ann_component ? "true" : "false") + "\n";
  emit(out, text, json_mode);
  return kExitOk;
}

int cmd_act(const Algebra& a, const std::string& matrix_path, const std::string& expr,
            bool json_mode, std::uint64_t seed) {
  LinearMap phi = load_matrix_file(a.field(), a.dim(), matrix_path);
  SkewForm theta = parse_skewform(a.field(), a.dim(), expr);
  SkewForm image = act(a, phi, theta);
  CohomologySpace space = h2(a, CocycleFlavor::BL, seed);
  ojson out;
  out["form"] = image.str();
  std::string text = "phi.theta = " + image.str() + "\n";
  if (space.z2.contains_vector(image.coords())) {
    Vec cls = class_of(space, image);
    out["class_in_h2bl"] = vec_json(cls);
    text += "class coordinates in the H2_BL basis: " + vec_str(cls) + "\n";
  }
  emit(out, text, json_mode);
  return kExitOk;
}

int cmd_degeneration(const std::string& path, bool json_mode) {
  WitnessSpec spec = load_witness_file(path);
  std::vector<WitnessInstance> instances = instantiate_witness(spec, catalog_builder());
  ojson list = ojson::array();
  std::string text;
  bool all_ok = true;
  for (const WitnessInstance& inst : instances) {
    DegenerationCheck chk = check_degeneration(inst.source, inst.target, inst.basis);
    ojson entry;
    if (inst.epsilon) entry["epsilon"] = inst.epsilon->str();
    entry["verified"] = chk.verified;
    if (!chk.verified) {
      entry["reason"] = chk.reason;
      entry["at"] = {chk.i, chk.j, chk.k};
      entry["entry"] = chk.entry;
      all_ok = false;
    }
    text += std::string(chk.verified ? "verified" : "FAILED");
    if (inst.epsilon) text += " [epsilon=" + inst.epsilon->str() + "]";
    if (!chk.verified)
      text += ": " + chk.reason + " at (" + std::to_string(chk.i) + "," + std::to_string(chk.j) +
              "," + std::to_string(chk.k) + "): " + chk.entry;
    text += "\n";
    list.push_back(std::move(entry));
  }
  ojson out;
  out["witness"] = path;
  out["pass"] = all_ok;
  out["checks"] = std::move(list);
  emit(out, text, json_mode);
  return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_iso(const Algebra& a, const Algebra& b, const std::string& map_path, bool brute,
            std::uint64_t seed, bool json_mode) {
  ojson out;
  std::string text;
  bool proven_iso = false;
  if (!map_path.empty()) {
    LinearMap p = load_matrix_file(a.field(), a.dim(), map_path);
    proven_iso = is_isomorphism(p, a, b);
    out["mode"] = "map";
    out["isomorphic"] = proven_iso;
    text = proven_iso ? "map is an isomorphism\n" : "map is NOT an isomorphism\n";
  } else if (brute) {
    std::optional<LinearMap> found = brute_iso(a, b);
    out["mode"] = "brute";
    out["isomorphic"] = found.has_value();
    if (found) {
      proven_iso = true;
      ojson rows = ojson::array();
      for (std::size_t r = 0; r < found->matrix.rows(); ++r)
        rows.push_back(vec_json(found->matrix.row(r)));
      out["map"] = std::move(rows);
      text = "isomorphism found:\n";
      for (std::size_t r = 0; r < found->matrix.rows(); ++r)
        text += "  " + vec_str(found->matrix.row(r)) + "\n";
    } else {
      text = "certified: no isomorphism in the searched class\n";
    }
  } else {
    Fingerprint fa = fingerprint(a, seed), fb = fingerprint(b, seed);
    out["mode"] = "fingerprint";
    bool distinct = !(fa == fb);
    out["fingerprints_differ"] = distinct;
    out["a"] = fa.str();
    out["b"] = fb.str();
    if (distinct)
      text = "fingerprints differ; the algebras are NOT isomorphic\n  a: " + fa.str() +
             "\n  b: " + fb.str() + "\n";
    else
      text = "fingerprints agree; inconclusive (use --map or --brute)\n";
    emit(out, text, json_mode);
    return kExitCheckFailed;  // never a positive proof
  }
  emit(out, text, json_mode);
  return proven_iso ? kExitOk : kExitCheckFailed;
}

int cmd_count(const std::string& field_spec, bool json_mode) {
  FieldSpec f = FieldSpec::parse(field_spec);
  CountResult r = count_theorem1(f);
  ojson out;
  out["field"] = f.str();
  out["total"] = r.finite ? ojson(r.total.str()) : ojson("infinite");
  out["nonmalcev"] = r.nonmalcev_finite ? ojson(r.nonmalcev.str()) : ojson("infinite");
  out["malcev_remainder"] = r.malcev_finite ? ojson(r.malcev_rest.str()) : ojson("infinite");
  std::string text = (r.finite ? r.total.str() : std::string("infinite")) + "\n";
  text += "non-Malcev: " + (r.nonmalcev_finite ? r.nonmalcev.str() : std::string("infinite")) +
          ", Malcev remainder: " +
          (r.malcev_finite ? r.malcev_rest.str() : std::string("infinite")) + "\n";
  emit(out, text, json_mode);
  return kExitOk;
}

int cmd_verify_paper(const std::string& section, std::uint64_t seed, bool json_mode) {
  PaperReport rep = verify_paper(VerifySelection::parse(section), seed, thread_cap());
  if (json_mode)
    std::cout << render_json(rep);
  else
    std::cout << render_text(rep);
  return rep.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_dump_catalog(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  FieldSpec Q = FieldSpec::rational();
  for (const CatalogEntry& entry : catalog_entries()) {
    std::vector<std::pair<std::string, Params>> insts;
    if (entry.param_names.empty()) {
      insts.emplace_back(entry.name, Params{});
    } else {
      for (long long v : {0, 1}) {
        Params p;
        p.emplace(entry.param_names.front(), Scalar::integer(Q, v));
        insts.emplace_back(entry.name + "_" + entry.param_names.front() + std::to_string(v), p);
      }
    }
    for (const auto& [fname, params] : insts)
      save_algebra_file(build_entry(entry.name, params, Q), dir + "/" + fname + ".json");

    ojson exp;
    exp["name"] = entry.name;
    exp["dim"] = entry.dim;
    exp["params"] = entry.param_names;
    exp["h2m_generators"] = entry.expected.h2m_generators;
    exp["h2bl_extra"] = entry.expected.h2bl_extra;
    exp["ann_basis"] = entry.expected.ann_unit_basis;
    exp["flags"] = {{"lie", entry.expected.flags.lie},
                    {"malcev", entry.expected.flags.malcev},
                    {"binary_lie", entry.expected.flags.binary_lie},
                    {"cd", entry.expected.flags.cd}};
    if (entry.expected.der_dim) exp["der_dim"] = *entry.expected.der_dim;
    if (!entry.expected.note.empty()) exp["note"] = entry.expected.note;
    if (!entry.expected.printed_generator_discrepancies.empty())
      exp["printed_generator_discrepancies"] = entry.expected.printed_generator_discrepancies;
    std::ofstream out(dir + "/" + entry.name + ".expected.json", std::ios::binary);
    out << exp.dump(2) << "\n";
  }
  std::cout << "wrote catalog data to " << dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for small nilpotent anticommutative algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global --seed/--json may follow the subcommand

  std::uint64_t seed = kDefaultSeed;
  bool json_mode = false;
  std::string field_spec = "Q";
  std::vector<std::string> alg_params;
  app.add_option("--seed", seed, "seed for the randomized guards");
  app.add_flag("--json", json_mode, "machine-readable output");

  auto add_alg_opts = [&](CLI::App* sub, std::string& alg) {
    sub->add_option("algebra", alg, "algebra file or catalog entry name")->required();
    sub->add_option("--field", field_spec, "field for catalog entries (Q, Qi, F<p>)");
    sub->add_option("--param", alg_params, "family parameter, e.g. alpha=1");
  };

  std::string alg_a, alg_b, flavor = "bl", expr, matrix_path, out_path, witness_path,
                            section = "all", count_field, dump_dir;
  std::vector<std::string> cocycles;
  bool brute = false;

  CLI::App* identities = app.add_subcommand("identities", "evaluate the four identities");
  add_alg_opts(identities, alg_a);

  CLI::App* invariants = app.add_subcommand("invariants", "isomorphism-invariant fingerprint");
  add_alg_opts(invariants, alg_a);

  CLI::App* cohomology = app.add_subcommand("cohomology", "cocycle/coboundary/H2 data");
  add_alg_opts(cohomology, alg_a);
  cohomology->add_option("--flavor", flavor, "bl or m")->check(CLI::IsMember({"bl", "m"}));

  CLI::App* extend_cmd = app.add_subcommand("extend", "central extension by cocycles");
  add_alg_opts(extend_cmd, alg_a);
  extend_cmd->add_option("--cocycle", cocycles, "skew form, e.g. \"2*D23 + D45\"")->required();
  extend_cmd->add_option("--out", out_path, "output algebra file (default: stdout)");

  CLI::App* tperp = app.add_subcommand("theta-perp", "annihilator of a skew form");
  add_alg_opts(tperp, alg_a);
  tperp->add_option("--form", expr, "skew form expression")->required();

  CLI::App* stests = app.add_subcommand("subspace-tests", "T_s/U_s membership of cocycle lists");
  add_alg_opts(stests, alg_a);
  stests->add_option("--cocycle", cocycles, "skew form expression")->required();

  CLI::App* act_cmd = app.add_subcommand("act", "pull a cocycle back along an automorphism");
  add_alg_opts(act_cmd, alg_a);
  act_cmd->add_option("--matrix", matrix_path, "automorphism matrix JSON file")->required();
  act_cmd->add_option("--cocycle", expr, "skew form expression")->required();

  CLI::App* degen = app.add_subcommand("degeneration", "verify a parametrized-basis witness");
  degen->add_option("witness", witness_path, "witness JSON file")->required();

  CLI::App* iso = app.add_subcommand("iso", "isomorphism checking");
  iso->add_option("algebraA", alg_a)->required();
  iso->add_option("algebraB", alg_b)->required();
  iso->add_option("--field", field_spec, "field for catalog entries");
  iso->add_option("--param", alg_params, "family parameter for catalog entries");
  iso->add_option("--map", matrix_path, "candidate isomorphism matrix file");
  iso->add_flag("--brute", brute, "exhaustive pruned search (prime fields)");

  CLI::App* count = app.add_subcommand("count", "6-dimensional classification counts");
  count->add_option("--field", count_field, "Q, Qi or F<p>")->required();

  CLI::App* verify = app.add_subcommand("verify-paper", "re-verify the shipped table data");
  verify->add_option("--section", section, "tables|thm2|thm1|sec3|degen|all");

  CLI::App* dump = app.add_subcommand("dump-catalog", "write catalog JSON files");
  dump->add_option("dir", dump_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (identities->parsed())
      return cmd_identities(resolve_algebra(alg_a, field_spec, alg_params), seed, json_mode);
    if (invariants->parsed())
      return cmd_invariants(resolve_algebra(alg_a, field_spec, alg_params), seed, json_mode);
    if (cohomology->parsed())
      return cmd_cohomology(resolve_algebra(alg_a, field_spec, alg_params), flavor, seed,
                            json_mode);
    if (extend_cmd->parsed())
      return cmd_extend(resolve_algebra(alg_a, field_spec, alg_params), cocycles, out_path, seed,
                        json_mode);
    if (tperp->parsed())
      return cmd_theta_perp(resolve_algebra(alg_a, field_spec, alg_params), expr, json_mode);
    if (stests->parsed())
      return cmd_subspace_tests(resolve_algebra(alg_a, field_spec, alg_params), cocycles, seed,
                                json_mode);
    if (act_cmd->parsed())
      return cmd_act(resolve_algebra(alg_a, field_spec, alg_params), matrix_path, expr, json_mode,
                     seed);
    if (degen->parsed()) return cmd_degeneration(witness_path, json_mode);
    if (iso->parsed())
      return cmd_iso(resolve_algebra(alg_a, field_spec, alg_params),
                     resolve_algebra(alg_b, field_spec, alg_params), matrix_path, brute, seed,
                     json_mode);
    if (count->parsed()) return cmd_count(count_field, json_mode);
    if (verify->parsed()) return cmd_verify_paper(section, seed, json_mode);
    if (dump->parsed()) return cmd_dump_catalog(dump_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
