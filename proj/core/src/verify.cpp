#include "nilalg/verify.hpp"

#include <future>

#include "nilalg/degeneration.hpp"
#include "nilalg/io.hpp"

namespace nilalg {

namespace {

Subspace expected_ann(const Algebra& a, const std::vector<std::size_t>& unit_basis) {
  std::vector<Vec> gens;
  for (std::size_t k : unit_basis) gens.push_back(unit_vec(a.field(), a.dim(), k - 1));
  return Subspace::span(a.field(), a.dim(), gens);
}

std::string subspace_str(const Subspace& s) {
  if (s.dim() == 0) return "0";
  std::string out;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r) out += ", ";
    Vec v = s.basis_vector(r);
    std::string term;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c].is_zero()) continue;
      if (!term.empty()) term += "+";
      if (!v[c].is_one()) term += v[c].str() + "*";
      term += "e" + std::to_string(c + 1);
    }
    out += term;
  }
  return "<" + out + ">";
}

SkewForm parse_form(const Algebra& a, const std::string& expr) {
  return parse_skewform(a.field(), a.dim(), expr);
}

// The diagonal map diag(lambda,1,1,lambda,lambda,lambda^2) realizing
// B_6_1^{lambda^2 alpha} ~ B_6_1^alpha.
LinearMap b61_scaling_map(const Scalar& lambda) {
  const FieldSpec& f = lambda.field();
  Matrix m(f, 6, 6);
  m.at(0, 0) = lambda;
  m.at(1, 1) = Scalar::one(f);
  m.at(2, 2) = Scalar::one(f);
  m.at(3, 3) = lambda;
  m.at(4, 4) = lambda;
  m.at(5, 5) = lambda * lambda;
  return LinearMap{std::move(m)};
}

}  // namespace

SectionReport verify_tables(std::uint64_t seed) {
  SectionReport rep;
  rep.section = "tables";
  const FieldSpec Q = FieldSpec::rational();

  for (const CatalogEntry& entry : catalog_entries()) {
    if (entry.dim > 5) continue;
    Algebra a = build_entry(entry.name, Q);
    const std::string base = "tables/" + entry.name;

    // Annihilator.
    Subspace ann = annihilator(a);
    rep.check(base + "/ann", subspace_str(expected_ann(a, entry.expected.ann_unit_basis)),
              subspace_str(ann), entry.expected.note);

    // Cohomology in both flavors.
    CohomologySpace hm = h2(a, CocycleFlavor::M, seed);
    CohomologySpace hbl = h2(a, CocycleFlavor::BL, seed);
    rep.check_count(base + "/h2m_dim", entry.expected.h2m_generators.size(), hm.h2_dim());
    rep.check_count(base + "/h2bl_dim",
                    entry.expected.h2m_generators.size() + entry.expected.h2bl_extra.size(),
                    hbl.h2_dim());
    rep.check_count(base + "/b2_dim_equals_dim_A2", power_filtration(a).terms[1].dim(),
                    hm.b2.dim());

    // Listed generators: cocycles of the right flavor, independent classes,
    // spanning (independence + count = dim).
    bool gens_in_z2m = true;
    std::vector<Vec> gen_coords;
    for (const std::string& expr : entry.expected.h2m_generators) {
      SkewForm theta = parse_form(a, expr);
      if (!hm.z2.contains_vector(theta.coords())) gens_in_z2m = false;
      gen_coords.push_back(theta.coords());
    }
    rep.check_bool(base + "/h2m_generators_are_M_cocycles", true, gens_in_z2m,
                   entry.expected.printed_generator_discrepancies.empty() ? "" : entry.expected.note);
    for (const std::string& printed : entry.expected.printed_generator_discrepancies) {
      SkewForm theta = parse_form(a, printed);
      rep.check_bool(base + "/printed_variant_fails_cocycle_condition[" + printed + "]", true,
                     !hbl.z2.contains_vector(theta.coords()), entry.expected.note);
    }
    if (!entry.expected.h2m_generators.empty()) {
      Subspace span = Subspace::span(Q, pair_count(a.dim()), gen_coords);
      bool independent_mod_b2 =
          span.dim() == gen_coords.size() &&
          sum(span, hm.b2).dim() == gen_coords.size() + hm.b2.dim();
      rep.check_bool(base + "/h2m_generators_independent_mod_b2", true, independent_mod_b2);
      rep.check_bool(base + "/h2m_generators_span_h2m", true,
                     independent_mod_b2 && gen_coords.size() == hm.h2_dim());
    }

    Subspace z2m_plus_b2 = sum(hm.z2, hm.b2);
    if (entry.expected.h2bl_extra.empty()) {
      rep.check_bool(base + "/h2bl_equals_h2m", true, hbl.z2 == hm.z2);
    } else {
      bool extras_ok = true;
      for (const std::string& expr : entry.expected.h2bl_extra) {
        SkewForm theta = parse_form(a, expr);
        if (!hbl.z2.contains_vector(theta.coords())) extras_ok = false;
        if (z2m_plus_b2.contains_vector(theta.coords())) extras_ok = false;
      }
      rep.check_bool(base + "/h2bl_extra_outside_h2m", true, extras_ok);
    }

    // U_1 summary. H2_BL = H2_M certifies emptiness outright; otherwise
    // Delta_45 is the published witness for both exceptional rows.
    bool expect_u1_nonempty = entry.name == "L_5_8" || entry.name == "M_5_1";
    bool computed_u1_nonempty = false;
    if (hbl.z2 != hm.z2) {
      SkewForm d45 = parse_form(a, "D45");
      Vec coords = d45.coords();
      bool nonzero_class = hbl.z2.contains_vector(coords) && !hbl.b2.contains_vector(coords);
      bool perp_ann_zero = intersect(theta_perp(a, d45), ann).dim() == 0;
      bool outside_h2m = !z2m_plus_b2.contains_vector(coords);
      computed_u1_nonempty = nonzero_class && perp_ann_zero && outside_h2m;
    }
    rep.check_bool(base + "/u1_nonempty", expect_u1_nonempty, computed_u1_nonempty);

    // Identity flags of every table row.
    IdentityFlags flags = identity_flags(a, seed);
    rep.check_bool(base + "/lie", entry.expected.flags.lie, flags.lie);
    rep.check_bool(base + "/malcev", entry.expected.flags.malcev, flags.malcev);
    rep.check_bool(base + "/binary_lie", entry.expected.flags.binary_lie, flags.binary_lie);
  }
  return rep;
}

namespace {

void theorem2_for_field(SectionReport& rep, const FieldSpec& f, std::uint64_t seed) {
  const std::string base = "thm2/" + f.str();
  Algebra l58 = build_entry("L_5_8", f);
  Algebra m51 = build_entry("M_5_1", f);

  // (a) extensions of L_5_8 reproduce the B_6_1 family constant-for-constant
  for (const Scalar& alpha : family_samples(f)) {
    SkewForm theta = parse_form(l58, "D45");
    theta.set(1, 2, alpha);  // alpha*D23 + D45
    Algebra ext = extend(l58, {theta}, seed);
    Algebra built = build_entry("B_6_1", {{"alpha", alpha}}, f);
    rep.check_bool(base + "/extend_L58_eq_B61[alpha=" + alpha.str() + "]", true, ext == built);
  }

  // (b) the two extensions of M_5_1
  rep.check_bool(base + "/extend_M51_D45_eq_B62", true,
                 extend(m51, {parse_form(m51, "D45")}, seed) == build_entry("B_6_2", f));
  rep.check_bool(base + "/extend_M51_D13+D45_eq_B63", true,
                 extend(m51, {parse_form(m51, "D13 + D45")}, seed) == build_entry("B_6_3", f));

  // (c) explicit isomorphisms B_6_1^{lambda^2 alpha} -> B_6_1^alpha
  std::vector<std::pair<Scalar, Scalar>> pairs;  // (lambda, alpha)
  if (f.kind == FieldKind::Prime) {
    for (std::int64_t l = 1; l < f.p; ++l)
      for (std::int64_t al = 1; al < f.p; ++al)
        pairs.emplace_back(Scalar::residue(l, f.p), Scalar::residue(al, f.p));
  } else {
    std::vector<Scalar> lambdas, alphas;
    for (long long v : {2, 3, 5, -2, 7}) lambdas.push_back(Scalar::integer(f, v));
    lambdas.push_back(Scalar::rational(f, BigRat(1, 2)));
    lambdas.push_back(Scalar::rational(f, BigRat(3, 2)));
    lambdas.push_back(Scalar::integer(f, -1));
    lambdas.push_back(Scalar::integer(f, 4));
    lambdas.push_back(Scalar::rational(f, BigRat(-1, 2)));
    alphas.push_back(Scalar::integer(f, 1));
    alphas.push_back(Scalar::integer(f, -1));
    for (const Scalar& l : lambdas)
      for (const Scalar& al : alphas) pairs.emplace_back(l, al);
  }
  bool all_iso = true;
  for (const auto& [lambda, alpha] : pairs) {
    Algebra from = build_entry("B_6_1", {{"alpha", lambda * lambda * alpha}}, f);
    Algebra to = build_entry("B_6_1", {{"alpha", alpha}}, f);
    if (!is_isomorphism(b61_scaling_map(lambda), from, to)) all_iso = false;
  }
  rep.check_bool(base + "/scaling_map_direction[" + std::to_string(pairs.size()) + " pairs]",
                 true, all_iso);

  // (d) square-class separation, certified by brute force over F_3
  if (f.kind == FieldKind::Prime && f.p == 3) {
    Scalar two = Scalar::residue(2, 3);
    rep.check_bool(base + "/2_is_nonsquare", true, !is_square(two));
    Algebra b1 = build_entry("B_6_1", {{"alpha", Scalar::residue(1, 3)}}, f);
    Algebra b2a = build_entry("B_6_1", {{"alpha", two}}, f);
    rep.check_bool(base + "/brute_iso_B611_B612_none", true, !brute_iso(b1, b2a).has_value());
    rep.check_bool(base + "/fingerprints_equal_B611_B612", true,
                   fingerprint(b1, seed) == fingerprint(b2a, seed),
                   "the family shares all fingerprint invariants; separation needs the oracle");
  }

  // (e) identity flags and absence of annihilator components
  for (const Scalar& alpha : family_samples(f)) {
    Algebra b = build_entry("B_6_1", {{"alpha", alpha}}, f);
    IdentityFlags fl = identity_flags(b, seed);
    rep.check_bool(base + "/B61_bl_not_malcev[alpha=" + alpha.str() + "]", true,
                   fl.binary_lie && !fl.malcev);
  }
  for (const std::string& name : {"B_6_2", "B_6_3"}) {
    IdentityFlags fl = identity_flags(build_entry(name, f), seed);
    rep.check_bool(base + "/" + name + "_bl_not_malcev", true, fl.binary_lie && !fl.malcev);
  }
  for (const Scalar& alpha : family_samples(f, /*nonzero_only=*/true)) {
    SkewForm theta = parse_form(l58, "D45");
    theta.set(1, 2, alpha);
    SubspaceTests st = subspace_tests(l58, {theta}, seed);
    rep.check_bool(base + "/B61_no_ann_component[alpha=" + alpha.str() + "]", true,
                   st.in_ts && !st.has_ann_component);
  }
  {
    SubspaceTests st = subspace_tests(m51, {parse_form(m51, "D45")}, seed);
    rep.check_bool(base + "/B62_no_ann_component", true, st.in_ts && !st.has_ann_component);
    SubspaceTests st3 = subspace_tests(m51, {parse_form(m51, "D13 + D45")}, seed);
    rep.check_bool(base + "/B63_no_ann_component", true, st3.in_ts && !st3.has_ann_component);
  }
}

}  // namespace

SectionReport verify_theorem2(std::uint64_t seed) {
  SectionReport rep;
  rep.section = "thm2";
  theorem2_for_field(rep, FieldSpec::rational(), seed);
  theorem2_for_field(rep, FieldSpec::prime(3), seed);
  theorem2_for_field(rep, FieldSpec::prime(5), seed);
  return rep;
}

SectionReport verify_theorem1() {
  SectionReport rep;
  rep.section = "thm1";
  const std::vector<std::pair<std::int64_t, long long>> expected = {{3, 55}, {5, 59}, {7, 63}};
  for (const auto& [p, total] : expected) {
    CountResult r = count_theorem1(FieldSpec::prime(p));
    rep.check("thm1/F" + std::to_string(p) + "/total", std::to_string(total),
              r.finite ? r.total.str() : "infinite");
  }
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    CountResult r = count_theorem1(FieldSpec::prime(p));
    rep.check("thm1/F" + std::to_string(p) + "/nonmalcev", "5",
              r.nonmalcev_finite ? r.nonmalcev.str() : "infinite");
    rep.info("thm1/F" + std::to_string(p) + "/malcev_remainder",
             "reported as " + r.malcev_rest.str() +
                 " = 38 + 2|F*| + 4|F*/(F*)^2|; follows from the cited classifications, "
                 "not re-derived here");
  }
  CountResult rq = count_theorem1(FieldSpec::rational());
  rep.check("thm1/Q/total", "infinite", rq.finite ? rq.total.str() : "infinite");
  rep.check("thm1/Q/nonmalcev", "infinite",
            rq.nonmalcev_finite ? rq.nonmalcev.str() : "infinite");
  CountResult rqi = count_theorem1(FieldSpec::gaussian());
  rep.check("thm1/Qi/total", "infinite", rqi.finite ? rqi.total.str() : "infinite");
  return rep;
}

namespace {

void section3_for_field(SectionReport& rep, const FieldSpec& f, std::uint64_t seed) {
  const std::string base = "sec3/" + f.str();

  for (const CatalogEntry& entry : catalog_entries()) {
    std::vector<Params> instances;
    if (entry.param_names.empty()) {
      instances.push_back({});
    } else {
      for (const Scalar& v : family_samples(f))
        instances.push_back({{entry.param_names.front(), v}});
    }
    for (const Params& params : instances) {
      Algebra a = build_entry(entry.name, params, f);
      std::string tag = entry.name;
      if (!params.empty()) tag += "[" + params.begin()->second.str() + "]";

      bool cd = check_identity(a, IdentityKind::CD, seed).holds;
      rep.check_bool(base + "/cd/" + tag, entry.expected.flags.cd, cd);

      // A^4 = 0 forces the CD identity.
      PowerFiltration pf = power_filtration(a);
      bool a4_zero = pf.terms.size() < 4 || pf.terms[3].dim() == 0;
      if (a4_zero)
        rep.check_bool(base + "/a4_zero_implies_cd/" + tag, true, cd);

      // Anticommutative CD forces binary Lie (substitution a=y, b=x).
      if (cd) {
        IdentityFlags fl = identity_flags(a, seed);
        rep.check_bool(base + "/cd_implies_bl/" + tag, true, fl.binary_lie);
      }
    }
  }

  // Spot-check of the substitution a=y, b=x collapsing the CD identity to
  // the binary Lie condition, on random vectors of a CD entry.
  Algebra b61 = build_entry("B_6_1", {{"alpha", Scalar::integer(f, 1)}}, f);
  Rng rng(seed ^ 0x5ec3);
  bool substitution_ok = true;
  for (int s = 0; s < 200; ++s) {
    Vec x = rng.vector(f, 6), y = rng.vector(f, 6);
    Vec xy = b61.bracket(x, y);
    Vec lhs = b61.bracket(b61.bracket(xy, y), x);
    Vec rhs = b61.bracket(b61.bracket(xy, x), y);
    if (lhs != rhs) substitution_ok = false;
  }
  rep.check_bool(base + "/cd_substitution_spot_check", true, substitution_ok);
}

}  // namespace

SectionReport verify_section3(std::uint64_t seed) {
  SectionReport rep;
  rep.section = "sec3";
  section3_for_field(rep, FieldSpec::rational(), seed);
  section3_for_field(rep, FieldSpec::prime(3), seed);
  return rep;
}

const std::vector<BuiltinWitness>& builtin_witnesses() {
  static const std::vector<BuiltinWitness> witnesses = {
      {"B_6_3__to__M_6_eps",
       "Qi",
       "B_6_3",
       {},
       "M_6_eps",
       {},
       {{"t", "0", "0", "-i*t", "0", "0"},
        {"0", "1", "-e", "0", "(e^2-e)*i", "0"},
        {"0", "0", "t", "0", "-i*e*t", "(e^2-2*e)*t"},
        {"-t^2", "0", "0", "0", "0", "0"},
        {"0", "0", "0", "0", "i*t^2", "(1-e)*t^2"},
        {"0", "0", "0", "0", "0", "t^3"}},
       {"0", "1", "-1", "2", "1/2"}},
      {"B_6_3__to__B_6_2",
       "Q",
       "B_6_3",
       {},
       "B_6_2",
       {},
       {{"t", "0", "0", "0", "0", "0"},
        {"0", "1/t", "0", "0", "0", "0"},
        {"0", "0", "1", "0", "0", "0"},
        {"0", "0", "0", "1", "0", "0"},
        {"0", "0", "0", "0", "1", "0"},
        {"0", "0", "0", "0", "0", "1"}},
       {}},
      {"B_6_3__to__B_6_1_alpha1",
       "Q",
       "B_6_3",
       {},
       "B_6_1",
       {{"alpha", "1"}},
       {{"t", "0", "-1", "0", "-t", "0"},
        {"0", "1", "0", "0", "t", "0"},
        {"0", "0", "1", "-1", "0", "0"},
        {"0", "0", "0", "t", "0", "0"},
        {"0", "0", "0", "0", "1", "0"},
        {"0", "0", "0", "0", "0", "t"}},
       {},
       "the published basis gives [E3,E5] = [e3-e4, e5] = -e6 = -(1/t)E6, a pole instead of "
       "a polynomial, so it cannot certify the degeneration as printed; no re-weighting of "
       "the printed support works (the exponent constraints of [E1,E4] and [E3,E5] are "
       "contradictory), and the degeneration itself stays unobstructed (derivation "
       "dimensions 8 < 9)"},
      {"B_6_1_alpha1__to__B_6_1_alpha0",
       "Q",
       "B_6_1",
       {{"alpha", "1"}},
       "B_6_1",
       {{"alpha", "0"}},
       {{"1/t", "0", "0", "0", "0", "0"},
        {"0", "1", "0", "0", "0", "0"},
        {"0", "0", "1", "0", "0", "0"},
        {"0", "0", "0", "1/t", "0", "0"},
        {"0", "0", "0", "0", "1/t", "0"},
        {"0", "0", "0", "0", "0", "1/t^2"}},
       {}},
  };
  return witnesses;
}

namespace {

WitnessSpec to_spec(const BuiltinWitness& w) {
  WitnessSpec spec;
  spec.field = FieldSpec::parse(w.field);
  spec.source.catalog_name = w.source_name;
  spec.source.params = w.source_params;
  spec.target.catalog_name = w.target_name;
  spec.target.params = w.target_params;
  spec.basis_exprs = w.basis_exprs;
  spec.epsilon_samples = w.epsilon_samples;
  return spec;
}

CatalogBuilder catalog_builder() {
  return [](const std::string& name, const std::map<std::string, Scalar>& params,
            const FieldSpec& field) {
    Params p;
    for (const auto& [k, v] : params) p.emplace(k, v);
    return build_entry(name, p, field);
  };
}

}  // namespace

SectionReport verify_degenerations(std::uint64_t seed) {
  (void)seed;
  SectionReport rep;
  rep.section = "degen";

  for (const BuiltinWitness& w : builtin_witnesses()) {
    std::vector<WitnessInstance> instances = instantiate_witness(to_spec(w), catalog_builder());
    for (const WitnessInstance& inst : instances) {
      std::string tag = "degen/" + w.name;
      if (inst.epsilon) tag += "[eps=" + inst.epsilon->str() + "]";
      DegenerationCheck chk = check_degeneration(inst.source, inst.target, inst.basis);
      rep.check_bool(tag, true, chk.verified,
                     chk.verified ? "" : chk.reason + " at (" + std::to_string(chk.i) + "," +
                                             std::to_string(chk.j) + "," + std::to_string(chk.k) +
                                             "): " + chk.entry);
      if (!w.printed_defect.empty()) {
        // The defect is pinned down exactly: the failure sits at (3,5,6) with
        // a simple pole, so the red line above is a property of the printed
        // data, not of the checker.
        rep.check_bool(tag + "/printed_defect_located", true,
                       !chk.verified && chk.i == 3 && chk.j == 5 && chk.k == 6,
                       w.printed_defect);
        DerObstruction obs = obstruction_der(inst.source, inst.target);
        rep.check_bool(tag + "/claim_unobstructed", true,
                       !obs.obstructed && obs.der_a < obs.der_b,
                       "derivation dimensions " + std::to_string(obs.der_a) + " < " +
                           std::to_string(obs.der_b) +
                           "; the degeneration statement is consistent even though the printed "
                           "witness cannot establish it");
      }
    }
  }

  const FieldSpec Q = FieldSpec::rational();
  Algebra b63 = build_entry("B_6_3", Q);
  Algebra g6 = build_entry("g_6", Q);
  rep.check_count("degen/der_dim_B_6_3", 8, derivations(b63).dim);
  rep.check_count("degen/der_dim_g_6", 8, derivations(g6).dim);
  DerObstruction fwd = obstruction_der(b63, g6);
  DerObstruction bwd = obstruction_der(g6, b63);
  rep.check_bool("degen/obstruction_B63_to_g6", true, fwd.obstructed);
  rep.check_bool("degen/obstruction_g6_to_B63", true, bwd.obstructed);

  // The same B_6_1^1 -> B_6_1^0 witness carries the rigidity argument on
  // the CD side; re-run it under that heading.
  for (const BuiltinWitness& w : builtin_witnesses()) {
    if (w.name != "B_6_1_alpha1__to__B_6_1_alpha0") continue;
    std::vector<WitnessInstance> instances = instantiate_witness(to_spec(w), catalog_builder());
    DegenerationCheck chk =
        check_degeneration(instances[0].source, instances[0].target, instances[0].basis);
    rep.check_bool("degen/cd_variant_B611_to_B610", true, chk.verified);
  }

  rep.info("degen/component_count",
           "the two-component claim additionally rests on the published degeneration diagram "
           "of the Malcev part, which is external to this tool; only the printed witnesses "
           "and the derivation-dimension obstruction are verified (externally dependent)");
  rep.info("degen/cd_component_dimensions",
           "the dimensions of the CD-variety components defined by the M_6_eps family and "
           "B_6_1^1 are not printed and are out of scope here");
  return rep;
}

VerifySelection VerifySelection::parse(const std::string& name) {
  VerifySelection s;
  if (name == "all" || name.empty()) return all();
  if (name == "tables")
    s.tables = true;
  else if (name == "thm2")
    s.thm2 = true;
  else if (name == "thm1")
    s.thm1 = true;
  else if (name == "sec3")
    s.sec3 = true;
  else if (name == "degen")
    s.degen = true;
  else
    fail(Errc::ParseError, "unknown section '" + name + "' (tables|thm2|thm1|sec3|degen|all)");
  return s;
}

PaperReport verify_paper(const VerifySelection& sel, std::uint64_t seed, unsigned threads) {
  PaperReport report;
  report.seed = seed;

  std::vector<std::function<SectionReport()>> jobs;
  if (sel.tables) jobs.push_back([seed] { return verify_tables(seed); });
  if (sel.thm2) jobs.push_back([seed] { return verify_theorem2(seed); });
  if (sel.thm1) jobs.push_back([] { return verify_theorem1(); });
  if (sel.sec3) jobs.push_back([seed] { return verify_section3(seed); });
  if (sel.degen) jobs.push_back([seed] { return verify_degenerations(seed); });

  if (threads <= 1) {
    for (auto& job : jobs) report.sections.push_back(job());
    return report;
  }
  // Waves of at most `threads` concurrent sections; results keep fixed order.
  std::vector<SectionReport> results(jobs.size());
  for (std::size_t start = 0; start < jobs.size(); start += threads) {
    std::vector<std::future<SectionReport>> wave;
    for (std::size_t k = start; k < jobs.size() && k < start + threads; ++k)
      wave.push_back(std::async(std::launch::async, jobs[k]));
    for (std::size_t k = 0; k < wave.size(); ++k) results[start + k] = wave[k].get();
  }
  for (SectionReport& r : results) report.sections.push_back(std::move(r));
  return report;
}

}  // namespace nilalg
