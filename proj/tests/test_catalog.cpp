#include <doctest.h>

#include "nilalg/catalog.hpp"
#include "nilalg/io.hpp"
#include "nilalg/verify.hpp"

using namespace nilalg;

namespace {
const FieldSpec Q = FieldSpec::rational();
}

TEST_CASE("builders produce the printed multiplication tables") {
  Algebra b611 = build_entry("B_6_1", {{"alpha", Scalar::one(Q)}}, Q);
  CHECK(b611.bracket_basis(0, 1) == unit_vec(Q, 6, 3));
  CHECK(b611.bracket_basis(0, 2) == unit_vec(Q, 6, 4));
  CHECK(b611.bracket_basis(1, 2) == unit_vec(Q, 6, 5));
  CHECK(b611.bracket_basis(3, 4) == unit_vec(Q, 6, 5));

  Algebra g6 = build_entry("g_6", Q);
  CHECK(g6.bracket_basis(2, 3) == scale(Scalar::integer(Q, -1), unit_vec(Q, 6, 5)));

  Algebra l11 = build_entry("L_1_1", Q);
  CHECK(l11.dim() == 1);
  CHECK(l11.constants().empty());

  CHECK_THROWS_AS(build_entry("L_9_9", Q), Error);   // UnknownEntry
  CHECK_THROWS_AS(build_entry("B_6_1", Q), Error);   // MissingParam
}

TEST_CASE("every entry round-trips through the file format bit-exactly") {
  for (const CatalogEntry& entry : catalog_entries()) {
    for (const FieldSpec& f : {Q, FieldSpec::gaussian(), FieldSpec::prime(7)}) {
      std::vector<Params> insts;
      if (entry.param_names.empty())
        insts.push_back({});
      else
        for (const Scalar& v : family_samples(f))
          insts.push_back({{entry.param_names.front(), v}});
      for (const Params& params : insts) {
        Algebra a = build_entry(entry.name, params, f);
        std::string text = algebra_to_json_text(a);
        Algebra back = algebra_from_json_text(text);
        CHECK(back == a);
        CHECK(algebra_to_json_text(back) == text);
      }
    }
  }
}

TEST_CASE("identity flags match the classification over several fields") {
  for (const FieldSpec& f :
       {Q, FieldSpec::gaussian(), FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::prime(13)}) {
    for (const CatalogEntry& entry : catalog_entries()) {
      std::vector<Params> insts;
      if (entry.param_names.empty())
        insts.push_back({});
      else
        for (const Scalar& v : family_samples(f))
          insts.push_back({{entry.param_names.front(), v}});
      for (const Params& params : insts) {
        Algebra a = build_entry(entry.name, params, f);
        IdentityFlags flags = identity_flags(a);
        IdentityFlags want = expected_identity_flags(entry, params);
        CHECK(flags.binary_lie);  // every catalog entry is binary Lie
        CHECK(flags.lie == want.lie);
        CHECK(flags.malcev == want.malcev);
        CHECK(flags.cd == want.cd);
        PowerFiltration pf = power_filtration(a);
        CHECK(pf.nilpotent);
      }
    }
  }
}

TEST_CASE("fingerprints separate the distinct-named 6-dimensional entries") {
  std::vector<std::pair<std::string, Params>> six = {
      {"B_6_1", {{"alpha", Scalar::one(Q)}}},
      {"B_6_2", {}},
      {"B_6_3", {}},
      {"g_6", {}},
      {"M_6_eps", {{"epsilon", Scalar::one(Q)}}},
  };
  std::vector<Fingerprint> fps;
  for (const auto& [name, params] : six) fps.push_back(fingerprint(build_entry(name, params, Q)));
  for (std::size_t i = 0; i < fps.size(); ++i)
    for (std::size_t j = i + 1; j < fps.size(); ++j) CHECK(fps[i] != fps[j]);
}

TEST_CASE("counting formula") {
  CountResult f3 = count_theorem1(FieldSpec::prime(3));
  CHECK(f3.finite);
  CHECK(f3.total == 55);
  CHECK(f3.nonmalcev == 5);
  CHECK(f3.malcev_rest == 50);
  CHECK(count_theorem1(FieldSpec::prime(5)).total == 59);
  CHECK(count_theorem1(FieldSpec::prime(7)).total == 63);

  CountResult q = count_theorem1(Q);
  CHECK_FALSE(q.finite);
  CHECK_FALSE(q.nonmalcev_finite);
  CHECK_FALSE(count_theorem1(FieldSpec::gaussian()).finite);

  // total = nonmalcev + malcev remainder whenever everything is finite
  for (std::int64_t p : {3, 5, 7, 11, 13, 17}) {
    CountResult r = count_theorem1(FieldSpec::prime(p));
    CHECK(r.total == r.nonmalcev + r.malcev_rest);
    CHECK(r.nonmalcev == 5);
  }
}

TEST_CASE("verification sections pass") {
  CHECK(verify_tables().ok());
  CHECK(verify_theorem1().ok());
  CHECK(verify_section3().ok());
}
