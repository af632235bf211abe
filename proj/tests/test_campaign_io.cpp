#include <doctest.h>

#include "symspec/campaign.hpp"

using namespace symspec;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
}

TEST_CASE("field JSON round trip") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(101), FieldSpec::prime(1009)}) {
    FieldSpec back = field_from_json(field_to_json(f));
    CHECK(back.to_string() == f.to_string());
  }
  CHECK_THROWS(field_from_json(json{{"kind", "prime_field"}, {"modulus", "4"}}));
}

TEST_CASE("poly JSON round trip") {
  MultiPoly a = MultiPoly::variable(kQ, "alpha");
  MultiPoly b = MultiPoly::variable(kQ, "beta");
  MultiPoly p = a * a * b - b * MultiPoly::constant(Scalar::of_int(kQ, 7)) +
                MultiPoly::constant(Scalar::one(kQ) / Scalar::of_int(kQ, 3));
  MultiPoly back = poly_from_json(kQ, poly_to_json(p));
  CHECK(back == p);

  MultiPoly z(kQ);
  CHECK(poly_from_json(kQ, poly_to_json(z)) == z);

  FieldSpec f101 = FieldSpec::prime(101);
  MultiPoly q = MultiPoly::variable(f101, "t") * MultiPoly::constant(Scalar::of_int(f101, 45));
  CHECK(poly_from_json(f101, poly_to_json(q)) == q);
}

TEST_CASE("matrix JSON round trip") {
  Rng rng(91);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    SymplecticSpace sp(2, f);
    for (int i = 0; i < 10; ++i) {
      Matrix<Scalar> m = random_in_g(sp, rng);
      Matrix<Scalar> back = matrix_from_json(matrix_to_json(m));
      CHECK(back == m);
    }
  }
}

TEST_CASE("tuple JSON round trip keeps parity and verifies membership") {
  SymplecticSpace sp(2, kQ);
  CommutingTuple t = sample_commuting(sp, 3, 11, SamplerKind::conjugated_cartan);
  json j = tuple_to_json(t, "conjugated_cartan", 11);
  CHECK(j["n"] == 2);
  CHECK(j["d"] == 3);
  CommutingTuple back = tuple_from_json(sp, j);
  CHECK(back.d() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back.xs[i] == t.xs[i]);
    CHECK(back.parity[i] == Parity::in_g);
  }

  // corrupting an entry must break the parity check at reconstruction
  json bad = j;
  bad["matrices"][0]["rows"][0][1] = "12345";
  CHECK_THROWS(tuple_from_json(sp, bad));
}

TEST_CASE("campaign config guards") {
  CampaignConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.n = 7;
  CHECK_THROWS(cfg.validate());
  cfg.n = 0;
  CHECK_THROWS(cfg.validate());
  cfg.n = 2;
  cfg.kind = "bogus";
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("campaign determinism: identical configs give identical reports") {
  CampaignConfig cfg;
  cfg.n = 2;
  cfg.d = 2;
  cfg.seed = 42;
  cfg.samples = 8;
  for (const std::string& family : check_family_names()) {
    auto r1 = run_check_family(family, cfg);
    auto r2 = run_check_family(family, cfg);
    CHECK(report_to_json(r1).dump() == report_to_json(r2).dump());
    for (const auto& r : r1) CHECK(r.pass);
  }
}

TEST_CASE("campaign seeds: different seed, different samples, same verdicts") {
  CampaignConfig a, b;
  a.seed = 1;
  b.seed = 2;
  a.samples = b.samples = 5;
  auto ra = run_check_family("norm_square", a);
  auto rb = run_check_family("norm_square", b);
  REQUIRE(ra.size() == rb.size());
  bool any_diff = false;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    CHECK(ra[i].pass);
    CHECK(rb[i].pass);
    if (ra[i].lhs != rb[i].lhs) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("campaign runs over prime fields and all kinds") {
  for (const std::string& kind :
       {std::string("conjugated_cartan"), std::string("single_generator"),
        std::string("nilpotent")}) {
    CampaignConfig cfg;
    cfg.n = 2;
    cfg.d = 2;
    cfg.field = FieldSpec::prime(101);
    cfg.kind = kind;
    cfg.samples = 4;
    cfg.max_total_degree = 4;
    for (const std::string& family : {std::string("multiplicativity"),
                                      std::string("roundtrip"),
                                      std::string("parity_vanishing")}) {
      auto rs = run_check_family(family, cfg);
      CHECK_FALSE(rs.empty());
      for (const auto& r : rs) {
        CHECK(r.pass);
        CHECK(r.field == "fp:101");
        CHECK(r.kind == kind);
      }
    }
  }
}

TEST_CASE("checks on an externally supplied tuple") {
  SymplecticSpace sp(2, kQ);
  CommutingTuple t = sample_commuting(sp, 2, 5, SamplerKind::single_generator);
  json j = tuple_to_json(t, "single_generator", 5);
  CommutingTuple back = tuple_from_json(sp, j);
  auto rs = run_checks_on_tuple({"parity_vanishing", "roundtrip"}, back, 4);
  CHECK_FALSE(rs.empty());
  for (const auto& r : rs) CHECK(r.pass);

  CHECK_THROWS(run_checks_on_tuple({"norm_square"}, back, 4));  // not tuple-applicable
}

TEST_CASE("report JSON structure") {
  CampaignConfig cfg;
  cfg.samples = 3;
  auto rs = run_check_family("pfaffian_square", cfg);
  json rep = report_to_json(rs);
  CHECK(rep["rng"] == "mt19937_64");
  CHECK(rep["total"] == rs.size());
  CHECK(rep["failures"] == 0);
  CHECK(rep["results"].is_array());
  const json& first = rep["results"][0];
  CHECK(first.contains("check_id"));
  CHECK(first.contains("property"));
  CHECK(first.contains("pass"));
  CHECK(first.contains("lhs"));
  CHECK(first.contains("rhs"));
}
