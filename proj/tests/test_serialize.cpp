#include <doctest.h>

#include "focklat/builders.hpp"
#include "focklat/serialize.hpp"

using namespace focklat;

TEST_CASE("lattice JSON round-trip and schema") {
  const ComplexLattice hex = hexagonal_lattice();
  const Json j = lattice_to_json(hex);
  CHECK(j.at("dim") == 2);
  CHECK(j.at("generator").size() == 2);
  CHECK(j.at("generator")[0][0].at("re") == 1.0);
  const ComplexLattice back = lattice_from_json(j);
  CHECK((back.generator - hex.generator).norm() == 0.0);

  CHECK_THROWS_AS(lattice_from_json(Json{{"dim", 2}}), std::domain_error);
  Json wrong = j;
  wrong["generator"] = Json::array();
  CHECK_THROWS_AS(lattice_from_json(wrong), std::domain_error);
}

TEST_CASE("function JSON round-trip preserves every factor field") {
  const FamilyResult fam = family_fail(GaussInt(2));
  const Json j = fn_to_json(fam.fn);
  const LatticeFn back = fn_from_json(j);
  REQUIRE(back.factors.size() == fam.fn.factors.size());
  for (size_t k = 0; k < back.factors.size(); ++k) {
    CHECK(back.factors[k].kind == fam.fn.factors[k].kind);
    CHECK(back.factors[k].row == fam.fn.factors[k].row);
    CHECK(back.factors[k].offset == fam.fn.factors[k].offset);
    CHECK(back.factors[k].shift == fam.fn.factors[k].shift);
  }
  CHECK(back.meta == fam.fn.meta);
  // Evaluation agrees bit for bit.
  VectorXcd z(2);
  z << Complex(0.37, -0.11), Complex(0.05, 0.42);
  CHECK(back.eval(z).log_mag == fam.fn.eval(z).log_mag);
  CHECK(back.eval(z).phase == fam.fn.eval(z).phase);
}

TEST_CASE("serialization is deterministic") {
  const FamilyResult fam = family_fail(GaussInt(2, 1));
  CHECK(fn_to_json(fam.fn).dump(2) == fn_to_json(family_fail(GaussInt(2, 1)).fn).dump(2));
  CHECK(lattice_to_json(fam.lattice).dump() ==
        lattice_to_json(family_fail(GaussInt(2, 1)).lattice).dump());
}

TEST_CASE("malformed function JSON is rejected with the field named") {
  Json j = fn_to_json(preset_hexagonal_n1());
  j["factors"][0]["kind"] = "theta";
  CHECK_THROWS_WITH_AS(fn_from_json(j), doctest::Contains("theta"), std::domain_error);
  Json missing = Json{{"dim", 1}};
  CHECK_THROWS_AS(fn_from_json(missing), std::domain_error);
}

TEST_CASE("report serializers") {
  GrowthProfile prof;
  prof.grid_step = 0.25;
  prof.radii = {0.25, 0.5};
  prof.sup_normalized = {0.9, 0.8};
  const Json j = report_to_json(prof);
  CHECK(j.at("type") == "growth");
  CHECK(j.at("radii").size() == 2);
  const std::string csv = report_to_csv(prof);
  CHECK(csv.find("radius,sup_normalized\n") == 0);
  const std::string plot = growth_plot(prof);
  CHECK(plot == "0.25 0.9\n0.5 0.8\n");

  BargmannBridge bridge;
  bridge.quadrature = 0.5;
  bridge.closed_form = 0.5;
  CHECK(report_to_json(bridge).at("discrepancy") == 0.0);
}
