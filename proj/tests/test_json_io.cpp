#include <doctest.h>

#include "sphcodes/catalog.hpp"
#include "sphcodes/errors.hpp"
#include "sphcodes/json_io.hpp"
#include "support/generators.hpp"

using namespace sphcodes;
using namespace sphcodes::testing;

TEST_CASE("angle encodings") {
  CHECK(*angle_from_json(Json{{"theta", "1/3"}}).pi_fraction() == Rational(1, 3));
  CHECK(angle_from_json(Json{{"theta", 0.5}}).radians() == 0.5);
  CHECK(*angle_from_json(Json{{"cos_theta", "-1/4"}}).exact_cos() == Rational(-1, 4));
  // Exact forms win over the float.
  CHECK(*angle_from_json(Json{{"theta", 2.0}, {"theta_pi_frac", "1/2"}}).pi_fraction() == Rational(1, 2));
  CHECK_THROWS_AS(angle_from_json(Json{{"theta", true}}), ParseError);
  CHECK_THROWS_AS(angle_from_json(Json::object()), ParseError);

  Json out;
  angle_to_json(Angle::from_cos(Rational(-1, 3)), out);
  CHECK(out["cos_theta"] == "-1/3");
  CHECK(*angle_from_json(out).exact_cos() == Rational(-1, 3));
}

TEST_CASE("rationals") {
  CHECK(rational_from_json(Json(0.3)) == Rational(3, 10));
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK(rational_from_json(Json("-2/6")) == Rational(-1, 3));
  CHECK(rational_list_from_json(Json("1,2/3")) == std::vector<Rational>{1, Rational(2, 3)});
  CHECK_THROWS_AS(rational_from_json(Json::array()), ParseError);
  CHECK(rational_list_to_json({Rational(1, 2), 3}) == Json::array({"1/2", "3"}));
}

TEST_CASE("code round trips") {
  for (const CatalogInfo& info : catalog_list()) {
    if (!info.generated) continue;
    const AnyCode code = *catalog_generate(info.name).code;
    const Json j = to_json(code);
    const AnyCode back = code_from_json(parse_json_text(dump_json(j)));
    CHECK(dump_json(to_json(back)) == dump_json(j));
  }
  Rng rng(71);
  for (int t = 0; t < 20; ++t) {
    std::vector<ModuleVector> vs;
    const auto desc = AlgebraDescriptor::matrix(uniform_int(rng, 1, 3));
    const int d = uniform_int(rng, 1, 3);
    for (int i = 0; i < 4; ++i) vs.push_back(random_unit_module_vector(rng, desc, d));
    const ModularCode m = make_modular_code(desc, d, Angle::from_radians(1.0), vs);
    const ModularCode back = modular_code_from_json(parse_json_text(dump_json(to_json(m))));
    for (std::size_t i = 0; i < 4; ++i) {
      for (int j = 0; j < d; ++j) CHECK(back.vectors[i][j].entries() == m.vectors[i][j].entries());
    }
  }
}

TEST_CASE("compact modular input inherits the algebra") {
  const Json j = parse_json_text(R"({
    "d": 1, "theta": "1/2", "algebra": {"kind": "matrix", "m": 2},
    "vectors": [
      {"components": [{"entries": [[1, 0], [0, 1]]}]},
      {"components": [{"entries": [[-1, 0], [0, 1]]}]}
    ]})");
  const ModularCode m = modular_code_from_json(j);
  CHECK(m.size() == 2);
  CHECK(verify_modular_norm_only(m).valid);
  CHECK_FALSE(verify_modular(m).valid);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_json_text("{\"d\": 2,"), ParseError);
  CHECK_THROWS_AS(classical_code_from_json(Json{{"theta", "1/3"}, {"points", Json::array()}}), ParseError);
  CHECK_THROWS_AS(classical_code_from_json(parse_json_text(R"({"d": 2, "theta": "1/3", "points": [[1, 0, 0]]})")),
                  ShapeError);
  CHECK_THROWS_AS(classical_code_from_json(parse_json_text(R"({"d": 2, "theta": "1/3", "points": [[2, 0]]})")),
                  DomainError);
  CHECK_THROWS_AS(classical_code_from_json(parse_json_text(R"({"d": 1, "theta": "1/3", "points": [["x"]]})")),
                  ParseError);
  CHECK_THROWS_AS(descriptor_from_json(Json{{"kind", "scalar"}, {"m", 2}}), ShapeError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), std::exception);
}

TEST_CASE("certificates") {
  const Json j = parse_json_text(R"({"d": 3, "theta": "1/3", "coeffs": ["1", "2/3"], "bound": "5/2"})");
  const DelsarteCertificate c = certificate_from_json(j);
  CHECK(c.a.n == 3);
  CHECK(c.a.a == std::vector<Rational>{1, Rational(2, 3)});
  CHECK(c.bound == Rational(5, 2));
  const Json out = to_json(c);
  CHECK(out["floor"] == 2);
  CHECK(certificate_from_json(out).a.a == c.a.a);
  CHECK_THROWS_AS(certificate_from_json(parse_json_text(R"({"d": 3, "theta": "1/3", "coeffs": [1, 0.5]})")),
                  DomainError);
}

TEST_CASE("phi specs") {
  const NcPhiSpec t = nc_phi_spec_from_json(
      parse_json_text(R"({"c": "1", "form": {"table": [{"pair": [0, 0], "value": 3}, {"pair": [0, 1], "value": -1}]}})"));
  const auto& table = std::get<std::vector<NcPhiTableEntry>>(t.form);
  CHECK(table.size() == 2);
  CHECK(table[1].value == -1);
  const NcPhiSpec s =
      nc_phi_spec_from_json(parse_json_text(R"({"c": 0.5, "form": {"spectral": {"reduce": "mean_trace", "g": ["0", "-1"]}}})"));
  const auto& sp = std::get<NcSpectralPhi>(s.form);
  CHECK(sp.reduce == SpectralReduce::mean_trace);
  CHECK(sp.g == Polynomial({0, -1}));
  CHECK(s.c == Rational(1, 2));
  CHECK_THROWS_AS(nc_phi_spec_from_json(parse_json_text(R"({"c": 1, "form": {}})")), ParseError);
  CHECK_THROWS_AS(nc_phi_spec_from_json(parse_json_text(R"({"c": 1, "form": {"table": [{"pair": [-1, 0], "value": 1}]}})")),
                  ParseError);
}

TEST_CASE("bound results serialize every diagnostic") {
  const BoundResult r = verify_delsarte(GegenbauerExpansion{3, {1}}, 3, Angle::from_pi_fraction(Rational(1, 3)));
  const Json j = to_json(r);
  CHECK(j["applicable"] == false);
  CHECK(j["bound"].is_null());
  CHECK(j.contains("witness"));
  CHECK(j["conditions"].size() == 3);
}
