#include "sphcodes/json_io.hpp"

#include <fstream>
#include <sstream>

#include "sphcodes/errors.hpp"

namespace sphcodes {

namespace {

template <typename F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError("complex entry must be a number or [re, im], got " + j.dump());
}

AlgebraElement element_with_default(const Json& j, const std::optional<AlgebraDescriptor>& fallback) {
  AlgebraDescriptor desc;
  if (j.contains("kind") || j.contains("m") || !fallback) {
    desc = descriptor_from_json(j);
  } else {
    desc = *fallback;
  }
  if (fallback && !(desc == *fallback)) {
    throw ShapeError("component algebra " + to_string(desc) + " differs from " + to_string(*fallback));
  }
  const Json& rows = field(j, "entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != desc.m) {
    throw ParseError("'entries' must hold " + std::to_string(desc.m) + " rows");
  }
  ComplexMatrix e(desc.m, desc.m);
  for (int r = 0; r < desc.m; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != desc.m) {
      throw ParseError("row " + std::to_string(r) + " of 'entries' must hold " + std::to_string(desc.m) + " entries");
    }
    for (int c = 0; c < desc.m; ++c) e(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return AlgebraElement(desc, std::move(e));
}

ModuleVector vector_with_default(const Json& j, const std::optional<AlgebraDescriptor>& fallback,
                                 std::optional<int> d_fallback) {
  std::optional<AlgebraDescriptor> desc = fallback;
  if (j.contains("algebra")) desc = descriptor_from_json(j["algebra"]);
  if (!desc) throw ParseError("module vector needs an 'algebra' descriptor");
  if (fallback && !(*desc == *fallback)) throw ShapeError("module vector algebra differs from the code's algebra");
  const Json& comps = field(j, "components");
  if (!comps.is_array() || comps.empty()) throw ParseError("'components' must be a nonempty array");
  const int d = j.contains("d") ? int_field(j, "d") : d_fallback.value_or(static_cast<int>(comps.size()));
  if (static_cast<int>(comps.size()) != d) {
    throw ShapeError("module vector declares d = " + std::to_string(d) + " but has " + std::to_string(comps.size()) +
                     " components");
  }
  std::vector<AlgebraElement> elems;
  for (const auto& c : comps) elems.push_back(element_with_default(c, desc));
  return ModuleVector(*desc, std::move(elems));
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json optional_rational(const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(nullptr); }

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  // Floating input is read through its shortest decimal form: 0.3 -> 3/10.
  if (j.is_number_float()) return parse_rational(j.dump());
  throw ParseError("expected a rational (\"p/q\" or a number), got " + j.dump());
}

std::vector<Rational> rational_list_from_json(const Json& j) {
  if (j.is_string()) return parse_rational_list(j.get<std::string>());
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

Json rational_list_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Angle angle_from_json(const Json& j) {
  return guarded("theta", [&] {
    if (j.contains("theta_pi_frac")) return Angle::from_pi_fraction(rational_from_json(j["theta_pi_frac"]));
    if (j.contains("cos_theta")) return Angle::from_cos(rational_from_json(j["cos_theta"]));
    const Json& t = field(j, "theta");
    if (t.is_string()) return Angle::from_pi_fraction(parse_rational(t.get<std::string>()));
    if (t.is_number()) return Angle::from_radians(t.get<double>());
    throw ParseError("'theta' must be radians or a \"p/q\" fraction of pi");
  });
}

void angle_to_json(const Angle& theta, Json& out) {
  out["theta"] = theta.radians();
  if (theta.pi_fraction()) out["theta_pi_frac"] = to_string(*theta.pi_fraction());
  else if (theta.exact_cos()) out["cos_theta"] = to_string(*theta.exact_cos());
}

AlgebraDescriptor descriptor_from_json(const Json& j) {
  return guarded("algebra descriptor", [&] {
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) throw ParseError("'kind' must be a string");
    const AlgebraKind k = parse_algebra_kind(kind.get<std::string>());
    const int m = j.contains("m") ? int_field(j, "m") : 1;
    switch (k) {
      case AlgebraKind::scalar:
        if (m != 1) throw ShapeError("scalar algebra requires m = 1");
        return AlgebraDescriptor::scalar();
      case AlgebraKind::diagonal:
        return AlgebraDescriptor::diagonal(m);
      case AlgebraKind::matrix:
        break;
    }
    return AlgebraDescriptor::matrix(m);
  });
}

Json to_json(const AlgebraDescriptor& descriptor) {
  return Json{{"kind", to_string(descriptor.kind)}, {"m", descriptor.m}};
}

AlgebraElement algebra_element_from_json(const Json& j) {
  return guarded("algebra element", [&] { return element_with_default(j, std::nullopt); });
}

Json to_json(const AlgebraElement& a) {
  Json rows = Json::array();
  for (int r = 0; r < a.m(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < a.m(); ++c) row.push_back(complex_to_json(a.entries()(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"m", a.m()}, {"kind", to_string(a.descriptor().kind)}, {"entries", std::move(rows)}};
}

ModuleVector module_vector_from_json(const Json& j) {
  return guarded("module vector", [&] { return vector_with_default(j, std::nullopt, std::nullopt); });
}

Json to_json(const ModuleVector& x) {
  Json comps = Json::array();
  for (const auto& c : x.components()) comps.push_back(to_json(c));
  return Json{{"d", x.d()}, {"algebra", to_json(x.descriptor())}, {"components", std::move(comps)}};
}

ClassicalCode classical_code_from_json(const Json& j) {
  return guarded("classical code", [&] {
    const int d = int_field(j, "d");
    if (d < 1) throw DomainError("'d' must be positive");
    const Angle theta = angle_from_json(j);
    const Json& pts = field(j, "points");
    if (!pts.is_array()) throw ParseError("'points' must be an array");
    Eigen::MatrixXd points(static_cast<Eigen::Index>(pts.size()), d);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Json& row = pts[i];
      if (!row.is_array() || static_cast<int>(row.size()) != d) {
        throw ShapeError("point " + std::to_string(i) + " must have " + std::to_string(d) + " coordinates");
      }
      for (int c = 0; c < d; ++c) {
        if (!row[static_cast<std::size_t>(c)].is_number()) {
          throw ParseError("point " + std::to_string(i) + " has a non-numeric coordinate");
        }
        points(static_cast<Eigen::Index>(i), c) = row[static_cast<std::size_t>(c)].get<double>();
      }
    }
    return make_classical_code(d, theta, std::move(points));
  });
}

Json to_json(const ClassicalCode& code) {
  Json out{{"d", code.d}};
  angle_to_json(code.theta, out);
  Json pts = Json::array();
  for (Eigen::Index i = 0; i < code.points.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < code.points.cols(); ++c) row.push_back(code.points(i, c));
    pts.push_back(std::move(row));
  }
  out["points"] = std::move(pts);
  return out;
}

ModularCode modular_code_from_json(const Json& j) {
  return guarded("modular code", [&] {
    const int d = int_field(j, "d");
    const Angle theta = angle_from_json(j);
    const AlgebraDescriptor alg = descriptor_from_json(field(j, "algebra"));
    const Json& vecs = field(j, "vectors");
    if (!vecs.is_array()) throw ParseError("'vectors' must be an array");
    std::vector<ModuleVector> vectors;
    for (const auto& v : vecs) vectors.push_back(vector_with_default(v, alg, d));
    return make_modular_code(alg, d, theta, std::move(vectors));
  });
}

Json to_json(const ModularCode& code) {
  Json out{{"d", code.d}};
  angle_to_json(code.theta, out);
  out["algebra"] = to_json(code.algebra);
  Json vecs = Json::array();
  for (const auto& v : code.vectors) vecs.push_back(to_json(v));
  out["vectors"] = std::move(vecs);
  return out;
}

AnyCode code_from_json(const Json& j) {
  if (j.is_object() && j.contains("vectors")) return modular_code_from_json(j);
  return classical_code_from_json(j);
}

Json to_json(const AnyCode& code) {
  return std::visit([](const auto& c) { return to_json(c); }, code);
}

Json to_json(const VerificationReport& report) {
  Json out{{"mode", to_string(report.mode)},
           {"valid", report.valid},
           {"n", report.n},
           {"worst_pair", Json::array({report.worst_pair.first, report.worst_pair.second})},
           {"margin", report.margin},
           {"unit_ok", report.unit_ok},
           {"unit_defect", report.unit_defect},
           {"min_distance", report.min_distance},
           {"required_distance", report.required_distance}};
  if (report.mode != VerifyMode::classical) out["min_admissible_cos"] = report.min_admissible_cos;
  out["tol"] = report.tol;
  return out;
}

Json to_json(const BoundResult& result) {
  Json out{{"applicable", result.applicable}, {"bound", optional_rational(result.bound)}};
  out["bound_value"] = result.bound ? Json(result.bound->get_d()) : Json(nullptr);
  out["floor"] = result.bound_floor ? Json(result.bound_floor->get_str()) : Json(nullptr);
  if (result.bound_floor && result.bound_floor->fits_slong_p()) out["floor"] = result.bound_floor->get_si();
  Json conds = Json::array();
  for (const auto& c : result.conditions) conds.push_back(Json{{"name", c.name}, {"satisfied", c.satisfied}, {"slack", c.slack}});
  out["conditions"] = std::move(conds);
  if (result.witness) {
    out["witness"] = to_string(*result.witness);
    out["witness_value"] = result.witness->get_d();
  }
  if (result.offending_index) out["offending_index"] = *result.offending_index;
  if (!result.witness_pairs.empty()) {
    Json pairs = Json::array();
    for (const auto& [j, k] : result.witness_pairs) pairs.push_back(Json::array({j, k}));
    out["witness_pairs"] = std::move(pairs);
  }
  out["reciprocal_refinement"] = result.reciprocal_refinement;
  if (result.reciprocal_bound) out["reciprocal_bound"] = to_string(*result.reciprocal_bound);
  if (result.code_slack) out["code_slack"] = *result.code_slack;
  if (result.full_domain_certified) out["full_domain_certified"] = *result.full_domain_certified;
  return out;
}

DelsarteCertificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    DelsarteCertificate cert;
    cert.d = int_field(j, "d");
    cert.theta = angle_from_json(j);
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array() || coeffs.empty()) throw ParseError("'coeffs' must be a nonempty array");
    cert.a.n = cert.d;
    for (const auto& c : coeffs) {
      if (!c.is_string()) throw DomainError("certificate coefficients must be exact \"p/q\" strings, got " + c.dump());
      cert.a.a.push_back(parse_rational(c.get<std::string>()));
    }
    if (j.contains("bound")) cert.bound = rational_from_json(j["bound"]);
    return cert;
  });
}

Json to_json(const DelsarteCertificate& cert) {
  Json out{{"d", cert.d}};
  angle_to_json(cert.theta, out);
  out["coeffs"] = rational_list_to_json(cert.a.a);
  out["bound"] = to_string(cert.bound);
  out["floor"] = floor(cert.bound).get_si();
  return out;
}

NcPhiSpec nc_phi_spec_from_json(const Json& j) {
  return guarded("phi spec", [&] {
    NcPhiSpec spec;
    spec.c = rational_from_json(field(j, "c"));
    const Json& form = field(j, "form");
    if (form.contains("table")) {
      std::vector<NcPhiTableEntry> table;
      for (const auto& e : form["table"]) {
        const Json& pair = field(e, "pair");
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
          throw ParseError("'pair' must be [j, k] with nonnegative integers");
        }
        table.push_back({pair[0].get<std::size_t>(), pair[1].get<std::size_t>(), rational_from_json(field(e, "value"))});
      }
      spec.form = std::move(table);
    } else if (form.contains("spectral")) {
      const Json& s = form["spectral"];
      NcSpectralPhi phi;
      const std::string reduce = field(s, "reduce").get<std::string>();
      if (reduce == "min_eig") phi.reduce = SpectralReduce::min_eig;
      else if (reduce == "mean_trace") phi.reduce = SpectralReduce::mean_trace;
      else throw ParseError("'reduce' must be \"min_eig\" or \"mean_trace\"");
      phi.g = Polynomial(rational_list_from_json(field(s, "g")));
      spec.form = std::move(phi);
    } else {
      throw ParseError("'form' must contain \"table\" or \"spectral\"");
    }
    return spec;
  });
}

}  // namespace sphcodes
