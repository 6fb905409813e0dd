#pragma once

#include <json.hpp>

#include <string>

#include "sphcodes/bounds.hpp"
#include "sphcodes/catalog.hpp"
#include "sphcodes/codes.hpp"

namespace sphcodes {

/// Insertion-ordered so that output is stable and readable.
using Json = nlohmann::ordered_json;

// Decoders throw ParseError for malformed structure and let DomainError /
// ShapeError from the constructors propagate for well-formed but invalid data.

/// Parses text; syntax errors become ParseError carrying the byte position.
Json parse_json_text(const std::string& text, const std::string& source = "input");
Json read_json_file(const std::string& path);
/// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

/// theta: radians (number) or "p/q" as a fraction of pi; "theta_pi_frac" and
/// "cos_theta" (exact rationals) take precedence when present.
Angle angle_from_json(const Json& j);
void angle_to_json(const Angle& theta, Json& out);

Rational rational_from_json(const Json& j);
std::vector<Rational> rational_list_from_json(const Json& j);
Json rational_list_to_json(const std::vector<Rational>& values);

AlgebraDescriptor descriptor_from_json(const Json& j);
Json to_json(const AlgebraDescriptor& descriptor);
AlgebraElement algebra_element_from_json(const Json& j);
Json to_json(const AlgebraElement& a);
ModuleVector module_vector_from_json(const Json& j);
Json to_json(const ModuleVector& x);

ClassicalCode classical_code_from_json(const Json& j);
Json to_json(const ClassicalCode& code);
ModularCode modular_code_from_json(const Json& j);
Json to_json(const ModularCode& code);
/// Modular when the object has "vectors", classical otherwise.
AnyCode code_from_json(const Json& j);
Json to_json(const AnyCode& code);

Json to_json(const VerificationReport& report);
Json to_json(const BoundResult& result);

/// {"d", "theta", "coeffs": ["p/q", ...], "bound": "p/q", "floor"}. Coefficients
/// must be strings so that they are exact.
DelsarteCertificate certificate_from_json(const Json& j);
Json to_json(const DelsarteCertificate& cert);

NcPhiSpec nc_phi_spec_from_json(const Json& j);

}  // namespace sphcodes
