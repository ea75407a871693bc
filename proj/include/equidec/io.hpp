#pragma once

/**
 * JSON file formats and OFF mesh export.
 *
 * Rationals are written as strings "a/b" in lowest terms; integers are
 * written bare (or as decimal strings when they do not fit in 64 bits).
 * Readers accept both spellings. All parse failures throw MalformedInput.
 */

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "equidec/equidecomposition.hpp"

namespace equidec {

using Json = nlohmann::json;

inline constexpr const char* kCertificateSchema = "equidec-certificate/1";

Json rational_to_json(const Rat& x);
Rat rational_from_json(const Json& j);
Json point_to_json(const Point& p);
Point point_from_json(const Json& j, std::size_t dim);

/// {"dim": d, "vertices": [[...], ...]}; dim is the ambient dimension.
Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);
/// Same layout; the vertices must be affinely independent.
Json simplex_to_json(const Simplex& s);
Simplex simplex_from_json(const Json& j);

/// {"period": D, "rows": [[c_0, c_1, ...], ...], "text": "..."}
Json quasipolynomial_to_json(const QuasiPolynomial& q);
QuasiPolynomial quasipolynomial_from_json(const Json& j);

Json map_to_json(const UnimodularMap& m);
Json type_vector_to_json(const TypeVector& f);
TypeVector type_vector_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);
Json certificate_to_json(const EquidecompCertificate& c);
EquidecompCertificate certificate_from_json(const Json& j);
Json report_to_json(const VerificationReport& r);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// Tetrahedron as an OFF mesh (4 vertices, 4 triangles, decimal coordinates).
void write_off(std::ostream& out, const Simplex& s);

}  // namespace equidec
