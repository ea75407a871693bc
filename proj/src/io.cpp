#include "equidec/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

namespace equidec {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

Int parse_int(const std::string& s) {
  if (s.empty()) malformed("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
    malformed("not an integer: '" + s + "'");
  Int x;
  x.set_str(s[0] == '+' ? s.substr(1) : s, 10);
  return x;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) malformed(std::string("field '") + key + "' must be an array");
  return a;
}

std::size_t dim_field(const Json& j) {
  const Json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 3)
    malformed("'dim' must be an integer between 1 and 3");
  return static_cast<std::size_t>(d.get<long long>());
}

std::vector<Point> points_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.empty()) malformed("expected a non-empty list of points");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(point_from_json(p, dim));
  return out;
}

Json points_to_json(const std::vector<Point>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(point_to_json(p));
  return a;
}

RatMat matrix_from_json(const Json& j) {
  if (!j.is_array()) malformed("matrix must be a list of rows");
  RatMat m;
  for (const auto& row : j) {
    if (!row.is_array()) malformed("matrix row must be a list");
    RatVec r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    m.push_back(std::move(r));
  }
  return m;
}

Json matrix_to_json(const RatMat& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(point_to_json(row));
  return a;
}

}  // namespace

Json rational_to_json(const Rat& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return to_string(x);
}

Rat rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  if (!j.is_string()) malformed("coordinate must be an integer or a string \"a/b\"");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  const Int num = parse_int(s.substr(0, slash));
  const Int den = parse_int(s.substr(slash + 1));
  if (den <= 0) malformed("denominator must be positive in '" + s + "'");
  Int g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) malformed("rational not in lowest terms: '" + s + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Json point_to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(rational_to_json(x));
  return a;
}

Point point_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) malformed("point must have " + std::to_string(dim) + " coordinates");
  Point p;
  for (const auto& x : j) p.push_back(rational_from_json(x));
  return p;
}

Json polytope_to_json(const Polytope& p) {
  return Json{{"dim", p.ambient_dim()}, {"vertices", points_to_json(p.vertices())}};
}

Polytope polytope_from_json(const Json& j) {
  const std::size_t dim = dim_field(j);
  return Polytope::from_points(points_from_json(field(j, "vertices"), dim));
}

Json simplex_to_json(const Simplex& s) {
  return Json{{"dim", s.ambient_dim()}, {"vertices", points_to_json(s.vertices())}};
}

Simplex simplex_from_json(const Json& j) {
  const std::size_t dim = dim_field(j);
  std::vector<Point> vs = points_from_json(field(j, "vertices"), dim);
  if (vs.size() > dim + 1) malformed("too many vertices for a simplex");
  try {
    return Simplex(std::move(vs));
  } catch (const Error& e) {
    malformed(std::string("not a simplex: ") + e.what());
  }
}

Json quasipolynomial_to_json(const QuasiPolynomial& q) {
  Json rows = Json::array();
  for (const auto& r : q.rows()) rows.push_back(point_to_json(r));
  return Json{{"period", q.period()}, {"rows", rows}, {"text", q.to_string()}};
}

QuasiPolynomial quasipolynomial_from_json(const Json& j) {
  const Json& period = field(j, "period");
  if (!period.is_number_integer() || period.get<long long>() < 1) malformed("'period' must be a positive integer");
  RatMat rows = matrix_from_json(field(j, "rows"));
  if (rows.size() != period.get<std::size_t>()) malformed("need one row per residue");
  const std::size_t n = rows.size();
  return QuasiPolynomial(n, std::move(rows));
}

Json map_to_json(const UnimodularMap& m) {
  Json linear = Json::array();
  for (std::size_t i = 0; i < m.linear().rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.linear().cols(); ++j) row.push_back(rational_to_json(Rat(m.linear()(i, j))));
    linear.push_back(row);
  }
  return Json{{"linear", linear}, {"translation", point_to_json(to_rat(m.translation()))}};
}

Json type_vector_to_json(const TypeVector& f) {
  Json o = Json::object();
  for (SimplexType t : kAllTypes) o[std::string(label(t))] = f[t];
  return o;
}

TypeVector type_vector_from_json(const Json& j) {
  if (!j.is_object()) malformed("type vector must be an object");
  TypeVector f;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer() || value.get<long long>() < 0) malformed("type counts must be non-negative integers");
    f[parse_label(key)] = value.get<long>();
  }
  return f;
}

Json decomposition_to_json(const Decomposition& d) {
  Json pieces = Json::array();
  TypeVector f;
  for (const auto& piece : d.pieces) {
    ++f[piece.type];
    pieces.push_back(Json{{"type", std::string(label(piece.type))},
                          {"vertices", points_to_json(piece.simplex.vertices())},
                          {"to_canonical", map_to_json(piece.to_canonical)}});
  }
  return Json{{"source", polytope_to_json(d.source)}, {"type_vector", type_vector_to_json(f)}, {"pieces", pieces}};
}

Json certificate_to_json(const EquidecompCertificate& c) {
  Json pairs = Json::array();
  for (const auto& pr : c.pairs) {
    pairs.push_back(Json{{"type", std::string(label(pr.type))},
                         {"piece", points_to_json(pr.piece)},
                         {"linear", matrix_to_json(pr.linear)},
                         {"translation", point_to_json(pr.translation)},
                         {"image", points_to_json(pr.image)}});
  }
  return Json{{"schema", kCertificateSchema},
              {"type_vector", {{"source", type_vector_to_json(c.source_types)}, {"target", type_vector_to_json(c.target_types)}}},
              {"pairs", pairs}};
}

EquidecompCertificate certificate_from_json(const Json& j) {
  const Json& schema = field(j, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kCertificateSchema)
    malformed(std::string("unsupported certificate schema, expected ") + kCertificateSchema);
  EquidecompCertificate c;
  const Json& tv = field(j, "type_vector");
  c.source_types = type_vector_from_json(field(tv, "source"));
  c.target_types = type_vector_from_json(field(tv, "target"));
  for (const auto& pr : array_field(j, "pairs")) {
    const Json& type = field(pr, "type");
    if (!type.is_string()) malformed("'type' must be a label string");
    CertificatePair pair{parse_label(type.get<std::string>()),
                         points_from_json(field(pr, "piece"), 3),
                         matrix_from_json(field(pr, "linear")),
                         point_from_json(field(pr, "translation"), 3),
                         points_from_json(field(pr, "image"), 3)};
    if (pair.linear.size() != 3) malformed("'linear' must have three rows");
    for (const auto& row : pair.linear)
      if (row.size() != 3) malformed("'linear' rows must have three entries");
    c.pairs.push_back(std::move(pair));
  }
  return c;
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"ok", r.ok()}, {"checks", checks}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    malformed("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::MalformedInput, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

void write_off(std::ostream& out, const Simplex& s) {
  if (s.dim() != 3 || s.ambient_dim() != 3) throw Error(ErrorCode::DegenerateInput, "OFF export takes tetrahedra in R^3");
  out << "OFF\n4 4 6\n";
  for (const auto& v : s.vertices())
    out << std::setprecision(17) << v[0].get_d() << " " << v[1].get_d() << " " << v[2].get_d() << "\n";
  // Faces oriented outward.
  const auto& v = s.vertices();
  const Rat orientation = dot(v[1] - v[0], Point{(v[2] - v[0])[1] * (v[3] - v[0])[2] - (v[2] - v[0])[2] * (v[3] - v[0])[1],
                                                 (v[2] - v[0])[2] * (v[3] - v[0])[0] - (v[2] - v[0])[0] * (v[3] - v[0])[2],
                                                 (v[2] - v[0])[0] * (v[3] - v[0])[1] - (v[2] - v[0])[1] * (v[3] - v[0])[0]});
  if (orientation > 0)
    out << "3 0 2 1\n3 0 1 3\n3 0 3 2\n3 1 2 3\n";
  else
    out << "3 0 1 2\n3 0 3 1\n3 0 2 3\n3 1 3 2\n";
}

}  // namespace equidec
