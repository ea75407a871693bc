#include "equidec/equidecomposition.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace equidec {

NotEquivalentError::NotEquivalentError(QuasiPolynomial source, QuasiPolynomial target)
    : Error(ErrorCode::NotEhrhartEquivalent,
            "Ehrhart quasipolynomials differ: " + source.to_string() + " vs " + target.to_string()),
      source_(std::move(source)),
      target_(std::move(target)) {}

TypeVector type_vector(const Decomposition& d) {
  TypeVector f;
  for (const auto& piece : d.pieces) ++f[piece.type];
  return f;
}

namespace {

Polytope in_space(const Polytope& p) {
  if (p.ambient_dim() > 3) throw Error(ErrorCode::DegenerateInput, "dimension above 3");
  return p.ambient_dim() < 3 ? p.embedded(3) : p;
}

std::map<SimplexType, std::vector<const OpenSimplexPiece*>> by_type(const Decomposition& d) {
  std::map<SimplexType, std::vector<const OpenSimplexPiece*>> out;
  for (const auto& piece : d.pieces) out[piece.type].push_back(&piece);
  for (auto& [t, list] : out)
    std::sort(list.begin(), list.end(), [](const OpenSimplexPiece* a, const OpenSimplexPiece* b) {
      return a->simplex.sorted_vertices() < b->simplex.sorted_vertices();
    });
  return out;
}

RatMat to_rat(const IntMat& m) {
  RatMat out(m.rows(), RatVec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Rat(m(i, j));
  return out;
}

}  // namespace

EquidecompCertificate equidecompose(const Polytope& p_in, const Polytope& q_in) {
  const Polytope p = in_space(p_in);
  const Polytope q = in_space(q_in);
  if (!p.is_lattice() || !q.is_lattice()) throw Error(ErrorCode::NotLatticePolytope, "polytope has non-integral vertices");
  QuasiPolynomial ep = fit_quasipolynomial(p, Mode::Closed);
  QuasiPolynomial eq = fit_quasipolynomial(q, Mode::Closed);
  if (!(ep == eq)) throw NotEquivalentError(std::move(ep), std::move(eq));

  const Decomposition dp = decompose_polytope(p);
  const Decomposition dq = decompose_polytope(q);
  EquidecompCertificate cert;
  cert.source_types = type_vector(dp);
  cert.target_types = type_vector(dq);
  if (!(cert.source_types == cert.target_types))
    throw Error(ErrorCode::NotEhrhartEquivalent, "type vectors differ for Ehrhart-equivalent polytopes");

  auto src = by_type(dp);
  auto dst = by_type(dq);
  for (const auto& [t, pieces] : src) {
    const auto& targets = dst.at(t);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const UnimodularMap m = targets[i]->to_canonical.inverse().compose(pieces[i]->to_canonical);
      CertificatePair pair{t, pieces[i]->simplex.vertices(), to_rat(m.linear()), equidec::to_rat(m.translation()),
                           targets[i]->simplex.vertices()};
      cert.pairs.push_back(std::move(pair));
    }
  }
  return cert;
}

bool equidecomposable_quick(const Polytope& p, const Polytope& q) {
  return type_vector(decompose_polytope(p)) == type_vector(decompose_polytope(q));
}

// ---------------------------------------------------------------- verification

bool VerificationReport::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::optional<std::vector<Simplex>> as_simplices(const std::vector<CertificatePair>& pairs, bool images) {
  std::vector<Simplex> out;
  for (const auto& pr : pairs) {
    const auto& vs = images ? pr.image : pr.piece;
    if (vs.empty() || vs.size() > 4) return std::nullopt;
    for (const auto& v : vs)
      if (v.size() != 3) return std::nullopt;
    try {
      out.emplace_back(vs);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return out;
}

std::string pair_ref(std::size_t i) { return "pair " + std::to_string(i); }

CheckResult check_unimodular(const EquidecompCertificate& cert) {
  CheckResult r{"unimodular", true, ""};
  for (std::size_t i = 0; i < cert.pairs.size() && r.passed; ++i) {
    const auto& pr = cert.pairs[i];
    bool shape = pr.linear.size() == 3 && pr.translation.size() == 3 &&
                 std::all_of(pr.linear.begin(), pr.linear.end(), [](const RatVec& row) { return row.size() == 3; });
    if (!shape) {
      r = {"unimodular", false, pair_ref(i) + ": map is not 3 x 3 with a 3-vector translation"};
      break;
    }
    IntMat m(3, 3);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        if (!is_integral(pr.linear[a][b])) {
          r = {"unimodular", false, pair_ref(i) + ": non-integral matrix entry"};
          break;
        }
        m(a, b) = pr.linear[a][b].get_num();
      }
    if (!r.passed) break;
    const Int d = det(m);
    if (d != 1 && d != -1) r = {"unimodular", false, pair_ref(i) + ": determinant " + to_string(d)};
    else if (!std::all_of(pr.translation.begin(), pr.translation.end(), [](const Rat& x) { return is_integral(x); }))
      r = {"unimodular", false, pair_ref(i) + ": non-integral translation"};
  }
  return r;
}

CheckResult check_images(const EquidecompCertificate& cert) {
  for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
    const auto& pr = cert.pairs[i];
    if (pr.linear.size() != 3 || pr.translation.size() != 3 ||
        !std::all_of(pr.linear.begin(), pr.linear.end(), [](const RatVec& row) { return row.size() == 3; }))
      return {"images", false, pair_ref(i) + ": malformed map"};
    std::vector<Point> mapped;
    for (const auto& v : pr.piece) {
      if (v.size() != 3) return {"images", false, pair_ref(i) + ": piece vertex not in R^3"};
      Point w(3, Rat(0));
      for (std::size_t a = 0; a < 3; ++a) w[a] = dot(pr.linear[a], v) + pr.translation[a];
      mapped.push_back(std::move(w));
    }
    std::vector<Point> image = pr.image;
    std::sort(mapped.begin(), mapped.end());
    std::sort(image.begin(), image.end());
    if (mapped != image) return {"images", false, pair_ref(i) + ": map(piece) differs from the stated image"};
  }
  return {"images", true, ""};
}

CheckResult check_disjoint(const std::optional<std::vector<Simplex>>& pieces,
                           const std::optional<std::vector<Simplex>>& images) {
  if (!pieces || !images) return {"disjoint", false, "a piece or image is not a simplex in R^3"};
  if (auto hit = find_overlapping_pair(*pieces))
    return {"disjoint", false, "pieces " + std::to_string(hit->first) + " and " + std::to_string(hit->second) + " overlap"};
  if (auto hit = find_overlapping_pair(*images))
    return {"disjoint", false, "images " + std::to_string(hit->first) + " and " + std::to_string(hit->second) + " overlap"};
  return {"disjoint", true, ""};
}

CheckResult check_volume(const Polytope& p, const Polytope& q, const std::optional<std::vector<Simplex>>& pieces,
                         const std::optional<std::vector<Simplex>>& images) {
  if (!pieces || !images) return {"volume", false, "a piece or image is not a simplex in R^3"};
  const Rat vp = volume(p), vq = volume(q);
  if (vp != vq) return {"volume", false, "volumes of the polytopes differ: " + to_string(vp) + " vs " + to_string(vq)};
  auto side = [](const Polytope& body, const std::vector<Simplex>& list, const char* what) -> std::optional<std::string> {
    const FacetSystem fs = facet_system(body);
    Rat total = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (const auto& v : list[i].vertices())
        if (!fs.contains(v, Mode::Closed)) return std::string(what) + " " + std::to_string(i) + " leaves the polytope";
      if (list[i].dim() == 3) total += volume(list[i]);
    }
    const Rat expected = body.dim() == 3 ? volume(body) : Rat(0);
    if (total != expected)
      return std::string(what) + " volumes sum to " + to_string(total) + ", expected " + to_string(expected);
    return std::nullopt;
  };
  if (auto err = side(p, *pieces, "piece")) return {"volume", false, *err};
  if (auto err = side(q, *images, "image")) return {"volume", false, *err};
  return {"volume", true, "volume " + to_string(vp)};
}

CheckResult check_points(const Polytope& p, const Polytope& q, const std::optional<std::vector<Simplex>>& pieces,
                         const std::optional<std::vector<Simplex>>& images, long max_scale) {
  if (!pieces || !images) return {"point_audit", false, "a piece or image is not a simplex in R^3"};
  std::string scales;
  for (long s = 1; s <= std::max(1L, max_scale); s *= 2) {
    for (int side = 0; side < 2; ++side) {
      const PointAudit a = point_audit(side ? q : p, side ? *images : *pieces, Int(s));
      if (!a.ok())
        return {"point_audit", false,
                std::string(side ? "target" : "source") + " at scale " + std::to_string(s) + ": " +
                    std::to_string(a.uncovered) + " uncovered, " + std::to_string(a.multiply_covered) +
                    " multiply covered, " + std::to_string(a.stray) + " stray"};
    }
    scales += (scales.empty() ? "" : ",") + std::to_string(s);
  }
  return {"point_audit", true, "scales " + scales};
}

CheckResult check_ehrhart(const Polytope& p, const Polytope& q, const EquidecompCertificate& cert,
                          const std::optional<std::vector<Simplex>>& pieces) {
  if (!pieces) return {"ehrhart", false, "a piece is not a simplex in R^3"};
  TypeVector f;
  for (const auto& pr : cert.pairs) ++f[pr.type];
  if (!(f == cert.source_types) || !(f == cert.target_types))
    return {"ehrhart", false, "type-vector summary does not match the pair labels"};
  // The labels are only trusted after comparing each piece's own counts.
  for (std::size_t i = 0; i < pieces->size(); ++i) {
    const QuasiPolynomial cf = closed_form(cert.pairs[i].type);
    const FacetSystem fs = facet_system((*pieces)[i]);
    for (long k = 1; k <= 8; ++k)
      if (Rat(count_scaled_points(fs, (*pieces)[i].vertices(), Int(k), Mode::RelInt)) != cf(k))
        return {"ehrhart", false, pair_ref(i) + ": counts disagree with label " + std::string(label(cert.pairs[i].type))};
  }
  const QuasiPolynomial sum = combine(f);
  if (!(sum == fit_quasipolynomial(p, Mode::Closed))) return {"ehrhart", false, "sum of closed forms differs from Ehr(P)"};
  if (!(sum == fit_quasipolynomial(q, Mode::Closed))) return {"ehrhart", false, "sum of closed forms differs from Ehr(P')"};
  return {"ehrhart", true, sum.to_string()};
}

}  // namespace

VerificationReport verify_certificate(const Polytope& p_in, const Polytope& q_in, const EquidecompCertificate& cert,
                                      long max_scale) {
  VerificationReport report;
  const Polytope p = in_space(p_in);
  const Polytope q = in_space(q_in);
  const auto pieces = as_simplices(cert.pairs, false);
  const auto images = as_simplices(cert.pairs, true);
  auto run = [&](const char* name, auto&& check) {
    try {
      report.checks.push_back(check());
    } catch (const std::exception& e) {
      report.checks.push_back({name, false, e.what()});
    }
  };
  run("unimodular", [&] { return check_unimodular(cert); });
  run("images", [&] { return check_images(cert); });
  run("disjoint", [&] { return check_disjoint(pieces, images); });
  run("volume", [&] { return check_volume(p, q, pieces, images); });
  run("point_audit", [&] { return check_points(p, q, pieces, images, max_scale); });
  run("ehrhart", [&] { return check_ehrhart(p, q, cert, pieces); });
  return report;
}

}  // namespace equidec
