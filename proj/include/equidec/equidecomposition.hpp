#pragma once

/**
 * Equidecomposition certificates between Ehrhart-equivalent lattice
 * polytopes, and an independent verifier for them.
 *
 * A certificate lists pairs (piece, map, image). The pieces are relatively
 * open simplices partitioning P, the images partition P', and each map is an
 * element of GL(3,Z) x Z^3 carrying its piece onto its image. Certificates
 * hold raw rational data so that corrupted ones can still be loaded and
 * rejected by the verifier.
 */

#include <string>
#include <vector>

#include "equidec/ehrhart.hpp"
#include "equidec/half_unimodular.hpp"

namespace equidec {

struct CertificatePair {
  SimplexType type;
  std::vector<Point> piece;
  RatMat linear;  ///< 3 x 3, row-major
  RatVec translation;
  std::vector<Point> image;

  bool operator==(const CertificatePair&) const = default;
};

struct EquidecompCertificate {
  std::vector<CertificatePair> pairs;
  TypeVector source_types;
  TypeVector target_types;

  bool operator==(const EquidecompCertificate&) const = default;
};

class NotEquivalentError : public Error {
 public:
  NotEquivalentError(QuasiPolynomial source, QuasiPolynomial target);
  const QuasiPolynomial& source() const noexcept { return source_; }
  const QuasiPolynomial& target() const noexcept { return target_; }

 private:
  QuasiPolynomial source_;
  QuasiPolynomial target_;
};

TypeVector type_vector(const Decomposition& d);

/// Throws NotEquivalentError, NotLatticePolytope.
EquidecompCertificate equidecompose(const Polytope& p, const Polytope& p_prime);

/// Compares type vectors of the two decompositions.
bool equidecomposable_quick(const Polytope& p, const Polytope& p_prime);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;  ///< unimodular, images, disjoint, volume, point_audit, ehrhart

  bool ok() const;
  /// nullptr when no check of that name exists
  const CheckResult* find(const std::string& name) const;
};

inline constexpr const char* kCheckNames[] = {"unimodular", "images", "disjoint", "volume", "point_audit", "ehrhart"};

/**
 * Independent checks; never throws on bad certificates. Point audits run at
 * scales 1, 2, 4, ... up to max_scale.
 */
VerificationReport verify_certificate(const Polytope& p, const Polytope& p_prime, const EquidecompCertificate& cert,
                                      long max_scale = 4);

}  // namespace equidec
