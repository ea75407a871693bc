#pragma once

/**
 * Ehrhart counting functions and quasipolynomials.
 *
 * Brute-force counting is the ground truth throughout; fitted and closed-form
 * quasipolynomials are checked against it.
 */

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "equidec/geometry.hpp"

namespace equidec {

/**
 * k -> sum_i c_i(k mod period) k^i with rational coefficient rows.
 *
 * Always held in canonical form: minimal period, degree trimmed so that the
 * leading row is not identically zero (the zero function has degree 0).
 */
class QuasiPolynomial {
 public:
  QuasiPolynomial(std::size_t period, std::vector<std::vector<Rat>> rows);

  static QuasiPolynomial zero() { return QuasiPolynomial(1, {{Rat(0)}}); }

  std::size_t period() const noexcept { return rows_.size(); }
  int degree() const noexcept { return static_cast<int>(rows_.front().size()) - 1; }
  /// rows()[r][i] is the coefficient of k^i for k = r (mod period).
  const std::vector<std::vector<Rat>>& rows() const noexcept { return rows_; }

  Rat operator()(const Int& k) const;
  Rat operator()(long k) const { return (*this)(Int(k)); }

  QuasiPolynomial operator+(const QuasiPolynomial& rhs) const;
  QuasiPolynomial operator*(const Int& factor) const;
  bool operator==(const QuasiPolynomial& rhs) const = default;

  /// Human-readable, e.g. "k + 1" for period 1, one line per residue otherwise.
  std::string to_string() const;

 private:
  std::vector<std::vector<Rat>> rows_;
};

/// |k B cap Z^d| (closed) or |k relint(B) cap Z^d|.
Int count(const Polytope& body, const Int& k, Mode mode);
Int count(const Simplex& body, const Int& k, Mode mode);

/// Least D with D * B a lattice polytope.
Int denominator(const Polytope& body);
Int denominator(const Simplex& body);

/**
 * Fits the Ehrhart quasipolynomial of B by exact interpolation on
 * k = 1..D(dim+1) (dim+1 samples per residue class) and validates it on the
 * next D(dim+1) dilates. Throws FitMismatch if validation fails.
 */
QuasiPolynomial fit_quasipolynomial(const Polytope& body, Mode mode);
QuasiPolynomial fit_quasipolynomial(const Simplex& body, Mode mode);

/// Equal canonical Ehrhart quasipolynomials.
bool ehrhart_equivalent(const Polytope& a, const Polytope& b);

// ---------------------------------------------------------------- half-unimodular types

/// The nine classes of half-unimodular simplices in R^3. `D{i}_{j}` is the
/// i-dimensional class with j lattice points; `D2p`/`D3p` are the two
/// lattice-free classes whose span meets Z^3.
enum class SimplexType { D0_1, D1_1, D2_1, D3_1, D0_0, D1_0, D2_0, D2p, D3p };

inline constexpr std::array<SimplexType, 9> kAllTypes = {
    SimplexType::D0_1, SimplexType::D1_1, SimplexType::D2_1, SimplexType::D3_1, SimplexType::D0_0,
    SimplexType::D1_0, SimplexType::D2_0, SimplexType::D2p,  SimplexType::D3p};

/// The seven classes the decomposition pipeline produces, in the order of
/// the unitriangular evaluation table.
inline constexpr std::array<SimplexType, 7> kBasisTypes = {SimplexType::D0_1, SimplexType::D0_0, SimplexType::D1_1,
                                                           SimplexType::D1_0, SimplexType::D2_1, SimplexType::D2_0,
                                                           SimplexType::D3_1};

std::string_view label(SimplexType t);
/// Inverse of label(); throws MalformedInput.
SimplexType parse_label(std::string_view s);
int type_dim(SimplexType t);
/// Vertices of the canonical representative in R^3.
std::vector<Point> canonical_vertices(SimplexType t);
Simplex canonical_simplex(SimplexType t);

/// f_t counts per class.
struct TypeVector {
  std::array<long, 9> counts{};

  long& operator[](SimplexType t) { return counts[static_cast<std::size_t>(t)]; }
  long operator[](SimplexType t) const { return counts[static_cast<std::size_t>(t)]; }
  long total() const;
  bool operator==(const TypeVector&) const = default;
};

/**
 * Period-2 relint Ehrhart quasipolynomial of the canonical representative.
 *
 * For D{i}_1: C(ceil(k/2)-1, i). For D{i}_0: the same for even k, zero for
 * odd k. D2p and D3p take C(k/2-1, i) at even k and C((k+1)/2, i) at odd k,
 * which is what direct counting gives.
 */
QuasiPolynomial closed_form(SimplexType t);

/// Older closed expressions in 1, k, ..., (-1)^k k^n. Comparison only:
/// E_1^1 disagrees with counting at even k, E'_3 is non-integral at odd k.
Rat legacy_formula(SimplexType t, long k);

/// sum_t f_t * closed_form(t)
QuasiPolynomial combine(const TypeVector& f);

/// 7 x columns grid; row r is closed_form(kBasisTypes[r]) at k = 1..columns.
IntMat basis_evaluation_matrix(std::size_t columns = 7);

/**
 * Orbit profile of a rational segment [lo, hi] for the lattice (1/q)Z under
 * x -> +-x + t. The orbit of a/q is keyed by min(a mod q, -a mod q), key 0
 * being Z itself.
 */
std::map<long, long> orbit_profile_1d(const Rat& lo, const Rat& hi, long q);

}  // namespace equidec
