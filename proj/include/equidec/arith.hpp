#pragma once

/**
 * Exact scalars and small-dimensional integer linear algebra.
 *
 * All integers are arbitrary precision (GMP). Matrices are tiny (d <= 3 for
 * everything geometric, a handful of rows for interpolation systems), so the
 * algorithms favour clarity over asymptotics.
 */

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "equidec/error.hpp"

namespace equidec {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
/// Row-major rational matrix.
using RatMat = std::vector<RatVec>;

std::string to_string(const Int& x);
/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rat& x);

Int floor_of(const Rat& x);
Int ceil_of(const Rat& x);
bool is_integral(const Rat& x);

/// Dense integer matrix, row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMat from_rows(const std::vector<IntVec>& rows);
  static IntMat from_columns(const std::vector<IntVec>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec column(std::size_t j) const;
  IntMat transpose() const;

  IntMat operator*(const IntMat& rhs) const;
  IntVec operator*(const IntVec& v) const;
  RatVec operator*(const RatVec& v) const;
  bool operator==(const IntMat& rhs) const = default;

  void swap_columns(std::size_t a, std::size_t b);
  /// column[dst] += factor * column[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_column(std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant of a square matrix.
Int det(const IntMat& m);

struct HermiteResult {
  IntMat h;  ///< column Hermite normal form
  IntMat u;  ///< unimodular, m * u == h
};

/**
 * Column-style Hermite normal form.
 *
 * Rows are processed top to bottom; each pivot row gets a positive pivot with
 * all entries to its right zero and all entries to its left reduced into
 * [0, pivot). Works for any shape.
 */
HermiteResult hnf(const IntMat& m);

/// Extends a saturated, linearly independent family of d-vectors to a basis
/// of Z^d. Throws NotSaturated otherwise.
IntMat complete_to_basis(const std::vector<IntVec>& vs, std::size_t d);

/// Inverse of a in Z/q, reported in [1, q-1] (0 when q == 1). Throws NotCoprime.
Int inv_mod(const Int& a, const Int& q);

/// Floor-style remainder in [0, q).
Int mod_floor(const Int& a, const Int& q);

/// Inverse of a matrix with |det| = 1. Throws NotUnimodular otherwise.
IntMat inverse_unimodular(const IntMat& m);

/// Some integer x with a * x == b, if one exists. `a` must have full row rank.
std::optional<IntVec> integer_solution(const IntMat& a, const IntVec& b);

/// Element of GL(d,Z) x Z^d acting by x -> linear * x + translation.
class UnimodularMap {
 public:
  UnimodularMap(IntMat linear, IntVec translation);

  static UnimodularMap identity(std::size_t d);
  static UnimodularMap translation_by(IntVec t);

  std::size_t dim() const noexcept { return linear_.rows(); }
  const IntMat& linear() const noexcept { return linear_; }
  const IntVec& translation() const noexcept { return translation_; }

  RatVec apply(const RatVec& x) const;
  /// (this o other)(x) = this(other(x))
  UnimodularMap compose(const UnimodularMap& other) const;
  UnimodularMap inverse() const;

  bool operator==(const UnimodularMap& rhs) const = default;

 private:
  IntMat linear_;
  IntVec translation_;
};

// Rational linear algebra (Gaussian elimination).

std::size_t rank(RatMat rows);

/// Basis of {x : rows * x = 0}, x of length `cols`.
std::vector<RatVec> nullspace(const RatMat& rows, std::size_t cols);

/// Unique solution of the square system a * x = b, or nullopt if singular.
std::optional<RatVec> solve_square(const RatMat& a, const RatVec& b);

/// Scales a rational vector to a primitive integer vector with the same direction.
IntVec primitive_integer(const RatVec& v);

RatVec to_rat(const IntVec& v);

}  // namespace equidec
