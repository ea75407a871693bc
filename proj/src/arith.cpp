#include "equidec/arith.hpp"

#include <algorithm>
#include <utility>

namespace equidec {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSaturated: return "NOT_SATURATED";
    case ErrorCode::NotCoprime: return "NOT_COPRIME";
    case ErrorCode::NotUnimodular: return "NOT_UNIMODULAR";
    case ErrorCode::DegenerateInput: return "DEGENERATE_INPUT";
    case ErrorCode::NotFullDim: return "NOT_FULL_DIM";
    case ErrorCode::FitMismatch: return "FIT_MISMATCH";
    case ErrorCode::NotLatticePolytope: return "NOT_LATTICE_POLYTOPE";
    case ErrorCode::NotEmpty: return "NOT_EMPTY";
    case ErrorCode::NoWidthOne: return "NO_WIDTH_ONE";
    case ErrorCode::DegeneratePolygon: return "DEGENERATE_POLYGON";
    case ErrorCode::NotHalfUnimodular: return "NOT_HALF_UNIMODULAR";
    case ErrorCode::NoMapFound: return "NO_MAP_FOUND";
    case ErrorCode::NotEhrhartEquivalent: return "NOT_EHRHART_EQUIVALENT";
    case ErrorCode::MalformedInput: return "MALFORMED_INPUT";
  }
  return "UNKNOWN";
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int floor_of(const Rat& x) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Int ceil_of(const Rat& x) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

bool is_integral(const Rat& x) { return x.get_den() == 1; }

Int mod_floor(const Int& a, const Int& q) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
  return r;
}

// ---------------------------------------------------------------- IntMat

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVec> rs;
  for (const auto& r : rows) {
    IntVec v;
    for (long x : r) v.emplace_back(x);
    rs.push_back(std::move(v));
  }
  return from_rows(rs);
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMat();
  IntMat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::DegenerateInput, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols) {
  return from_rows(cols).transpose();
}

IntVec IntMat::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMat::column(std::size_t j) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DegenerateInput, "matrix shape mismatch");
  IntMat r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) r(i, j) += a * rhs(k, j);
    }
  return r;
}

IntVec IntMat::operator*(const IntVec& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::DegenerateInput, "matrix/vector shape mismatch");
  IntVec r(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

RatVec IntMat::operator*(const RatVec& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::DegenerateInput, "matrix/vector shape mismatch");
  RatVec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += Rat((*this)(i, j)) * v[j];
  return r;
}

void IntMat::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMat::add_column_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMat::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

// ---------------------------------------------------------------- det / hnf

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DegenerateInput, "det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMat a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Replaces columns (c, j) of both matrices by (x*c + y*j, -(b/g)*c + (a/g)*j).
void gcd_column_step(IntMat& h, IntMat& u, std::size_t row, std::size_t c, std::size_t j) {
  Int a = h(row, c);
  Int b = h(row, j);
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int bg = b / g;
  Int ag = a / g;
  auto apply = [&](IntMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Int col_c = m(i, c);
      Int col_j = m(i, j);
      m(i, c) = x * col_c + y * col_j;
      m(i, j) = -bg * col_c + ag * col_j;
    }
  };
  apply(h);
  apply(u);
}

}  // namespace

HermiteResult hnf(const IntMat& m) {
  IntMat h = m;
  IntMat u = IntMat::identity(m.cols());
  std::size_t pivot_col = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t row = 0; row < h.rows() && pivot_col < h.cols(); ++row) {
    // Fold everything right of the pivot into the pivot column.
    for (std::size_t j = pivot_col + 1; j < h.cols(); ++j) {
      if (h(row, j) != 0) gcd_column_step(h, u, row, pivot_col, j);
    }
    if (h(row, pivot_col) == 0) continue;
    if (h(row, pivot_col) < 0) {
      h.negate_column(pivot_col);
      u.negate_column(pivot_col);
    }
    const Int& pivot = h(row, pivot_col);
    for (std::size_t k : pivot_cols) {
      Int f;
      mpz_fdiv_q(f.get_mpz_t(), h(row, k).get_mpz_t(), pivot.get_mpz_t());
      f = -f;
      h.add_column_multiple(k, pivot_col, f);
      u.add_column_multiple(k, pivot_col, f);
    }
    pivot_cols.push_back(pivot_col);
    ++pivot_col;
  }
  return {std::move(h), std::move(u)};
}

IntMat complete_to_basis(const std::vector<IntVec>& vs, std::size_t d) {
  if (vs.empty()) return IntMat::identity(d);
  if (vs.size() > d) throw Error(ErrorCode::NotSaturated, "more vectors than the dimension");
  for (const auto& v : vs)
    if (v.size() != d) throw Error(ErrorCode::DegenerateInput, "vector length mismatch");

  IntMat rows = IntMat::from_rows(vs);  // m x d
  HermiteResult r = hnf(rows);          // rows * U = [L | 0]
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (r.h(i, i) != 1) throw Error(ErrorCode::NotSaturated, "vectors do not span a saturated sublattice");
  }
  // U^T * M = [I; 0], hence M is the leading block of (U^T)^{-1}.
  IntMat basis = inverse_unimodular(r.u.transpose());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < d; ++i)
      if (basis(i, j) != vs[j][i]) throw Error(ErrorCode::NotSaturated, "basis completion failed");
  return basis;
}

Int inv_mod(const Int& a, const Int& q) {
  if (q <= 0) throw Error(ErrorCode::NotCoprime, "modulus must be positive");
  if (q == 1) return 0;
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t()) == 0)
    throw Error(ErrorCode::NotCoprime, to_string(a) + " is not invertible modulo " + to_string(q));
  return mod_floor(r, q);
}

IntMat inverse_unimodular(const IntMat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotUnimodular, "non-square matrix");
  Int d = det(m);
  if (d != 1 && d != -1) throw Error(ErrorCode::NotUnimodular, "determinant " + to_string(d));
  const std::size_t n = m.rows();
  RatMat a(n, RatVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (a[p][col] == 0) ++p;
    std::swap(a[p], a[col]);
    Rat inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  IntMat r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a[i][n + j].get_num();
  return r;
}

std::optional<IntVec> integer_solution(const IntMat& a, const IntVec& b) {
  HermiteResult r = hnf(a);
  const std::size_t rows = a.rows();
  IntVec y(a.cols(), Int(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (i >= a.cols() || r.h(i, i) == 0) throw Error(ErrorCode::DegenerateInput, "system lacks full row rank");
    Int rhs = b[i];
    for (std::size_t j = 0; j < i; ++j) rhs -= r.h(i, j) * y[j];
    if (!mpz_divisible_p(rhs.get_mpz_t(), r.h(i, i).get_mpz_t())) return std::nullopt;
    y[i] = rhs / r.h(i, i);
  }
  return r.u * y;
}

// ---------------------------------------------------------------- UnimodularMap

UnimodularMap::UnimodularMap(IntMat linear, IntVec translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (linear_.rows() != linear_.cols() || translation_.size() != linear_.rows())
    throw Error(ErrorCode::NotUnimodular, "shape mismatch in unimodular map");
  Int d = det(linear_);
  if (d != 1 && d != -1) throw Error(ErrorCode::NotUnimodular, "linear part has determinant " + to_string(d));
}

UnimodularMap UnimodularMap::identity(std::size_t d) {
  return UnimodularMap(IntMat::identity(d), IntVec(d, Int(0)));
}

UnimodularMap UnimodularMap::translation_by(IntVec t) {
  const std::size_t d = t.size();
  return UnimodularMap(IntMat::identity(d), std::move(t));
}

RatVec UnimodularMap::apply(const RatVec& x) const {
  RatVec y = linear_ * x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation_[i];
  return y;
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& other) const {
  IntVec t = linear_ * other.translation_;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += translation_[i];
  return UnimodularMap(linear_ * other.linear_, std::move(t));
}

UnimodularMap UnimodularMap::inverse() const {
  IntMat inv = inverse_unimodular(linear_);
  IntVec t = inv * translation_;
  for (auto& x : t) x = -x;
  return UnimodularMap(std::move(inv), std::move(t));
}

// ---------------------------------------------------------------- rational LA

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMat& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rat inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RatMat rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().size()).size();
}

std::vector<RatVec> nullspace(const RatMat& rows, std::size_t cols) {
  RatMat a = rows;
  std::vector<std::size_t> pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_square(const RatMat& a, const RatVec& b) {
  const std::size_t n = a.size();
  RatMat aug(n, RatVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug, n);
  if (pivots.size() < n) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

IntVec primitive_integer(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVec r(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * l;
    r[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

RatVec to_rat(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

}  // namespace equidec
