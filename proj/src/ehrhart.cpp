#include "equidec/ehrhart.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace equidec {

namespace {

using Poly = std::vector<Rat>;  // coefficients of k^0, k^1, ...

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// C(n, i) as a polynomial in k, where n = slope * k + intercept.
Poly binomial_poly(const Rat& slope, const Rat& intercept, int i) {
  Poly r{Rat(1)};
  Rat fact = 1;
  for (int j = 0; j < i; ++j) {
    r = poly_mul(r, Poly{intercept - j, slope});
    fact *= j + 1;
  }
  for (auto& c : r) c /= fact;
  return r;
}

Rat eval_poly(const Poly& p, const Int& k) {
  Rat r = 0;
  Rat kk(k);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * kk + *it;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- QuasiPolynomial

QuasiPolynomial::QuasiPolynomial(std::size_t period, std::vector<std::vector<Rat>> rows) : rows_(std::move(rows)) {
  if (period == 0 || rows_.size() != period) throw Error(ErrorCode::DegenerateInput, "quasipolynomial needs one row per residue");
  std::size_t width = 1;
  for (const auto& r : rows_) width = std::max(width, r.size());
  for (auto& r : rows_) r.resize(width, Rat(0));
  while (width > 1 && std::all_of(rows_.begin(), rows_.end(), [&](const auto& r) { return r[width - 1] == 0; })) {
    --width;
    for (auto& r : rows_) r.pop_back();
  }
  for (std::size_t e = 1; e < period; ++e) {
    if (period % e != 0) continue;
    bool periodic = true;
    for (std::size_t r = e; r < period && periodic; ++r) periodic = rows_[r] == rows_[r % e];
    if (periodic) {
      rows_.resize(e);
      break;
    }
  }
}

Rat QuasiPolynomial::operator()(const Int& k) const {
  Int r = mod_floor(k, Int(static_cast<unsigned long>(period())));
  return eval_poly(rows_[r.get_ui()], k);
}

QuasiPolynomial QuasiPolynomial::operator+(const QuasiPolynomial& rhs) const {
  const std::size_t p = std::lcm(period(), rhs.period());
  const std::size_t w = std::max(rows_.front().size(), rhs.rows_.front().size());
  std::vector<std::vector<Rat>> rows(p, std::vector<Rat>(w, Rat(0)));
  for (std::size_t r = 0; r < p; ++r) {
    const auto& a = rows_[r % period()];
    const auto& b = rhs.rows_[r % rhs.period()];
    for (std::size_t i = 0; i < a.size(); ++i) rows[r][i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) rows[r][i] += b[i];
  }
  return QuasiPolynomial(p, std::move(rows));
}

QuasiPolynomial QuasiPolynomial::operator*(const Int& factor) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (auto& c : r) c *= Rat(factor);
  const std::size_t period = rows.size();
  return QuasiPolynomial(period, std::move(rows));
}

std::string QuasiPolynomial::to_string() const {
  auto render = [](const std::vector<Rat>& row) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = row.size(); i-- > 0;) {
      const Rat& c = row[i];
      if (c == 0) continue;
      Rat mag = abs(c);
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || mag != 1) {
        out << equidec::to_string(mag);
        if (i > 0) out << "*";
      }
      if (i >= 1) out << "k";
      if (i >= 2) out << "^" << i;
    }
    if (first) out << "0";
    return out.str();
  };
  if (period() == 1) return render(rows_.front());
  std::ostringstream out;
  for (std::size_t r = 0; r < period(); ++r) {
    if (r) out << "; ";
    out << "k = " << r << " mod " << period() << ": " << render(rows_[r]);
  }
  return out.str();
}

// ---------------------------------------------------------------- counting

Int count(const Polytope& body, const Int& k, Mode mode) {
  return count_scaled_points(facet_system(body), body.vertices(), k, mode);
}

Int count(const Simplex& body, const Int& k, Mode mode) {
  return count_scaled_points(facet_system(body), body.vertices(), k, mode);
}

Int denominator(const Polytope& body) {
  Int l = 1;
  for (const auto& v : body.vertices())
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

Int denominator(const Simplex& body) { return denominator(Polytope::from_simplex(body)); }

QuasiPolynomial fit_quasipolynomial(const Polytope& body, Mode mode) {
  const std::size_t period = denominator(body).get_ui();
  const std::size_t samples = static_cast<std::size_t>(body.dim()) + 1;
  FacetSystem fs = facet_system(body);
  auto counted = [&](std::size_t k) { return count_scaled_points(fs, body.vertices(), Int(static_cast<unsigned long>(k)), mode); };

  std::vector<std::vector<Rat>> rows;
  for (std::size_t r = 0; r < period; ++r) {
    RatMat vandermonde;
    RatVec values;
    for (std::size_t j = 0; j < samples; ++j) {
      const std::size_t k = r == 0 ? period * (j + 1) : r + period * j;
      RatVec row;
      Rat power = 1;
      for (std::size_t i = 0; i < samples; ++i) {
        row.push_back(power);
        power *= Rat(static_cast<unsigned long>(k));
      }
      vandermonde.push_back(std::move(row));
      values.emplace_back(counted(k));
    }
    auto coeffs = solve_square(vandermonde, values);
    if (!coeffs) throw Error(ErrorCode::FitMismatch, "singular interpolation system");
    rows.push_back(std::move(*coeffs));
  }
  QuasiPolynomial qp(period, std::move(rows));

  const std::size_t window = period * samples;
  for (std::size_t k = window + 1; k <= 2 * window; ++k) {
    if (qp(static_cast<long>(k)) != Rat(counted(k)))
      throw Error(ErrorCode::FitMismatch, "fitted quasipolynomial disagrees with the count at k = " + std::to_string(k));
  }
  return qp;
}

QuasiPolynomial fit_quasipolynomial(const Simplex& body, Mode mode) {
  return fit_quasipolynomial(Polytope::from_simplex(body), mode);
}

bool ehrhart_equivalent(const Polytope& a, const Polytope& b) {
  return fit_quasipolynomial(a, Mode::Closed) == fit_quasipolynomial(b, Mode::Closed);
}

// ---------------------------------------------------------------- types

std::string_view label(SimplexType t) {
  switch (t) {
    case SimplexType::D0_1: return "D0^1";
    case SimplexType::D1_1: return "D1^1";
    case SimplexType::D2_1: return "D2^1";
    case SimplexType::D3_1: return "D3^1";
    case SimplexType::D0_0: return "D0^0";
    case SimplexType::D1_0: return "D1^0";
    case SimplexType::D2_0: return "D2^0";
    case SimplexType::D2p: return "D2'";
    case SimplexType::D3p: return "D3'";
  }
  return "?";
}

SimplexType parse_label(std::string_view s) {
  for (SimplexType t : kAllTypes)
    if (label(t) == s) return t;
  throw Error(ErrorCode::MalformedInput, "unknown simplex type label '" + std::string(s) + "'");
}

int type_dim(SimplexType t) {
  switch (t) {
    case SimplexType::D0_1:
    case SimplexType::D0_0: return 0;
    case SimplexType::D1_1:
    case SimplexType::D1_0: return 1;
    case SimplexType::D2_1:
    case SimplexType::D2_0:
    case SimplexType::D2p: return 2;
    case SimplexType::D3_1:
    case SimplexType::D3p: return 3;
  }
  return -1;
}

std::vector<Point> canonical_vertices(SimplexType t) {
  const Rat h(1, 2);
  auto half_e = [&](int i) {
    Point p(3, Rat(0));
    p[static_cast<std::size_t>(i)] = h;
    return p;
  };
  std::vector<Point> vs;
  const int i = type_dim(t);
  switch (t) {
    case SimplexType::D0_1:
    case SimplexType::D1_1:
    case SimplexType::D2_1:
    case SimplexType::D3_1:
      vs.push_back(Point(3, Rat(0)));
      for (int j = 0; j < i; ++j) vs.push_back(half_e(j));
      break;
    case SimplexType::D0_0:
    case SimplexType::D1_0:
    case SimplexType::D2_0:
      for (int j = 0; j <= i; ++j) vs.push_back(half_e(j));
      break;
    case SimplexType::D2p:
    case SimplexType::D3p: {
      const Point base = make_point({h, h, 0});
      vs.push_back(base);
      for (int j = 0; j < i; ++j) vs.push_back(base + half_e(j));
      break;
    }
  }
  return vs;
}

Simplex canonical_simplex(SimplexType t) { return Simplex(canonical_vertices(t)); }

long TypeVector::total() const { return std::accumulate(counts.begin(), counts.end(), 0L); }

QuasiPolynomial closed_form(SimplexType t) {
  const int i = type_dim(t);
  const Rat half(1, 2);
  // Even k: C(k/2 - 1, i) for every class.
  Poly even = binomial_poly(half, Rat(-1), i);
  Poly odd;
  switch (t) {
    case SimplexType::D0_1:
    case SimplexType::D1_1:
    case SimplexType::D2_1:
    case SimplexType::D3_1: odd = binomial_poly(half, Rat(-1, 2), i); break;  // C((k-1)/2, i)
    case SimplexType::D0_0:
    case SimplexType::D1_0:
    case SimplexType::D2_0: odd = Poly{Rat(0)}; break;
    case SimplexType::D2p:
    case SimplexType::D3p: odd = binomial_poly(half, half, i); break;  // C((k+1)/2, i)
  }
  return QuasiPolynomial(2, {even, odd});
}

Rat legacy_formula(SimplexType t, long k) {
  const Rat s = (k % 2 == 0) ? 1 : -1;
  const Rat x(k);
  switch (t) {
    case SimplexType::D0_1: return 1;
    case SimplexType::D1_1: return (2 * x + s - 1) / 4;
    case SimplexType::D2_1: return (2 * x * x - 2 * (s + 5) * x + 5 * s + 11) / 16;
    case SimplexType::D3_1:
      return (2 * x * x * x - 3 * (s + 7) * x * x + (21 * s + 67) * x - 33 * s - 63) / 96;
    case SimplexType::D0_0: return (1 + s) / 2;
    case SimplexType::D1_0: return (1 + s) / 4 * (x - 2);
    case SimplexType::D2_0: return (1 + s) / 16 * (x * x - 6 * x + 8);
    case SimplexType::D2p: return (2 * x * x - 6 * (s + 1) * x + 9 * s + 7) / 16;
    case SimplexType::D3p:
      return (2 * x * x * x - (15 * s + 9) * x * x + (45 * s + 43) * x - 51 * s - 45) / 96;
  }
  return 0;
}

QuasiPolynomial combine(const TypeVector& f) {
  QuasiPolynomial sum = QuasiPolynomial::zero();
  for (SimplexType t : kAllTypes)
    if (f[t] != 0) sum = sum + closed_form(t) * Int(f[t]);
  return sum;
}

IntMat basis_evaluation_matrix(std::size_t columns) {
  IntMat m(kBasisTypes.size(), columns);
  for (std::size_t r = 0; r < kBasisTypes.size(); ++r) {
    QuasiPolynomial qp = closed_form(kBasisTypes[r]);
    for (std::size_t c = 0; c < columns; ++c) m(r, c) = qp(static_cast<long>(c + 1)).get_num();
  }
  return m;
}

std::map<long, long> orbit_profile_1d(const Rat& lo, const Rat& hi, long q) {
  if (q <= 0) throw Error(ErrorCode::DegenerateInput, "orbit lattice needs q >= 1");
  std::map<long, long> profile;
  const Int qq(q);
  for (Int a = ceil_of(lo * Rat(qq)); a <= floor_of(hi * Rat(qq)); ++a) {
    const long r = mod_floor(a, qq).get_si();
    ++profile[std::min(r, (q - r) % q)];
  }
  return profile;
}

}  // namespace equidec
