#pragma once

// Exact integer matrices and integer lattices.
//
// A lattice is stored as a square generator matrix (rows are the basis
// vectors) together with a rational scale factor. Everything is computed with
// GMP integers; there is no floating point in this header.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace leecode {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
  return Rational(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Always "p/q", including integers ("5/1").
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Round-half-up decimal rendering with a fixed number of places.
inline std::string to_decimal_string(const Rational& r, unsigned places = 6) {
  const bool negative = sgn(r) < 0;
  Rational a = abs(r);
  Integer scale = pow(Integer(10), places);
  Integer num = a.get_num() * scale * 2 + a.get_den();
  Integer scaled = floor_div(num, Integer(a.get_den() * 2));
  Integer whole = floor_div(scaled, scale);
  Integer frac = scaled - whole * scale;
  std::string fs = frac.get_str();
  if (fs.size() < places) fs.insert(0, places - fs.size(), '0');
  std::string out = (negative && sgn(scaled) != 0 ? "-" : "") + whole.get_str();
  if (places > 0) out += "." + fs;
  return out;
}

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("IntMatrix: empty dimensions");
  }

  IntMatrix(std::initializer_list<std::initializer_list<long>> init)
      : IntMatrix(init.size(), init.size() ? init.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
      std::size_t j = 0;
      for (long v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty()) throw DimensionError("IntMatrix: no rows");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("IntMatrix: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  // row(dst) += k * row(src)
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }

  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("IntMatrix: product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

// Fraction-free (Bareiss) determinant.
inline Integer det(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("det: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// Upper row-echelon Hermite form of an arbitrary matrix: pivots move right
// row by row, pivots are positive, and entries above a pivot lie in
// [0, pivot). Only the nonzero rows (a basis of the row lattice) are
// returned.
inline IntMatrix echelon_hnf(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      if (a(r, c) == 0) {
        a.swap_rows(r, i);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(r, c).get_mpz_t(), a(i, c).get_mpz_t());
      const Integer ar = a(r, c) / g;
      const Integer ai = a(i, c) / g;
      for (std::size_t j = c; j < cols; ++j) {
        Integer top = s * a(r, j) + t * a(i, j);
        Integer bottom = ar * a(i, j) - ai * a(r, j);
        a(r, j) = std::move(top);
        a(i, j) = std::move(bottom);
      }
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(a(i, c), a(r, c));
      if (q != 0) a.add_row(i, r, -q);
    }
    ++r;
  }
  if (r == 0) throw RankError("echelon_hnf: zero matrix");
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

// Square nonsingular input: upper-triangular Hermite form.
inline IntMatrix upper_hnf(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("upper_hnf: matrix is not square");
  IntMatrix h = echelon_hnf(m);
  if (h.rows() != m.rows()) throw RankError("upper_hnf: singular matrix");
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (h(i, i) == 0) throw RankError("upper_hnf: singular matrix");
  return h;
}

// Row-style Hermite normal form of a nonsingular square matrix:
// lower-triangular, positive diagonal, and every entry below the diagonal
// reduced into [0, diagonal of its column). Two generators span the same
// lattice iff their hnf() are equal.
inline IntMatrix hnf(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("hnf: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix rev(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rev(i, j) = m(i, n - 1 - j);
  IntMatrix e = echelon_hnf(rev);
  if (e.rows() != n) throw RankError("hnf: singular matrix");
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e(n - 1 - i, n - 1 - j);
  for (std::size_t i = 0; i < n; ++i)
    if (out(i, i) == 0) throw RankError("hnf: singular matrix");
  return out;
}

// Smith form P*A*Q = diag(divisors) with the column transform Q retained.
// For a row lattice L = rowspan(A): x in L  <=>  (x*Q)_i = 0 mod divisors[i].
struct SmithForm {
  IntVector divisors;
  IntMatrix column_transform;
};

inline SmithForm smith_form(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("smith_form: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  IntMatrix q = IntMatrix::identity(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 && (pi == n || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == n) throw RankError("smith_form: singular matrix");
      a.swap_rows(t, pi);
      a.swap_cols(t, pj);
      q.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        a.add_row(i, t, -floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer k = -floor_div(a(t, j), a(t, t));
        a.add_col(j, t, k);
        q.add_col(j, t, k);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) a.negate_row(t);
  }
  SmithForm out{IntVector(n), std::move(q)};
  for (std::size_t i = 0; i < n; ++i) out.divisors[i] = a(i, i);
  return out;
}

inline IntVector snf(const IntMatrix& m) { return smith_form(m).divisors; }

// A full-rank lattice generated by the rows of scale * gen.
class Lattice {
 public:
  explicit Lattice(IntMatrix gen, Rational scale = 1) : gen_(std::move(gen)), scale_(std::move(scale)) {
    scale_.canonicalize();
    if (!gen_.square()) throw DimensionError("Lattice: generator is not square");
    if (sgn(scale_) <= 0) throw PreconditionError("Lattice: scale must be positive");
    det_ = leecode::det(gen_);
    if (det_ == 0) throw RankError("Lattice: generator rows are linearly dependent");
    if (is_integral()) basis_ = hnf(integer_generator());
  }

  std::size_t dim() const { return gen_.rows(); }
  const IntMatrix& gen() const { return gen_; }
  const Rational& scale() const { return scale_; }

  // scale * gen has only integer entries (the lattice sits inside Z^n).
  bool is_integral() const {
    if (scale_.get_den() == 1) return true;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (!mpz_divisible_p(gen_(i, j).get_mpz_t(), scale_.get_den_mpz_t())) return false;
    return true;
  }

  IntMatrix integer_generator() const {
    if (scale_ == 1) return gen_;
    IntMatrix out(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        Rational v = scale_ * gen_(i, j);
        if (v.get_den() != 1) throw IntegralityError("Lattice: scaled generator is not integral");
        out(i, j) = v.get_num();
      }
    return out;
  }

  // Lower-triangular Hermite basis of the integral lattice.
  const IntMatrix& basis() const {
    if (!basis_) throw IntegralityError("Lattice: not a sublattice of Z^n");
    return *basis_;
  }

  // |det gen| * scale^n. Equals the index in Z^n for integral lattices.
  Rational volume() const { return Rational(abs(det_)) * leecode::pow(scale_, dim()); }

  Integer integer_volume() const {
    Rational v = volume();
    if (v.get_den() != 1) throw IntegralityError("Lattice: volume is not an integer");
    return v.get_num();
  }

 private:
  IntMatrix gen_;
  Rational scale_;
  Integer det_;
  std::optional<IntMatrix> basis_;
};

inline bool contains(const Lattice& lat, std::span<const Integer> x) {
  if (x.size() != lat.dim()) throw DimensionError("contains: vector length mismatch");
  const IntMatrix& h = lat.basis();
  IntVector r(x.begin(), x.end());
  for (std::size_t j = lat.dim(); j-- > 0;) {
    if (r[j] == 0) continue;
    if (!mpz_divisible_p(r[j].get_mpz_t(), h(j, j).get_mpz_t())) return false;
    Integer y = r[j] / h(j, j);
    for (std::size_t k = 0; k <= j; ++k) r[k] -= y * h(j, k);
  }
  return true;
}

inline bool contains(const Lattice& lat, std::span<const std::int64_t> x) {
  IntVector v;
  v.reserve(x.size());
  for (auto c : x) v.emplace_back(static_cast<long>(c));
  return contains(lat, std::span<const Integer>(v));
}

struct Period {
  IntVector per_axis;  // smallest m_i > 0 with m_i * e_i in the lattice
  Integer lcm;
};

// m_i is the least common denominator of row i of gen^{-1}: m*e_i lies in the
// lattice iff m*e_i*gen^{-1} is integral.
inline Period period(const Lattice& lat) {
  const IntMatrix g = lat.integer_generator();
  const std::size_t n = g.rows();
  std::vector<Rational> a(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = g(i, j);
    at(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (at(p, c) == 0) ++p;
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(c, j));
    const Rational inv = 1 / at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || at(i, c) == 0) continue;
      const Rational f = at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
    }
  }
  Period out{IntVector(n), Integer(1)};
  for (std::size_t i = 0; i < n; ++i) {
    Integer m = 1;
    for (std::size_t j = 0; j < n; ++j) m = leecode::lcm(m, Integer(at(i, n + j).get_den()));
    out.per_axis[i] = m;
    out.lcm = leecode::lcm(out.lcm, m);
  }
  return out;
}

// The (n, d, v, q) tuple of a lattice code plus its nominal packing density
// d^n / (n! v).
struct CodeParams {
  std::size_t n = 0;
  Integer d;
  Integer v;
  Integer q;
  Rational density;
};

inline Rational nominal_density(std::size_t n, const Integer& d, const Integer& v) {
  Rational r(pow(d, n), factorial(n) * v);
  r.canonicalize();
  return r;
}

// Parameters of the Lee code over Z_q obtained by reducing the lattice modulo
// its period q. The minimum distance comes from the caller.
inline CodeParams reduce_mod_period(const Lattice& lat, const Integer& min_distance) {
  if (min_distance <= 0) throw PreconditionError("reduce_mod_period: distance must be positive");
  CodeParams p;
  p.n = lat.dim();
  p.d = min_distance;
  p.v = lat.integer_volume();
  p.q = period(lat).lcm;
  p.density = nominal_density(p.n, p.d, p.v);
  return p;
}

inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
  return k;
}

// Generator G_a (x) G_b; volume v_a^{n_b} * v_b^{n_a}.
inline Lattice kronecker(const Lattice& a, const Lattice& b) {
  return Lattice(kronecker(a.integer_generator(), b.integer_generator()));
}

// Deletes the first coordinate. The generator must have a 1 in position
// (0,0) and zeros in the rest of column 0, so every remaining row keeps its
// weight; normalize with upper_hnf() first.
inline Lattice puncture(const Lattice& lat) {
  const IntMatrix g = lat.integer_generator();
  const std::size_t n = g.rows();
  if (n < 2) throw StructureError("puncture: need length at least 2");
  if (g(0, 0) != 1) throw StructureError("puncture: generator entry (1,1) must be 1");
  for (std::size_t i = 1; i < n; ++i)
    if (g(i, 0) != 0) throw StructureError("puncture: first column must be zero below (1,1)");
  IntMatrix out(n - 1, n - 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) out(i - 1, j - 1) = g(i, j);
  return Lattice(std::move(out));
}

// Multiplies all distances by f and the volume by f^n.
inline Lattice scale(const Lattice& lat, const Rational& f, bool require_integral = true) {
  if (sgn(f) <= 0) throw PreconditionError("scale: factor must be positive");
  Lattice out(lat.gen(), lat.scale() * f);
  if (require_integral && !out.is_integral()) throw IntegralityError("scale: result is not a sublattice of Z^n");
  return out;
}

// Lattice { x in Z^n : A x = 0 (mod m) } for a square integer matrix A.
inline Lattice kernel_mod(const IntMatrix& a, const Integer& m) {
  if (!a.square()) throw DimensionError("kernel_mod: matrix is not square");
  if (m <= 0) throw PreconditionError("kernel_mod: modulus must be positive");
  const std::size_t n = a.rows();
  // Rows (A^T e_i | e_i) and (m e_j | 0); vectors with a zero left half are
  // exactly (0 | x) with A x = 0 mod m.
  IntMatrix stacked(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) stacked(i, j) = a(j, i);
    stacked(i, n + i) = 1;
    stacked(n + i, i) = m;
  }
  IntMatrix e = echelon_hnf(stacked);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n; ++j) left_zero = left_zero && e(i, j) == 0;
    if (!left_zero) continue;
    IntVector r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = e(i, n + j);
    rows.push_back(std::move(r));
  }
  if (rows.size() != n) throw InconsistencyError("kernel_mod: kernel lattice is not full rank");
  return Lattice(IntMatrix::from_rows(rows));
}

// Matrix text format:
//   # scale p/q        (optional, before the dimension line)
//   rows cols
//   one line of space-separated integers per row
// Other lines starting with '#' are comments.
inline Lattice read_matrix(std::istream& in) {
  std::string line;
  Rational scale_factor = 1;
  std::size_t rows = 0, cols = 0;
  bool have_dims = false;
  std::vector<Integer> values;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("matrix line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hs(line.substr(first + 1));
      std::string key, value;
      hs >> key;
      if (key == "scale") {
        if (have_dims) fail("scale header must precede the dimension line");
        hs >> value;
        try {
          scale_factor = Rational(value);
        } catch (const std::invalid_argument&) {
          fail("bad scale '" + value + "'");
        }
        scale_factor.canonicalize();
        if (sgn(scale_factor) <= 0) fail("scale must be positive");
      }
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    std::vector<Integer> toks;
    while (ls >> tok) {
      Integer v;
      if (v.set_str(tok, 10) != 0) fail("not an integer: '" + tok + "'");
      toks.push_back(std::move(v));
    }
    if (!have_dims) {
      if (toks.size() != 2 || toks[0] <= 0 || toks[1] <= 0) fail("expected 'rows cols'");
      if (!toks[0].fits_ulong_p() || !toks[1].fits_ulong_p()) fail("dimensions too large");
      rows = toks[0].get_ui();
      cols = toks[1].get_ui();
      have_dims = true;
      continue;
    }
    if (toks.size() != cols) fail("expected " + std::to_string(cols) + " entries");
    if (values.size() / cols >= rows) fail("too many rows");
    for (auto& v : toks) values.push_back(std::move(v));
  }
  if (!have_dims) throw ParseError("matrix: missing dimension line");
  if (values.size() != rows * cols) throw ParseError("matrix: expected " + std::to_string(rows) + " rows");
  if (rows != cols) throw ParseError("matrix: generator must be square");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = values[i * cols + j];
  try {
    return Lattice(std::move(m), scale_factor);
  } catch (const RankError& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

inline void write_matrix(std::ostream& out, const IntMatrix& m, const Rational& scale_factor = 1) {
  if (scale_factor != 1) out << "# scale " << to_fraction_string(scale_factor) << "\n";
  out << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
    out << "\n";
  }
}

inline void write_matrix(std::ostream& out, const Lattice& lat) { write_matrix(out, lat.gen(), lat.scale()); }

}  // namespace leecode
