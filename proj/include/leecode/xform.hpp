#pragma once

// The Hadamard transform T(x) = H x / sqrt(n) and its discrete involution
// T_{d^2} on Z^{d^2}, with exact arithmetic throughout.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "analyzer.hpp"
#include "errors.hpp"
#include "hadamard.hpp"
#include "intlat.hpp"
#include "metric.hpp"

namespace leecode {

// numerators / sqrt(radicand)
struct RadicalVector {
  IntVector numerators;
  Integer radicand;

  // |numerators_j| / sqrt(radicand) <= r, decided as num^2 <= r^2 * radicand.
  bool abs_le(std::size_t j, const Rational& r) const {
    if (sgn(r) < 0) return false;
    Rational lhs = Rational(numerators[j] * numerators[j]);
    return lhs <= r * r * Rational(radicand);
  }

  bool all_abs_le(const Rational& r) const {
    for (std::size_t j = 0; j < numerators.size(); ++j)
      if (!abs_le(j, r)) return false;
    return true;
  }

  // Exact rational value when the radicand is a perfect square.
  std::optional<std::vector<Rational>> rational() const {
    if (!mpz_perfect_square_p(radicand.get_mpz_t())) return std::nullopt;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    std::vector<Rational> out;
    for (const auto& v : numerators) {
      Rational q(v, root);
      q.canonicalize();
      out.push_back(q);
    }
    return out;
  }

  // Integer value when every coordinate is integral.
  std::optional<Point> integral() const {
    auto r = rational();
    if (!r) return std::nullopt;
    Point p;
    for (const auto& q : *r) {
      if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
      p.push_back(q.get_num().get_si());
    }
    return p;
  }
};

namespace detail {

inline IntVector times(const HadamardMatrix& h, const Point& x) {
  if (x.size() != h.order()) throw DimensionError("transform: point length does not match the Hadamard order");
  IntVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] == 0) continue;
      if (h(i, j) > 0)
        s += static_cast<long>(x[j]);
      else
        s -= static_cast<long>(x[j]);
    }
    y[i] = std::move(s);
  }
  return y;
}

// sqrt(n) for n = d^2, else 0.
inline long exact_root(std::size_t n) {
  long d = 0;
  while (static_cast<std::size_t>((d + 1) * (d + 1)) <= n) ++d;
  return static_cast<std::size_t>(d * d) == n ? d : 0;
}

}  // namespace detail

inline RadicalVector t_apply(const HadamardMatrix& h, const Point& x) {
  return RadicalVector{detail::times(h, x), Integer(static_cast<unsigned long>(h.order()))};
}

struct InvolutionReport {
  std::size_t checked = 0;
  std::vector<Point> failures;
  bool ok() const { return failures.empty(); }
};

// T(T(x)) = x, i.e. H*H*x = n*x, on every sample. Needs H symmetric: for a
// general Hadamard matrix T(T(x)) = H^2 x / n, which is not x.
inline InvolutionReport check_involution_continuous(const HadamardMatrix& h, const std::vector<Point>& samples) {
  if (!h.is_symmetric())
    throw PreconditionError("check_involution_continuous: T is an involution only for symmetric Hadamard matrices");
  InvolutionReport rep;
  const Integer n = static_cast<unsigned long>(h.order());
  for (const Point& x : samples) {
    ++rep.checked;
    IntVector once = detail::times(h, x);
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s += h(i, j) * once[j];
      ok = s == n * static_cast<long>(x[i]);
    }
    if (!ok) rep.failures.push_back(x);
  }
  return rep;
}

struct ContinuousBoxReport {
  std::int64_t radius = 0;
  std::size_t points = 0;
  Integer max_abs_numerator;  // max over points and axes of |(H x)_j|
  Point witness;              // attains max_abs_numerator
  // Every image coordinate lies in [-R/sqrt(n), R/sqrt(n)].
  bool within_bound = false;
};

// Maps every point of S_{n,R} (origin-centred) and measures max |(H x)_j|.
// The bound |(H x)_j| <= sum |x_i| = R holds because |h_ji| = 1; x = R e_1
// attains it since the first column is all +1.
inline ContinuousBoxReport continuous_box(const HadamardMatrix& h, std::uint64_t r,
                                          std::size_t cap = kDefaultEnumerationCap) {
  ContinuousBoxReport rep;
  rep.radius = static_cast<std::int64_t>(r);
  rep.max_abs_numerator = 0;
  const std::size_t n = h.order();
  rep.witness = Point(n, 0);
  for (const Point& x : enumerate_sphere(n, r, cap)) {
    ++rep.points;
    RadicalVector y = t_apply(h, x);
    for (const auto& v : y.numerators)
      if (abs(v) > rep.max_abs_numerator) {
        rep.max_abs_numerator = abs(v);
        rep.witness = x;
      }
  }
  // Same radicand on both sides: |y_j| / sqrt(n) <= R / sqrt(n) iff |y_j| <= R.
  rep.within_bound = rep.max_abs_numerator <= static_cast<unsigned long>(r);
  return rep;
}

// { x : H x = 0 (mod d) } for a Hadamard matrix of order d^2: the points T
// maps into Z^{d^2}.
inline Lattice theorem9_code(const HadamardMatrix& h) {
  const long d = detail::exact_root(h.order());
  if (d == 0) throw PreconditionError("theorem9_code: Hadamard order must be a perfect square");
  return kernel_mod(h.matrix(), Integer(d));
}

// A symmetric Hadamard matrix of order d^2, its code and the coset leaders.
class TransformSpec {
 public:
  explicit TransformSpec(HadamardMatrix h, std::uint64_t coset_cap = kDefaultCosetCap)
      : h_(std::move(h)), d_(detail::exact_root(h_.order())), code_(theorem9_code(h_)), leaders_(code_, coset_cap) {
    if (!h_.is_symmetric()) throw PreconditionError("TransformSpec: Hadamard matrix must be symmetric");
  }

  // Sylvester matrix of order d^2; d must be a power of two.
  static TransformSpec sylvester_spec(long d) {
    if (d < 2 || (d & (d - 1)) != 0 || d > 16)
      throw PreconditionError("TransformSpec: d must be a power of two in [2, 16]");
    unsigned k = 0;
    while ((1L << k) < d * d) ++k;
    return TransformSpec(sylvester(k));
  }

  const HadamardMatrix& hadamard() const { return h_; }
  long d() const { return d_; }
  std::size_t dim() const { return h_.order(); }
  const Lattice& code() const { return code_; }
  const CosetTable& leaders() const { return leaders_; }
  std::int64_t rho() const { return leaders_.rho(); }

  // T(c) for a code vector c, as an integer vector.
  Point t_code(const Point& c) const {
    IntVector y = detail::times(h_, c);
    Point out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (!mpz_divisible_ui_p(y[i].get_mpz_t(), static_cast<unsigned long>(d_)))
        throw InconsistencyError("TransformSpec: T(c) is not integral for a code vector");
      Integer q = y[i] / d_;
      if (!q.fits_slong_p()) throw SizeError("TransformSpec: coordinate overflow");
      out[i] = q.get_si();
    }
    return out;
  }

 private:
  HadamardMatrix h_;
  long d_;
  Lattice code_;
  CosetTable leaders_;
};

// p = c + s with s the leader of p's coset; returns T(c) + s.
inline Point discrete_transform(const TransformSpec& spec, const Point& p) {
  if (p.size() != spec.dim()) throw DimensionError("discrete_transform: point length must be d^2");
  Point s = spec.leaders().leader_of(p);
  Point c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i] - s[i];
  Point out = spec.t_code(c);
  for (std::size_t i = 0; i < p.size(); ++i) out[i] += s[i];
  return out;
}

// T_{d^2}(T_{d^2}(p)) == p on every sample; a failure is a hard error.
inline InvolutionReport check_involution_discrete(const TransformSpec& spec, const std::vector<Point>& samples) {
  InvolutionReport rep;
  for (const Point& p : samples) {
    ++rep.checked;
    if (discrete_transform(spec, discrete_transform(spec, p)) != p) rep.failures.push_back(p);
  }
  if (!rep.ok())
    throw InconsistencyError("check_involution_discrete: " + std::to_string(rep.failures.size()) +
                             " points do not round-trip");
  return rep;
}

struct DiscreteBoxReport {
  std::int64_t radius = 0;
  std::int64_t rho = 0;
  std::int64_t bound = 0;  // 2*ceil((R + rho)/d) + 2*rho + 1
  std::vector<std::int64_t> extents;
  std::size_t points = 0;
  bool ok() const {
    for (auto e : extents)
      if (e > bound) return false;
    return true;
  }
};

inline std::int64_t discrete_box_bound(std::int64_t r, std::int64_t rho, std::int64_t d) {
  return 2 * ((r + rho + d - 1) / d) + 2 * rho + 1;
}

// Per-axis extent (max - min + 1) of T_{d^2} applied to the Lee sphere of
// radius R about `center`.
inline DiscreteBoxReport discrete_box(const TransformSpec& spec, std::uint64_t r, const Point& center,
                                      std::size_t cap = kDefaultEnumerationCap) {
  const std::size_t n = spec.dim();
  DiscreteBoxReport rep;
  rep.radius = static_cast<std::int64_t>(r);
  rep.rho = spec.rho();
  rep.bound = discrete_box_bound(rep.radius, rep.rho, spec.d());
  std::vector<std::int64_t> lo(n, std::numeric_limits<std::int64_t>::max());
  std::vector<std::int64_t> hi(n, std::numeric_limits<std::int64_t>::min());
  for (const Point& p : enumerate_sphere(n, r, center, cap)) {
    ++rep.points;
    Point y = discrete_transform(spec, p);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], y[i]);
      hi[i] = std::max(hi[i], y[i]);
    }
  }
  rep.extents.resize(n);
  for (std::size_t i = 0; i < n; ++i) rep.extents[i] = hi[i] - lo[i] + 1;
  return rep;
}

inline DiscreteBoxReport discrete_box(const TransformSpec& spec, std::uint64_t r) {
  return discrete_box(spec, r, Point(spec.dim(), 0));
}

// Uniform points of [-bound, bound]^n from a fixed seed.
inline std::vector<Point> random_points(std::size_t n, std::size_t count, std::int64_t bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  std::vector<Point> out(count, Point(n));
  for (auto& p : out)
    for (auto& c : p) c = dist(rng);
  return out;
}

}  // namespace leecode
