#pragma once

// Lee and Manhattan distances, Lee sphere / odd-diameter anticode sizes, and
// explicit point-set enumerators for both shapes.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "intlat.hpp"

namespace leecode {

using Point = std::vector<std::int64_t>;
using PointSet = std::set<Point>;  // lexicographic order

inline std::int64_t manhattan_dist(const Point& x, const Point& y) {
  if (x.size() != y.size()) throw DimensionError("manhattan_dist: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::llabs(x[i] - y[i]);
  return s;
}

inline std::int64_t weight(const Point& x) {
  std::int64_t s = 0;
  for (auto c : x) s += std::llabs(c);
  return s;
}

inline std::int64_t lee_dist(const Point& x, const Point& y, std::int64_t m) {
  if (m < 2) throw PreconditionError("lee_dist: modulus must be at least 2");
  if (x.size() != y.size()) throw DimensionError("lee_dist: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t a = ((x[i] - y[i]) % m + m) % m;
    s += std::min(a, m - a);
  }
  return s;
}

// |S_{n,R}| = sum_{i=0}^{min(n,R)} 2^i C(n,i) C(R,i)
inline Integer lee_sphere_size(unsigned long n, unsigned long r) {
  Integer s = 0;
  for (unsigned long i = 0; i <= std::min(n, r); ++i) s += pow(Integer(2), i) * binomial(n, i) * binomial(r, i);
  return s;
}

// |S'_{n,R}| = sum_{i=0}^{min(n-1,R)} 2^{i+1} C(n-1,i) C(R+1,i+1)
inline Integer anticode_size_odd(unsigned long n, unsigned long r) {
  if (n == 0) throw PreconditionError("anticode_size_odd: n must be at least 1");
  Integer s = 0;
  for (unsigned long i = 0; i <= std::min(n - 1, r); ++i)
    s += pow(Integer(2), i + 1) * binomial(n - 1, i) * binomial(r + 1, i + 1);
  return s;
}

struct RecurrenceViolation {
  unsigned long n;
  unsigned long r;
  std::string identity;
};

struct RecurrenceReport {
  std::size_t checked = 0;
  std::vector<RecurrenceViolation> violations;
  bool ok() const { return violations.empty(); }
};

// |S_{n,R}| = |S_{n-1,R}| + |S'_{n,R-1}| and |S'_{n,R}| = |S_{n-1,R}| + |S_{n,R}|
// for 2 <= n <= n_max, 1 <= R <= r_max, plus the n = 1 base values.
inline RecurrenceReport check_anticode_recurrences(unsigned long n_max, unsigned long r_max) {
  if (n_max < 1 || r_max < 1) throw PreconditionError("check_anticode_recurrences: bounds must be >= 1");
  RecurrenceReport rep;
  for (unsigned long r = 0; r <= r_max; ++r) {
    ++rep.checked;
    if (lee_sphere_size(1, r) != 2 * r + 1) rep.violations.push_back({1, r, "|S_1,R| = 2R+1"});
    if (anticode_size_odd(1, r) != 2 * r + 2) rep.violations.push_back({1, r, "|S'_1,R| = 2R+2"});
  }
  for (unsigned long n = 1; n <= n_max; ++n)
    if (lee_sphere_size(n, 0) != 1) rep.violations.push_back({n, 0, "|S_n,0| = 1"});
  for (unsigned long n = 2; n <= n_max; ++n)
    for (unsigned long r = 1; r <= r_max; ++r) {
      rep.checked += 2;
      if (lee_sphere_size(n, r) != lee_sphere_size(n - 1, r) + anticode_size_odd(n, r - 1))
        rep.violations.push_back({n, r, "|S_n,R| = |S_n-1,R| + |S'_n,R-1|"});
      if (anticode_size_odd(n, r) != lee_sphere_size(n - 1, r) + lee_sphere_size(n, r))
        rep.violations.push_back({n, r, "|S'_n,R| = |S_n-1,R| + |S_n,R|"});
    }
  return rep;
}

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

namespace detail {

// R rounds of unit-neighbour closure starting from `seed`.
inline PointSet grow(PointSet seed, std::size_t n, std::uint64_t rounds) {
  PointSet all = seed;
  PointSet frontier = std::move(seed);
  for (std::uint64_t k = 0; k < rounds; ++k) {
    PointSet next;
    for (const Point& p : frontier) {
      Point q = p;
      for (std::size_t i = 0; i < n; ++i) {
        for (int step : {-1, 1}) {
          q[i] += step;
          if (!all.contains(q)) next.insert(q);
          q[i] -= step;
        }
      }
    }
    all.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

inline void check_cap(const Integer& size, std::size_t cap) {
  if (size > Integer(static_cast<unsigned long>(cap)))
    throw SizeError("enumeration of " + size.get_str() + " points exceeds cap " + std::to_string(cap));
}

}  // namespace detail

// Explicit S_{n,R} around `center` by breadth-first growth.
inline PointSet enumerate_sphere(std::size_t n, std::uint64_t r, const Point& center,
                                 std::size_t cap = kDefaultEnumerationCap) {
  if (n == 0) throw DimensionError("enumerate_sphere: n must be at least 1");
  if (center.size() != n) throw DimensionError("enumerate_sphere: center length mismatch");
  detail::check_cap(lee_sphere_size(n, r), cap);
  return detail::grow(PointSet{center}, n, r);
}

inline PointSet enumerate_sphere(std::size_t n, std::uint64_t r, std::size_t cap = kDefaultEnumerationCap) {
  return enumerate_sphere(n, r, Point(n, 0), cap);
}

// S'_{n,R} grown from the adjacent pair {0, e_1}.
inline PointSet enumerate_anticode_odd(std::size_t n, std::uint64_t r, std::size_t cap = kDefaultEnumerationCap) {
  if (n == 0) throw DimensionError("enumerate_anticode_odd: n must be at least 1");
  detail::check_cap(anticode_size_odd(n, r), cap);
  Point e1(n, 0);
  e1[0] = 1;
  return detail::grow(PointSet{Point(n, 0), e1}, n, r);
}

// Largest pairwise Manhattan distance.
inline std::int64_t diameter(const PointSet& s) {
  std::int64_t best = 0;
  for (auto a = s.begin(); a != s.end(); ++a)
    for (auto b = std::next(a); b != s.end(); ++b) best = std::max(best, manhattan_dist(*a, *b));
  return best;
}

inline void write_point(std::ostream& out, const Point& p) {
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
  out << "\n";
}

inline void write_points(std::ostream& out, const PointSet& s) {
  for (const Point& p : s) write_point(out, p);
}

}  // namespace leecode
