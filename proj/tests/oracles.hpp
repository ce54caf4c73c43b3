#pragma once

// Slow, independent reference computations used only by the tests. None of
// these touch the Smith-form syndrome or the shell walker of the library.

#include <leecode/intlat.hpp>
#include <leecode/metric.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using leecode::Integer;
using leecode::IntMatrix;
using leecode::Lattice;
using leecode::Point;

// p/q in lowest terms; mpq_class(p, q) does not canonicalize.
inline leecode::Rational frac(long p, long q) {
  leecode::Rational r(p, q);
  r.canonicalize();
  return r;
}

// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    Integer term = m(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// Gaussian elimination over the rationals with partial pivoting on the first
// nonzero entry; for sizes where Laplace expansion is too slow.
inline Integer rational_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<leecode::Rational>> a(n, std::vector<leecode::Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  leecode::Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const leecode::Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d.get_num();
}

// Smith divisors from determinantal divisors: s_k = D_k / D_{k-1}, where
// D_k is the gcd of all k x k minors.
inline std::vector<Integer> determinantal_snf(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Integer> dk(n + 1, 0);
  dk[0] = 1;
  std::vector<std::size_t> rows, cols;
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::function<void()>)> choose;
  choose = [&](std::size_t start, std::size_t k, std::vector<std::size_t>& acc, std::function<void()> f) {
    if (acc.size() == k) {
      f();
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      acc.push_back(i);
      choose(i + 1, k, acc, f);
      acc.pop_back();
    }
  };
  for (std::size_t k = 1; k <= n; ++k) {
    Integer g = 0;
    choose(0, k, rows, [&] {
      choose(0, k, cols, [&] {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        g = leecode::gcd(g, cofactor_det(sub));
      });
    });
    dk[k] = g;
  }
  std::vector<Integer> s(n);
  for (std::size_t k = 1; k <= n; ++k) s[k - 1] = dk[k] / dk[k - 1];
  return s;
}

// Every x in Z^n with |x|_1 <= w, in no particular order.
inline void for_each_in_ball(std::size_t n, std::int64_t w, const std::function<void(const Point&)>& f) {
  Point x(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j, std::int64_t left) {
    if (j == n) {
      f(x);
      return;
    }
    for (std::int64_t v = -left; v <= left; ++v) {
      x[j] = v;
      rec(j + 1, left - (v < 0 ? -v : v));
    }
    x[j] = 0;
  };
  rec(0, w);
}

// Minimum weight of a nonzero lattice vector with weight <= cap, by scanning
// the ball and testing membership through the Hermite basis.
inline std::optional<std::int64_t> brute_min_distance(const Lattice& lat, std::int64_t cap) {
  std::optional<std::int64_t> best;
  for_each_in_ball(lat.dim(), cap, [&](const Point& x) {
    const std::int64_t w = leecode::weight(x);
    if (w == 0 || (best && w >= *best)) return;
    if (leecode::contains(lat, x)) best = w;
  });
  return best;
}

// Smallest m > 0 with m e_i in the lattice, by trying multiples.
inline std::vector<long> brute_period(const Lattice& lat, long limit) {
  std::vector<long> out;
  for (std::size_t i = 0; i < lat.dim(); ++i) {
    long found = 0;
    for (long m = 1; m <= limit && !found; ++m) {
      Point x(lat.dim(), 0);
      x[i] = m;
      if (leecode::contains(lat, x)) found = m;
    }
    out.push_back(found);
  }
  return out;
}

// Index of the lattice in Z^n: count residues of [0,q)^n lying in the lattice
// and divide q^n by that count.
inline Integer brute_index(const Lattice& lat, long q) {
  const std::size_t n = lat.dim();
  Point x(n, 0);
  long in_lattice = 0, total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == n) {
      ++total;
      if (leecode::contains(lat, x)) ++in_lattice;
      return;
    }
    for (long v = 0; v < q; ++v) {
      x[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  return Integer(total) / in_lattice;
}

// Minimum Lee weight of a nonzero codeword of the reduced code over Z_q.
inline std::int64_t reduced_lee_min_distance(const Lattice& lat, long q) {
  const std::size_t n = lat.dim();
  Point x(n, 0);
  const Point zero(n, 0);
  std::int64_t best = -1;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == n) {
      if (x == zero || !leecode::contains(lat, x)) return;
      const std::int64_t w = leecode::lee_dist(x, zero, q);
      if (best < 0 || w < best) best = w;
      return;
    }
    for (long v = 0; v < q; ++v) {
      x[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  return best;
}

// All points of [-r, r]^n with |x - c|_1 <= r.
inline leecode::PointSet box_sphere(std::size_t n, std::int64_t r, const Point& c) {
  leecode::PointSet out;
  Point x(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == n) {
      if (leecode::manhattan_dist(x, c) <= r) out.insert(x);
      return;
    }
    for (std::int64_t v = c[j] - r; v <= c[j] + r; ++v) {
      x[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
