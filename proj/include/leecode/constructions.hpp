#pragma once

// Named lattice-code families, the linear doubling construction and the
// density table built from them.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "analyzer.hpp"
#include "errors.hpp"
#include "intlat.hpp"

namespace leecode {

// (d/6) * Minkowski's 3-dimensional generator: (3, d, 19d^3/108, 19d/3).
inline Lattice minkowski3(long d) {
  if (d <= 0 || d % 6 != 0) throw PreconditionError("minkowski3: d must be a positive multiple of 6");
  return Lattice(IntMatrix{{1, -2, 3}, {-2, 3, 1}, {3, 1, -2}}, Rational(d, 6));
}

// (d/6) * the 4-dimensional upper-triangular generator with last diagonal 74.
// Its parameters must be measured; see dim4_reconciliation().
inline Lattice dim4(long d) {
  if (d <= 0 || d % 6 != 0) throw PreconditionError("dim4: d must be a positive multiple of 6");
  return Lattice(IntMatrix{{1, 0, 1, 4}, {0, 1, 0, 7}, {0, 0, 1, 23}, {0, 0, 0, 74}}, Rational(d, 6));
}

// Generated by (d/2, d/2) and (d/2, -d/2): (2, d, d^2/2, d), diameter perfect.
inline Lattice n2_perfect(long d) {
  if (d < 2 || d % 2 != 0) throw PreconditionError("n2_perfect: d must be even and at least 2");
  const long h = d / 2;
  return Lattice(IntMatrix{{h, h}, {h, -h}});
}

// G_n = [[I_{n-1}, B], [0, 4n]] with B^T = (3, 5, ..., 2n-1): (n, 4, 4n, 4n).
inline Lattice gn(std::size_t n) {
  if (n < 2) throw PreconditionError("gn: n must be at least 2");
  IntMatrix g(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g(i, i) = 1;
    g(i, n - 1) = static_cast<unsigned long>(2 * i + 3);
  }
  g(n - 1, n - 1) = static_cast<unsigned long>(4 * n);
  return Lattice(std::move(g));
}

// gn(n) scaled by d/4: (n, d, 4n (d/4)^n, n d).
inline Lattice scaled_diameter_code(std::size_t n, long d) {
  if (d <= 0 || d % 4 != 0) throw PreconditionError("scaled_diameter_code: d must be a positive multiple of 4");
  return scale(gn(n), Rational(d, 4));
}

// Golomb-Welch: { x : sum_i i*x_i = 0 (mod 2n+1) }, a 1-perfect code.
inline Lattice gw_perfect(std::size_t n) {
  if (n < 1) throw PreconditionError("gw_perfect: n must be at least 1");
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(0, i) = static_cast<unsigned long>(i + 1);
  return kernel_mod(a, Integer(static_cast<unsigned long>(2 * n + 1)));
}

// Length-2n code { (x, y) : x + y in L, sum(x) even } from a distance-4
// lattice L. Volume doubles and the minimum distance stays 4.
inline Lattice double_code(const Lattice& lat) {
  const std::size_t n = lat.dim();
  Syndrome syn(lat);
  auto sv = shortest_vector_in_range(syn, 1, 4);
  if (!sv || sv->weight != 4)
    throw PreconditionError("double_code: input must have minimum distance 4");
  const IntMatrix g = lat.integer_generator();
  IntMatrix out(2 * n, 2 * n);
  // (u, -u) for a basis u of the even-sum lattice: 2e_1, e_i - e_{i-1}
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      out(0, 0) = 2;
      out(0, n) = -2;
    } else {
      out(i, i) = 1;
      out(i, i - 1) = -1;
      out(i, n + i) = -1;
      out(i, n + i - 1) = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) out(n + k, n + j) = g(k, j);
  return Lattice(std::move(out));
}

inline Lattice double_code(const Lattice& lat, unsigned times) {
  Lattice cur = lat;
  for (unsigned t = 0; t < times; ++t) cur = double_code(cur);
  return cur;
}

// Measured parameters of dim4(d) next to the values claimed for it
// ((4, d, 13/216 d^4, 37d/3) with density 9/13).
struct Dim4Reconciliation {
  long nominal_d = 0;
  CodeParams measured;
  Rational measured_volume_coeff;  // v / nominal_d^4
  Rational claimed_volume_coeff{13, 216};
  Rational claimed_q_coeff{37, 3};
  Rational claimed_density{9, 13};
  Integer determinant_diagonal_product;  // 1*1*1*74
  bool density_consistent = false;       // density * n! * v == d^n
  std::string note;
};

inline Dim4Reconciliation dim4_reconciliation(long d, std::int64_t hard_cap = 64) {
  Lattice lat = dim4(d);
  Dim4Reconciliation r;
  r.nominal_d = d;
  r.determinant_diagonal_product = 74;
  const std::int64_t dist = min_distance_auto(lat, d, hard_cap);
  r.measured = reduce_mod_period(lat, Integer(static_cast<long>(dist)));
  r.measured_volume_coeff = Rational(r.measured.v) / pow(Rational(d), 4);
  r.measured_volume_coeff.canonicalize();
  r.density_consistent = r.measured.density * Rational(factorial(4) * r.measured.v) == Rational(pow(r.measured.d, 4));
  const Rational claimed_v = r.claimed_volume_coeff * pow(Rational(d), 4);
  const Rational claimed_q = r.claimed_q_coeff * Rational(d);
  r.note = "claimed volume " + to_fraction_string(claimed_v) + " (13/216 d^4), measured " + r.measured.v.get_str() +
           " (" + to_fraction_string(r.measured_volume_coeff) + " d^4); claimed alphabet " +
           to_fraction_string(claimed_q) + " (37d/3), measured " + r.measured.q.get_str() +
           "; claimed density 9/13, measured " + to_fraction_string(r.measured.density) + " at d=" +
           r.measured.d.get_str() + "; density 9/13 would need last diagonal 78, the generator has 74";
  return r;
}

struct DensityRow {
  std::size_t n = 0;
  std::string construction;
  Lattice lattice{IntMatrix::identity(1)};  // base instance
  Integer d;                                // distance of the base instance
  bool d_measured = false;                  // false: taken from the construction contract
  Integer v;
  Integer q;
  Rational density;
  std::string note;

  // v = coeff * d^n
  Rational volume_coeff() const {
    Rational c = Rational(v) / pow(Rational(d), n);
    c.canonicalize();
    return c;
  }
  std::string volume_expression() const { return to_fraction_string(volume_coeff()) + "*d^" + std::to_string(n); }
};

namespace detail {

inline DensityRow make_row(std::size_t n, std::string name, Lattice lat, Integer d, bool measured,
                           std::string note = {}) {
  DensityRow r;
  r.n = n;
  r.construction = std::move(name);
  r.d = std::move(d);
  r.d_measured = measured;
  r.v = lat.integer_volume();
  r.q = period(lat).lcm;
  r.density = nominal_density(n, r.d, r.v);
  r.note = std::move(note);
  r.lattice = std::move(lat);
  return r;
}

inline std::string survey_note(std::size_t n) {
  switch (n) {
    case 4:
      return "known lattice packing bound theta(4) >= 512/621";
    case 5:
      return "known lattice packing bound theta(5) >= 1600/2343";
    case 6:
      return "known lattice packing bound theta(6) >= 38416/71595";
    default:
      return {};
  }
}

inline void append_note(std::string& s, const std::string& extra) {
  if (extra.empty()) return;
  if (!s.empty()) s += "; ";
  s += extra;
}

}  // namespace detail

inline constexpr std::size_t kDensityTableMaxN = 12;

// Best density per length 2..n_max among the direct constructions,
// gn-based diameter codes, Kronecker products of best shorter rows and
// punctured length-(n+1) rows.
inline std::vector<DensityRow> density_table(std::size_t n_max) {
  if (n_max < 2 || n_max > kDensityTableMaxN) throw PreconditionError("density_table: n_max must be in [2, 12]");
  std::map<std::size_t, DensityRow> base;
  auto consider = [](std::map<std::size_t, DensityRow>& best, DensityRow row) {
    auto it = best.find(row.n);
    if (it == best.end())
      best.emplace(row.n, std::move(row));
    else if (row.density > it->second.density)
      it->second = std::move(row);
  };

  for (std::size_t n = 2; n <= kDensityTableMaxN; ++n) {
    if (n == 2) consider(base, detail::make_row(2, "n2_perfect", n2_perfect(2), 2, true));
    if (n == 3) {
      Lattice m = minkowski3(6);
      consider(base, detail::make_row(3, "minkowski3", m, min_distance(m, 6), true));
    }
    if (n == 4) {
      Dim4Reconciliation rec = dim4_reconciliation(6);
      consider(base, detail::make_row(4, "dim4", dim4(6), rec.measured.d, true, rec.note));
    }
    std::string gn_note;
    if (n == 7) gn_note = "volume 7/4096 d^7 reproduces density 0.1161; a printed 7/272 does not";
    consider(base, detail::make_row(n, "scaled_diameter_code", gn(n), 4, true, gn_note));
    for (std::size_t a = 2; a * a <= n; ++a) {
      if (n % a != 0) continue;
      const std::size_t b = n / a;
      const DensityRow& ra = base.at(a);
      const DensityRow& rb = base.at(b);
      consider(base, detail::make_row(n, "kronecker(" + ra.construction + " x " + rb.construction + ")",
                                      kronecker(ra.lattice, rb.lattice), ra.d * rb.d, false,
                                      "d from the product construction"));
    }
  }

  std::vector<DensityRow> rows;
  for (std::size_t n = 2; n <= n_max; ++n) {
    DensityRow best = base.at(n);
    if (n + 1 <= kDensityTableMaxN) {
      const DensityRow& parent = base.at(n + 1);
      IntMatrix h = upper_hnf(parent.lattice.integer_generator());
      if (h(0, 0) == 1) {
        DensityRow p = detail::make_row(n, "puncture(" + parent.construction + ")", puncture(Lattice(h)), parent.d,
                                        false, "d is a lower bound inherited from length " + std::to_string(n + 1));
        if (p.density > best.density) best = std::move(p);
      }
    }
    detail::append_note(best.note, detail::survey_note(n));
    rows.push_back(std::move(best));
  }
  return rows;
}

inline void write_density_csv(std::ostream& out, const std::vector<DensityRow>& rows, bool with_notes = false) {
  out << "n,construction,d,volume,q,density_rational,density_decimal";
  if (with_notes) out << ",note";
  out << "\n";
  for (const DensityRow& r : rows) {
    out << r.n << "," << r.construction << "," << r.d.get_str() << "," << r.volume_expression() << ","
        << r.q.get_str() << "," << to_fraction_string(r.density) << "," << to_decimal_string(r.density, 6);
    if (with_notes) out << ",\"" << r.note << "\"";
    out << "\n";
  }
}

}  // namespace leecode
