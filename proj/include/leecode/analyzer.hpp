#pragma once

// Minimum distance, coset leaders, covering radius and bound certification
// for integral lattice codes.
//
// All searches walk Z^n in Manhattan shells of increasing weight, each shell
// in increasing lexicographic order. Membership and coset identity come from
// the Smith form: with P*G*Q = diag(s), the class of x in Z^n / L is the
// vector ((x*Q)_i mod s_i), which can be accumulated one coordinate at a time.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "intlat.hpp"
#include "metric.hpp"

namespace leecode {

// Quotient map Z^n -> Z^n / L as residues modulo the nontrivial Smith
// divisors.
class Syndrome {
 public:
  explicit Syndrome(const Lattice& lat) : n_(lat.dim()) {
    SmithForm sf = smith_form(lat.integer_generator());
    constexpr long kMaxModulus = 1L << 31;
    for (std::size_t i = 0; i < n_; ++i) {
      if (sf.divisors[i] == 1) continue;
      if (sf.divisors[i] > kMaxModulus)
        throw SizeError("Syndrome: invariant factor " + sf.divisors[i].get_str() + " too large for fast search");
      columns_.push_back(i);
      moduli_.push_back(sf.divisors[i].get_si());
    }
    const std::size_t k = moduli_.size();
    coef_.resize(n_ * k);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t t = 0; t < k; ++t) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), sf.column_transform(j, columns_[t]).get_mpz_t(),
                      static_cast<unsigned long>(moduli_[t]));
        coef_[j * k + t] = r.get_si();
      }
    order_ = 1;
    for (auto m : moduli_) order_ *= static_cast<unsigned long>(m);
  }

  std::size_t dim() const { return n_; }
  std::size_t rank() const { return moduli_.size(); }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  // Index of the lattice in Z^n.
  const Integer& order() const { return order_; }

  // acc += value * (contribution of coordinate j)
  void accumulate(std::span<std::int64_t> acc, std::size_t j, std::int64_t value) const {
    const std::size_t k = moduli_.size();
    for (std::size_t t = 0; t < k; ++t) {
      const std::int64_t m = moduli_[t];
      std::int64_t v = (value % m) * coef_[j * k + t] % m;
      std::int64_t s = acc[t] + v;
      s %= m;
      if (s < 0) s += m;
      acc[t] = s;
    }
  }

  std::vector<std::int64_t> of(const Point& x) const {
    if (x.size() != n_) throw DimensionError("Syndrome: length mismatch");
    std::vector<std::int64_t> acc(moduli_.size(), 0);
    for (std::size_t j = 0; j < n_; ++j)
      if (x[j] != 0) accumulate(acc, j, x[j]);
    return acc;
  }

  bool in_lattice(const Point& x) const {
    for (auto v : of(x))
      if (v != 0) return false;
    return true;
  }

  // Mixed-radix coset number in [0, order).
  std::uint64_t index(std::span<const std::int64_t> syndrome) const {
    std::uint64_t idx = 0;
    for (std::size_t t = 0; t < moduli_.size(); ++t)
      idx = idx * static_cast<std::uint64_t>(moduli_[t]) + static_cast<std::uint64_t>(syndrome[t]);
    return idx;
  }

  std::uint64_t index(const Point& x) const {
    const std::vector<std::int64_t> s = of(x);
    return index(std::span<const std::int64_t>(s));
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> columns_;
  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> coef_;  // n x rank, row-major
  Integer order_;
};

namespace detail {

template <class Visit>
struct ShellWalker {
  const Syndrome& syn;
  std::size_t n;
  Visit& visit;
  Point point;
  std::vector<std::int64_t> acc;  // (n + 1) x rank

  bool descend(std::size_t j, std::int64_t remaining) {
    const std::size_t k = syn.rank();
    std::span<std::int64_t> here(acc.data() + j * k, k);
    std::span<std::int64_t> next(acc.data() + (j + 1) * k, k);
    if (j + 1 == n) {
      const std::int64_t lo = -remaining;
      for (std::int64_t v = lo; v <= remaining; v += (remaining == 0 ? 1 : 2 * remaining)) {
        point[j] = v;
        std::copy(here.begin(), here.end(), next.begin());
        if (v != 0) syn.accumulate(next, j, v);
        if (visit(static_cast<const Point&>(point), std::span<const std::int64_t>(next))) return true;
      }
      point[j] = 0;
      return false;
    }
    for (std::int64_t v = -remaining; v <= remaining; ++v) {
      point[j] = v;
      std::copy(here.begin(), here.end(), next.begin());
      if (v != 0) syn.accumulate(next, j, v);
      if (descend(j + 1, remaining - (v < 0 ? -v : v))) return true;
    }
    point[j] = 0;
    return false;
  }
};

}  // namespace detail

// Calls visit(point, syndrome) for every x in Z^n with |x|_1 = w, in
// increasing lexicographic order. Returns true if visit asked to stop.
template <class Visit>
bool walk_shell(const Syndrome& syn, std::int64_t w, Visit&& visit) {
  if (w < 0) return false;
  detail::ShellWalker<std::remove_reference_t<Visit>> walker{
      syn, syn.dim(), visit, Point(syn.dim(), 0), std::vector<std::int64_t>((syn.dim() + 1) * syn.rank(), 0)};
  return walker.descend(0, w);
}

// Smallest |x|_1 over the generator rows and both Hermite bases; the minimum
// distance never exceeds it.
inline Integer weight_upper_bound(const Lattice& lat) {
  std::optional<Integer> best;
  auto scan = [&](const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) s += abs(m(i, j));
      if (!best || s < *best) best = s;
    }
  };
  scan(lat.integer_generator());
  scan(lat.basis());
  scan(upper_hnf(lat.integer_generator()));
  return *best;
}

struct ShortestVector {
  std::int64_t weight = 0;
  Point witness;  // lexicographically smallest nonzero vector of that weight
};

// Searches shells first_weight..cap for a nonzero lattice vector.
inline std::optional<ShortestVector> shortest_vector_in_range(const Syndrome& syn, std::int64_t first_weight,
                                                              std::int64_t cap) {
  for (std::int64_t w = std::max<std::int64_t>(first_weight, 1); w <= cap; ++w) {
    std::optional<ShortestVector> found;
    walk_shell(syn, w, [&](const Point& p, std::span<const std::int64_t> s) {
      for (auto v : s)
        if (v != 0) return false;
      found = ShortestVector{w, p};
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

inline ShortestVector shortest_vector(const Lattice& lat, std::int64_t cap) {
  Syndrome syn(lat);
  if (auto sv = shortest_vector_in_range(syn, 1, cap)) return *sv;
  throw InconclusiveError("no nonzero lattice vector of weight <= " + std::to_string(cap) +
                          "; raise the distance cap");
}

// Minimum Manhattan weight of a nonzero lattice vector, searched up to `cap`.
inline std::int64_t min_distance(const Lattice& lat, std::int64_t cap) { return shortest_vector(lat, cap).weight; }

// Starts at cap 2*expected+1 and doubles on an inconclusive search, never
// beyond hard_cap. The row-weight upper bound also stops the search.
inline std::int64_t min_distance_auto(const Lattice& lat, std::int64_t expected, std::int64_t hard_cap) {
  Syndrome syn(lat);
  Integer bound = weight_upper_bound(lat);
  std::int64_t limit = hard_cap;
  if (bound.fits_slong_p() && bound.get_si() < limit) limit = bound.get_si();
  std::int64_t searched = 0;
  std::int64_t cap = 2 * std::max<std::int64_t>(expected, 1) + 1;
  for (;;) {
    cap = std::min(cap, limit);
    if (auto sv = shortest_vector_in_range(syn, searched + 1, cap)) return sv->weight;
    searched = cap;
    if (cap >= limit) break;
    cap *= 2;
  }
  throw InconclusiveError("no nonzero lattice vector of weight <= " + std::to_string(searched) +
                          "; raise the distance cap");
}

inline constexpr std::uint64_t kDefaultCosetCap = 1'000'000;

// One minimum-weight leader per coset of L in Z^n. Ties are broken towards
// the lexicographically smallest vector.
class CosetTable {
 public:
  CosetTable(const Lattice& lat, std::uint64_t cap = kDefaultCosetCap) : syndrome_(lat), n_(lat.dim()) {
    const Integer& order = syndrome_.order();
    if (order > Integer(static_cast<unsigned long>(cap)))
      throw SizeError("coset table of " + order.get_str() + " cosets exceeds cap " + std::to_string(cap));
    const std::uint64_t count = order.get_ui();
    leaders_.assign(count * n_, 0);
    weights_.assign(count, -1);
    std::uint64_t assigned = 0;
    for (std::int64_t w = 0; assigned < count; ++w) {
      walk_shell(syndrome_, w, [&](const Point& p, std::span<const std::int64_t> s) {
        const std::uint64_t idx = syndrome_.index(s);
        if (weights_[idx] >= 0) return false;
        weights_[idx] = w;
        std::copy(p.begin(), p.end(), leaders_.begin() + static_cast<std::ptrdiff_t>(idx * n_));
        return ++assigned == count;
      });
      rho_ = w;
    }
    for (auto m : syndrome_.moduli()) divisors_.emplace_back(static_cast<long>(m));
  }

  std::size_t dim() const { return n_; }
  std::uint64_t size() const { return weights_.size(); }
  // Covering radius: the largest leader weight.
  std::int64_t rho() const { return rho_; }
  const IntVector& divisors() const { return divisors_; }
  const Syndrome& syndrome() const { return syndrome_; }

  std::span<const std::int64_t> leader(std::uint64_t idx) const {
    return {leaders_.data() + idx * n_, n_};
  }
  std::int64_t leader_weight(std::uint64_t idx) const { return weights_[idx]; }

  Point leader_of(const Point& p) const {
    auto l = leader(syndrome_.index(p));
    return Point(l.begin(), l.end());
  }

 private:
  Syndrome syndrome_;
  std::size_t n_;
  IntVector divisors_;
  std::vector<std::int64_t> leaders_;
  std::vector<std::int64_t> weights_;
  std::int64_t rho_ = 0;
};

inline CosetTable coset_table(const Lattice& lat, std::uint64_t cap = kDefaultCosetCap) { return CosetTable(lat, cap); }

inline std::int64_t covering_radius(const Lattice& lat, std::uint64_t cap = kDefaultCosetCap) {
  return coset_table(lat, cap).rho();
}

inline Rational packing_density(const CodeParams& p) { return nominal_density(p.n, p.d, p.v); }

enum class CertificateKind { Perfect, DiameterPerfect, None };

inline std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Perfect:
      return "Perfect";
    case CertificateKind::DiameterPerfect:
      return "DiameterPerfect";
    case CertificateKind::None:
      return "None";
  }
  return "None";
}

struct Certificate {
  CertificateKind kind = CertificateKind::None;
  std::uint64_t radius = 0;  // R with d = 2R+1 or d = 2R+2
  Integer reference;         // |S_{n,R}| or |S'_{n,R}|
  Integer slack;             // volume - reference
  std::string bound;
};

// Odd d = 2R+1 is compared with the sphere-packing bound |S_{n,R}|; even
// d = 2R+2 with the code-anticode bound for S'_{n,R}, which is only
// conjectured to be a maximum anticode. d = 1 is the whole space and never
// certified.
inline Certificate certify(std::size_t n, const Integer& d, const Integer& volume) {
  if (n == 0 || d <= 0) throw PreconditionError("certify: invalid parameters");
  if (!d.fits_ulong_p()) throw PreconditionError("certify: distance too large");
  Certificate c;
  const unsigned long dist = d.get_ui();
  if (dist % 2 == 1) {
    c.radius = (dist - 1) / 2;
    c.reference = lee_sphere_size(n, c.radius);
    c.bound = "sphere-packing |S_{n,R}|";
  } else {
    c.radius = (dist - 2) / 2;
    c.reference = anticode_size_odd(n, c.radius);
    c.bound = "code-anticode |S'_{n,R}| (conjectured maximum anticode)";
  }
  c.slack = volume - c.reference;
  if (c.slack < 0)
    throw InconsistencyError("certify: volume " + volume.get_str() + " is below the bound " + c.reference.get_str());
  if (dist == 1) {
    c.bound = "trivial (d = 1)";
  } else if (c.slack == 0) {
    c.kind = dist % 2 == 1 ? CertificateKind::Perfect : CertificateKind::DiameterPerfect;
  }
  return c;
}

inline Certificate certify(const Lattice& lat, const Integer& d) { return certify(lat.dim(), d, lat.integer_volume()); }

}  // namespace leecode
