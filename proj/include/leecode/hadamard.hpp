#pragma once

// Hadamard matrices (Sylvester and Paley I) and the generator matrices
// derived from them.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "errors.hpp"
#include "intlat.hpp"

namespace leecode {

// A +-1 matrix with H * H^T = n I, checked on construction.
class HadamardMatrix {
 public:
  explicit HadamardMatrix(IntMatrix entries) : m_(std::move(entries)) {
    if (!m_.square()) throw DimensionError("HadamardMatrix: not square");
    const std::size_t n = m_.rows();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m_(i, j) != 1 && m_(i, j) != -1) throw PreconditionError("HadamardMatrix: entries must be +-1");
    IntMatrix g = m_ * m_.transpose();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (g(i, j) != (i == j ? Integer(static_cast<unsigned long>(n)) : Integer(0)))
          throw PreconditionError("HadamardMatrix: rows are not orthogonal");
  }

  std::size_t order() const { return m_.rows(); }
  const IntMatrix& matrix() const { return m_; }
  int operator()(std::size_t i, std::size_t j) const { return m_(i, j) > 0 ? 1 : -1; }

  bool is_normalized() const {
    for (std::size_t k = 0; k < order(); ++k)
      if (m_(0, k) != 1 || m_(k, 0) != 1) return false;
    return true;
  }

  bool is_symmetric() const { return m_ == m_.transpose(); }

 private:
  IntMatrix m_;
};

// Order 2^k by repeated doubling [[H, H], [H, -H]].
inline HadamardMatrix sylvester(unsigned k) {
  if (k > 12) throw PreconditionError("sylvester: order 2^k too large");
  IntMatrix h{{1}};
  for (unsigned step = 0; step < k; ++step) {
    const std::size_t n = h.rows();
    IntMatrix next(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        next(i, j) = h(i, j);
        next(i, j + n) = h(i, j);
        next(i + n, j) = h(i, j);
        next(i + n, j + n) = -h(i, j);
      }
    h = std::move(next);
  }
  return HadamardMatrix(std::move(h));
}

namespace detail {

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t f = 2; f * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

}  // namespace detail

// Columns first (first row becomes all +1), then rows (first column).
inline HadamardMatrix normalize(const HadamardMatrix& h) {
  IntMatrix m = h.matrix();
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j)
    if (m(0, j) < 0)
      for (std::size_t i = 0; i < n; ++i) m(i, j) = -m(i, j);
  for (std::size_t i = 0; i < n; ++i)
    if (m(i, 0) < 0) m.negate_row(i);
  return HadamardMatrix(std::move(m));
}

// Paley I construction of order q+1 for a prime q = 3 (mod 4), normalized.
inline HadamardMatrix paley(std::uint64_t q) {
  if (!detail::is_prime(q) || q % 4 != 3) throw PreconditionError("paley: q must be a prime with q = 3 (mod 4)");
  if (q > 1000) throw PreconditionError("paley: order too large");
  std::vector<int> chi(q, -1);
  chi[0] = 0;
  for (std::uint64_t x = 1; x < q; ++x) chi[(x * x) % q] = 1;
  // Skew conference matrix S = [[0, 1^T], [-1, Q]], H = I + S.
  const std::size_t n = q + 1;
  IntMatrix h(n, n);
  for (std::size_t j = 1; j < n; ++j) {
    h(0, j) = 1;
    h(j, 0) = -1;
  }
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) h(a + 1, b + 1) = chi[(b + q - a) % q];
  for (std::size_t i = 0; i < n; ++i) h(i, i) += 1;
  return normalize(HadamardMatrix(std::move(h)));
}

// The code generated by the rows of a Hadamard matrix: length n, minimum
// distance n, volume n^{n/2}, alphabet Z_n.
inline Lattice hadamard_code(const HadamardMatrix& h) {
  if (!h.is_normalized()) throw PreconditionError("hadamard_code: matrix must be in normal form");
  return Lattice(h.matrix());
}

// 0/1 matrix of order 2^i: H_2 as below, H_{i+1} = [[H_i, H_i], [0, H_i]].
inline IntMatrix h_matrix(unsigned i) {
  if (i < 2) throw PreconditionError("h_matrix: i must be at least 2");
  if (i > 12) throw PreconditionError("h_matrix: order too large");
  IntMatrix h{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  for (unsigned step = 2; step < i; ++step) {
    const std::size_t n = h.rows();
    IntMatrix next(2 * n, 2 * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        next(r, c) = h(r, c);
        next(r, c + n) = h(r, c);
        next(r + n, c + n) = h(r, c);
      }
    h = std::move(next);
  }
  return h;
}

// Row s of H_i with row sum 2^l is kept when l >= j and multiplied by
// 2^{j-l} otherwise.
inline Lattice g_matrix(unsigned i, unsigned j) {
  if (j < 2) throw PreconditionError("g_matrix: j must be at least 2");
  if (j > 62) throw PreconditionError("g_matrix: j too large");
  IntMatrix h = h_matrix(i);
  const std::size_t n = h.rows();
  for (std::size_t s = 0; s < n; ++s) {
    Integer sum = 0;
    for (std::size_t c = 0; c < n; ++c) sum += h(s, c);
    const unsigned l = static_cast<unsigned>(mpz_sizeinbase(sum.get_mpz_t(), 2) - 1);
    if (l < j) {
      const Integer f = pow(Integer(2), j - l);
      for (std::size_t c = 0; c < n; ++c) h(s, c) *= f;
    }
  }
  return Lattice(std::move(h));
}

// prod_{r=0}^{min(i,j)} 2^{(j-r) C(i,r)}
inline Integer g_volume_formula(unsigned i, unsigned j) {
  if (i < 2 || j < 2) throw PreconditionError("g_volume_formula: i, j must be at least 2");
  Integer exponent = 0;
  for (unsigned r = 0; r <= std::min(i, j); ++r) exponent += Integer(j - r) * binomial(i, r);
  return pow(Integer(2), exponent.get_ui());
}

}  // namespace leecode
