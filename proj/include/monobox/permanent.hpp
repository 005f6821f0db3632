// Subset-alternating product sums and matrix permanents.
//
// The alternating sum over all subsets T of {1..n} of
//   (-1)^{n-|T|} prod_k (p_k + sum_{j in T} v_{j,k})
// equals the permanent of (v_{j,k}) for every offset vector p. Everything
// here is templated over the scalar so the same code runs in double,
// std::complex<double> and exact rationals.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "monobox/geometry.hpp"
#include "monobox/rational.hpp"

namespace monobox {

inline constexpr std::size_t kMaxSubsetSumDim = 20;
inline constexpr std::size_t kMaxFactorialPermanentDim = 12;
inline constexpr std::size_t kMaxRyserPermanentDim = 20;
inline constexpr std::size_t kMaxPowerIdentityDim = 16;

template <class Scalar>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), e_(n * n, Scalar(0)) {}
  SquareMatrix(std::size_t n, std::vector<Scalar> row_major) : n_(n), e_(std::move(row_major)) {
    if (e_.size() != n_ * n_) throw std::invalid_argument("matrix: not square");
  }
  static SquareMatrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    SquareMatrix m(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[j].size() != rows.size()) throw std::invalid_argument("matrix: not square");
      for (std::size_t k = 0; k < rows.size(); ++k) m(j, k) = rows[j][k];
    }
    return m;
  }

  std::size_t dim() const { return n_; }
  Scalar& operator()(std::size_t j, std::size_t k) { return e_[j * n_ + k]; }
  const Scalar& operator()(std::size_t j, std::size_t k) const { return e_[j * n_ + k]; }

  SquareMatrix transposed() const {
    SquareMatrix t(n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) t(k, j) = (*this)(j, k);
    return t;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> e_;
};

/// |x| as a double, used for error reporting across scalar types.
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Complex& x) { return std::abs(x); }
inline double magnitude(const Rational& x) { return std::abs(x.get_d()); }
inline double magnitude(const GaussianRational& x) { return std::abs(x.to_complex()); }

/// Left-hand side of the identity, evaluated literally over all 2^n subsets.
template <class Scalar>
Scalar alternating_subset_sum(std::span<const Scalar> p, const SquareMatrix<Scalar>& v) {
  const std::size_t n = v.dim();
  if (p.size() != n) throw std::invalid_argument("alternating_subset_sum: dimension mismatch");
  if (n > kMaxSubsetSumDim) throw std::invalid_argument("alternating_subset_sum: n > 20");
  const std::uint32_t count = std::uint32_t{1} << n;
  Scalar total(0);
  for (std::uint32_t t = 0; t < count; ++t) {
    Scalar prod(1);
    for (std::size_t k = 0; k < n; ++k) {
      Scalar factor = p[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (t & (std::uint32_t{1} << j)) factor += v(j, k);
      }
      prod *= factor;
    }
    if (((n - static_cast<std::size_t>(std::popcount(t))) & 1u) == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

/// Sum over all permutations. This is the reference evaluator.
template <class Scalar>
Scalar permanent_by_permutations(const SquareMatrix<Scalar>& v) {
  const std::size_t n = v.dim();
  if (n > kMaxFactorialPermanentDim) {
    throw std::invalid_argument("permanent_by_permutations: n > 12");
  }
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  Scalar total(0);
  do {
    Scalar prod(1);
    for (std::size_t j = 0; j < n; ++j) prod *= v(j, sigma[j]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

/// Inclusion-exclusion over column subsets (Ryser), Gray-code ordered:
///   perm(V) = (-1)^n sum_S (-1)^{|S|} prod_j sum_{k in S} v_{j,k}.
template <class Scalar>
Scalar permanent_ryser(const SquareMatrix<Scalar>& v) {
  const std::size_t n = v.dim();
  if (n > kMaxRyserPermanentDim) throw std::invalid_argument("permanent_ryser: n > 20");
  if (n == 0) return Scalar(1);
  std::vector<Scalar> row_sums(n, Scalar(0));
  Scalar total(0);
  std::uint32_t gray = 0;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t i = 1; i < count; ++i) {
    const std::uint32_t next = i ^ (i >> 1);
    const std::uint32_t flipped = next ^ gray;
    const auto col = static_cast<std::size_t>(std::countr_zero(flipped));
    const bool added = (next & flipped) != 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (added) {
        row_sums[j] += v(j, col);
      } else {
        row_sums[j] -= v(j, col);
      }
    }
    gray = next;
    Scalar prod(1);
    for (std::size_t j = 0; j < n; ++j) prod *= row_sums[j];
    if (((n - static_cast<std::size_t>(std::popcount(gray))) & 1u) == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

template <class Scalar>
Scalar permanent(const SquareMatrix<Scalar>& v) {
  return permanent_ryser(v);
}

template <class Scalar>
struct IdentityCheck {
  Scalar lhs;
  Scalar rhs;
  double abs_error = 0.0;
  /// abs_error / max(|rhs|, perm(|V|)); the denominator is the size of the
  /// terms that could cancel, so near-zero permanents do not inflate it.
  double rel_error = 0.0;
};

template <class Scalar>
IdentityCheck<Scalar> identity_check(std::span<const Scalar> p, const SquareMatrix<Scalar>& v) {
  IdentityCheck<Scalar> out{alternating_subset_sum(p, v), permanent(v), 0.0, 0.0};
  Scalar diff = out.lhs - out.rhs;
  out.abs_error = magnitude(diff);
  SquareMatrix<double> abs_v(v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j)
    for (std::size_t k = 0; k < v.dim(); ++k) abs_v(j, k) = magnitude(v(j, k));
  const double scale = std::max(magnitude(out.rhs), permanent(abs_v));
  out.rel_error = scale > 0.0 ? out.abs_error / scale : out.abs_error;
  return out;
}

template <class Scalar>
Scalar integer_power(const Scalar& base, std::size_t n) {
  Scalar r(1);
  for (std::size_t i = 0; i < n; ++i) r *= base;
  return r;
}

template <class Scalar>
struct PowerIdentityCheck {
  Scalar lhs;
  Scalar rhs;
  double abs_error = 0.0;
  /// abs_error / max(|rhs|, sum of |term|).
  double rel_error = 0.0;
};

/// sum_T (-1)^{n-|T|} (z + sum_{j in T} u_j)^n  versus  n! u_1 ... u_n.
template <class Scalar>
PowerIdentityCheck<Scalar> complex_power_identity_check(const Scalar& z,
                                                        std::span<const Scalar> u) {
  const std::size_t n = u.size();
  if (n == 0 || n > kMaxPowerIdentityDim) {
    throw std::invalid_argument("complex_power_identity_check: need 1 <= n <= 16");
  }
  const std::uint32_t count = std::uint32_t{1} << n;
  Scalar lhs(0);
  double terms = 0.0;
  for (std::uint32_t t = 0; t < count; ++t) {
    Scalar w = z;
    for (std::size_t j = 0; j < n; ++j) {
      if (t & (std::uint32_t{1} << j)) w += u[j];
    }
    Scalar term = integer_power(w, n);
    terms += magnitude(term);
    if (((n - static_cast<std::size_t>(std::popcount(t))) & 1u) == 0) {
      lhs += term;
    } else {
      lhs -= term;
    }
  }
  Scalar rhs(1);
  for (std::size_t j = 1; j <= n; ++j) rhs *= Scalar(static_cast<long>(j));
  for (const auto& uj : u) rhs *= uj;
  Scalar diff = lhs - rhs;
  const double abs_error = magnitude(diff);
  const double scale = std::max(magnitude(rhs), terms);
  return {lhs, rhs, abs_error, scale > 0.0 ? abs_error / scale : abs_error};
}

/// Random instances of both identities with entries in [-10, 10]. Exact
/// mode draws rationals with denominators up to 9 and counts mismatches.
nlohmann::json identity_trials(int n, std::uint64_t trials, std::uint64_t seed, bool exact);

}  // namespace monobox
