#include "monobox/box_invariant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace monobox {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double chain_factor(int n, double eps) {
  return (factorial(n) + n - 1) * eps * std::pow(1.0 + eps, n - 1);
}

}  // namespace

JValue signed_product_sum(std::span<const BoxVertex> vertices) {
  const VertexParities par = vertex_parities(vertices);
  const std::size_t n = vertices.front().point.size();
  if (n > kMaxSubsetSumDim) throw std::invalid_argument("invariant_J: n > 20");
  double total = 0.0;
  for (const auto& v : vertices) {
    double prod = 1.0;
    for (double x : v.point) prod *= x;
    // (-1)^{n - parity}
    const bool negative = ((n - par.parity[v.subset]) & 1u) != 0;
    total += negative ? -prod : prod;
  }
  return {total, par.base_subset};
}

JValue invariant_J(const OrientedBox& box) {
  if (box.dim() > kMaxSubsetSumDim) throw std::invalid_argument("invariant_J: n > 20");
  const auto verts = box_vertices(box);
  return signed_product_sum(verts);
}

SquareMatrix<double> edge_matrix(const OrientedBox& box) {
  return SquareMatrix<double>::from_rows(box.edge_vectors());
}

double j_via_permanent(const OrientedBox& box) { return permanent(edge_matrix(box)); }

double paper_eps(int n) {
  if (n < 1) throw std::invalid_argument("paper_eps: n must be positive");
  return 1.0 / (std::ldexp(1.0, n + 2) * factorial(n));
}

double sharp_eps(int n) {
  if (n < 1) throw std::invalid_argument("sharp_eps: n must be positive");
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (chain_factor(n, mid) <= 0.25) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

PerturbationReport perturbation_bound_check(const OrientedBox& box, double eps) {
  const int n = static_cast<int>(box.dim());
  if (n > 10) throw PreconditionError("perturbation_bound_check: n > 10");
  if (!(eps > 0.0) || eps > sharp_eps(n)) {
    std::ostringstream os;
    os << "perturbation_bound_check: eps " << eps << " exceeds admissible " << sharp_eps(n);
    throw PreconditionError(os.str());
  }
  PerturbationReport r;
  r.n = n;
  r.eps = eps;
  r.op_norm_distance = op_norm_dist_identity(box.rotation());
  if (!(r.op_norm_distance < eps)) {
    std::ostringstream os;
    os << "perturbation_bound_check: rotation is at operator-norm distance "
       << r.op_norm_distance << " >= eps " << eps;
    throw PreconditionError(os.str());
  }

  const SquareMatrix<double> v = edge_matrix(box);
  r.volume = box.volume();
  r.permanent = permanent(v);
  r.j_value = invariant_J(box).value;

  double diag = 1.0;
  for (int j = 0; j < n; ++j) diag *= v(j, j);
  r.diagonal_deviation = std::abs(diag - r.volume);

  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  double off = 0.0;
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    double prod = 1.0;
    for (int j = 0; j < n; ++j) prod *= v(j, sigma[j]);
    off += std::abs(prod);
  }
  r.off_diagonal_sum = off;

  const double growth = eps * std::pow(1.0 + eps, n - 1) * r.volume;
  r.diagonal_bound = n * growth;
  r.off_diagonal_bound = (factorial(n) - 1) * growth;
  r.deviation = std::abs(r.permanent - r.volume);
  r.coarse_bound = std::ldexp(1.0, n) * factorial(n) * eps * r.volume;
  r.quarter_volume = 0.25 * r.volume;
  r.slack = r.quarter_volume - r.deviation;
  r.unit_volume = std::abs(r.volume - 1.0) <= 1e-12;
  const double aj = std::abs(r.j_value);
  r.j_in_interval = aj > 0.75 && aj < 1.25;

  const bool terms_ok = r.diagonal_deviation <= r.diagonal_bound &&
                        r.off_diagonal_sum <= r.off_diagonal_bound;
  r.pass = terms_ok && r.deviation <= r.quarter_volume && (!r.unit_volume || r.j_in_interval);
  return r;
}

nlohmann::json to_json(const PerturbationReport& r) {
  return {{"n", r.n},
          {"eps", r.eps},
          {"op_norm_distance", r.op_norm_distance},
          {"volume", r.volume},
          {"permanent", r.permanent},
          {"J", r.j_value},
          {"diagonal_deviation", r.diagonal_deviation},
          {"diagonal_bound", r.diagonal_bound},
          {"off_diagonal_sum", r.off_diagonal_sum},
          {"off_diagonal_bound", r.off_diagonal_bound},
          {"deviation", r.deviation},
          {"coarse_bound", r.coarse_bound},
          {"quarter_volume", r.quarter_volume},
          {"slack", r.slack},
          {"unit_volume", r.unit_volume},
          {"J_in_interval", r.j_in_interval},
          {"verdict", r.pass ? "PASS" : "FAIL"}};
}

double horizontal_parallelogram_J(Complex z, double a, Complex v) {
  if (!(a > 0.0)) throw std::invalid_argument("horizontal_parallelogram_J: a must be positive");
  const RealVec base{z.real(), z.imag()};
  const std::vector<RealVec> edges{{a, 0.0}, {v.real(), v.imag()}};
  const auto verts = parallelotope_vertices(base, edges);
  return signed_product_sum(verts).value;
}

}  // namespace monobox
