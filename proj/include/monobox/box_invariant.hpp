// The alternating product-of-coordinates sum over the vertices of a box,
// its permanent representation and the near-identity perturbation bound.
#pragma once

#include <cstdint>
#include <span>

#include <json.hpp>

#include "monobox/geometry.hpp"
#include "monobox/permanent.hpp"

namespace monobox {

/// Sum over vertices of (-1)^{n - parity} x_1 ... x_n. The sign depends on
/// which vertex is lexicographically smallest; |value| does not.
struct JValue {
  double value = 0.0;
  std::uint32_t base_subset = 0;
};

/// Vertices must be indexed by subset (see box_vertices).
JValue signed_product_sum(std::span<const BoxVertex> vertices);
JValue invariant_J(const OrientedBox& box);

/// Rows are the edge vectors v_j = a_j U e_j.
SquareMatrix<double> edge_matrix(const OrientedBox& box);
double j_via_permanent(const OrientedBox& box);

/// 1 / (2^{n+2} n!).
double paper_eps(int n);
/// Largest eps with (n! + n - 1) eps (1 + eps)^{n-1} <= 1/4, to 1e-12.
double sharp_eps(int n);

struct PerturbationReport {
  int n = 0;
  double eps = 0.0;
  double op_norm_distance = 0.0;
  double volume = 0.0;
  double permanent = 0.0;
  double j_value = 0.0;
  // |v_11 ... v_nn - a_1 ... a_n| against n eps (1+eps)^{n-1} vol.
  double diagonal_deviation = 0.0;
  double diagonal_bound = 0.0;
  // sum over sigma != id of |prod v_{j,sigma(j)}| against (n!-1) eps (1+eps)^{n-1} vol.
  double off_diagonal_sum = 0.0;
  double off_diagonal_bound = 0.0;
  double deviation = 0.0;      // |perm - vol|
  double coarse_bound = 0.0;   // 2^n n! eps vol
  double quarter_volume = 0.0;
  double slack = 0.0;          // quarter_volume - deviation
  bool unit_volume = false;
  bool j_in_interval = false;  // |J| in (3/4, 5/4); meaningful for unit volume
  bool pass = false;
};

/// Thrown when the rotation is not within eps of the identity or eps
/// exceeds the admissible value.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Requires op_norm_dist_identity(U) < eps <= sharp_eps(n) and n <= 10.
PerturbationReport perturbation_bound_check(const OrientedBox& box, double eps);

nlohmann::json to_json(const PerturbationReport& r);

/// The alternating sum evaluated on the parallelogram z, z+a, z+a+v, z+v
/// whose first side is horizontal. Its absolute value is a |Im v|.
double horizontal_parallelogram_J(Complex z, double a, Complex v);

}  // namespace monobox
