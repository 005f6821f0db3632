// Finite eps-nets on SO(2) and SO(3) with constant-time covering lookup.
//
// SO(2): uniform angle grid theta_i = 2 pi i / m.
// SO(3): unit quaternions modulo sign, split into the four cube faces
// {q : |q_a| is the largest component, q_a > 0}; each face is gnomonically
// projected to [-1, 1]^3 and cut into k^3 cells. Cells are never
// materialized; the representative of a cell is its projected center.
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>

#include <json.hpp>

#include "monobox/geometry.hpp"

namespace monobox {

enum class EpsMode { kPaper, kSharp, kCustom };

const char* eps_mode_name(EpsMode mode);
EpsMode parse_eps_mode(const std::string& name);

struct NetSpec {
  int n = 2;
  double eps = 0.0;
  EpsMode mode = EpsMode::kPaper;

  /// eps = 1 / (2^{n+2} n!).
  static NetSpec paper(int n);
  /// eps = sharp_eps(n), the largest value the perturbation chain allows.
  static NetSpec sharp(int n);
  /// Any eps in (0, 2]; carries no theorem guarantee.
  static NetSpec custom(int n, double eps);
};

class RotationNet {
 public:
  explicit RotationNet(NetSpec spec);

  const NetSpec& spec() const { return spec_; }
  int dim() const { return spec_.n; }
  double eps() const { return spec_.eps; }
  std::uint64_t size() const { return size_; }
  /// Cells per axis on each SO(3) face (0 for n = 2).
  std::uint64_t cells_per_axis() const { return k_; }
  /// Worst-case rotation distance from a cell member to its representative
  /// implied by the grid resolution (corner evaluation for n = 3).
  double covering_radius() const { return covering_radius_; }

  /// Net member i. Throws std::out_of_range for i >= size().
  Rotation member(std::uint64_t i) const;
  /// Index i with ||member(i)^{-1} u - I||_op < eps, in O(1).
  std::uint64_t lookup(const Rotation& u) const;
  /// out = member(i)^{-1} x without building the matrix.
  void apply_inverse(std::uint64_t i, std::span<const double> x, std::span<double> out) const;
  /// ||member(i)^{-1} u - I||_op via the principal rotation angle.
  double distance(std::uint64_t i, const Rotation& u) const;

 private:
  Quaternion cell_center(std::uint64_t i) const;
  std::uint64_t quaternion_cell(const Quaternion& q) const;

  NetSpec spec_;
  std::uint64_t size_ = 0;
  std::uint64_t k_ = 0;
  double covering_radius_ = 0.0;
};

/// Angle between two unit quaternions viewed as rotations: the returned
/// value is ||R(a)^{-1} R(b) - I||_op = 2 sin(phi / 2).
double quaternion_rotation_distance(const Quaternion& a, const Quaternion& b);

/// Largest angular distance (on S^3) from a gnomonic cell's center to its
/// corners, for cell index c on each axis of a k^3 face grid.
double gnomonic_cell_radius(std::uint64_t k, std::uint64_t c0, std::uint64_t c1,
                            std::uint64_t c2);

/// Worst cell radius over the cells adjacent to the face center, which are
/// the largest cells of the projection.
double gnomonic_max_cell_radius(std::uint64_t k);

/// Haar-distributed rotation (n = 2: uniform angle; n = 3: uniform unit
/// quaternion).
Rotation haar_random_rotation(int n, std::mt19937_64& rng);
Rotation haar_random_rotation(int n, std::uint64_t seed);

nlohmann::json net_stats(const RotationNet& net, std::uint64_t samples, std::uint64_t seed);

}  // namespace monobox
