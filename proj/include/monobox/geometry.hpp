// Shared geometric substrate: vectors, rotations, boxes, vertex enumeration
// and the lexicographic parity rule.
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace monobox {

using RealVec = std::vector<double>;
using Complex = std::complex<double>;

/// Largest dimension for which 2^n vertex enumeration is allowed.
inline constexpr std::size_t kMaxEnumerationDim = 24;

/// Tolerance used by the rotation validity check (orthonormality and det).
inline constexpr double kRotationTolerance = 1e-12;

/// Throws std::invalid_argument if any coordinate is NaN or infinite.
void require_finite(std::span<const double> x, const char* what);

/// Strict lexicographic order on coordinate vectors, no tolerance.
bool lex_less(std::span<const double> a, std::span<const double> b);
bool lex_less(Complex a, Complex b);

/// Unit quaternion (w, x, y, z) representing a rotation of R^3.
struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  Quaternion normalized() const;
  double& operator[](std::size_t i);
  double operator[](std::size_t i) const;
};

class Rotation {
 public:
  /// Validates orthonormal columns and det = +1 within kRotationTolerance.
  Rotation(std::size_t n, std::vector<double> row_major);

  static Rotation identity(std::size_t n);
  /// Counter-clockwise planar rotation.
  static Rotation planar(double angle);
  static Rotation from_quaternion(const Quaternion& q);
  /// Rotation of R^3 by `angle` about the (not necessarily unit) axis.
  static Rotation axis_angle(const std::array<double, 3>& axis, double angle);

  static bool is_valid(std::size_t n, std::span<const double> row_major,
                       double tol = kRotationTolerance);

  std::size_t dim() const { return n_; }
  double operator()(std::size_t r, std::size_t c) const { return m_[r * n_ + c]; }
  std::span<const double> data() const { return m_; }

  RealVec apply(std::span<const double> x) const;
  /// Applies the inverse (transpose).
  RealVec apply_inverse(std::span<const double> x) const;
  Rotation inverse() const;
  Rotation operator*(const Rotation& rhs) const;

  /// Counter-clockwise angle in (-pi, pi]; n = 2 only.
  double planar_angle() const;
  /// Shepperd's method; n = 3 only. The sign of the result is unspecified.
  Quaternion to_quaternion() const;

 private:
  struct Unchecked {};
  Rotation(Unchecked, std::size_t n, std::vector<double> row_major)
      : n_(n), m_(std::move(row_major)) {}

  std::size_t n_;
  std::vector<double> m_;
};

/// Axis-aligned box q + [0,a_1] x ... x [0,a_n]; every a_j > 0.
class AlignedBox {
 public:
  AlignedBox(RealVec base, RealVec edges);

  std::size_t dim() const { return base_.size(); }
  const RealVec& base() const { return base_; }
  const RealVec& edges() const { return edges_; }
  double volume() const;

 private:
  RealVec base_;
  RealVec edges_;
};

/// The box U * aligned. Vertices are p + sum_{j in T} v_j with p = U q and
/// v_j = a_j U e_j.
class OrientedBox {
 public:
  OrientedBox(AlignedBox aligned, Rotation rotation);

  std::size_t dim() const { return aligned_.dim(); }
  const AlignedBox& aligned() const { return aligned_; }
  const Rotation& rotation() const { return rotation_; }
  double volume() const { return aligned_.volume(); }

  RealVec base_point() const;
  /// Row j is v_j.
  std::vector<RealVec> edge_vectors() const;
  /// The same box expressed in the frame rotated by `frame`^{-1}.
  OrientedBox rotated_back(const Rotation& frame) const;

 private:
  AlignedBox aligned_;
  Rotation rotation_;
};

struct BoxVertex {
  std::uint32_t subset;  // bit j-1 set iff j in T
  RealVec point;
};

/// Vertices p + sum_{j in T} edges[j] for all subsets T, indexed by subset.
std::vector<BoxVertex> parallelotope_vertices(std::span<const double> base,
                                              std::span<const RealVec> edges);

/// All 2^n vertices of the box, element k has subset k.
std::vector<BoxVertex> box_vertices(const OrientedBox& box);

struct VertexParities {
  std::uint32_t base_subset = 0;
  /// parity[T] = popcount(T xor base_subset) mod 2.
  std::vector<std::uint8_t> parity;
};

/// Base vertex is the lexicographic minimum; vertices must be indexed by
/// subset (as returned by box_vertices).
VertexParities vertex_parities(std::span<const BoxVertex> vertices);
VertexParities vertex_parities(const OrientedBox& box);

/// Largest singular value of U - I, computed by SVD.
double op_norm_dist_identity(const Rotation& u);

/// Parallelogram with vertices z, z+u, z+u+v, z+v (possibly degenerate).
struct Parallelogram {
  Complex z;
  Complex u;
  Complex v;

  /// Vertices in cyclic order starting at z.
  std::array<Complex, 4> vertices() const { return {z, z + u, z + u + v, z + v}; }
  double side_product() const { return std::abs(u) * std::abs(v); }
};

}  // namespace monobox
