#include "monobox/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace monobox {

namespace {

using MatrixX = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const MatrixX> as_matrix(std::size_t n, std::span<const double> m) {
  return {m.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)};
}

}  // namespace

void require_finite(std::span<const double> x, const char* what) {
  for (double c : x) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
    }
  }
}

bool lex_less(std::span<const double> a, std::span<const double> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion Quaternion::normalized() const {
  const double s = norm();
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("quaternion: cannot normalize");
  }
  return {w / s, x / s, y / s, z / s};
}

double& Quaternion::operator[](std::size_t i) {
  switch (i) {
    case 0: return w;
    case 1: return x;
    case 2: return y;
    default: return z;
  }
}

double Quaternion::operator[](std::size_t i) const {
  return const_cast<Quaternion&>(*this)[i];
}

// ---------------------------------------------------------------------------
// Rotation

Rotation::Rotation(std::size_t n, std::vector<double> row_major)
    : n_(n), m_(std::move(row_major)) {
  if (n_ == 0 || m_.size() != n_ * n_) {
    throw std::invalid_argument("rotation: matrix must be n x n with n >= 1");
  }
  require_finite(m_, "rotation");
  if (!is_valid(n_, m_)) {
    throw std::invalid_argument("rotation: matrix is not special orthogonal");
  }
}

bool Rotation::is_valid(std::size_t n, std::span<const double> row_major, double tol) {
  if (n == 0 || row_major.size() != n * n) return false;
  const auto m = as_matrix(n, row_major);
  const MatrixX gram = m.transpose() * m;
  const MatrixX dev = gram - MatrixX::Identity(gram.rows(), gram.cols());
  if (dev.cwiseAbs().maxCoeff() > tol) return false;
  return std::abs(m.determinant() - 1.0) <= tol;
}

Rotation Rotation::identity(std::size_t n) {
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;
  return Rotation(Unchecked{}, n, std::move(m));
}

Rotation Rotation::planar(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return Rotation(Unchecked{}, 2, {c, -s, s, c});
}

Rotation Rotation::from_quaternion(const Quaternion& quat) {
  const Quaternion q = quat.normalized();
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  return Rotation(Unchecked{}, 3,
                  {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
                   2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
                   2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)});
}

Rotation Rotation::axis_angle(const std::array<double, 3>& axis, double angle) {
  const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(len > 0.0)) throw std::invalid_argument("rotation: zero axis");
  const double s = std::sin(angle / 2) / len;
  return from_quaternion({std::cos(angle / 2), axis[0] * s, axis[1] * s, axis[2] * s});
}

RealVec Rotation::apply(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("rotation: dimension mismatch");
  RealVec out(n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < n_; ++c) acc += m_[r * n_ + c] * x[c];
    out[r] = acc;
  }
  return out;
}

RealVec Rotation::apply_inverse(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("rotation: dimension mismatch");
  RealVec out(n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < n_; ++c) acc += m_[c * n_ + r] * x[c];
    out[r] = acc;
  }
  return out;
}

Rotation Rotation::inverse() const {
  std::vector<double> t(n_ * n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t[c * n_ + r] = m_[r * n_ + c];
  return Rotation(Unchecked{}, n_, std::move(t));
}

Rotation Rotation::operator*(const Rotation& rhs) const {
  if (rhs.n_ != n_) throw std::invalid_argument("rotation: dimension mismatch");
  std::vector<double> p(n_ * n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t c = 0; c < n_; ++c) p[r * n_ + c] += m_[r * n_ + k] * rhs.m_[k * n_ + c];
  return Rotation(Unchecked{}, n_, std::move(p));
}

double Rotation::planar_angle() const {
  if (n_ != 2) throw std::invalid_argument("planar_angle: rotation is not 2x2");
  return std::atan2(m_[2], m_[0]);
}

Quaternion Rotation::to_quaternion() const {
  if (n_ != 3) throw std::invalid_argument("to_quaternion: rotation is not 3x3");
  const auto& m = m_;
  const double trace = m[0] + m[4] + m[8];
  Quaternion q;
  if (trace >= m[0] && trace >= m[4] && trace >= m[8]) {
    const double s = 2.0 * std::sqrt(1.0 + trace);
    q = {s / 4, (m[7] - m[5]) / s, (m[2] - m[6]) / s, (m[3] - m[1]) / s};
  } else if (m[0] >= m[4] && m[0] >= m[8]) {
    const double s = 2.0 * std::sqrt(1.0 + m[0] - m[4] - m[8]);
    q = {(m[7] - m[5]) / s, s / 4, (m[1] + m[3]) / s, (m[2] + m[6]) / s};
  } else if (m[4] >= m[8]) {
    const double s = 2.0 * std::sqrt(1.0 + m[4] - m[0] - m[8]);
    q = {(m[2] - m[6]) / s, (m[1] + m[3]) / s, s / 4, (m[5] + m[7]) / s};
  } else {
    const double s = 2.0 * std::sqrt(1.0 + m[8] - m[0] - m[4]);
    q = {(m[3] - m[1]) / s, (m[2] + m[6]) / s, (m[5] + m[7]) / s, s / 4};
  }
  return q.normalized();
}

// ---------------------------------------------------------------------------
// Boxes

AlignedBox::AlignedBox(RealVec base, RealVec edges)
    : base_(std::move(base)), edges_(std::move(edges)) {
  if (base_.empty() || base_.size() != edges_.size()) {
    throw std::invalid_argument("box: base and edges must have the same dimension n >= 1");
  }
  require_finite(base_, "box base");
  require_finite(edges_, "box edges");
  for (double a : edges_) {
    if (!(a > 0.0)) throw std::invalid_argument("box: edge lengths must be positive");
  }
}

double AlignedBox::volume() const {
  double v = 1.0;
  for (double a : edges_) v *= a;
  return v;
}

OrientedBox::OrientedBox(AlignedBox aligned, Rotation rotation)
    : aligned_(std::move(aligned)), rotation_(std::move(rotation)) {
  if (aligned_.dim() != rotation_.dim()) {
    throw std::invalid_argument("box: rotation dimension does not match box");
  }
}

RealVec OrientedBox::base_point() const { return rotation_.apply(aligned_.base()); }

std::vector<RealVec> OrientedBox::edge_vectors() const {
  const std::size_t n = dim();
  std::vector<RealVec> rows(n, RealVec(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) rows[j][k] = aligned_.edges()[j] * rotation_(k, j);
  return rows;
}

OrientedBox OrientedBox::rotated_back(const Rotation& frame) const {
  return OrientedBox(aligned_, frame.inverse() * rotation_);
}

std::vector<BoxVertex> parallelotope_vertices(std::span<const double> base,
                                              std::span<const RealVec> edges) {
  const std::size_t n = edges.size();
  if (n > kMaxEnumerationDim) {
    throw std::invalid_argument("vertex enumeration: dimension exceeds 24");
  }
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<BoxVertex> out(count);
  out[0] = {0, RealVec(base.begin(), base.end())};
  // Each subset extends the subset without its highest bit.
  for (std::uint32_t t = 1; t < count; ++t) {
    const int high = 31 - std::countl_zero(t);
    const std::uint32_t prev = t & ~(std::uint32_t{1} << high);
    RealVec p = out[prev].point;
    const RealVec& e = edges[static_cast<std::size_t>(high)];
    for (std::size_t k = 0; k < p.size(); ++k) p[k] += e[k];
    out[t] = {t, std::move(p)};
  }
  return out;
}

std::vector<BoxVertex> box_vertices(const OrientedBox& box) {
  if (box.dim() > kMaxEnumerationDim) {
    throw std::invalid_argument("box_vertices: dimension exceeds 24");
  }
  const RealVec p = box.base_point();
  const std::vector<RealVec> edges = box.edge_vectors();
  return parallelotope_vertices(p, edges);
}

VertexParities vertex_parities(std::span<const BoxVertex> vertices) {
  if (vertices.empty()) throw std::invalid_argument("vertex_parities: no vertices");
  std::size_t best = 0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (lex_less(vertices[i].point, vertices[best].point)) best = i;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i != best && !lex_less(vertices[best].point, vertices[i].point)) {
      throw std::logic_error("vertex_parities: tie in lexicographic minimum");
    }
  }
  VertexParities out;
  out.base_subset = vertices[best].subset;
  out.parity.resize(vertices.size());
  for (const auto& v : vertices) {
    if (v.subset >= vertices.size()) {
      throw std::invalid_argument("vertex_parities: vertices must be indexed by subset");
    }
    out.parity[v.subset] =
        static_cast<std::uint8_t>(std::popcount(v.subset ^ out.base_subset) & 1u);
  }
  return out;
}

VertexParities vertex_parities(const OrientedBox& box) {
  const auto verts = box_vertices(box);
  return vertex_parities(verts);
}

double op_norm_dist_identity(const Rotation& u) {
  const auto n = static_cast<Eigen::Index>(u.dim());
  MatrixX d = as_matrix(u.dim(), u.data());
  d -= MatrixX::Identity(n, n);
  Eigen::JacobiSVD<MatrixX> svd(d);
  return svd.singularValues()(0);
}

}  // namespace monobox
