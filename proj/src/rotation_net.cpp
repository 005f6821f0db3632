#include "monobox/rotation_net.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "monobox/box_invariant.hpp"

namespace monobox {

namespace {

constexpr double kPi = std::numbers::pi;
// Cell radius is shrunk by this factor relative to the covering requirement.
constexpr double kSafety = 1.1;
constexpr std::uint64_t kMaxCellsPerAxis = 1'500'000;

std::array<double, 4> unit4(double a, double b, double c, double d) {
  const double s = std::sqrt(a * a + b * b + c * c + d * d);
  return {a / s, b / s, c / s, d / s};
}

double angle_between(const std::array<double, 4>& x, const std::array<double, 4>& y) {
  double d2 = 0.0;
  for (int i = 0; i < 4; ++i) d2 += (x[i] - y[i]) * (x[i] - y[i]);
  return 2.0 * std::asin(std::min(1.0, std::sqrt(d2) / 2.0));
}

}  // namespace

const char* eps_mode_name(EpsMode mode) {
  switch (mode) {
    case EpsMode::kPaper: return "paper";
    case EpsMode::kSharp: return "sharp";
    default: return "custom";
  }
}

EpsMode parse_eps_mode(const std::string& name) {
  if (name == "paper") return EpsMode::kPaper;
  if (name == "sharp") return EpsMode::kSharp;
  if (name == "custom") return EpsMode::kCustom;
  throw std::invalid_argument("unknown eps mode '" + name + "' (expected paper|sharp)");
}

NetSpec NetSpec::paper(int n) { return {n, paper_eps(n), EpsMode::kPaper}; }
NetSpec NetSpec::sharp(int n) { return {n, sharp_eps(n), EpsMode::kSharp}; }
NetSpec NetSpec::custom(int n, double eps) { return {n, eps, EpsMode::kCustom}; }

double quaternion_rotation_distance(const Quaternion& a, const Quaternion& b) {
  const Quaternion qa = a.normalized();
  Quaternion qb = b.normalized();
  const double dot = qa.w * qb.w + qa.x * qb.x + qa.y * qb.y + qa.z * qb.z;
  if (dot < 0) qb = {-qb.w, -qb.x, -qb.y, -qb.z};
  const double alpha = angle_between({qa.w, qa.x, qa.y, qa.z}, {qb.w, qb.x, qb.y, qb.z});
  return 2.0 * std::sin(alpha);
}

double gnomonic_cell_radius(std::uint64_t k, std::uint64_t c0, std::uint64_t c1,
                            std::uint64_t c2) {
  const double h = 2.0 / static_cast<double>(k);
  auto lo = [&](std::uint64_t c) { return -1.0 + h * static_cast<double>(c); };
  const auto center = unit4(1.0, lo(c0) + h / 2, lo(c1) + h / 2, lo(c2) + h / 2);
  double worst = 0.0;
  for (int corner = 0; corner < 8; ++corner) {
    const auto p = unit4(1.0, lo(c0) + ((corner & 1) ? h : 0.0), lo(c1) + ((corner & 2) ? h : 0.0),
                         lo(c2) + ((corner & 4) ? h : 0.0));
    worst = std::max(worst, angle_between(center, p));
  }
  return worst;
}

double gnomonic_max_cell_radius(std::uint64_t k) {
  const std::uint64_t c_lo = (k - 1) / 2;
  const std::uint64_t c_hi = k / 2;
  double worst = 0.0;
  for (std::uint64_t a : {c_lo, c_hi})
    for (std::uint64_t b : {c_lo, c_hi})
      for (std::uint64_t c : {c_lo, c_hi}) worst = std::max(worst, gnomonic_cell_radius(k, a, b, c));
  return worst;
}

RotationNet::RotationNet(NetSpec spec) : spec_(spec) {
  if (spec_.n != 2 && spec_.n != 3) {
    throw std::invalid_argument("rotation net: only n = 2 and n = 3 are supported (got n = " +
                                std::to_string(spec_.n) + ")");
  }
  if (!(spec_.eps > 0.0) || spec_.eps > 2.0) {
    throw std::invalid_argument("rotation net: eps must lie in (0, 2]");
  }
  if (spec_.mode == EpsMode::kPaper && spec_.eps > paper_eps(spec_.n)) {
    throw std::invalid_argument("rotation net: eps exceeds 1/(2^{n+2} n!) in paper mode");
  }
  if (spec_.mode == EpsMode::kSharp && spec_.eps > sharp_eps(spec_.n)) {
    throw std::invalid_argument("rotation net: eps exceeds the sharp admissible value");
  }
  const double target = std::asin(std::min(1.0, spec_.eps / 2.0));
  if (spec_.n == 2) {
    // Grid spacing 2 pi / m <= 2 asin(eps / 2).
    size_ = static_cast<std::uint64_t>(std::ceil(kPi / target));
    size_ = std::max<std::uint64_t>(size_, 1);
    covering_radius_ = 2.0 * std::sin(kPi / (2.0 * static_cast<double>(size_)));
    return;
  }
  auto fits = [&](std::uint64_t k) { return kSafety * gnomonic_max_cell_radius(k) <= target; };
  std::uint64_t lo = 1;
  std::uint64_t hi = kMaxCellsPerAxis;
  if (!fits(hi)) throw std::invalid_argument("rotation net: eps too small for a 64-bit index");
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (fits(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  k_ = lo;
  size_ = 4 * k_ * k_ * k_;
  covering_radius_ = 2.0 * std::sin(gnomonic_max_cell_radius(k_));
}

Quaternion RotationNet::cell_center(std::uint64_t i) const {
  const std::uint64_t face_size = k_ * k_ * k_;
  const auto axis = static_cast<std::size_t>(i / face_size);
  std::uint64_t rem = i % face_size;
  const std::uint64_t c2 = rem % k_;
  rem /= k_;
  const std::uint64_t c1 = rem % k_;
  const std::uint64_t c0 = rem / k_;
  const double kd = static_cast<double>(k_);
  auto t = [&](std::uint64_t c) { return -1.0 + (2.0 * static_cast<double>(c) + 1.0) / kd; };
  const std::array<double, 3> others{t(c0), t(c1), t(c2)};
  Quaternion q{0, 0, 0, 0};
  std::size_t o = 0;
  for (std::size_t comp = 0; comp < 4; ++comp) q[comp] = comp == axis ? 1.0 : others[o++];
  return q.normalized();
}

std::uint64_t RotationNet::quaternion_cell(const Quaternion& quat) const {
  Quaternion q = quat.normalized();
  std::size_t axis = 0;
  for (std::size_t c = 1; c < 4; ++c) {
    if (std::abs(q[c]) > std::abs(q[axis])) axis = c;
  }
  const double lead = q[axis];
  const double kd = static_cast<double>(k_);
  std::uint64_t index = axis;
  for (std::size_t comp = 0; comp < 4; ++comp) {
    if (comp == axis) continue;
    const double t = q[comp] / lead;  // in [-1, 1]; dividing by lead fixes the sign
    auto c = static_cast<std::int64_t>(std::floor((t + 1.0) / 2.0 * kd));
    c = std::clamp<std::int64_t>(c, 0, static_cast<std::int64_t>(k_) - 1);
    index = index * k_ + static_cast<std::uint64_t>(c);
  }
  return index;
}

Rotation RotationNet::member(std::uint64_t i) const {
  if (i >= size_) throw std::out_of_range("rotation net: index out of range");
  if (spec_.n == 2) return Rotation::planar(2.0 * kPi * static_cast<double>(i) / static_cast<double>(size_));
  return Rotation::from_quaternion(cell_center(i));
}

std::uint64_t RotationNet::lookup(const Rotation& u) const {
  if (static_cast<int>(u.dim()) != spec_.n) {
    throw std::invalid_argument("rotation net: rotation dimension does not match net");
  }
  if (spec_.n == 2) {
    const double step = 2.0 * kPi / static_cast<double>(size_);
    auto i = static_cast<std::int64_t>(std::llround(u.planar_angle() / step));
    const auto m = static_cast<std::int64_t>(size_);
    i %= m;
    if (i < 0) i += m;
    return static_cast<std::uint64_t>(i);
  }
  return quaternion_cell(u.to_quaternion());
}

void RotationNet::apply_inverse(std::uint64_t i, std::span<const double> x,
                                std::span<double> out) const {
  if (i >= size_) throw std::out_of_range("rotation net: index out of range");
  if (spec_.n == 2) {
    const double theta = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(size_);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    out[0] = c * x[0] + s * x[1];
    out[1] = -s * x[0] + c * x[1];
    return;
  }
  const Quaternion q = cell_center(i);
  const double w = q.w, a = q.x, b = q.y, d = q.z;
  // Transpose of the matrix built by Rotation::from_quaternion.
  const double m[9] = {1 - 2 * (b * b + d * d), 2 * (a * b + w * d), 2 * (a * d - w * b),
                       2 * (a * b - w * d), 1 - 2 * (a * a + d * d), 2 * (b * d + w * a),
                       2 * (a * d + w * b), 2 * (b * d - w * a), 1 - 2 * (a * a + b * b)};
  for (int r = 0; r < 3; ++r) out[r] = m[3 * r] * x[0] + m[3 * r + 1] * x[1] + m[3 * r + 2] * x[2];
}

double RotationNet::distance(std::uint64_t i, const Rotation& u) const {
  if (i >= size_) throw std::out_of_range("rotation net: index out of range");
  if (spec_.n == 2) {
    const double theta = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(size_);
    return 2.0 * std::abs(std::sin((u.planar_angle() - theta) / 2.0));
  }
  return quaternion_rotation_distance(cell_center(i), u.to_quaternion());
}

Rotation haar_random_rotation(int n, std::mt19937_64& rng) {
  if (n == 2) {
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    return Rotation::planar(angle(rng));
  }
  if (n == 3) {
    std::normal_distribution<double> g(0.0, 1.0);
    Quaternion q;
    do {
      q = {g(rng), g(rng), g(rng), g(rng)};
    } while (q.norm() < 1e-6);
    return Rotation::from_quaternion(q);
  }
  throw std::invalid_argument("haar_random_rotation: only n = 2 and n = 3 are supported");
}

Rotation haar_random_rotation(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_random_rotation(n, rng);
}

nlohmann::json net_stats(const RotationNet& net, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::uint64_t failures = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Rotation u = haar_random_rotation(net.dim(), rng);
    const double d = net.distance(net.lookup(u), u);
    worst = std::max(worst, d);
    if (!(d < net.eps())) ++failures;
  }
  const double slabs = 3.0 * std::ldexp(1.0, net.dim());
  return {{"n", net.dim()},
          {"eps", net.eps()},
          {"mode", eps_mode_name(net.spec().mode)},
          {"m", net.size()},
          {"cells_per_axis", net.cells_per_axis()},
          {"covering_radius", net.covering_radius()},
          {"samples", samples},
          {"seed", seed},
          {"worst_observed_distance", worst},
          {"coverage_failures", failures},
          {"log10_color_count", static_cast<double>(net.size()) * std::log10(slabs)}};
}

}  // namespace monobox
