#include <doctest.h>

#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "monobox/geometry.hpp"
#include "support.hpp"

using namespace monobox;

TEST_CASE("require_finite and lex order") {
  const RealVec ok{1.0, -2.0};
  CHECK_NOTHROW(require_finite(ok, "x"));
  const RealVec bad{1.0, std::numeric_limits<double>::quiet_NaN()};
  CHECK_THROWS_AS(require_finite(bad, "x"), std::invalid_argument);
  const RealVec inf{std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS(require_finite(inf, "x"), std::invalid_argument);

  CHECK(lex_less(RealVec{0, 5}, RealVec{1, -5}));
  CHECK(lex_less(RealVec{1, -5}, RealVec{1, 5}));
  CHECK_FALSE(lex_less(RealVec{1, 5}, RealVec{1, 5}));
  CHECK(lex_less(Complex(0, 1), Complex(0, 2)));
}

TEST_CASE("rotation validation") {
  CHECK_NOTHROW(Rotation::identity(4));
  CHECK_THROWS_AS(Rotation(2, {1, 0, 0, -1}), std::invalid_argument);  // reflection
  CHECK_THROWS_AS(Rotation(2, {2, 0, 0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Rotation(2, {1, 0, 0}), std::invalid_argument);
  CHECK(Rotation::is_valid(2, Rotation::planar(0.3).data()));
}

TEST_CASE("planar rotation round trips") {
  for (double t : {0.0, 0.5, -2.0, 3.0}) {
    const Rotation u = Rotation::planar(t);
    CHECK(u.planar_angle() == doctest::Approx(t).epsilon(1e-12));
    const RealVec x{1.5, -0.25};
    CHECK(testing_support::max_abs_diff(u.apply_inverse(u.apply(x)), x) < 1e-14);
  }
  const Rotation r = Rotation::planar(std::acos(-1.0) / 2);
  const RealVec e1 = r.apply(RealVec{1, 0});
  CHECK(e1[0] == doctest::Approx(0).epsilon(1e-15));
  CHECK(e1[1] == doctest::Approx(1));
}

TEST_CASE("quaternions and axis-angle agree") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    Quaternion q{g(rng), g(rng), g(rng), g(rng)};
    q = q.normalized();
    const Rotation u = Rotation::from_quaternion(q);
    const Quaternion back = u.to_quaternion();
    const double dot = q.w * back.w + q.x * back.x + q.y * back.y + q.z * back.z;
    CHECK(std::abs(std::abs(dot) - 1.0) < 1e-12);

    // Axis-angle form of the same quaternion.
    const double angle = 2.0 * std::acos(std::clamp(q.w, -1.0, 1.0));
    const Rotation v = Rotation::axis_angle({q.x, q.y, q.z}, angle);
    CHECK(testing_support::max_abs_diff({u.data().begin(), u.data().end()},
                                        {v.data().begin(), v.data().end()}) < 1e-12);
  }
}

TEST_CASE("rotation algebra") {
  std::mt19937_64 rng(5);
  const Rotation a = testing_support::random_rotation(3, rng);
  const Rotation b = testing_support::random_rotation(3, rng);
  const RealVec x{0.3, -1.0, 2.0};
  CHECK(testing_support::max_abs_diff((a * b).apply(x), a.apply(b.apply(x))) < 1e-13);
  CHECK(testing_support::max_abs_diff(a.inverse().apply(x), a.apply_inverse(x)) < 1e-15);
  CHECK(op_norm_dist_identity(a * a.inverse()) < 1e-12);
}

TEST_CASE("operator norm distance of a planar rotation is 2 sin(theta / 2)") {
  for (double t : {0.01, 0.5, 1.0, 2.5, -1.2}) {
    CHECK(op_norm_dist_identity(Rotation::planar(t)) == doctest::Approx(2.0 * std::abs(std::sin(t / 2))));
  }
  // About an axis in R^3 the eigenvalue e^{i theta} dominates as well.
  CHECK(op_norm_dist_identity(Rotation::axis_angle({0, 0, 2}, 0.7)) == doctest::Approx(2.0 * std::sin(0.35)));
}

TEST_CASE("aligned boxes") {
  CHECK_THROWS_AS(AlignedBox({0, 0}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(AlignedBox({0, 0}, {1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(AlignedBox({0, 0}, {1}), std::invalid_argument);
  CHECK(AlignedBox({0, 0, 0}, {2, 0.5, 3}).volume() == doctest::Approx(3));
}

TEST_CASE("box vertices are indexed by subset") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-5, 5);
  std::uniform_real_distribution<double> len(0.1, 3);
  for (std::size_t n = 1; n <= 5; ++n) {
    RealVec q(n), a(n);
    for (std::size_t j = 0; j < n; ++j) {
      q[j] = d(rng);
      a[j] = len(rng);
    }
    const Rotation u = n == 1 ? Rotation::identity(1) : testing_support::random_rotation(n, rng);
    const OrientedBox box(AlignedBox(q, a), u);
    const auto verts = box_vertices(box);
    REQUIRE(verts.size() == (std::size_t{1} << n));
    for (std::uint32_t t = 0; t < verts.size(); ++t) {
      CHECK(verts[t].subset == t);
      // Oracle: rotate the aligned vertex.
      RealVec corner = q;
      for (std::size_t j = 0; j < n; ++j) {
        if (t & (1u << j)) corner[j] += a[j];
      }
      CHECK(testing_support::max_abs_diff(verts[t].point, u.apply(corner)) < 1e-12);
    }
  }
}

TEST_CASE("vertex enumeration guards the dimension") {
  const std::size_t n = kMaxEnumerationDim + 1;
  RealVec base(n, 0.0);
  std::vector<RealVec> edges(n, RealVec(n, 0.0));
  CHECK_THROWS(parallelotope_vertices(base, edges));
}

TEST_CASE("vertex parities alternate along edges and split evenly") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> d(-5, 5);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      RealVec q(n), a(n);
      for (std::size_t j = 0; j < n; ++j) {
        q[j] = d(rng);
        a[j] = std::exp(d(rng) / 3);
      }
      const OrientedBox box(AlignedBox(q, a), testing_support::random_rotation(n, rng));
      const auto verts = box_vertices(box);
      const VertexParities par = vertex_parities(verts);
      std::uint32_t lex_min = 0;
      for (std::uint32_t t = 1; t < verts.size(); ++t) {
        if (lex_less(verts[t].point, verts[lex_min].point)) lex_min = t;
      }
      CHECK(par.base_subset == lex_min);
      CHECK(par.parity[lex_min] == 0);
      int odd = 0;
      for (std::uint32_t t = 0; t < verts.size(); ++t) {
        odd += par.parity[t];
        for (std::size_t j = 0; j < n; ++j) CHECK(par.parity[t] != par.parity[t ^ (1u << j)]);
      }
      CHECK(odd == (1 << (n - 1)));
    }
  }
}

TEST_CASE("rotated_back expresses the box in another frame") {
  std::mt19937_64 rng(23);
  const Rotation u = testing_support::random_rotation(3, rng);
  const OrientedBox box(AlignedBox({1, 2, 3}, {0.5, 1, 2}), u);
  const OrientedBox back = box.rotated_back(u);
  CHECK(op_norm_dist_identity(back.rotation()) < 1e-12);
  const auto v0 = box_vertices(box);
  const auto v1 = box_vertices(back);
  for (std::size_t t = 0; t < v0.size(); ++t) {
    CHECK(testing_support::max_abs_diff(u.apply_inverse(v0[t].point), v1[t].point) < 1e-12);
  }
}

TEST_CASE("parallelogram vertices") {
  const Parallelogram p{{1, 1}, {2, 0}, {0, 0.5}};
  const auto v = p.vertices();
  CHECK(v[2] == Complex(3, 1.5));
  CHECK(p.side_product() == doctest::Approx(1.0));
}
