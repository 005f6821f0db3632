#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "monobox/plane_coloring.hpp"

using namespace monobox;

TEST_CASE("plane color examples") {
  CHECK(plane_color({0, 0}).cell == PlaneColor{0, 0});
  CHECK(plane_color({0, 0}).margin == 0.0);
  // z^2 = 1 -> 0.3 of the period -> subcell 1.
  CHECK(plane_color({1, 0}).cell == PlaneColor{1, 0});
  // z^2 = -1 -> frac(-0.3) = 0.7 -> subcell 3; imaginary part 0.
  CHECK(plane_color({0, 1}).cell == PlaneColor{3, 0});
  CHECK(plane_color_exact(GaussianRational(Rational(0), Rational(1))) == PlaneColor{3, 0});
}

TEST_CASE("plane color is periodic under the lattice") {
  // z^2 and z^2 + (10/3)(a + bi) share a color.
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-200, 200), den(1, 11);
  std::uniform_int_distribution<long> shift(-4, 4);
  for (int t = 0; t < 300; ++t) {
    const GaussianRational w(ratio(num(rng), den(rng)), ratio(num(rng), den(rng)));
    const GaussianRational moved =
        w + GaussianRational(kPlaneScale * shift(rng), kPlaneScale * shift(rng));
    CHECK(lattice_subcell_exact(w, kPlaneScale, 5) == lattice_subcell_exact(moved, kPlaneScale, 5));
  }
}

TEST_CASE("floating and exact colors agree away from boundaries") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> num(-4000, 4000);
  int compared = 0;
  for (int t = 0; t < 2000; ++t) {
    const Rational x(num(rng), 256), y(num(rng), 256);
    const SubcellHit h = plane_color({x.get_d(), y.get_d()});
    if (h.margin < 1e-9) continue;
    ++compared;
    CHECK(h.cell == plane_color_exact(GaussianRational(x, y)));
  }
  CHECK(compared > 1500);
}

TEST_CASE("invariant I equals plus or minus 2uv") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-5, 5);
  for (int t = 0; t < 1000; ++t) {
    const Parallelogram p{{d(rng), d(rng)}, {d(rng), d(rng)}, {d(rng), d(rng)}};
    const Complex i = invariant_I(p);
    const Complex target = 2.0 * p.u * p.v;
    const double err = std::min(std::abs(i - target), std::abs(i + target));
    CHECK(err < 1e-10);
    CHECK(std::abs(std::abs(i) - 2.0 * p.side_product()) < 1e-10);
  }
}

TEST_CASE("separation certificate for the 25-class coloring") {
  const LatticeCellSet cells(Rational(10, 3), Rational(2, 5));
  const auto cert = separation_certificate(cells, Rational(4));
  CHECK(cert.pass);
  CHECK(cert.violations().empty());
  const auto& center = cert.cell(0, 0);
  CHECK(center.max_dist_sq == Rational(32, 9));
  CHECK(center.min_dist_sq == Rational(0));
  CHECK(center.ok);
  // Neighbors touch the circle only at a boundary point.
  CHECK(cert.cell(1, 0).min_dist_sq == Rational(4));
  CHECK(cert.cell(1, 0).tangent);
  CHECK(cert.ledger.size() == static_cast<std::size_t>((2 * cert.extent + 1) * (2 * cert.extent + 1)));
  CHECK(cert.outer_bound_sq >= cert.radius_sq);

  const auto json = to_json(cert);
  CHECK(json["verdict"] == "PASS");
  CHECK(json["scale"] == "10/3");
}

TEST_CASE("separation certificate failures and tangency") {
  const auto wide = separation_certificate(LatticeCellSet(Rational(10, 3), Rational(49, 100)), Rational(4));
  CHECK_FALSE(wide.pass);
  CHECK_FALSE(wide.violations().empty());
  CHECK_FALSE(wide.cell(1, 0).ok);

  const auto touch = separation_certificate(LatticeCellSet(Rational(5, 3), Rational(2, 5)), Rational(1));
  CHECK(touch.cell(1, 0).min_dist_sq == Rational(1));
  CHECK(touch.cell(1, 0).tangent);

  CHECK_THROWS_AS(LatticeCellSet(Rational(1), Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(LatticeCellSet(Rational(0), Rational(1, 4)), std::invalid_argument);
}

TEST_CASE("skeleton schemes") {
  const SkeletonColorScheme two(2);
  CHECK(two.scale() == kPlaneScale);
  CHECK(two.subdivisions() == kPlaneSubdivisions);
  CHECK(two.class_count() == 25);
  const SkeletonColorScheme three(3);
  CHECK(three.scale() == Rational(10));
  CHECK(three.subdivisions() == 10);
  CHECK_THROWS(SkeletonColorScheme(1));

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(-10, 10);
  for (int t = 0; t < 10000; ++t) {
    const Complex z(d(rng), d(rng));
    CHECK(skeleton_color(two, z).cell == plane_color(z).cell);
  }
  const GaussianRational z(Rational(7, 5), Rational(-2, 3));
  CHECK(skeleton_color_exact(three, z) == skeleton_color(three, z.to_complex()).cell);
}

TEST_CASE("boundary curves lie on their hyperbolas") {
  const Window w{-3, -3, 3, 3};
  const auto curves = boundary_curves(w, -6, 6, 200);
  REQUIRE_FALSE(curves.empty());
  bool saw_difference = false, saw_product = false;
  for (const auto& c : curves) {
    saw_difference |= c.family == CurveFamily::kDifference;
    saw_product |= c.family == CurveFamily::kProduct;
    for (const auto& [x, y] : c.points) {
      CHECK(w.contains(x, y));
      CHECK(std::abs(curve_residual(c.family, c.parameter, x, y)) < 1e-9);
    }
  }
  CHECK(saw_difference);
  CHECK(saw_product);

  const std::string csv = curves_to_csv(curves);
  CHECK(csv.rfind("family,parameter,x,y\n", 0) == 0);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string fam, par, xs, ys;
    std::getline(ls, fam, ',');
    std::getline(ls, par, ',');
    std::getline(ls, xs, ',');
    std::getline(ls, ys, ',');
    const CurveFamily f = fam == "difference" ? CurveFamily::kDifference : CurveFamily::kProduct;
    CHECK(std::abs(curve_residual(f, std::stol(par), std::stod(xs), std::stod(ys))) < 1e-9);
    ++rows;
  }
  CHECK(rows > 100);

  const std::string svg = curves_to_svg(curves, w);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}
