// Finite colorings of the plane driven by where a power of z falls modulo a
// scaled Gaussian-integer lattice, plus the exact circle-separation
// certificate and the color-class boundary curves.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "monobox/geometry.hpp"
#include "monobox/rational.hpp"

namespace monobox {

struct PlaneColor {
  int j = 0;
  int k = 0;
  friend bool operator==(const PlaneColor&, const PlaneColor&) = default;
};

/// Subcell of w / scale modulo Z + iZ, split into s x s half-open subcells.
/// `margin` is the distance of the reduced point to the nearest subcell
/// boundary, in lattice units (0 means on a boundary).
struct SubcellHit {
  PlaneColor cell;
  double margin = 0.0;
};

SubcellHit lattice_subcell(Complex w, double scale, int subdivisions);
PlaneColor lattice_subcell_exact(const GaussianRational& w, const Rational& scale,
                                 int subdivisions);

/// Scale of the 25-class coloring: z^2 is reduced modulo (10/3)(Z + iZ).
inline const Rational kPlaneScale{10, 3};
inline constexpr int kPlaneSubdivisions = 5;

SubcellHit plane_color(Complex z);
PlaneColor plane_color_exact(const GaussianRational& z);

/// z_A^2 - z_B^2 + z_C^2 - z_D^2 with A the lexicographically smallest vertex
/// and B, C, D following in cyclic order. Equals +-2uv.
Complex invariant_I(const Parallelogram& p);

/// scale * (Z + iZ + (-h, h) + i(-h, h)), an open set.
struct LatticeCellSet {
  Rational scale;
  Rational half_width;

  LatticeCellSet(Rational scale, Rational half_width);
};

struct CellLedgerEntry {
  long a = 0;
  long b = 0;
  Rational min_dist_sq;  // to the closed square
  Rational max_dist_sq;  // farthest corner
  bool ok = false;       // r^2 <= min or r^2 >= max
  bool tangent = false;  // ok with equality: circle touches only the boundary
};

struct SeparationCertificate {
  Rational scale;
  Rational half_width;
  Rational radius_sq;
  /// Cells with max(|a|, |b|) <= extent are listed; every other cell has
  /// min_dist_sq >= radius_sq (shown by `outer_bound_sq`).
  long extent = 0;
  Rational outer_bound_sq;
  std::vector<CellLedgerEntry> ledger;
  bool pass = false;

  const CellLedgerEntry& cell(long a, long b) const;
  std::vector<const CellLedgerEntry*> violations() const;
};

/// Exact check that the circle |w|^2 = radius_sq misses every open square
/// of the cell set. Never throws on refutation; inspect `pass`.
SeparationCertificate separation_certificate(const LatticeCellSet& cells,
                                             const Rational& radius_sq);

nlohmann::json to_json(const SeparationCertificate& cert);

/// Coloring of C by where z^n lies modulo L(Z + iZ), split into s x s
/// subcells, with L = (5/3) n! and s = 5 * 2^(n-2). For n = 2 this is the
/// 25-class coloring.
class SkeletonColorScheme {
 public:
  explicit SkeletonColorScheme(int n);

  int n() const { return n_; }
  const Rational& scale() const { return scale_; }
  int subdivisions() const { return s_; }
  long class_count() const { return static_cast<long>(s_) * s_; }
  /// Half-width of the open cell set containing monochromatic power sums.
  Rational half_width() const;

 private:
  int n_;
  Rational scale_;
  int s_;
  double scale_d_;

  friend SubcellHit skeleton_color(const SkeletonColorScheme&, Complex);
};

SubcellHit skeleton_color(const SkeletonColorScheme& scheme, Complex z);
PlaneColor skeleton_color_exact(const SkeletonColorScheme& scheme, const GaussianRational& z);

// ---------------------------------------------------------------------------
// Boundaries of the 25 classes: x^2 - y^2 = 2a/3 and xy = b/3.

struct Window {
  double x0 = -3, y0 = -3, x1 = 3, y1 = 3;
  bool contains(double x, double y) const { return x >= x0 && x <= x1 && y >= y0 && y <= y1; }
};

enum class CurveFamily { kDifference, kProduct };  // x^2 - y^2 and xy

struct Curve {
  CurveFamily family;
  long parameter;
  std::vector<std::pair<double, double>> points;
};

const char* family_name(CurveFamily f);
/// Residual of a point against its curve's equation.
double curve_residual(CurveFamily f, long parameter, double x, double y);

/// Polylines of both families for parameters in [lo, hi], clipped to the
/// window. Degenerate members (parameter 0) are the lines y = +-x and the
/// coordinate axes.
std::vector<Curve> boundary_curves(const Window& window, long lo, long hi,
                                   int samples_per_branch = 600);

std::string curves_to_svg(const std::vector<Curve>& curves, const Window& window);
std::string curves_to_csv(const std::vector<Curve>& curves);

}  // namespace monobox
