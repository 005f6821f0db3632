#include "monobox/plane_coloring.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace monobox {

namespace {

struct AxisHit {
  int index;
  double margin;
};

AxisHit reduce_axis(double x, int s) {
  double f = x - std::floor(x);
  if (!(f < 1.0)) f = 0.0;  // x sits within rounding of an integer from below
  const double scaled = f * s;
  int idx = static_cast<int>(std::floor(scaled));
  idx = std::clamp(idx, 0, s - 1);
  const double below = scaled - idx;
  const double above = (idx + 1) - scaled;
  return {idx, std::max(0.0, std::min(below, above) / s)};
}

int reduce_axis_exact(const Rational& x, int s) {
  Rational f = frac_rational(x);
  f *= s;
  return static_cast<int>(floor_rational(f).get_si());
}

GaussianRational power(const GaussianRational& z, int n) {
  GaussianRational r(1);
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

SubcellHit lattice_subcell(Complex w, double scale, int subdivisions) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw std::invalid_argument("lattice_subcell: non-finite input");
  }
  const AxisHit re = reduce_axis(w.real() / scale, subdivisions);
  const AxisHit im = reduce_axis(w.imag() / scale, subdivisions);
  return {{re.index, im.index}, std::min(re.margin, im.margin)};
}

PlaneColor lattice_subcell_exact(const GaussianRational& w, const Rational& scale,
                                 int subdivisions) {
  Rational re = w.re / scale;
  Rational im = w.im / scale;
  return {reduce_axis_exact(re, subdivisions), reduce_axis_exact(im, subdivisions)};
}

SubcellHit plane_color(Complex z) {
  static const double scale = kPlaneScale.get_d();
  return lattice_subcell(z * z, scale, kPlaneSubdivisions);
}

PlaneColor plane_color_exact(const GaussianRational& z) {
  return lattice_subcell_exact(z * z, kPlaneScale, kPlaneSubdivisions);
}

Complex invariant_I(const Parallelogram& p) {
  const auto v = p.vertices();
  std::size_t a = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (lex_less(v[i], v[a])) a = i;
  }
  auto sq = [&](std::size_t i) { return v[(a + i) % 4] * v[(a + i) % 4]; };
  return sq(0) - sq(1) + sq(2) - sq(3);
}

// ---------------------------------------------------------------------------
// Separation certificate

LatticeCellSet::LatticeCellSet(Rational s, Rational h) : scale(std::move(s)), half_width(std::move(h)) {
  if (scale <= 0) throw std::invalid_argument("cell set: scale must be positive");
  if (half_width <= 0 || half_width >= Rational(1, 2)) {
    throw std::invalid_argument("cell set: half_width must lie in (0, 1/2)");
  }
}

const CellLedgerEntry& SeparationCertificate::cell(long a, long b) const {
  for (const auto& e : ledger) {
    if (e.a == a && e.b == b) return e;
  }
  throw std::out_of_range("separation certificate: cell not in ledger");
}

std::vector<const CellLedgerEntry*> SeparationCertificate::violations() const {
  std::vector<const CellLedgerEntry*> out;
  for (const auto& e : ledger) {
    if (!e.ok) out.push_back(&e);
  }
  return out;
}

SeparationCertificate separation_certificate(const LatticeCellSet& cells,
                                             const Rational& radius_sq) {
  if (radius_sq <= 0) throw std::invalid_argument("separation: radius_sq must be positive");
  SeparationCertificate cert;
  cert.scale = cells.scale;
  cert.half_width = cells.half_width;
  cert.radius_sq = radius_sq;

  const Rational hs = cells.scale * cells.half_width;
  long extent = 1;
  for (;; ++extent) {
    Rational inner = cells.scale * (Rational(extent) - cells.half_width);
    if (inner * inner >= radius_sq) break;
  }
  cert.extent = extent;
  {
    Rational outer = cells.scale * (Rational(extent + 1) - cells.half_width);
    cert.outer_bound_sq = outer * outer;
  }

  cert.pass = true;
  for (long a = -extent; a <= extent; ++a) {
    for (long b = -extent; b <= extent; ++b) {
      CellLedgerEntry e;
      e.a = a;
      e.b = b;
      Rational ca = abs(cells.scale * a);
      Rational cb = abs(cells.scale * b);
      Rational dx = ca > hs ? Rational(ca - hs) : Rational(0);
      Rational dy = cb > hs ? Rational(cb - hs) : Rational(0);
      e.min_dist_sq = dx * dx + dy * dy;
      Rational fx = ca + hs;
      Rational fy = cb + hs;
      e.max_dist_sq = fx * fx + fy * fy;
      const bool outside = radius_sq <= e.min_dist_sq;
      const bool inside = radius_sq >= e.max_dist_sq;
      e.ok = outside || inside;
      e.tangent = radius_sq == e.min_dist_sq || radius_sq == e.max_dist_sq;
      cert.pass = cert.pass && e.ok;
      cert.ledger.push_back(std::move(e));
    }
  }
  return cert;
}

nlohmann::json to_json(const SeparationCertificate& cert) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& e : cert.ledger) {
    std::string verdict = !e.ok ? "intersects"
                          : (cert.radius_sq >= e.max_dist_sq) ? "inside"
                                                               : "outside";
    cells.push_back({{"offset", {e.a, e.b}},
                     {"min_dist_sq", to_string(e.min_dist_sq)},
                     {"max_dist_sq", to_string(e.max_dist_sq)},
                     {"tangent", e.tangent},
                     {"verdict", verdict}});
  }
  return {{"scale", to_string(cert.scale)},
          {"half_width", to_string(cert.half_width)},
          {"radius_sq", to_string(cert.radius_sq)},
          {"extent", cert.extent},
          {"outer_min_dist_sq", to_string(cert.outer_bound_sq)},
          {"verdict", cert.pass ? "PASS" : "FAIL"},
          {"cells", cells}};
}

// ---------------------------------------------------------------------------
// Skeleton coloring

SkeletonColorScheme::SkeletonColorScheme(int n) : n_(n) {
  if (n < 2 || n > 16) throw std::invalid_argument("skeleton scheme: need 2 <= n <= 16");
  scale_ = Rational(5, 3) * factorial(n);
  s_ = 5 << (n - 2);
  scale_d_ = scale_.get_d();
}

Rational SkeletonColorScheme::half_width() const { return Rational(2, 5); }

SubcellHit skeleton_color(const SkeletonColorScheme& scheme, Complex z) {
  Complex w(1.0, 0.0);
  for (int i = 0; i < scheme.n_; ++i) w *= z;
  return lattice_subcell(w, scheme.scale_d_, scheme.s_);
}

PlaneColor skeleton_color_exact(const SkeletonColorScheme& scheme, const GaussianRational& z) {
  return lattice_subcell_exact(power(z, scheme.n()), scheme.scale(), scheme.subdivisions());
}

// ---------------------------------------------------------------------------
// Boundary curves

const char* family_name(CurveFamily f) {
  return f == CurveFamily::kDifference ? "difference" : "product";
}

double curve_residual(CurveFamily f, long parameter, double x, double y) {
  if (f == CurveFamily::kDifference) return x * x - y * y - 2.0 * parameter / 3.0;
  return x * y - parameter / 3.0;
}

namespace {

template <class Param>
void sample_branch(std::vector<Curve>& out, CurveFamily family, long parameter,
                   const Window& w, double t0, double t1, int samples, Param at) {
  if (!(t1 > t0)) return;
  Curve run{family, parameter, {}};
  auto flush = [&] {
    if (run.points.size() >= 2) out.push_back(run);
    run.points.clear();
  };
  for (int i = 0; i <= samples; ++i) {
    const double t = t0 + (t1 - t0) * i / samples;
    const auto [x, y] = at(t);
    if (w.contains(x, y)) {
      run.points.emplace_back(x, y);
    } else {
      flush();
    }
  }
  flush();
}

}  // namespace

std::vector<Curve> boundary_curves(const Window& w, long lo, long hi, int samples) {
  if (!(w.x1 > w.x0) || !(w.y1 > w.y0)) throw std::invalid_argument("boundary_curves: empty window");
  if (lo > hi) throw std::invalid_argument("boundary_curves: empty parameter range");
  const double xmax = std::max(std::abs(w.x0), std::abs(w.x1));
  const double ymax = std::max(std::abs(w.y0), std::abs(w.y1));
  std::vector<Curve> out;
  using P = std::pair<double, double>;

  for (long a = lo; a <= hi; ++a) {
    const auto fam = CurveFamily::kDifference;
    if (a == 0) {
      sample_branch(out, fam, a, w, -xmax, xmax, samples, [](double t) { return P{t, t}; });
      sample_branch(out, fam, a, w, -xmax, xmax, samples, [](double t) { return P{t, -t}; });
      continue;
    }
    const double c = 2.0 * a / 3.0;
    const double r = std::sqrt(std::abs(c));
    if (c > 0) {
      const double t = std::asinh(ymax / r);
      for (double sx : {1.0, -1.0}) {
        sample_branch(out, fam, a, w, -t, t, samples,
                      [&](double s) { return P{sx * r * std::cosh(s), r * std::sinh(s)}; });
      }
    } else {
      const double t = std::asinh(xmax / r);
      for (double sy : {1.0, -1.0}) {
        sample_branch(out, fam, a, w, -t, t, samples,
                      [&](double s) { return P{r * std::sinh(s), sy * r * std::cosh(s)}; });
      }
    }
  }

  for (long b = lo; b <= hi; ++b) {
    const auto fam = CurveFamily::kProduct;
    if (b == 0) {
      sample_branch(out, fam, b, w, -xmax, xmax, samples, [](double t) { return P{t, 0.0}; });
      sample_branch(out, fam, b, w, -ymax, ymax, samples, [](double t) { return P{0.0, t}; });
      continue;
    }
    const double d = b / 3.0;
    const double r = std::sqrt(std::abs(d));
    const double t0 = -std::log(ymax / r);
    const double t1 = std::log(xmax / r);
    for (double sx : {1.0, -1.0}) {
      sample_branch(out, fam, b, w, t0, t1, samples, [&](double s) {
        const double x = sx * r * std::exp(s);
        return P{x, d / x};
      });
    }
  }
  return out;
}

std::string curves_to_svg(const std::vector<Curve>& curves, const Window& w) {
  std::ostringstream os;
  os << std::setprecision(10);
  const double width = w.x1 - w.x0;
  const double height = w.y1 - w.y0;
  const double stroke = std::max(width, height) / 600.0;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\""
     << 600.0 * height / width << "\" viewBox=\"" << w.x0 << ' ' << -w.y1 << ' ' << width
     << ' ' << height << "\">\n"
     << "  <rect x=\"" << w.x0 << "\" y=\"" << -w.y1 << "\" width=\"" << width
     << "\" height=\"" << height << "\" fill=\"white\"/>\n"
     << "  <g fill=\"none\" stroke-width=\"" << stroke << "\">\n";
  for (const auto& c : curves) {
    os << "    <polyline class=\"" << family_name(c.family) << "\" data-parameter=\""
       << c.parameter << "\" stroke=\""
       << (c.family == CurveFamily::kDifference ? "#1f77b4" : "#d62728") << "\" points=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      if (i) os << ' ';
      os << c.points[i].first << ',' << -c.points[i].second;
    }
    os << "\"/>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

std::string curves_to_csv(const std::vector<Curve>& curves) {
  std::ostringstream os;
  os << std::setprecision(17) << "family,parameter,x,y\n";
  for (const auto& c : curves) {
    for (const auto& [x, y] : c.points) {
      os << family_name(c.family) << ',' << c.parameter << ',' << x << ',' << y << '\n';
    }
  }
  return os.str();
}

}  // namespace monobox
