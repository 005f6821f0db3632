#include "monobox/nd_coloring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "monobox/box_invariant.hpp"

namespace monobox {

namespace {

// Products beyond this magnitude are reduced exactly; below it the
// double-double product keeps the residue accurate to ~1e-16.
constexpr double kExactReductionThreshold = 0x1p40;

SlabHit window_of(double frac, int windows) {
  if (!(frac < 1.0)) frac = 0.0;
  if (frac < 0.0) frac = 0.0;
  const double scaled = frac * windows;
  int idx = std::clamp(static_cast<int>(std::floor(scaled)), 0, windows - 1);
  const double below = scaled - idx;
  const double above = (idx + 1) - scaled;
  return {idx, std::max(0.0, std::min(below, above) / windows)};
}

SlabHit slab_index_rational(std::span<const double> x, int windows) {
  Rational prod(1);
  for (double c : x) prod *= exact_rational(c);
  Rational f = frac_rational(prod / kSlabPeriod);
  Rational scaled = f * windows;
  const int idx = static_cast<int>(floor_rational(scaled).get_si());
  Rational below = scaled - idx;
  Rational above = Rational(idx + 1) - scaled;
  Rational margin = (below < above ? below : above) / windows;
  return {idx, margin.get_d()};
}

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

int slab_count(int n) {
  if (n < 1 || n > 24) throw std::invalid_argument("slab_count: n out of range");
  return 3 << n;
}

SlabHit slab_index(std::span<const double> x, int windows) {
  if (x.empty()) throw std::invalid_argument("slab_index: empty point");
  if (windows < 1) throw std::invalid_argument("slab_index: windows must be positive");
  require_finite(x, "slab_index");
  // Double-double running product.
  double hi = 1.0;
  double lo = 0.0;
  for (double c : x) {
    const double p = hi * c;
    const double e = std::fma(hi, c, -p);
    const double t = e + lo * c;
    hi = p + t;
    lo = t - (hi - p);
  }
  if (!std::isfinite(hi) || std::abs(hi) > kExactReductionThreshold) {
    return slab_index_rational(x, windows);
  }
  const double period = 1.5;
  const double q = std::floor(hi / period);
  double r = std::fma(-q, period, hi) + lo;  // exact up to one rounding
  double frac = r / period;
  frac -= std::floor(frac);
  return window_of(frac, windows);
}

int slab_index_exact(std::span<const Rational> x, int windows) {
  if (x.empty()) throw std::invalid_argument("slab_index_exact: empty point");
  Rational prod(1);
  for (const auto& c : x) prod *= c;
  Rational f = frac_rational(prod / kSlabPeriod);
  f *= windows;
  return static_cast<int>(floor_rational(f).get_si());
}

// ---------------------------------------------------------------------------

CompositeColoring::CompositeColoring(std::shared_ptr<const RotationNet> net, int windows)
    : net_(std::move(net)), windows_(windows) {
  if (!net_) throw std::invalid_argument("composite coloring: missing net");
  n_ = net_->dim();
  if (windows_ < 1) throw std::invalid_argument("composite coloring: windows must be positive");
}

CompositeColoring CompositeColoring::standard(std::shared_ptr<const RotationNet> net) {
  const int n = net->dim();
  return CompositeColoring(std::move(net), slab_count(n));
}

CompositeColoring CompositeColoring::identity_only(int n) {
  if (n != 2 && n != 3) throw std::invalid_argument("composite coloring: n must be 2 or 3");
  return CompositeColoring(n, slab_count(n));
}

bool CompositeColoring::certified() const {
  return net_ && windows_ == slab_count(n_) && net_->spec().mode != EpsMode::kCustom;
}

void CompositeColoring::rotate_back(std::uint64_t i, std::span<const double> x,
                                    std::span<double> out) const {
  if (!net_) {
    if (i != 0) throw std::out_of_range("composite coloring: frame index out of range");
    std::copy(x.begin(), x.end(), out.begin());
    return;
  }
  net_->apply_inverse(i, x, out);
}

SlabHit CompositeColoring::entry(std::uint64_t i, std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw std::invalid_argument("composite coloring: point dimension does not match");
  }
  std::array<double, 3> buf{};
  rotate_back(i, x, std::span<double>(buf.data(), x.size()));
  return slab_index(std::span<const double>(buf.data(), x.size()), windows_);
}

CompositeColor::CompositeColor(const CompositeColoring& coloring, RealVec x)
    : coloring_(&coloring), x_(std::move(x)) {
  if (static_cast<int>(x_.size()) != coloring.dim()) {
    throw std::invalid_argument("composite color: point dimension does not match");
  }
  require_finite(x_, "composite color");
}

std::vector<int> CompositeColor::first_entries(std::size_t count) const {
  const auto m = static_cast<std::size_t>(std::min<std::uint64_t>(count, size()));
  std::vector<int> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = entry(i).index;
  return out;
}

std::string CompositeColor::digest() const {
  std::uint64_t h1 = 0x6a09e667f3bcc908ULL;
  std::uint64_t h2 = 0xbb67ae8584caa73bULL;
  for (std::uint64_t i = 0; i < size(); ++i) {
    const auto v = static_cast<std::uint64_t>(entry(i).index);
    h1 = mix64(h1 ^ v);
    h2 = mix64(h2 + (v << 1) + 0x632be59bd9b4e019ULL);
  }
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(h1),
                static_cast<unsigned long long>(h2));
  return buf;
}

double CompositeColor::min_margin() const {
  double m = 1.0;
  for (std::uint64_t i = 0; i < size(); ++i) m = std::min(m, entry(i).margin);
  return m;
}

CompositeColor composite_color(const CompositeColoring& coloring, RealVec x) {
  return CompositeColor(coloring, std::move(x));
}

namespace {

/// Slab indices of all points at frame i; returns true when they agree.
bool evaluate_frame(const CompositeColoring& coloring, std::uint64_t i,
                    std::span<const RealVec> points, MonoVerdict& v) {
  v.witness_slabs.resize(points.size());
  double margin = 1.0;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const SlabHit h = coloring.entry(i, points[p]);
    v.witness_slabs[p] = h.index;
    margin = std::min(margin, h.margin);
  }
  v.min_margin = std::min(v.min_margin, margin);
  std::map<int, int> counts;
  for (int s : v.witness_slabs) ++counts[s];
  int largest = 0;
  for (const auto& [slab, c] : counts) largest = std::max(largest, c);
  v.minority = static_cast<int>(points.size()) - largest;
  return counts.size() == 1;
}

}  // namespace

MonoVerdict monochromatic(const CompositeColoring& coloring, std::span<const RealVec> points) {
  if (points.size() < 2) throw std::invalid_argument("monochromatic: need at least two points");
  MonoVerdict v;
  v.min_margin = 1.0;
  for (std::uint64_t i = 0; i < coloring.frames(); ++i) {
    if (!evaluate_frame(coloring, i, points, v)) {
      v.differs_at = i;
      return v;
    }
  }
  v.same_color = true;
  v.minority = 0;
  return v;
}

MonoVerdict box_monochromatic(const CompositeColoring& coloring, const OrientedBox& box) {
  if (static_cast<int>(box.dim()) != coloring.dim()) {
    throw std::invalid_argument("box_monochromatic: box dimension does not match coloring");
  }
  std::vector<RealVec> points;
  for (auto& v : box_vertices(box)) points.push_back(std::move(v.point));

  if (const RotationNet* net = coloring.net()) {
    const std::uint64_t i0 = net->lookup(box.rotation());
    MonoVerdict fast;
    fast.min_margin = 1.0;
    if (!evaluate_frame(coloring, i0, points, fast)) {
      fast.differs_at = i0;
      fast.fast_path = true;
      return fast;
    }
    if (coloring.certified() && std::abs(box.volume() - 1.0) <= 1e-9) {
      throw TheoremViolation("unit-volume box is single-slab at its lookup frame " +
                             std::to_string(i0));
    }
  }
  return monochromatic(coloring, points);
}

bool in_unit_volume_band(double j) {
  const double a = std::abs(j);
  return a > 0.75 && a < 1.25;
}

bool in_single_slab_band(double j) {
  const double k = std::round(j / 1.5);
  return std::abs(j - 1.5 * k) < 0.25;
}

IntervalDisjointness certify_interval_disjointness(long k_range) {
  IntervalDisjointness out;
  out.k_range = k_range;
  out.pass = true;
  const Rational quarter(1, 4);
  const std::array<std::pair<Rational, Rational>, 2> band{
      std::pair{Rational(-5, 4), Rational(-3, 4)}, std::pair{Rational(3, 4), Rational(5, 4)}};
  out.ledger = nlohmann::json::array();
  for (long k = -k_range; k <= k_range; ++k) {
    const Rational center = kSlabPeriod * k;
    const Rational lo = center - quarter;
    const Rational hi = center + quarter;
    for (const auto& [blo, bhi] : band) {
      // Open intervals (lo, hi) and (blo, bhi) are disjoint iff one ends
      // before the other starts.
      const bool disjoint = hi <= blo || bhi <= lo;
      out.pass = out.pass && disjoint;
      out.ledger.push_back({{"k", k},
                            {"slab_interval", {to_string(lo), to_string(hi)}},
                            {"unit_volume_interval", {to_string(blo), to_string(bhi)}},
                            {"disjoint", disjoint}});
    }
  }
  // Tail: for |k| > k_range the slab interval is beyond 5/4 in magnitude.
  const Rational tail = kSlabPeriod * (k_range + 1) - quarter;
  out.pass = out.pass && tail >= Rational(5, 4);
  return out;
}

}  // namespace monobox
