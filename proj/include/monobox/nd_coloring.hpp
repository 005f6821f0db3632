// Finite coloring of R^n avoiding monochromatic unit-volume boxes.
//
// A slab class collects the points whose coordinate product lies in a fixed
// window of (3/2)(Z + [l/S, (l+1)/S)), S = 3 * 2^n. A composite color is the
// tuple of slab indices of U_i^{-1} x over a rotation net {U_i}.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "monobox/geometry.hpp"
#include "monobox/rational.hpp"
#include "monobox/rotation_net.hpp"

namespace monobox {

inline const Rational kSlabPeriod{3, 2};

/// 3 * 2^n windows per period.
int slab_count(int n);

struct SlabHit {
  int index = 0;
  /// Distance of the reduced product to the nearest window boundary, in
  /// units of the period.
  double margin = 0.0;
};

/// Coordinate product reduced modulo 3/2 and cut into `windows` windows.
SlabHit slab_index(std::span<const double> x, int windows);
inline SlabHit slab_index(std::span<const double> x) {
  return slab_index(x, slab_count(static_cast<int>(x.size())));
}
int slab_index_exact(std::span<const Rational> x, int windows);

/// Point -> tuple of slab indices over a family of frames. Without a net the
/// only frame is the identity (an intentionally insufficient coloring).
class CompositeColoring {
 public:
  CompositeColoring(std::shared_ptr<const RotationNet> net, int windows);
  static CompositeColoring standard(std::shared_ptr<const RotationNet> net);
  static CompositeColoring identity_only(int n);

  int dim() const { return n_; }
  int windows() const { return windows_; }
  std::uint64_t frames() const { return net_ ? net_->size() : 1; }
  const RotationNet* net() const { return net_.get(); }
  /// True when the construction carries the no-monochromatic-box guarantee:
  /// full slab resolution and a net with an admissible eps.
  bool certified() const;

  /// Slab index of frame(i)^{-1} x.
  SlabHit entry(std::uint64_t i, std::span<const double> x) const;

 private:
  CompositeColoring(int n, int windows) : n_(n), windows_(windows) {}
  void rotate_back(std::uint64_t i, std::span<const double> x, std::span<double> out) const;

  std::shared_ptr<const RotationNet> net_;
  int n_;
  int windows_;
};

/// Lazily evaluated composite color of one point.
class CompositeColor {
 public:
  CompositeColor(const CompositeColoring& coloring, RealVec x);

  std::uint64_t size() const { return coloring_->frames(); }
  SlabHit entry(std::uint64_t i) const { return coloring_->entry(i, x_); }
  std::vector<int> first_entries(std::size_t count) const;
  /// 128-bit digest of the full tuple as 32 hex digits; forces every entry.
  std::string digest() const;
  /// Smallest margin over all entries; forces every entry.
  double min_margin() const;

 private:
  const CompositeColoring* coloring_;
  RealVec x_;
};

CompositeColor composite_color(const CompositeColoring& coloring, RealVec x);

struct MonoVerdict {
  bool same_color = false;
  /// First frame index at which the points disagree.
  std::optional<std::uint64_t> differs_at;
  bool fast_path = false;
  std::vector<int> witness_slabs;
  /// Smallest slab margin among the entries that decided the verdict.
  double min_margin = 0.0;
  /// 2^n minus the largest group of points sharing a slab at the witness.
  int minority = 0;
};

/// Scans frames in order and stops at the first disagreement.
MonoVerdict monochromatic(const CompositeColoring& coloring, std::span<const RealVec> points);

/// Thrown when a certified coloring fails to separate a unit-volume box at
/// the frame chosen by the net lookup.
struct TheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Tries frame lookup(U) first, then falls back to the full scan.
MonoVerdict box_monochromatic(const CompositeColoring& coloring, const OrientedBox& box);

/// Membership helpers for the two interval families that never meet.
bool in_unit_volume_band(double j);       // |j| in (3/4, 5/4)
bool in_single_slab_band(double j);       // j in (3/2)Z + (-1/4, 1/4)

struct IntervalDisjointness {
  bool pass = false;
  long k_range = 0;
  nlohmann::json ledger;
};

/// Exact check that (-5/4,-3/4) u (3/4,5/4) misses (3/2)k + (-1/4,1/4) for
/// every integer k; the ledger covers |k| <= k_range, larger |k| is out of
/// reach since 3|k|/2 - 1/4 >= 5/4 there.
IntervalDisjointness certify_interval_disjointness(long k_range = 3);

}  // namespace monobox
