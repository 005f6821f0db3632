// Named colorings behind one interface, so the harness and the CLI can run
// the theorem colorings and the deliberately broken controls alike.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monobox/config.hpp"
#include "monobox/nd_coloring.hpp"
#include "monobox/plane_coloring.hpp"
#include "monobox/rotation_net.hpp"

namespace monobox {

struct ColorCheck {
  bool monochromatic = false;
  /// Number of points minus the largest group sharing a color (at the
  /// witness frame for composite colorings). 0 iff monochromatic.
  int minority = 0;
  /// Smallest distance to a color boundary among the values that decided
  /// the verdict.
  double min_margin = 0.0;
  std::optional<std::uint64_t> witness_frame;
  bool fast_path = false;
  nlohmann::json vertex_colors;
};

class Coloring {
 public:
  virtual ~Coloring() = default;

  virtual std::string name() const = 0;
  virtual int point_dim() const = 0;
  /// True when the construction guarantees no monochromatic configuration
  /// of the kinds it covers.
  virtual bool theorem_coloring() const = 0;
  /// Whether configurations of this shape are the ones this coloring is
  /// built (or, for controls, meant) to be tested against.
  virtual bool covers(const Configuration& c) const = 0;
  /// The rotation net behind a composite coloring, if any.
  virtual const RotationNet* net() const { return nullptr; }

  virtual ColorCheck check_points(const std::vector<RealVec>& points) const = 0;
  virtual ColorCheck check(const Configuration& c) const;
};

/// The 25-class coloring of the plane.
std::unique_ptr<Coloring> make_plane25();
/// z^n modulo (5/3) n! (Z + iZ), 5 * 2^(n-2) subdivisions.
std::unique_ptr<Coloring> make_skeleton_coloring(int n);
/// Broken control: color by the sign pair of (x, y).
std::unique_ptr<Coloring> make_quadrant4();
/// Composite slab coloring over a rotation net.
std::unique_ptr<Coloring> make_composite(std::shared_ptr<const RotationNet> net);
/// Broken control: one slab window per period instead of 3 * 2^n.
std::unique_ptr<Coloring> make_coarse_slab(std::shared_ptr<const RotationNet> net);
/// Broken control: full slab resolution but only the identity frame.
std::unique_ptr<Coloring> make_no_rotation_net(int n);

struct ColoringOptions {
  int n = 2;
  EpsMode eps_mode = EpsMode::kPaper;
};

/// Names: plane25, skeleton, nd, quadrant4, coarse-slab, no-rotation-net.
std::unique_ptr<Coloring> make_coloring(const std::string& name, const ColoringOptions& opt);

}  // namespace monobox
