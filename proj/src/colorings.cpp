#include "monobox/colorings.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace monobox {

using nlohmann::json;

ColorCheck Coloring::check(const Configuration& c) const {
  if (c.point_dim() != point_dim()) {
    throw std::invalid_argument(name() + ": configuration dimension " + std::to_string(c.point_dim()) +
                                " does not match coloring dimension " + std::to_string(point_dim()));
  }
  return check_points(c.vertices());
}

namespace {

template <class Key>
int minority_of(const std::vector<Key>& keys) {
  std::map<Key, int> counts;
  for (const auto& k : keys) ++counts[k];
  int largest = 0;
  for (const auto& [k, c] : counts) largest = std::max(largest, c);
  return static_cast<int>(keys.size()) - largest;
}

void require_points(const std::vector<RealVec>& points, int dim, const std::string& who) {
  if (points.size() < 2) throw std::invalid_argument(who + ": need at least two points");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim) throw std::invalid_argument(who + ": point dimension mismatch");
    require_finite(p, who.c_str());
  }
}

/// Shared by the plane colorings: per-point (j, k) and margin.
class LatticeColoring : public Coloring {
 public:
  int point_dim() const override { return 2; }

  ColorCheck check_points(const std::vector<RealVec>& points) const override {
    require_points(points, 2, name());
    ColorCheck out;
    out.min_margin = 1.0;
    out.vertex_colors = json::array();
    std::vector<std::pair<int, int>> keys;
    for (const auto& p : points) {
      const SubcellHit h = color(Complex(p[0], p[1]));
      keys.emplace_back(h.cell.j, h.cell.k);
      out.min_margin = std::min(out.min_margin, h.margin);
      out.vertex_colors.push_back({h.cell.j, h.cell.k});
    }
    out.minority = minority_of(keys);
    out.monochromatic = out.minority == 0;
    return out;
  }

 protected:
  virtual SubcellHit color(Complex z) const = 0;
};

class Plane25 final : public LatticeColoring {
 public:
  std::string name() const override { return "plane25"; }
  bool theorem_coloring() const override { return true; }
  bool covers(const Configuration& c) const override {
    if (c.type == ConfigType::kRectangle2d || c.type == ConfigType::kParallelogram) return true;
    if (c.type == ConfigType::kBox) return c.point_dim() == 2;
    return c.type == ConfigType::kSkeleton && std::get<Skeleton>(c.shape).n() == 2;
  }

 protected:
  SubcellHit color(Complex z) const override { return plane_color(z); }
};

class SkeletonColoring final : public LatticeColoring {
 public:
  explicit SkeletonColoring(int n) : scheme_(n) {}
  std::string name() const override { return "skeleton(" + std::to_string(scheme_.n()) + ")"; }
  bool theorem_coloring() const override { return true; }
  bool covers(const Configuration& c) const override {
    if (c.type == ConfigType::kSkeleton) return std::get<Skeleton>(c.shape).n() == scheme_.n();
    return scheme_.n() == 2 && (c.type == ConfigType::kRectangle2d || c.type == ConfigType::kParallelogram);
  }

 protected:
  SubcellHit color(Complex z) const override { return skeleton_color(scheme_, z); }

 private:
  SkeletonColorScheme scheme_;
};

class Quadrant4 final : public Coloring {
 public:
  std::string name() const override { return "quadrant4"; }
  int point_dim() const override { return 2; }
  bool theorem_coloring() const override { return false; }
  bool covers(const Configuration& c) const override {
    return c.type == ConfigType::kRectangle2d || c.type == ConfigType::kParallelogram;
  }

  ColorCheck check_points(const std::vector<RealVec>& points) const override {
    require_points(points, 2, name());
    ColorCheck out;
    out.min_margin = 1.0;
    out.vertex_colors = json::array();
    std::vector<int> keys;
    for (const auto& p : points) {
      const int q = (p[0] < 0 ? 1 : 0) + (p[1] < 0 ? 2 : 0);
      keys.push_back(q);
      out.min_margin = std::min({out.min_margin, std::abs(p[0]), std::abs(p[1])});
      out.vertex_colors.push_back(q);
    }
    out.minority = minority_of(keys);
    out.monochromatic = out.minority == 0;
    return out;
  }
};

class SlabColoring final : public Coloring {
 public:
  SlabColoring(std::string name, CompositeColoring coloring)
      : name_(std::move(name)), coloring_(std::move(coloring)) {}

  std::string name() const override { return name_; }
  int point_dim() const override { return coloring_.dim(); }
  bool theorem_coloring() const override { return coloring_.certified(); }
  bool covers(const Configuration& c) const override {
    return c.type == ConfigType::kBox && c.point_dim() == coloring_.dim();
  }
  const RotationNet* net() const override { return coloring_.net(); }

  ColorCheck check_points(const std::vector<RealVec>& points) const override {
    require_points(points, point_dim(), name());
    return finish(monochromatic(coloring_, points), points);
  }

  ColorCheck check(const Configuration& c) const override {
    const auto* box = std::get_if<OrientedBox>(&c.shape);
    if (!box) return Coloring::check(c);
    if (static_cast<int>(box->dim()) != point_dim()) {
      throw std::invalid_argument(name() + ": box dimension does not match coloring dimension");
    }
    return finish(box_monochromatic(coloring_, *box), c.vertices());
  }

 private:
  ColorCheck finish(const MonoVerdict& v, const std::vector<RealVec>& points) const {
    ColorCheck out;
    out.monochromatic = v.same_color;
    out.minority = v.minority;
    out.min_margin = v.min_margin;
    out.witness_frame = v.differs_at;
    out.fast_path = v.fast_path;
    out.vertex_colors = json::array();
    for (std::size_t p = 0; p < points.size(); ++p) {
      json entry{{"first_entries", composite_color(coloring_, points[p]).first_entries(8)}};
      if (p < v.witness_slabs.size()) entry["slab_at_witness"] = v.witness_slabs[p];
      out.vertex_colors.push_back(std::move(entry));
    }
    return out;
  }

  std::string name_;
  CompositeColoring coloring_;
};

}  // namespace

std::unique_ptr<Coloring> make_plane25() { return std::make_unique<Plane25>(); }

std::unique_ptr<Coloring> make_skeleton_coloring(int n) { return std::make_unique<SkeletonColoring>(n); }

std::unique_ptr<Coloring> make_quadrant4() { return std::make_unique<Quadrant4>(); }

std::unique_ptr<Coloring> make_composite(std::shared_ptr<const RotationNet> net) {
  return std::make_unique<SlabColoring>("nd", CompositeColoring::standard(std::move(net)));
}

std::unique_ptr<Coloring> make_coarse_slab(std::shared_ptr<const RotationNet> net) {
  return std::make_unique<SlabColoring>("coarse-slab", CompositeColoring(std::move(net), 1));
}

std::unique_ptr<Coloring> make_no_rotation_net(int n) {
  return std::make_unique<SlabColoring>("no-rotation-net", CompositeColoring::identity_only(n));
}

std::unique_ptr<Coloring> make_coloring(const std::string& name, const ColoringOptions& opt) {
  auto net = [&] {
    const NetSpec spec = opt.eps_mode == EpsMode::kSharp ? NetSpec::sharp(opt.n) : NetSpec::paper(opt.n);
    return std::make_shared<const RotationNet>(spec);
  };
  if (name == "plane25") return make_plane25();
  if (name == "skeleton") return make_skeleton_coloring(opt.n);
  if (name == "quadrant4") return make_quadrant4();
  if (name == "nd") return make_composite(net());
  if (name == "coarse-slab") return make_coarse_slab(net());
  if (name == "no-rotation-net") return make_no_rotation_net(opt.n);
  throw std::invalid_argument("unknown coloring '" + name +
                              "' (expected plane25|skeleton|nd|quadrant4|coarse-slab|no-rotation-net)");
}

}  // namespace monobox
