// Configurations submitted for monochromaticity checks and their JSON form:
//
//   {"type": "rectangle2d" | "parallelogram", "params": {"z": [x,y], "u": [x,y], "v": [x,y]}}
//   {"type": "box", "params": {"q": [...], "a": [...], "rotation": [[...], ...]}}
//   {"type": "skeleton", "params": {"z": [x,y], "u": [[x,y], ...]}}
//   {"type": "points", "n": d, "points": [[...], ...]}
#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "monobox/geometry.hpp"

namespace monobox {

/// Planar embedding of the 1-skeleton of an n-box: z + sum r_j u_j, r in {0,1}^n.
struct Skeleton {
  Complex z;
  std::vector<Complex> u;

  int n() const { return static_cast<int>(u.size()); }
  /// Point with r = bits of the index.
  std::vector<Complex> points() const;
  double modulus_product() const;
};

struct PointSet {
  int n = 0;
  std::vector<RealVec> points;
};

enum class ConfigType { kRectangle2d, kParallelogram, kBox, kSkeleton, kPoints };

const char* config_type_name(ConfigType t);

struct Configuration {
  ConfigType type;
  std::variant<Parallelogram, OrientedBox, Skeleton, PointSet> shape;

  static Configuration rectangle(const Parallelogram& p);
  static Configuration parallelogram(const Parallelogram& p);
  static Configuration box(const OrientedBox& b);
  static Configuration skeleton(const Skeleton& s);
  static Configuration points(PointSet s);

  /// Dimension of the ambient space of the points.
  int point_dim() const;
  std::vector<RealVec> vertices() const;
  /// Unit area, unit side product, unit volume or unit modulus product,
  /// within `tol`. Point sets never satisfy it.
  bool satisfies_hypothesis(double tol = 1e-9) const;
};

/// Throws std::invalid_argument with a description of the first schema error.
Configuration config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Configuration& c);

}  // namespace monobox
