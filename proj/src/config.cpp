#include "monobox/config.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monobox {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw std::invalid_argument("config: " + what);
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return obj.at(key);
}

RealVec read_vec(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) schema_error(std::string(what) + " must be a non-empty array");
  RealVec out;
  for (const auto& e : j) {
    if (!e.is_number()) schema_error(std::string(what) + " must contain numbers");
    out.push_back(e.get<double>());
  }
  require_finite(out, what);
  return out;
}

Complex read_complex(const json& j, const char* what) {
  const RealVec v = read_vec(j, what);
  if (v.size() != 2) schema_error(std::string(what) + " must be [x, y]");
  return {v[0], v[1]};
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

Parallelogram read_parallelogram(const json& params) {
  return {read_complex(field(params, "z"), "z"), read_complex(field(params, "u"), "u"),
          read_complex(field(params, "v"), "v")};
}

}  // namespace

std::vector<Complex> Skeleton::points() const {
  std::vector<Complex> out(std::size_t{1} << u.size());
  for (std::size_t t = 0; t < out.size(); ++t) {
    Complex p = z;
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (t & (std::size_t{1} << j)) p += u[j];
    }
    out[t] = p;
  }
  return out;
}

double Skeleton::modulus_product() const {
  double p = 1.0;
  for (const auto& c : u) p *= std::abs(c);
  return p;
}

const char* config_type_name(ConfigType t) {
  switch (t) {
    case ConfigType::kRectangle2d: return "rectangle2d";
    case ConfigType::kParallelogram: return "parallelogram";
    case ConfigType::kBox: return "box";
    case ConfigType::kSkeleton: return "skeleton";
    default: return "points";
  }
}

Configuration Configuration::rectangle(const Parallelogram& p) { return {ConfigType::kRectangle2d, p}; }
Configuration Configuration::parallelogram(const Parallelogram& p) { return {ConfigType::kParallelogram, p}; }
Configuration Configuration::box(const OrientedBox& b) { return {ConfigType::kBox, b}; }
Configuration Configuration::skeleton(const Skeleton& s) { return {ConfigType::kSkeleton, s}; }
Configuration Configuration::points(PointSet s) { return {ConfigType::kPoints, std::move(s)}; }

int Configuration::point_dim() const {
  if (const auto* b = std::get_if<OrientedBox>(&shape)) return static_cast<int>(b->dim());
  if (const auto* p = std::get_if<PointSet>(&shape)) return p->n;
  return 2;
}

std::vector<RealVec> Configuration::vertices() const {
  std::vector<RealVec> out;
  if (const auto* p = std::get_if<Parallelogram>(&shape)) {
    for (const auto& c : p->vertices()) out.push_back({c.real(), c.imag()});
  } else if (const auto* b = std::get_if<OrientedBox>(&shape)) {
    for (auto& v : box_vertices(*b)) out.push_back(std::move(v.point));
  } else if (const auto* s = std::get_if<Skeleton>(&shape)) {
    for (const auto& c : s->points()) out.push_back({c.real(), c.imag()});
  } else {
    out = std::get<PointSet>(shape).points;
  }
  return out;
}

bool Configuration::satisfies_hypothesis(double tol) const {
  if (const auto* p = std::get_if<Parallelogram>(&shape)) {
    return std::abs(p->side_product() - 1.0) <= tol;
  }
  if (const auto* b = std::get_if<OrientedBox>(&shape)) return std::abs(b->volume() - 1.0) <= tol;
  if (const auto* s = std::get_if<Skeleton>(&shape)) return std::abs(s->modulus_product() - 1.0) <= tol;
  return false;
}

Configuration config_from_json(const json& j) {
  if (!j.is_object()) schema_error("document must be an object");
  const std::string type = field(j, "type").get<std::string>();
  if (type == "points") {
    PointSet ps;
    ps.n = field(j, "n").get<int>();
    if (ps.n < 1) schema_error("n must be positive");
    const json& pts = field(j, "points");
    if (!pts.is_array() || pts.size() < 2) schema_error("points must list at least two points");
    for (const auto& p : pts) {
      RealVec v = read_vec(p, "point");
      if (static_cast<int>(v.size()) != ps.n) schema_error("point dimension does not match n");
      ps.points.push_back(std::move(v));
    }
    return Configuration::points(std::move(ps));
  }
  const json& params = field(j, "params");
  if (type == "rectangle2d") {
    const Parallelogram p = read_parallelogram(params);
    const double dot = p.u.real() * p.v.real() + p.u.imag() * p.v.imag();
    if (std::abs(dot) > 1e-9 * std::max(1.0, std::abs(p.u) * std::abs(p.v))) {
      schema_error("rectangle2d sides u and v are not perpendicular");
    }
    if (std::abs(p.u) == 0.0 || std::abs(p.v) == 0.0) schema_error("rectangle2d sides must be nonzero");
    return Configuration::rectangle(p);
  }
  if (type == "parallelogram") return Configuration::parallelogram(read_parallelogram(params));
  if (type == "box") {
    RealVec q = read_vec(field(params, "q"), "q");
    RealVec a = read_vec(field(params, "a"), "a");
    const std::size_t n = q.size();
    if (a.size() != n) schema_error("q and a must have the same length");
    std::vector<double> m;
    if (params.contains("rotation")) {
      const json& rows = params.at("rotation");
      if (!rows.is_array() || rows.size() != n) schema_error("rotation must be n x n");
      for (const auto& row : rows) {
        RealVec r = read_vec(row, "rotation row");
        if (r.size() != n) schema_error("rotation must be n x n");
        m.insert(m.end(), r.begin(), r.end());
      }
    } else {
      const Rotation id = Rotation::identity(n);
      m.assign(id.data().begin(), id.data().end());
    }
    return Configuration::box(OrientedBox(AlignedBox(std::move(q), std::move(a)), Rotation(n, std::move(m))));
  }
  if (type == "skeleton") {
    Skeleton s;
    s.z = read_complex(field(params, "z"), "z");
    const json& us = field(params, "u");
    if (!us.is_array() || us.size() < 1 || us.size() > 16) schema_error("u must list 1..16 points");
    for (const auto& u : us) s.u.push_back(read_complex(u, "u"));
    return Configuration::skeleton(s);
  }
  schema_error("unknown type '" + type + "'");
}

json to_json(const Configuration& c) {
  json out{{"type", config_type_name(c.type)}};
  if (const auto* p = std::get_if<Parallelogram>(&c.shape)) {
    out["params"] = {{"z", complex_json(p->z)}, {"u", complex_json(p->u)}, {"v", complex_json(p->v)}};
  } else if (const auto* b = std::get_if<OrientedBox>(&c.shape)) {
    json rows = json::array();
    const std::size_t n = b->dim();
    for (std::size_t r = 0; r < n; ++r) {
      json row = json::array();
      for (std::size_t k = 0; k < n; ++k) row.push_back(b->rotation()(r, k));
      rows.push_back(row);
    }
    out["params"] = {{"q", b->aligned().base()}, {"a", b->aligned().edges()}, {"rotation", rows}};
  } else if (const auto* s = std::get_if<Skeleton>(&c.shape)) {
    json us = json::array();
    for (const auto& u : s->u) us.push_back(complex_json(u));
    out["params"] = {{"z", complex_json(s->z)}, {"u", us}};
  } else {
    const auto& ps = std::get<PointSet>(c.shape);
    out["n"] = ps.n;
    out["points"] = ps.points;
  }
  return out;
}

}  // namespace monobox
