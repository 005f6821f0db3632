#include "monobox/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "monobox/box_invariant.hpp"
#include "monobox/rotation_net.hpp"

namespace monobox {

using nlohmann::json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSkeletonSeparation = 1e-6;
constexpr double kInvariantTolerance = 1e-9;
constexpr std::uint64_t kPlateauSteps = 200;

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_aspect(std::mt19937_64& rng, const TrialSpec& spec) {
  return uniform(rng, std::log(spec.aspect_range[0]), std::log(spec.aspect_range[1]));
}

/// Moduli with log-uniform spread and product exactly 1 up to rounding.
RealVec unit_product_lengths(std::mt19937_64& rng, const TrialSpec& spec, int n) {
  RealVec logs(n);
  double mean = 0.0;
  for (auto& l : logs) {
    l = 0.5 * log_aspect(rng, spec);
    mean += l;
  }
  mean /= n;
  RealVec out(n);
  for (int j = 0; j < n; ++j) out[j] = std::exp(logs[j] - mean);
  // Absorb the residual rounding into the last factor.
  double prod = 1.0;
  for (int j = 0; j + 1 < n; ++j) prod *= out[j];
  out[n - 1] = 1.0 / prod;
  return out;
}

Complex random_center(std::mt19937_64& rng, const TrialSpec& spec) {
  const double x = uniform(rng, spec.center_range[0], spec.center_range[1]);
  const double y = uniform(rng, spec.center_range[0], spec.center_range[1]);
  return {x, y};
}

int coloring_dim_for(const TrialSpec& spec) { return spec.mode == TrialMode::kBoxNd ? spec.n : 2; }

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MONOBOX_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Rotation small_rotation(std::mt19937_64& rng, int n, double sigma) {
  std::normal_distribution<double> g(0.0, sigma);
  if (n == 2) return Rotation::planar(g(rng));
  std::normal_distribution<double> axis(0.0, 1.0);
  std::array<double, 3> a{axis(rng), axis(rng), axis(rng)};
  if (std::hypot(a[0], a[1], a[2]) < 1e-12) a = {1.0, 0.0, 0.0};
  return Rotation::axis_angle(a, g(rng));
}

/// Rows of an orthonormal matrix drift off by rounding after many products.
Rotation reorthonormalize(const Rotation& u) {
  if (u.dim() == 2) return Rotation::planar(u.planar_angle());
  return Rotation::from_quaternion(u.to_quaternion());
}

/// Random nearby configuration of the same kind with the same area,
/// volume or modulus product.
Configuration perturb(const Configuration& c, std::mt19937_64& rng) {
  std::normal_distribution<double> pos(0.0, 0.02);
  std::normal_distribution<double> ang(0.0, 0.02);
  std::normal_distribution<double> lg(0.0, 0.05);
  switch (c.type) {
    case ConfigType::kRectangle2d:
    case ConfigType::kParallelogram: {
      Parallelogram p = std::get<Parallelogram>(c.shape);
      p.z += Complex(pos(rng), pos(rng));
      p.u *= std::polar(std::exp(lg(rng)), ang(rng));
      if (c.type == ConfigType::kRectangle2d) {
        p.v = Complex(0.0, 1.0) * p.u / std::norm(p.u);
        return Configuration::rectangle(p);
      }
      const Complex dir = p.v / std::abs(p.v) * std::polar(1.0, ang(rng));
      p.v = dir / std::abs(p.u);
      return Configuration::parallelogram(p);
    }
    case ConfigType::kBox: {
      const auto& b = std::get<OrientedBox>(c.shape);
      const std::size_t n = b.dim();
      RealVec q = b.aligned().base();
      RealVec a = b.aligned().edges();
      double mean = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        q[j] += pos(rng);
        a[j] = std::log(a[j]) + lg(rng);
        mean += a[j];
      }
      mean /= static_cast<double>(n);
      double prod = 1.0;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        a[j] = std::exp(a[j] - mean);
        prod *= a[j];
      }
      a[n - 1] = 1.0 / prod;
      const Rotation u = reorthonormalize(small_rotation(rng, static_cast<int>(n), 0.02) * b.rotation());
      return Configuration::box(OrientedBox(AlignedBox(std::move(q), std::move(a)), u));
    }
    case ConfigType::kSkeleton: {
      Skeleton s = std::get<Skeleton>(c.shape);
      s.z += Complex(pos(rng), pos(rng));
      for (auto& u : s.u) u *= std::polar(std::exp(lg(rng)), ang(rng));
      const double scale = std::pow(s.modulus_product(), 1.0 / s.n());
      for (auto& u : s.u) u /= scale;
      return Configuration::skeleton(s);
    }
    default:
      throw std::invalid_argument("perturb: point sets have no parameterization");
  }
}

struct Evaluated {
  Configuration config;
  ColorCheck check;
  std::uint64_t resamples = 0;
  bool resolved = false;
};

/// Draws until the verdict clears the margin floor.
template <class Draw>
Evaluated evaluate_with_floor(const TrialSpec& spec, const Coloring& coloring, Draw&& draw) {
  Evaluated e;
  for (std::uint64_t attempt = 0; attempt <= spec.max_resamples; ++attempt) {
    e.config = draw();
    e.check = coloring.check(e.config);
    if (e.check.min_margin >= spec.margin_floor) {
      e.resolved = true;
      return e;
    }
    ++e.resamples;
  }
  return e;
}

/// Aggregate over a contiguous range of trials.
struct Partial {
  std::uint64_t trials = 0;
  std::uint64_t resamples = 0;
  std::uint64_t unresolved = 0;
  std::uint64_t counterexamples = 0;
  std::optional<std::uint64_t> first_hit;
  std::vector<Counterexample> witnesses;
  int min_minority = std::numeric_limits<int>::max();
  double min_margin = 1.0;
  std::uint64_t fast_path = 0;
  std::uint64_t invariant_failures = 0;
  std::uint64_t band_failures = 0;

  void merge(Partial&& o) {
    trials += o.trials;
    resamples += o.resamples;
    unresolved += o.unresolved;
    counterexamples += o.counterexamples;
    if (!first_hit && o.first_hit) first_hit = o.first_hit;
    for (auto& w : o.witnesses) {
      if (witnesses.size() < kMaxStoredWitnesses) witnesses.push_back(std::move(w));
    }
    min_minority = std::min(min_minority, o.min_minority);
    min_margin = std::min(min_margin, o.min_margin);
    fast_path += o.fast_path;
    invariant_failures += o.invariant_failures;
    band_failures += o.band_failures;
  }
};

/// Invariants that must hold for every generated configuration.
void cross_check(const Configuration& c, const Coloring& coloring, Partial& p) {
  if (const auto* par = std::get_if<Parallelogram>(&c.shape)) {
    if (std::abs(std::abs(invariant_I(*par)) - 2.0) > kInvariantTolerance) ++p.invariant_failures;
    return;
  }
  const auto* box = std::get_if<OrientedBox>(&c.shape);
  const RotationNet* net = coloring.net();
  if (!box || !net || !coloring.theorem_coloring()) return;
  const OrientedBox near = box->rotated_back(net->member(net->lookup(box->rotation())));
  if (!in_unit_volume_band(invariant_J(near).value)) ++p.band_failures;
}

void record(Partial& p, std::uint64_t index, Evaluated&& e, const Coloring& coloring) {
  ++p.trials;
  p.resamples += e.resamples;
  if (!e.resolved) {
    ++p.unresolved;
    return;
  }
  cross_check(e.config, coloring, p);
  p.min_minority = std::min(p.min_minority, e.check.minority);
  p.min_margin = std::min(p.min_margin, e.check.min_margin);
  if (e.check.fast_path) ++p.fast_path;
  if (e.check.monochromatic) {
    ++p.counterexamples;
    if (!p.first_hit) p.first_hit = index;
    if (p.witnesses.size() < kMaxStoredWitnesses) {
      p.witnesses.push_back({index, std::move(e.config), std::move(e.check)});
    }
  }
}

void check_compatible(const TrialSpec& spec, const Coloring& coloring) {
  spec.validate();
  if (coloring_dim_for(spec) != coloring.point_dim()) {
    throw std::invalid_argument("mode " + std::string(trial_mode_name(spec.mode)) + " produces points in R^" +
                                std::to_string(coloring_dim_for(spec)) + " but " + coloring.name() +
                                " colors R^" + std::to_string(coloring.point_dim()));
  }
}

SearchReport finalize(const TrialSpec& spec, const Coloring& coloring, Partial&& p, bool adversarial,
                      std::chrono::steady_clock::time_point start) {
  SearchReport r;
  r.mode = trial_mode_name(spec.mode);
  r.coloring = coloring.name();
  r.theorem_mode = coloring.theorem_coloring();
  r.adversarial = adversarial;
  r.seed = spec.seed;
  r.trials = p.trials;
  r.resamples = p.resamples;
  r.unresolved = p.unresolved;
  r.counterexamples = p.counterexamples;
  r.first_hit = p.first_hit;
  r.witnesses = std::move(p.witnesses);
  r.min_minority = p.min_minority == std::numeric_limits<int>::max() ? 0 : p.min_minority;
  r.min_margin = p.min_margin;
  r.fast_path = p.fast_path;
  r.invariant_failures = p.invariant_failures;
  r.band_failures = p.band_failures;
  r.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

const char* trial_mode_name(TrialMode m) {
  switch (m) {
    case TrialMode::kRect2d: return "rect2d";
    case TrialMode::kParallelogram2d: return "parallelogram2d";
    case TrialMode::kBoxNd: return "box-nd";
    default: return "skeleton";
  }
}

TrialMode parse_trial_mode(const std::string& name) {
  if (name == "rect2d") return TrialMode::kRect2d;
  if (name == "parallelogram2d") return TrialMode::kParallelogram2d;
  if (name == "box-nd") return TrialMode::kBoxNd;
  if (name == "skeleton") return TrialMode::kSkeleton;
  throw std::invalid_argument("unknown mode '" + name + "' (expected rect2d|parallelogram2d|box-nd|skeleton)");
}

void TrialSpec::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(aspect_range[0] > 0.0) || !(aspect_range[0] <= aspect_range[1]) || !std::isfinite(aspect_range[1])) {
    throw std::invalid_argument("aspect range must satisfy 0 < lo <= hi");
  }
  if (!(center_range[0] <= center_range[1]) || !std::isfinite(center_range[0]) ||
      !std::isfinite(center_range[1])) {
    throw std::invalid_argument("center range must satisfy lo <= hi");
  }
  if (!(margin_floor >= 0.0)) throw std::invalid_argument("margin floor must be nonnegative");
  if (mode == TrialMode::kBoxNd && n != 2 && n != 3) throw std::invalid_argument("box-nd needs n = 2 or 3");
  if (mode == TrialMode::kSkeleton && (n < 2 || n > 8)) throw std::invalid_argument("skeleton needs 2 <= n <= 8");
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed;
  const std::uint64_t a = splitmix(state);
  state = a ^ (index * 0xd1b54a32d192ed03ULL);
  const std::uint64_t b = splitmix(state);
  std::seed_seq seq{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32)};
  return std::mt19937_64(seq);
}

Parallelogram gen_unit_area_rectangle(std::mt19937_64& rng, const TrialSpec& spec) {
  const double t = std::exp(0.5 * log_aspect(rng, spec));
  const double theta = uniform(rng, 0.0, kTwoPi);
  const Complex z = random_center(rng, spec);
  const Complex e = std::polar(1.0, theta);
  return {z, t * e, Complex(0.0, 1.0) * e / t};
}

Parallelogram gen_unit_side_product_parallelogram(std::mt19937_64& rng, const TrialSpec& spec) {
  const double t = std::exp(0.5 * log_aspect(rng, spec));
  const double theta = uniform(rng, 0.0, kTwoPi);
  const double phi = uniform(rng, 0.0, kTwoPi);
  const Complex z = random_center(rng, spec);
  return {z, std::polar(t, theta), std::polar(1.0 / t, phi)};
}

OrientedBox gen_unit_volume_box(std::mt19937_64& rng, const TrialSpec& spec) {
  if (spec.n != 2 && spec.n != 3) throw std::invalid_argument("gen_unit_volume_box: n must be 2 or 3");
  RealVec a = unit_product_lengths(rng, spec, spec.n);
  const Rotation u = haar_random_rotation(spec.n, rng);
  RealVec q(spec.n);
  for (auto& c : q) c = uniform(rng, spec.center_range[0], spec.center_range[1]);
  return OrientedBox(AlignedBox(std::move(q), std::move(a)), u);
}

Skeleton gen_unit_product_skeleton(std::mt19937_64& rng, const TrialSpec& spec) {
  if (spec.n < 2 || spec.n > 8) throw std::invalid_argument("gen_unit_product_skeleton: n must be in [2, 8]");
  for (std::uint64_t attempt = 0; attempt <= spec.max_resamples; ++attempt) {
    const RealVec mod = unit_product_lengths(rng, spec, spec.n);
    Skeleton s;
    for (int j = 0; j < spec.n; ++j) s.u.push_back(std::polar(mod[j], uniform(rng, 0.0, kTwoPi)));
    s.z = random_center(rng, spec);
    const auto pts = s.points();
    bool separated = true;
    for (std::size_t i = 0; i < pts.size() && separated; ++i) {
      for (std::size_t k = i + 1; k < pts.size(); ++k) {
        if (std::abs(pts[i] - pts[k]) < kSkeletonSeparation) {
          separated = false;
          break;
        }
      }
    }
    if (separated) return s;
  }
  throw std::runtime_error("gen_unit_product_skeleton: resample budget exhausted");
}

Configuration generate(std::mt19937_64& rng, const TrialSpec& spec) {
  switch (spec.mode) {
    case TrialMode::kRect2d: return Configuration::rectangle(gen_unit_area_rectangle(rng, spec));
    case TrialMode::kParallelogram2d:
      return Configuration::parallelogram(gen_unit_side_product_parallelogram(rng, spec));
    case TrialMode::kBoxNd: return Configuration::box(gen_unit_volume_box(rng, spec));
    default: return Configuration::skeleton(gen_unit_product_skeleton(rng, spec));
  }
}

SearchReport run_search(const TrialSpec& spec, const Coloring& coloring) {
  check_compatible(spec, coloring);
  const auto start = std::chrono::steady_clock::now();
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(spec.threads), spec.trials));

  std::vector<Partial> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::atomic<std::uint64_t> stop_at{std::numeric_limits<std::uint64_t>::max()};

  auto worker = [&](unsigned w) {
    const std::uint64_t lo = spec.trials * w / threads;
    const std::uint64_t hi = spec.trials * (w + 1) / threads;
    try {
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (i > stop_at.load(std::memory_order_relaxed)) break;
        auto rng = trial_rng(spec.seed, i);
        Evaluated e = evaluate_with_floor(spec, coloring, [&] { return generate(rng, spec); });
        const bool hit = e.resolved && e.check.monochromatic;
        record(parts[w], i, std::move(e), coloring);
        if (hit && spec.stop_on_first) {
          std::uint64_t cur = stop_at.load();
          while (i < cur && !stop_at.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Ranges are contiguous and merged in order; with stop_on_first every
  // range after the one holding the first hit is dropped.
  Partial total;
  for (auto& p : parts) {
    const bool had_hit = p.first_hit.has_value();
    total.merge(std::move(p));
    if (spec.stop_on_first && had_hit) break;
  }
  return finalize(spec, coloring, std::move(total), false, start);
}

SearchReport adversarial_search(const TrialSpec& spec, const Coloring& coloring) {
  check_compatible(spec, coloring);
  if (spec.restarts < 1 || spec.steps < 1) throw std::invalid_argument("restarts and steps must be positive");
  const auto start = std::chrono::steady_clock::now();
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(spec.threads), spec.restarts));
  // Each restart owns evaluations [r * budget, (r + 1) * budget).
  const std::uint64_t budget = spec.steps + 1;

  struct RestartPartial {
    Partial p;
    bool monotone = true;
    std::uint64_t steps = 0;
  };
  std::vector<RestartPartial> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::atomic<std::uint64_t> stop_at{std::numeric_limits<std::uint64_t>::max()};

  auto worker = [&](unsigned w) {
    const std::uint64_t lo = spec.restarts * w / threads;
    const std::uint64_t hi = spec.restarts * (w + 1) / threads;
    RestartPartial& out = parts[w];
    try {
      for (std::uint64_t r = lo; r < hi; ++r) {
        if (r > stop_at.load(std::memory_order_relaxed)) break;
        auto rng = trial_rng(spec.seed, r);
        std::uint64_t index = r * budget;
        Evaluated cur = evaluate_with_floor(spec, coloring, [&] { return generate(rng, spec); });
        out.p.resamples += cur.resamples;
        if (!cur.resolved) {
          ++out.p.trials;
          ++out.p.unresolved;
          continue;
        }
        int score = cur.check.minority;
        bool hit = cur.check.monochromatic;
        record(out.p, index, Evaluated{cur.config, cur.check, 0, true}, coloring);
        std::uint64_t since_improvement = 0;
        for (std::uint64_t s = 1; s <= spec.steps && !hit; ++s) {
          ++out.steps;
          ++index;
          Configuration next;
          bool fresh = false;
          if (since_improvement >= kPlateauSteps) {
            next = generate(rng, spec);
            fresh = true;
            since_improvement = 0;
          } else {
            next = perturb(cur.config, rng);
          }
          ColorCheck chk = coloring.check(next);
          if (chk.min_margin < spec.margin_floor) {
            ++out.p.resamples;
            ++since_improvement;
            continue;
          }
          record(out.p, index, Evaluated{next, chk, 0, true}, coloring);
          if (fresh || chk.minority <= score) {
            if (!fresh && chk.minority > score) out.monotone = false;
            since_improvement = chk.minority < score ? 0 : since_improvement + 1;
            score = chk.minority;
            cur.config = std::move(next);
            cur.check = std::move(chk);
            hit = cur.check.monochromatic;
          } else {
            ++since_improvement;
          }
        }
        if (hit && spec.stop_on_first) {
          std::uint64_t c = stop_at.load();
          while (r < c && !stop_at.compare_exchange_weak(c, r)) {
          }
          break;
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Partial total;
  bool monotone = true;
  std::uint64_t steps = 0;
  std::uint64_t restarts = 0;
  for (unsigned w = 0; w < threads; ++w) {
    const bool had_hit = parts[w].p.first_hit.has_value();
    monotone = monotone && parts[w].monotone;
    steps += parts[w].steps;
    restarts += spec.restarts * (w + 1) / threads - spec.restarts * w / threads;
    total.merge(std::move(parts[w].p));
    if (spec.stop_on_first && had_hit) {
      restarts = *total.first_hit / budget + 1;
      break;
    }
  }
  SearchReport r = finalize(spec, coloring, std::move(total), true, start);
  r.restarts = restarts;
  r.steps = steps;
  r.score_monotone = monotone;
  return r;
}

json to_json(const SearchReport& r, bool include_wall_clock) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    json item{{"trial", w.trial},
              {"config", to_json(w.config)},
              {"vertices", w.config.vertices()},
              {"colors", w.check.vertex_colors},
              {"min_margin", w.check.min_margin}};
    item["witness_frame"] = w.check.witness_frame ? json(*w.check.witness_frame) : json(nullptr);
    witnesses.push_back(std::move(item));
  }
  json out{{"mode", r.mode},
           {"coloring", r.coloring},
           {"theorem_mode", r.theorem_mode},
           {"adversarial", r.adversarial},
           {"seed", r.seed},
           {"trials", r.trials},
           {"resamples", r.resamples},
           {"unresolved", r.unresolved},
           {"counterexamples", r.counterexamples},
           {"first_hit", r.first_hit ? json(*r.first_hit) : json(nullptr)},
           {"min_minority", r.min_minority},
           {"min_margin", r.min_margin},
           {"fast_path", r.fast_path},
           {"invariant_failures", r.invariant_failures},
           {"band_failures", r.band_failures},
           {"witnesses", std::move(witnesses)},
           {"verdict", r.failure() ? "FAILURE" : "OK"}};
  if (r.adversarial) {
    out["restarts"] = r.restarts;
    out["steps"] = r.steps;
    out["score_monotone"] = r.score_monotone;
  }
  if (include_wall_clock) out["wall_clock_seconds"] = r.wall_clock_seconds;
  return out;
}

std::string to_csv(const SearchReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << "mode,coloring,adversarial,seed,trials,resamples,unresolved,counterexamples,first_hit,"
        "min_minority,min_margin,fast_path,invariant_failures,band_failures,verdict,wall_clock_seconds\n";
  os << r.mode << ',' << r.coloring << ',' << (r.adversarial ? 1 : 0) << ',' << r.seed << ',' << r.trials << ','
     << r.resamples << ',' << r.unresolved << ',' << r.counterexamples << ','
     << (r.first_hit ? std::to_string(*r.first_hit) : std::string()) << ',' << r.min_minority << ','
     << r.min_margin << ',' << r.fast_path << ',' << r.invariant_failures << ',' << r.band_failures << ','
     << (r.failure() ? "FAILURE" : "OK") << ',' << r.wall_clock_seconds << '\n';
  if (!r.witnesses.empty()) {
    os << "\ntrial,vertex,coordinates,color\n";
    for (const auto& w : r.witnesses) {
      const auto verts = w.config.vertices();
      for (std::size_t v = 0; v < verts.size(); ++v) {
        std::ostringstream coords;
        coords.precision(17);
        for (std::size_t k = 0; k < verts[v].size(); ++k) coords << (k ? " " : "") << verts[v][k];
        const std::string color = v < w.check.vertex_colors.size() ? w.check.vertex_colors[v].dump() : "";
        os << w.trial << ',' << v << ',' << csv_quote(coords.str()) << ',' << csv_quote(color) << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace monobox
