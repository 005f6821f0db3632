#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monobox/box_invariant.hpp"
#include "monobox/colorings.hpp"
#include "monobox/config.hpp"
#include "monobox/harness.hpp"
#include "monobox/nd_coloring.hpp"
#include "monobox/permanent.hpp"
#include "monobox/plane_coloring.hpp"
#include "monobox/rotation_net.hpp"

using namespace monobox;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw std::invalid_argument(std::string(what) + ": cannot parse '" + item + "' as a number");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::array<double, 2> parse_pair(const std::string& text, const char* what) {
  const auto v = parse_list(text, what);
  if (v.size() != 2) throw std::invalid_argument(std::string(what) + ": expected two comma-separated values");
  return {v[0], v[1]};
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string default_coloring(const Configuration& c) {
  switch (c.type) {
    case ConfigType::kBox: return "nd";
    case ConfigType::kSkeleton: return "skeleton";
    case ConfigType::kPoints: return c.point_dim() == 2 ? "plane25" : "nd";
    default: return "plane25";
  }
}

int config_n(const Configuration& c) {
  if (const auto* s = std::get_if<Skeleton>(&c.shape)) return s->n();
  return c.point_dim();
}

json check_json(const Configuration& c, const Coloring& coloring, const ColorCheck& r) {
  json out{{"config", to_json(c)},
           {"coloring", coloring.name()},
           {"theorem_coloring", coloring.theorem_coloring()},
           {"hypothesis_satisfied", c.satisfies_hypothesis()},
           {"covered", coloring.covers(c)},
           {"monochromatic", r.monochromatic},
           {"minority", r.minority},
           {"min_margin", r.min_margin},
           {"fast_path", r.fast_path},
           {"vertices", c.vertices()},
           {"colors", r.vertex_colors}};
  out["witness_frame"] = r.witness_frame ? json(*r.witness_frame) : json(nullptr);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite colorings without monochromatic unit-area rectangles and unit-volume boxes"};
  app.require_subcommand(1);

  std::string point, eps_mode = "paper", config_path, coloring_name, mode = "rect2d";
  int n = 2;
  bool skip_digest = false;

  auto* color2 = app.add_subcommand("color2", "Color of a point under the 25-class plane coloring");
  color2->add_option("--point", point, "X,Y")->required();

  auto* colorn = app.add_subcommand("colorn", "Composite color of a point in R^n");
  colorn->add_option("--n", n, "dimension (2 or 3)")->required();
  colorn->add_option("--point", point, "comma-separated coordinates")->required();
  colorn->add_option("--eps", eps_mode, "paper|sharp");
  std::size_t entries = 8;
  colorn->add_option("--entries", entries, "leading entries to print");
  colorn->add_flag("--skip-digest", skip_digest, "do not force the full tuple");

  auto* check = app.add_subcommand("check", "Monochromaticity verdict for a configuration file");
  check->add_option("--config", config_path, "JSON configuration")->required();
  check->add_option("--coloring", coloring_name,
                    "plane25|nd|skeleton|quadrant4|coarse-slab|no-rotation-net");
  check->add_option("--eps", eps_mode, "paper|sharp");

  TrialSpec spec;
  std::string aspect, center, csv_path;
  bool adversarial = false;
  auto* search = app.add_subcommand("search", "Random or adversarial search for monochromatic configurations");
  search->add_option("--mode", mode, "rect2d|parallelogram2d|box-nd|skeleton");
  search->add_option("--trials", spec.trials, "trials (uniform search)");
  search->add_option("--seed", spec.seed, "64-bit seed");
  search->add_option("--coloring", coloring_name, "coloring name");
  search->add_option("--n", spec.n, "dimension for box-nd and skeleton");
  search->add_option("--eps", eps_mode, "paper|sharp");
  search->add_option("--aspect", aspect, "LO,HI aspect ratio range");
  search->add_option("--center", center, "LO,HI range for every base coordinate");
  search->add_option("--margin-floor", spec.margin_floor, "resample below this boundary margin");
  search->add_option("--threads", spec.threads, "worker threads (default: MONOBOX_THREADS or all cores)");
  search->add_option("--restarts", spec.restarts, "adversarial restarts");
  search->add_option("--steps", spec.steps, "adversarial steps per restart");
  search->add_flag("--adversarial", adversarial, "local descent instead of uniform sampling");
  search->add_flag("--stop-on-first", spec.stop_on_first, "stop at the first counterexample");
  search->add_option("--csv", csv_path, "also write the report as CSV");

  std::uint64_t samples = 10000, seed = 1;
  auto* net = app.add_subcommand("net", "Rotation net statistics");
  net->add_option("--n", n, "dimension (2 or 3)")->required();
  net->add_option("--eps", eps_mode, "paper|sharp");
  net->add_option("--samples", samples, "Haar-random lookups to test");
  net->add_option("--seed", seed, "seed");

  std::uint64_t trials = 1000;
  bool exact = false;
  auto* identity = app.add_subcommand("identity", "Random checks of the alternating-sum identities");
  identity->add_option("--n", n, "dimension")->required();
  identity->add_option("--trials", trials, "instances");
  identity->add_option("--seed", seed, "seed");
  identity->add_flag("--exact", exact, "exact rational arithmetic");

  std::string scale, half_width, radius_sq;
  auto* separation = app.add_subcommand("separation", "Exact circle separation certificate");
  separation->add_option("--scale", scale, "P/Q")->required();
  separation->add_option("--half-width", half_width, "P/Q")->required();
  separation->add_option("--radius-sq", radius_sq, "P/Q")->required();

  std::string window = "-3,-3,3,3", range = "-6,6", out_path;
  int samples_per_branch = 600;
  auto* plot = app.add_subcommand("plot-boundaries", "Color class boundary curves");
  plot->add_option("--window", window, "X0,Y0,X1,Y1");
  plot->add_option("--range", range, "A,B parameter range");
  plot->add_option("--samples", samples_per_branch, "points per branch");
  plot->add_option("--out", out_path, "FILE.svg or FILE.csv")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*color2) {
      const auto p = parse_pair(point, "--point");
      const SubcellHit h = plane_color({p[0], p[1]});
      print({{"point", p}, {"color", {h.cell.j, h.cell.k}}, {"margin", h.margin}});
      return kExitOk;
    }

    if (*colorn) {
      const auto x = parse_list(point, "--point");
      if (static_cast<int>(x.size()) != n) throw std::invalid_argument("--point must have n coordinates");
      const EpsMode m = parse_eps_mode(eps_mode);
      auto rnet = std::make_shared<const RotationNet>(m == EpsMode::kSharp ? NetSpec::sharp(n) : NetSpec::paper(n));
      const CompositeColoring coloring = CompositeColoring::standard(rnet);
      const CompositeColor c = composite_color(coloring, x);
      json first = json::array();
      for (std::uint64_t i = 0; i < std::min<std::uint64_t>(entries, c.size()); ++i) {
        const SlabHit h = c.entry(i);
        first.push_back({{"index", i}, {"slab", h.index}, {"margin", h.margin}});
      }
      json out{{"n", n}, {"eps", rnet->eps()}, {"eps_mode", eps_mode_name(m)}, {"m", c.size()},
               {"slab_count", coloring.windows()}, {"first_entries", first}};
      if (!skip_digest) {
        out["digest"] = c.digest();
        out["min_margin"] = c.min_margin();
      }
      print(out);
      return kExitOk;
    }

    if (*check) {
      const Configuration c = config_from_json(json::parse(read_file(config_path)));
      const std::string name = coloring_name.empty() ? default_coloring(c) : coloring_name;
      const auto coloring = make_coloring(name, {config_n(c), parse_eps_mode(eps_mode)});
      ColorCheck r;
      try {
        r = coloring->check(c);
      } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << '\n';
        return kExitCounterexample;
      }
      print(check_json(c, *coloring, r));
      const bool refutes = r.monochromatic && c.satisfies_hypothesis() && coloring->covers(c);
      return refutes ? kExitCounterexample : kExitOk;
    }

    if (*search) {
      spec.mode = parse_trial_mode(mode);
      if (!aspect.empty()) spec.aspect_range = parse_pair(aspect, "--aspect");
      if (!center.empty()) spec.center_range = parse_pair(center, "--center");
      std::string name = coloring_name;
      if (name.empty()) {
        name = spec.mode == TrialMode::kBoxNd ? "nd" : spec.mode == TrialMode::kSkeleton ? "skeleton" : "plane25";
      }
      const int cn = spec.mode == TrialMode::kRect2d || spec.mode == TrialMode::kParallelogram2d ? 2 : spec.n;
      const auto coloring = make_coloring(name, {cn, parse_eps_mode(eps_mode)});
      SearchReport r;
      try {
        r = adversarial ? adversarial_search(spec, *coloring) : run_search(spec, *coloring);
      } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << '\n';
        return kExitCounterexample;
      }
      print(to_json(r));
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot write '" + csv_path + "'");
        out << to_csv(r);
      }
      return r.counterexamples > 0 || r.failure() ? kExitCounterexample : kExitOk;
    }

    if (*net) {
      const EpsMode m = parse_eps_mode(eps_mode);
      const RotationNet rnet(m == EpsMode::kSharp ? NetSpec::sharp(n) : NetSpec::paper(n));
      print(net_stats(rnet, samples, seed));
      return kExitOk;
    }

    if (*identity) {
      print(identity_trials(n, trials, seed, exact));
      return kExitOk;
    }

    if (*separation) {
      const LatticeCellSet cells(parse_rational(scale), parse_rational(half_width));
      const SeparationCertificate cert = separation_certificate(cells, parse_rational(radius_sq));
      print(to_json(cert));
      return cert.pass ? kExitOk : kExitCounterexample;
    }

    if (*plot) {
      const auto w = parse_list(window, "--window");
      if (w.size() != 4) throw std::invalid_argument("--window: expected X0,Y0,X1,Y1");
      const auto r = parse_pair(range, "--range");
      const Window win{w[0], w[1], w[2], w[3]};
      const auto curves =
          boundary_curves(win, static_cast<long>(r[0]), static_cast<long>(r[1]), samples_per_branch);
      const bool svg = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".svg";
      const bool csv = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".csv";
      if (!svg && !csv) throw std::invalid_argument("--out must end in .svg or .csv");
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
      out << (svg ? curves_to_svg(curves, win) : curves_to_csv(curves));
      std::size_t points = 0;
      for (const auto& c : curves) points += c.points.size();
      print({{"out", out_path}, {"curves", curves.size()}, {"points", points}});
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
