// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monobox/box_invariant.hpp"
#include "monobox/colorings.hpp"
#include "monobox/harness.hpp"
#include "monobox/nd_coloring.hpp"
#include "monobox/permanent.hpp"
#include "monobox/plane_coloring.hpp"
#include "monobox/rotation_net.hpp"
#include "support.hpp"

using namespace monobox;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

bool run_criterion(const char* id, const char* title, double budget_seconds,
                   const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(secs < budget_seconds, "runtime budget");
  std::printf("%s %s %s:%s; %.2fs of %.0fs\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.str().c_str(), secs,
              budget_seconds);
  std::fflush(stdout);
  return o.pass;
}

void ac1(Outcome& o) {
  double worst = 0.0;
  std::uint64_t mismatches = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto f = identity_trials(n, 10000, 100 + n, false);
    worst = std::max(worst, f["subset_sum"]["max_rel_error"].get<double>());
    if (n <= 5) {
      const auto e = identity_trials(n, 1000, 200 + n, true);
      mismatches += e["subset_sum"]["mismatches"].get<std::uint64_t>();
    }
  }
  o.detail << " max rel error " << worst << " over 6x10^4 instances, exact mismatches " << mismatches
           << " over 5x10^3";
  o.require(worst <= 1e-9, "relative error <= 1e-9");
  o.require(mismatches == 0, "exact equality for n <= 5");
}

void ac2(Outcome& o) {
  TrialSpec spec;
  double worst = 0.0;
  std::uint64_t failures = 0;
  for (std::uint64_t i = 0; i < 1000000; ++i) {
    auto rng = trial_rng(2, i);
    const Parallelogram r = gen_unit_area_rectangle(rng, spec);
    const double err = std::abs(std::abs(invariant_I(r)) - 2.0);
    worst = std::max(worst, err);
    if (err > 1e-9) ++failures;
  }
  o.detail << " 10^6 rectangles, max ||I| - 2| = " << worst;
  o.require(failures == 0, "|I| = 2 within 1e-9");
}

void ac3(Outcome& o) {
  const auto plane = make_plane25();
  TrialSpec spec;
  spec.trials = 1000000;
  spec.seed = 7;
  std::uint64_t hits = 0, resamples = 0, trials = 0, inv = 0;
  for (TrialMode m : {TrialMode::kRect2d, TrialMode::kParallelogram2d}) {
    spec.mode = m;
    const SearchReport r = run_search(spec, *plane);
    hits += r.counterexamples;
    resamples += r.resamples;
    trials += r.trials;
    inv += r.invariant_failures + r.unresolved;
  }
  spec.mode = TrialMode::kRect2d;
  spec.restarts = 1000;
  spec.steps = 1000;
  const SearchReport adv = adversarial_search(spec, *plane);
  o.detail << " uniform 2x10^6: " << hits << " monochromatic, resampled " << resamples << "; adversarial "
           << adv.restarts << "x" << spec.steps << ": " << adv.counterexamples << " monochromatic, best minority "
           << adv.min_minority << ", resampled " << adv.resamples;
  o.require(hits == 0 && adv.counterexamples == 0, "zero monochromatic configurations");
  o.require(inv == 0 && adv.invariant_failures == 0, "invariant cross-checks");
  o.require(adv.score_monotone, "monotone score");
  o.require(static_cast<double>(resamples) < 1e-3 * static_cast<double>(trials), "uniform resampling < 0.1%");
  o.require(static_cast<double>(adv.resamples) < 1e-3 * static_cast<double>(adv.trials + adv.resamples),
            "adversarial resampling < 0.1%");
}

void ac4(Outcome& o) {
  const auto cert = separation_certificate(LatticeCellSet(Rational(10, 3), Rational(2, 5)), Rational(4));
  const auto& center = cert.cell(0, 0);
  const long side = 2 * cert.extent + 1;
  o.detail << " ledger " << cert.ledger.size() << " cells, central M^2 = " << to_string(center.max_dist_sq)
           << ", outer bound " << to_string(cert.outer_bound_sq);
  o.require(cert.pass, "certificate passes");
  o.require(cert.ledger.size() == static_cast<std::size_t>(side * side), "complete ledger");
  o.require(cert.outer_bound_sq >= cert.radius_sq, "cells outside the ledger miss the circle");
  o.require(center.max_dist_sq == Rational(32, 9), "central M^2 = 32/9");
  o.require(center.max_dist_sq < cert.radius_sq, "4 sqrt(2) / 3 < 2");
  const auto wide = separation_certificate(LatticeCellSet(Rational(10, 3), Rational(49, 100)), Rational(4));
  o.detail << ", half-width 49/100: " << (wide.pass ? "PASS" : "FAIL") << " with " << wide.violations().size()
           << " intersecting cells";
  o.require(!wide.pass, "half-width 49/100 fails");
}

void ac5(Outcome& o) {
  TrialSpec spec;
  std::uint64_t outside = 0, chain = 0, total = 0;
  double closest = 1.0;
  for (int n : {2, 3}) {
    spec.n = n;
    for (double eps : {paper_eps(n), sharp_eps(n)}) {
      for (std::uint64_t i = 0; i < 100000; ++i) {
        auto rng = trial_rng(static_cast<std::uint64_t>(n) * 1000 + (eps == paper_eps(n) ? 1 : 2), i);
        const OrientedBox raw = gen_unit_volume_box(rng, spec);
        std::uniform_real_distribution<double> frac(-1.0, 1.0);
        const double theta = 2.0 * std::asin(eps / 2.0) * frac(rng) * (1.0 - 1e-9);
        Rotation u = Rotation::planar(theta);
        if (n == 3) {
          std::normal_distribution<double> g;
          u = Rotation::axis_angle({g(rng), g(rng), g(rng)}, theta);
        }
        const OrientedBox box(raw.aligned(), u);
        if (!(op_norm_dist_identity(u) < eps)) continue;
        ++total;
        const PerturbationReport r = perturbation_bound_check(box, eps);
        if (!r.j_in_interval) ++outside;
        if (!r.pass) ++chain;
        closest = std::min({closest, std::abs(r.j_value) - 0.75, 1.25 - std::abs(r.j_value)});
      }
    }
  }
  const auto dis = certify_interval_disjointness();
  o.detail << " " << total << " boxes, " << outside << " with |J| outside (3/4, 5/4), closest approach "
           << closest << "; interval disjointness " << (dis.pass ? "exact PASS" : "FAIL");
  o.require(total == 400000, "all sampled rotations within eps");
  o.require(outside == 0, "|J| in (3/4, 5/4)");
  o.require(chain == 0, "bound chain holds termwise");
  o.require(dis.pass, "exact disjointness");
}

void ac6(Outcome& o) {
  TrialSpec spec;
  spec.mode = TrialMode::kBoxNd;
  spec.n = 2;
  spec.trials = 100000;
  spec.seed = 6;
  const auto two = make_coloring("nd", {2, EpsMode::kPaper});
  const SearchReport r2 = run_search(spec, *two);
  spec.n = 3;
  spec.trials = 10000;
  const auto three = make_coloring("nd", {3, EpsMode::kSharp});
  const SearchReport r3 = run_search(spec, *three);
  const std::uint64_t m = two->net()->size();
  o.detail << " n=2 eps=1/32 m=" << m << ": " << r2.counterexamples << " monochromatic, fast path "
           << r2.fast_path << "/" << r2.trials << "; n=3 sharp m=" << three->net()->size() << ": "
           << r3.counterexamples << " monochromatic, fast path " << r3.fast_path << "/" << r3.trials;
  o.require(two->net()->eps() == 1.0 / 32 && m == 202, "n=2 net has m = 202");
  o.require(r2.counterexamples == 0 && r3.counterexamples == 0, "zero monochromatic boxes");
  o.require(r2.unresolved == 0 && r2.fast_path == r2.trials, "every n=2 box resolved on the fast path");
  o.require(r2.band_failures == 0 && r3.band_failures == 0, "near-identity |J| band");
}

void ac7(Outcome& o) {
  std::uint64_t failures = 0;
  double worst_ratio = 0.0;
  double mean_gap = 0.0;
  for (int n : {2, 3}) {
    for (const NetSpec spec : {NetSpec::paper(n), NetSpec::sharp(n)}) {
      const RotationNet net(spec);
      std::mt19937_64 rng(70 + n);
      double sum = 0.0;
      for (int t = 0; t < 1000000; ++t) {
        const Rotation u = haar_random_rotation(n, rng);
        const double d = net.distance(net.lookup(u), u);
        worst_ratio = std::max(worst_ratio, d / spec.eps);
        if (!(d < spec.eps)) ++failures;
        if (n == 2 && spec.mode == EpsMode::kPaper) sum += op_norm_dist_identity(u);
      }
      if (n == 2 && spec.mode == EpsMode::kPaper) {
        const double mean = sum / 1e6;
        mean_gap = std::abs(mean / (4.0 / std::numbers::pi) - 1.0);
        o.detail << " n=2 mean ||U - I|| = " << mean << " vs 4/pi;";
      }
    }
  }
  o.detail << " 4x10^6 lookups, " << failures << " outside eps, worst distance/eps " << worst_ratio
           << ", mean relative gap " << mean_gap;
  o.require(failures == 0, "lookup within eps");
  o.require(mean_gap < 0.01, "mean within 1%");
}

void ac8(Outcome& o) {
  TrialSpec spec;
  spec.trials = 10000;
  spec.seed = 8;
  spec.stop_on_first = true;

  const auto q4 = make_quadrant4();
  const SearchReport q = run_search(spec, *q4);
  bool q_ok = q.counterexamples >= 1 && q4->check(q.witnesses.at(0).config).monochromatic &&
              q.witnesses[0].config.satisfies_hypothesis();

  spec.mode = TrialMode::kBoxNd;
  spec.n = 2;
  const auto coarse = make_coloring("coarse-slab", {2, EpsMode::kPaper});
  const SearchReport c = run_search(spec, *coarse);
  TrialSpec adv_spec = spec;
  adv_spec.restarts = 10;
  adv_spec.steps = 1000;
  const SearchReport ca = adversarial_search(adv_spec, *coarse);
  const bool c_ok = c.counterexamples >= 1 && ca.counterexamples >= 1;

  const auto flat = make_no_rotation_net(2);
  const SearchReport f = run_search(spec, *flat);
  bool f_ok = f.counterexamples >= 1;
  double tilt = 0.0;
  if (f_ok) {
    const auto& box = std::get<OrientedBox>(f.witnesses[0].config.shape);
    tilt = op_norm_dist_identity(box.rotation());
    // Direct recoloring: coordinate products of the vertices share a slab.
    int slab = -1;
    for (const auto& v : box_vertices(box)) {
      const int s = slab_index(v.point).index;
      if (slab >= 0 && s != slab) f_ok = false;
      slab = s;
    }
    f_ok = f_ok && std::abs(box.volume() - 1.0) < 1e-12 && tilt > paper_eps(2);
  }
  o.detail << " quadrant4 hit at trial " << (q.first_hit ? std::to_string(*q.first_hit) : "-")
           << "; coarse-slab uniform hit at " << (c.first_hit ? std::to_string(*c.first_hit) : "-")
           << ", adversarial at " << (ca.first_hit ? std::to_string(*ca.first_hit) : "-")
           << "; no-rotation-net hit at " << (f.first_hit ? std::to_string(*f.first_hit) : "-")
           << " with ||U - I|| = " << tilt;
  o.require(q_ok, "quadrant4 witness");
  o.require(c_ok, "coarse-slab witness");
  o.require(c_ok && *ca.first_hit <= *c.first_hit, "adversarial no slower than uniform");
  o.require(f_ok, "no-rotation-net rotated unit-volume witness");
}

void ac9(Outcome& o) {
  const SkeletonColorScheme two(2);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> d(-10, 10);
  std::uint64_t disagree = 0;
  for (int t = 0; t < 100000; ++t) {
    const Complex z(d(rng), d(rng));
    if (!(skeleton_color(two, z).cell == plane_color(z).cell)) ++disagree;
  }
  TrialSpec spec;
  spec.mode = TrialMode::kSkeleton;
  spec.trials = 100000;
  spec.seed = 9;
  std::uint64_t hits = 0, resamples = 0;
  for (int n : {3, 4}) {
    spec.n = n;
    const SearchReport r = run_search(spec, *make_skeleton_coloring(n));
    hits += r.counterexamples + r.unresolved;
    resamples += r.resamples;
  }
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    worst = std::max(worst, identity_trials(n, 10000, 900 + n, false)["power"]["max_rel_error"].get<double>());
  }
  o.detail << " scheme(2) vs plane25 disagreements " << disagree << "/10^5; skeleton n=3,4: " << hits
           << " monochromatic, resampled " << resamples << "; power identity max rel error " << worst;
  o.require(disagree == 0, "scheme(2) equals plane25");
  o.require(hits == 0, "zero monochromatic skeletons");
  o.require(worst <= 1e-8, "power identity within 1e-8");
}

void ac10(Outcome& o) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> d(-10, 10), lg(-3, 3);
  std::uint64_t bad = 0, boxes = 0;
  for (std::size_t n : {2, 3, 4}) {
    for (int t = 0; t < 10000; ++t) {
      RealVec q(n), a(n);
      for (std::size_t j = 0; j < n; ++j) {
        q[j] = d(rng);
        a[j] = std::exp(lg(rng));
      }
      const OrientedBox box(AlignedBox(q, a), testing_support::random_rotation(n, rng));
      const VertexParities p = vertex_parities(box);
      int plus = 0;
      bool alternate = true;
      for (std::uint32_t s = 0; s < p.parity.size(); ++s) {
        plus += p.parity[s] == 0;
        for (std::size_t j = 0; j < n; ++j) alternate = alternate && p.parity[s] != p.parity[s ^ (1u << j)];
      }
      ++boxes;
      if (plus != (1 << (n - 1)) || !alternate) ++bad;
    }
  }
  o.detail << " " << boxes << " boxes, " << bad << " with an uneven split or non-alternating edge";
  o.require(bad == 0, "even split and alternation");
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion("AC1", "alternating subset sum equals the permanent", 10, ac1);
  all &= run_criterion("AC2", "|I| = 2 on unit-area rectangles", 30, ac2);
  all &= run_criterion("AC3", "25-class plane coloring at desk scale", 300, ac3);
  all &= run_criterion("AC4", "exact separation certificate", 1, ac4);
  all &= run_criterion("AC5", "near-identity perturbation bound", 60, ac5);
  all &= run_criterion("AC6", "composite coloring of unit-volume boxes", 600, ac6);
  all &= run_criterion("AC7", "rotation net coverage", 60, ac7);
  all &= run_criterion("AC8", "falsification controls", 30, ac8);
  all &= run_criterion("AC9", "skeleton colorings", 120, ac9);
  all &= run_criterion("AC10", "vertex parity structure", 10, ac10);
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
