// Random and adversarial configuration generators and the search driver.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "monobox/colorings.hpp"
#include "monobox/config.hpp"

namespace monobox {

enum class TrialMode { kRect2d, kParallelogram2d, kBoxNd, kSkeleton };

const char* trial_mode_name(TrialMode m);
TrialMode parse_trial_mode(const std::string& name);

struct TrialSpec {
  TrialMode mode = TrialMode::kRect2d;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  /// Ratio of the longest to the shortest side, sampled log-uniformly.
  std::array<double, 2> aspect_range{1e-3, 1e3};
  /// Every coordinate of the base point is uniform in this range.
  std::array<double, 2> center_range{-10.0, 10.0};
  int n = 2;
  double margin_floor = 1e-9;
  unsigned threads = 0;  // 0: MONOBOX_THREADS or hardware concurrency
  std::uint64_t max_resamples = 1000;
  bool stop_on_first = false;
  // Adversarial search only.
  std::uint64_t restarts = 1000;
  std::uint64_t steps = 1000;

  void validate() const;
};

/// Per-trial stream derived from (seed, index) only.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

Parallelogram gen_unit_area_rectangle(std::mt19937_64& rng, const TrialSpec& spec);
Parallelogram gen_unit_side_product_parallelogram(std::mt19937_64& rng, const TrialSpec& spec);
OrientedBox gen_unit_volume_box(std::mt19937_64& rng, const TrialSpec& spec);
/// Throws std::runtime_error when no skeleton with pairwise separation
/// >= 1e-6 appears within spec.max_resamples draws.
Skeleton gen_unit_product_skeleton(std::mt19937_64& rng, const TrialSpec& spec);

Configuration generate(std::mt19937_64& rng, const TrialSpec& spec);

struct Counterexample {
  std::uint64_t trial = 0;
  Configuration config;
  ColorCheck check;
};

struct SearchReport {
  std::string mode;
  std::string coloring;
  bool theorem_mode = false;
  bool adversarial = false;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;  // configurations evaluated (accepted moves included)
  std::uint64_t resamples = 0;
  std::uint64_t unresolved = 0;  // trials that exhausted the resample budget
  std::uint64_t counterexamples = 0;
  std::optional<std::uint64_t> first_hit;
  std::vector<Counterexample> witnesses;  // first few, in trial order
  int min_minority = 0;
  double min_margin = 1.0;
  std::uint64_t fast_path = 0;
  std::uint64_t invariant_failures = 0;
  std::uint64_t band_failures = 0;
  // Adversarial only.
  std::uint64_t restarts = 0;
  std::uint64_t steps = 0;
  bool score_monotone = true;
  double wall_clock_seconds = 0.0;

  bool failure() const {
    return theorem_mode && (counterexamples > 0 || invariant_failures > 0 || band_failures > 0);
  }
};

inline constexpr std::size_t kMaxStoredWitnesses = 16;

/// Uniform random trials. The report does not depend on the thread count.
SearchReport run_search(const TrialSpec& spec, const Coloring& coloring);

/// Local descent on the minority score from random starting points.
SearchReport adversarial_search(const TrialSpec& spec, const Coloring& coloring);

nlohmann::json to_json(const SearchReport& r, bool include_wall_clock = true);
std::string to_csv(const SearchReport& r);

}  // namespace monobox
