#include "monobox/permanent.hpp"

#include <cctype>
#include <cmath>
#include <random>

namespace monobox {

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  auto is_integer = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("expected an exact rational P/Q, got '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class q{std::string(den)};
  if (q == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("exact_rational: non-finite input");
  return Rational(x);
}

mpz_class floor_rational(const Rational& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Rational frac_rational(const Rational& r) { return r - Rational(floor_rational(r)); }

}  // namespace monobox

namespace monobox {

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(1, 9);
  const long q = den(rng);
  std::uniform_int_distribution<long> num(-10 * q, 10 * q);
  return ratio(num(rng), q);
}

}  // namespace

nlohmann::json identity_trials(int n, std::uint64_t trials, std::uint64_t seed, bool exact) {
  if (n < 1 || n > 12) throw std::invalid_argument("identity_trials: n must be in [1, 12]");
  if (trials < 1) throw std::invalid_argument("identity_trials: trials must be positive");
  std::mt19937_64 rng(seed);
  const auto dim = static_cast<std::size_t>(n);
  double perm_abs = 0.0, perm_rel = 0.0, pow_abs = 0.0, pow_rel = 0.0;
  std::uint64_t perm_mismatch = 0, pow_mismatch = 0;
  if (exact) {
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::vector<Rational> p(dim);
      SquareMatrix<Rational> v(dim);
      for (auto& x : p) x = random_rational(rng);
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) v(j, k) = random_rational(rng);
      if (alternating_subset_sum<Rational>(p, v) != permanent(v)) ++perm_mismatch;
      GaussianRational z(random_rational(rng), random_rational(rng));
      std::vector<GaussianRational> u(dim);
      for (auto& x : u) x = GaussianRational(random_rational(rng), random_rational(rng));
      const auto c = complex_power_identity_check<GaussianRational>(z, u);
      if (!(c.lhs == c.rhs)) ++pow_mismatch;
    }
  } else {
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::vector<double> p(dim);
      SquareMatrix<double> v(dim);
      for (auto& x : p) x = d(rng);
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k) v(j, k) = d(rng);
      const auto c = identity_check<double>(p, v);
      perm_abs = std::max(perm_abs, c.abs_error);
      perm_rel = std::max(perm_rel, c.rel_error);
      const Complex z(d(rng), d(rng));
      std::vector<Complex> u(dim);
      for (auto& x : u) x = Complex(d(rng), d(rng));
      const auto pc = complex_power_identity_check<Complex>(z, u);
      pow_abs = std::max(pow_abs, pc.abs_error);
      pow_rel = std::max(pow_rel, pc.rel_error);
    }
  }
  nlohmann::json out{{"n", n}, {"trials", trials}, {"seed", seed}, {"exact", exact}};
  if (exact) {
    out["subset_sum"] = {{"mismatches", perm_mismatch}};
    out["power"] = {{"mismatches", pow_mismatch}};
  } else {
    out["subset_sum"] = {{"max_abs_error", perm_abs}, {"max_rel_error", perm_rel}};
    out["power"] = {{"max_abs_error", pow_abs}, {"max_rel_error", pow_rel}};
  }
  return out;
}

}  // namespace monobox
