#include "toric/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace toric {
namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Sorted draws in (lo, hi) whose consecutive gaps (including to the ends) exceed min_gap.
std::vector<double> sorted_draws(Rng& rng, int k, double lo, double hi, double min_gap) {
  for (;;) {
    std::vector<double> x(static_cast<std::size_t>(k));
    for (double& v : x) v = uniform(rng, lo, hi);
    std::sort(x.begin(), x.end());
    bool ok = k == 0 || (x.front() - lo > min_gap && hi - x.back() > min_gap);
    for (std::size_t i = 1; ok && i < x.size(); ++i) ok = x[i] - x[i - 1] > min_gap;
    if (ok) return x;
  }
}

std::vector<Point> star_vertices(Rng& rng) {
  const int k = uniform_int(rng, 1, 8);
  const auto ang = sorted_draws(rng, k, 0.0, std::numbers::pi / 2, 0.02);
  std::vector<Point> v{{uniform(rng, 0.6, 1.4), 0.0}};
  for (double t : ang) {
    const double r = uniform(rng, 0.6, 1.4);
    v.push_back({r * std::cos(t), r * std::sin(t)});
  }
  v.push_back({0.0, uniform(rng, 0.6, 1.4)});
  return v;
}

}  // namespace

MomentProfile random_star_polygon(Rng& rng) {
  for (;;) {
    try {
      return MomentProfile::from_vertices(star_vertices(rng)).with_family("random_star", {});
    } catch (const Error&) {
    }
  }
}

MomentProfile random_grid_polygon(Rng& rng) {
  for (;;) {
    auto v = star_vertices(rng);
    for (Point& q : v) q = {std::round(16.0 * q.w1) / 16.0, std::round(16.0 * q.w2) / 16.0};
    try {
      return MomentProfile::from_vertices(std::move(v)).with_family("random_grid", {});
    } catch (const Error&) {
    }
  }
}

MomentProfile random_monotone_profile(Rng& rng) {
  const int k = uniform_int(rng, 4, 12);
  const double a = uniform(rng, 0.5, 2.0);
  const double b = uniform(rng, 0.5, 2.0);
  auto w1 = sorted_draws(rng, k - 2, 0.0, a, 1e-3 * a);
  auto w2 = sorted_draws(rng, k - 2, 0.0, b, 1e-3 * b);
  std::reverse(w1.begin(), w1.end());
  std::vector<Point> v{{a, 0.0}};
  for (std::size_t i = 0; i < w1.size(); ++i) v.push_back({w1[i], w2[i]});
  v.push_back({0.0, b});
  return MomentProfile::from_vertices(std::move(v)).with_family("random_monotone", {});
}

MomentProfile random_convex4d_profile(Rng& rng) {
  const int k = uniform_int(rng, 4, 12);
  const double a = uniform(rng, 0.5, 2.0);
  const double b = uniform(rng, 0.5, 2.0);
  // Step directions with increasing angle in (pi/2, pi) give a left-turning chain
  // from (sqrt a, 0) up and to the left; diagonal scaling keeps it concave.
  const auto ang = sorted_draws(rng, k - 1, std::numbers::pi / 2, std::numbers::pi, 0.01);
  std::vector<Point> steps;
  Point sum{};
  for (double t : ang) {
    const double len = uniform(rng, 0.2, 1.0);
    steps.push_back(len * Point{std::cos(t), std::sin(t)});
    sum = sum + steps.back();
  }
  const double sx = std::sqrt(a) / -sum.w1;
  const double sy = std::sqrt(b) / sum.w2;
  std::vector<Point> mu{{std::sqrt(a), 0.0}};
  for (std::size_t i = 0; i + 1 < steps.size(); ++i)
    mu.push_back(mu.back() + Point{sx * steps[i].w1, sy * steps[i].w2});
  std::vector<Point> v = square_transform(mu);
  v.front() = {a, 0.0};
  v.push_back({0.0, b});
  return MomentProfile::from_vertices(std::move(v)).with_family("random_convex4d", {});
}

namespace {

template <class Gen>
std::vector<MomentProfile> corpus(std::uint64_t seed, int count, Gen gen) {
  Rng rng(seed);
  std::vector<MomentProfile> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) out.push_back(gen(rng));
  return out;
}

}  // namespace

std::vector<MomentProfile> star_corpus(std::uint64_t seed, int count) {
  return corpus(seed, count, [i = 0](Rng& rng) mutable {
    return (i++ % 3 == 2) ? random_grid_polygon(rng) : random_star_polygon(rng);
  });
}

std::vector<MomentProfile> monotone_corpus(std::uint64_t seed, int count) {
  return corpus(seed, count, random_monotone_profile);
}

std::vector<MomentProfile> convex4d_corpus(std::uint64_t seed, int count) {
  return corpus(seed, count, random_convex4d_profile);
}

std::vector<InvariantReport> batch_reports_serial(const std::vector<MomentProfile>& ps) {
  std::vector<InvariantReport> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(report(p));
  return out;
}

std::vector<InvariantReport> batch_reports_parallel(const std::vector<MomentProfile>& ps) {
  std::vector<InvariantReport> out(ps.size());
  const auto n = static_cast<long long>(ps.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = report(ps[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace toric
