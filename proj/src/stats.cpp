#include "uavsim/stats.hpp"

#include <algorithm>
#include <cmath>

#include "uavsim/scenario.hpp"

namespace uavsim {

std::optional<double> median(std::vector<double> values) {
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double percentile_sorted(std::span<const double> sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double ecdf_at(std::span<const double> sorted, double x) {
  const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
  return static_cast<double>(it - sorted.begin()) /
         static_cast<double>(sorted.size());
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  // The supremum is attained at a sample point of either set.
  for (const auto* set : {&a, &b}) {
    for (double x : *set) d = std::max(d, std::abs(ecdf_at(a, x) - ecdf_at(b, x)));
  }
  return d;
}

CdfCurve pooled_cdf(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  CdfCurve c;
  const auto n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i + 1 < samples.size() && samples[i + 1] == samples[i]) continue;
    c.x.push_back(samples[i]);
    c.f.push_back(static_cast<double>(i + 1) / n);
  }
  return c;
}

CdfCurve bootstrap_band(std::vector<double> samples, int resamples,
                        double alpha, Rng& rng) {
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  if (n == 0) return {};
  const double lo = samples.front();
  const double hi = samples.back();

  CdfCurve c;
  c.x.resize(kBandPoints);
  for (int j = 0; j < kBandPoints; ++j) {
    c.x[j] = lo + (hi - lo) * j / (kBandPoints - 1);
    c.f.push_back(ecdf_at(samples, c.x[j]));
  }

  // per_point[j][b] = F_b(x_j)
  std::vector<std::vector<double>> per_point(kBandPoints);
  for (auto& v : per_point) v.reserve(static_cast<std::size_t>(resamples));
  std::vector<double> draw(n);
  for (int b = 0; b < resamples; ++b) {
    for (auto& v : draw) v = samples[rng.index(n)];
    std::sort(draw.begin(), draw.end());
    for (int j = 0; j < kBandPoints; ++j) per_point[j].push_back(ecdf_at(draw, c.x[j]));
  }
  for (auto& v : per_point) {
    std::sort(v.begin(), v.end());
    c.band_lo.push_back(percentile_sorted(v, alpha / 2.0));
    c.band_hi.push_back(percentile_sorted(v, 1.0 - alpha / 2.0));
  }
  return c;
}

CdfCurve bootstrap_band(std::vector<double> samples, int resamples,
                        double alpha) {
  Rng rng(derive_seed("bootstrap", 0, 0, 0));
  return bootstrap_band(std::move(samples), resamples, alpha, rng);
}

}  // namespace uavsim
