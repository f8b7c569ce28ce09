#pragma once

#include <optional>
#include <span>
#include <vector>

#include "uavsim/rng.hpp"

namespace uavsim {

/// Median; even counts give the midpoint of the two central values.
std::optional<double> median(std::vector<double> values);

/// Linear-interpolation percentile of a sorted sample, q in [0, 1].
double percentile_sorted(std::span<const double> sorted, double q);

/// Fraction of `sorted` that is <= x.
double ecdf_at(std::span<const double> sorted, double x);

/// Two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)|.
double ks_distance(std::vector<double> a, std::vector<double> b);

/// Right-continuous empirical CDF at its distinct sample values, with an
/// optional confidence band per evaluation point.
struct CdfCurve {
  std::vector<double> x;
  std::vector<double> f;
  std::vector<double> band_lo;
  std::vector<double> band_hi;
};

CdfCurve pooled_cdf(std::vector<double> samples);

inline constexpr int kBandPoints = 101;

/// Percentile bootstrap band for the empirical CDF on kBandPoints evenly
/// spaced abscissae spanning [min, max] of the data. `f` holds the point
/// estimate at the same abscissae.
CdfCurve bootstrap_band(std::vector<double> samples, int resamples,
                        double alpha, Rng& rng);

/// Band using the fixed bootstrap stream derive_seed("bootstrap", 0, 0, 0).
CdfCurve bootstrap_band(std::vector<double> samples, int resamples = 1000,
                        double alpha = 0.05);

}  // namespace uavsim
