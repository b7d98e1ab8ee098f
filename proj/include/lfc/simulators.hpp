#pragma once

// The three simulators: i.i.d. Poisson counts, the stereological-inclusion
// surrogate (Poisson count of generalized-Pareto diameters above a threshold)
// and the Ricker population model observed through Poisson counts.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lfc/model.hpp"
#include "lfc/rng.hpp"

namespace lfc {

/// Poisson variate; inversion below mean 30, PTRS transformed rejection above.
double poisson_draw(double mean, Rng& rng);

std::vector<double> poisson_simulate(double eta, std::size_t n, Rng& rng);
std::vector<double> poisson_simulate(double eta, std::size_t n, std::uint64_t seed);

/// (sample mean, unbiased sample variance). Needs at least two counts.
SummaryVector poisson_summaries(std::span<const double> y);

/// Type-7 quantile (linear interpolation of order statistics) of sorted data.
double quantile_type7(std::span<const double> sorted, double q);

struct GpdParams {
    double scale = 1.0;      // sigma > 0
    double shape = 0.0;      // xi
    double threshold = 5.0;  // u

    void validate() const;
    /// Upper end of the support, +inf when shape >= 0.
    double upper_endpoint() const;
    /// Inverse CDF at probability level p in [0, 1).
    double inverse_cdf(double p) const;
    double cdf(double x) const;
};

std::vector<double> gpd_sample(const GpdParams& g, std::size_t n, Rng& rng);
std::vector<double> gpd_sample(const GpdParams& g, std::size_t n, std::uint64_t seed);

/// Quantile levels used for the diameter summaries.
inline constexpr double kStereoLevels[] = {0.0, 0.05, 0.1, 0.2, 0.8, 0.9, 0.95, 1.0};

/// Surrogate inclusion model: K ~ Poisson(lambda) diameters, each threshold +
/// GPD(sigma, xi). theta = (lambda, sigma, xi).
Dataset stereo_simulate(std::span<const double> theta, Rng& rng, double threshold = 5.0);

/// (N, quantiles at kStereoLevels); invalid for an empty sample.
SummaryVector stereo_summaries(std::span<const double> diameters);

struct RickerConfig {
    std::size_t length = 250;   // T
    double initial = 1.0;       // N0
    std::size_t burn_in = 50;

    void validate() const;
};

/// theta = (log phi, log r, log sigma). Returns the last T of burn_in + T
/// Poisson(phi N_t) observations, or an empty series if the latent path
/// leaves (0, inf).
std::vector<double> ricker_simulate(std::span<const double> theta, const RickerConfig& cfg, Rng& rng);

/// Ricker variant whose growth rate depends on the latent level: log r is
/// used while phi * N_t < switch_count, log_r_upper otherwise.
std::vector<double> ricker_simulate_switching(std::span<const double> theta, double log_r_upper,
                                              double switch_count, const RickerConfig& cfg, Rng& rng);

}  // namespace lfc
