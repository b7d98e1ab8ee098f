#pragma once

// Densities on fixed grids and the weighted Gaussian kernel estimator used
// for every posterior density in the library.

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace lfc {

/// How a density grid is laid out around a weighted sample.
struct GridSpec {
    std::size_t points = 512;
    double lower_level = 0.001;  // weighted quantile levels spanned
    double upper_level = 0.999;
    double expand = 0.1;         // fraction of the quantile range added per side
    double support_lo = -std::numeric_limits<double>::infinity();
    double support_hi = std::numeric_limits<double>::infinity();

    void validate() const;
};

struct DensityEstimate {
    std::vector<double> grid;    // strictly increasing
    std::vector<double> values;  // >= 0
    double support_lo = -std::numeric_limits<double>::infinity();
    double support_hi = std::numeric_limits<double>::infinity();
    double bandwidth = 0.0;      // 0 when not a kernel estimate
    bool normalized = true;

    double integral() const;
    /// Linear interpolation, zero outside the grid.
    double at(double x) const;
    void normalize();
};

std::vector<double> linspace(double lo, double hi, std::size_t n);
double trapezoid(std::span<const double> grid, std::span<const double> values);

/// Smallest value whose cumulative weight reaches `level` (weights need not
/// be normalised).
double weighted_quantile(std::span<const double> values, std::span<const double> weights, double level);

struct BandwidthInfo {
    double bandwidth = 0.0;
    double effective_n = 0.0;
    double spread = 0.0;  // min(weighted SD, weighted IQR / 1.349)
    bool floored = false;
};

/// Weighted Silverman rule h = 1.06 * spread * n_eff^(-1/5), with
/// n_eff = 1 / sum(w^2) for normalised weights. A zero spread falls back to
/// floor_bandwidth.
BandwidthInfo silverman_bandwidth(std::span<const double> values, std::span<const double> weights,
                                  double floor_bandwidth);

/// Grid of spec.points points spanning the weighted quantile range expanded
/// by spec.expand on each side, clipped to the support.
std::vector<double> grid_for_sample(std::span<const double> values, std::span<const double> weights,
                                    const GridSpec& spec, double min_half_width);

/// Weighted Gaussian KDE evaluated on `grid`, truncated to the support and
/// renormalised by the trapezoid rule.
DensityEstimate weighted_kde(std::span<const double> values, std::span<const double> weights,
                             std::span<const double> grid, double bandwidth, double support_lo,
                             double support_hi);

/// Half the trapezoid integral of |p - q| on a shared grid.
double total_variation(const DensityEstimate& p, const DensityEstimate& q);

/// True when both densities sit on bit-identical grids.
bool same_grid(const DensityEstimate& p, const DensityEstimate& q);

}  // namespace lfc
