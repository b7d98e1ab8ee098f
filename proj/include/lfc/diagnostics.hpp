#pragma once

// Subset posteriors by deletion and imputation, the maximum log relative
// belief statistic, its conditional calibration, and the window scan over a
// raw time series.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lfc/density.hpp"
#include "lfc/forest.hpp"
#include "lfc/imputation.hpp"
#include "lfc/model.hpp"

namespace lfc {

/// A conditional-density regressor for one scalar parameter.
class Regressor {
public:
    virtual ~Regressor() = default;
    virtual std::string name() const = 0;
    virtual std::size_t feature_dim() const = 0;
    virtual double support_lo() const = 0;
    virtual double support_hi() const = 0;
    /// Grid shared by all densities compared against each other; `queries`
    /// holds one feature vector per row.
    virtual std::vector<double> common_grid(const Eigen::MatrixXd& queries, const GridSpec& spec) const = 0;
    virtual DensityEstimate density_on(std::span<const double> x, std::span<const double> grid) const = 0;
};

/// Forest posterior densities. The common grid is laid out from the pooled
/// forest weights of all queries.
class QrfRegressor final : public Regressor {
public:
    QrfRegressor(const Forest& forest, double support_lo, double support_hi)
        : forest_(forest), lo_(support_lo), hi_(support_hi) {}
    std::string name() const override { return "qrf"; }
    std::size_t feature_dim() const override { return forest_.n_features(); }
    double support_lo() const override { return lo_; }
    double support_hi() const override { return hi_; }
    std::vector<double> common_grid(const Eigen::MatrixXd& queries, const GridSpec& spec) const override;
    DensityEstimate density_on(std::span<const double> x, std::span<const double> grid) const override;

private:
    const Forest& forest_;
    double lo_;
    double hi_;
};

enum class FeatureMap { identity, levels_and_increments };

/// Ridge point predictor with a plug-in normal predictive N(f(x), s^2). The
/// densities are not truncated to the support, which must be finite; the
/// common grid spans the support.
class PlugInNormalRegressor final : public Regressor {
public:
    PlugInNormalRegressor(const Eigen::MatrixXd& features, std::span<const double> response, double support_lo,
                          double support_hi, FeatureMap map = FeatureMap::identity, double ridge = 1e-3);
    std::string name() const override { return "plug-in-normal"; }
    std::size_t feature_dim() const override { return dim_; }
    double support_lo() const override { return lo_; }
    double support_hi() const override { return hi_; }
    std::vector<double> common_grid(const Eigen::MatrixXd& queries, const GridSpec& spec) const override;
    DensityEstimate density_on(std::span<const double> x, std::span<const double> grid) const override;

    double predict(std::span<const double> x) const;
    double residual_sd() const { return sd_; }

private:
    Eigen::VectorXd expand(std::span<const double> x) const;

    std::size_t dim_;
    FeatureMap map_;
    Eigen::VectorXd center_;
    Eigen::VectorXd scale_;
    Eigen::VectorXd beta_;
    double intercept_ = 0.0;
    double sd_ = 1.0;
    double lo_;
    double hi_;
};

struct RelativeBelief {
    double value = 0.0;
    double argmax = 0.0;
    bool floored = false;  // denominator floor active at the maximiser
};

/// sup over grid points inside the denominator's support of
/// log(p_num / max(p_den, 1e-12 * max p_den)).
RelativeBelief max_log_relative_belief_detail(const DensityEstimate& p_num, const DensityEstimate& p_den);
double max_log_relative_belief(const DensityEstimate& p_num, const DensityEstimate& p_den);

/// (1 / (alpha - 1)) log of the trapezoid integral of (p_num / p_den)^(alpha - 1) p_num.
double renyi_divergence(const DensityEstimate& p_num, const DensityEstimate& p_den, double alpha);

/// Average of the regressor densities at the rows of `completed` on `grid`.
/// Rows with non-finite entries count as failed imputations; more than 20%
/// failures raise NumericalError.
DensityEstimate average_density(const Regressor& reg, const Eigen::MatrixXd& completed,
                                std::span<const double> grid, std::size_t* failures = nullptr);

struct SubsetPosterior {
    DensityEstimate full;
    DensityEstimate subset;
    Eigen::MatrixXd imputations;
    std::size_t failures = 0;
};

SubsetPosterior subset_posterior(const Regressor& reg, std::span<const double> s_obs, const PartitionSpec& part,
                                 const Imputer& engine, std::size_t m, const GridSpec& spec, std::uint64_t seed);

struct ConflictReport {
    double r_obs = 0.0;
    double r_obs_argmax = 0.0;
    bool r_obs_floored = false;
    std::vector<double> r_ref;
    std::size_t ref_floored = 0;
    double p_tilde = 1.0;
    std::size_t m = 0;
    std::size_t m_star = 0;
    std::size_t failures = 0;
    PartitionSpec partition;
    DensityEstimate full;
    DensityEstimate subset;
};

/// Statistic and calibration from already drawn imputations: `subset_draws`
/// (M rows) define the subset posterior; each of the `reference_draws`
/// (M* rows) is a pseudo-observation compared against that same subset
/// posterior.
ConflictReport evaluate_conflict(const Regressor& reg, std::span<const double> s_obs, const PartitionSpec& part,
                                 const Eigen::MatrixXd& subset_draws, const Eigen::MatrixXd& reference_draws,
                                 const GridSpec& spec);

/// Draws M subset imputations from seed stream 1 and M* fresh reference
/// imputations from stream 2, then calls evaluate_conflict.
ConflictReport calibrate_conflict(const Regressor& reg, std::span<const double> s_obs, const PartitionSpec& part,
                                  const Imputer& engine, std::size_t m, std::size_t m_star, const GridSpec& spec,
                                  std::uint64_t seed);

/// Seeds used by calibrate_conflict for the two imputation sets.
std::uint64_t subset_seed(std::uint64_t seed);
std::uint64_t reference_seed(std::uint64_t seed);

struct Window {
    std::size_t start = 0;  // 0-based
    std::size_t width = 0;
};

/// All windows {l, ..., l + k - 1} inside [0, T) containing t (0-based).
std::vector<Window> window_set(std::size_t t, std::size_t k, std::size_t length);

struct WindowScanReport {
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t m_star = 0;
    std::vector<double> r_obs;            // per time point
    std::vector<double> p_tilde;          // per time point
    std::vector<std::size_t> n_windows;   // windows used per time point
    std::vector<double> window_r_obs;     // per window start
    std::vector<char> window_ok;          // per window start
    std::vector<std::string> notes;

    std::vector<std::size_t> flagged(double threshold = 0.05) const;
};

/// Window-averaged diagnostic. Each window start l is deleted in turn and
/// imputed (M + M* draws of the window engine); the first M draws give the
/// subset posterior, the remaining M* the reference statistics. A time point
/// averages the statistics of the windows containing it, and the reference
/// average for replicate i uses replicate i of each of those windows.
WindowScanReport window_scan(const Regressor& reg, std::span<const double> series, const Ar1Model& ar1,
                             std::size_t k, std::size_t m, std::size_t m_star, const GridSpec& spec,
                             std::uint64_t seed, std::size_t patch_pad = 8);

}  // namespace lfc
