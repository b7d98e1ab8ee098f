#pragma once

// Multiple-imputation engines for deleted summary blocks and deleted windows
// of a time series.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lfc/model.hpp"

namespace lfc {

struct ImputationRequest {
    std::reference_wrapper<const Eigen::MatrixXd> reference;  // n x q complete rows
    std::vector<double> target;                               // length q; missing entries ignored
    std::vector<std::size_t> missing;                         // deleted indices
    std::size_t m = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

struct ImputationResult {
    Eigen::MatrixXd completed;  // m x q; observed entries copied from the target
    std::vector<std::string> notes;
};

/// Chained Bayesian linear regression imputation. Each deleted column is
/// regressed on all other columns over the reference rows under the
/// noninformative prior; sigma^2 is drawn from its scaled inverse chi-square
/// posterior, the coefficients from their conditional normal, and the value
/// is the linear predictor plus N(0, sigma^2) noise. Several deleted columns
/// are cycled for 5 sweeps starting from the reference means.
ImputationResult impute_linear_bayes(const ImputationRequest& req);

/// Iterative random-forest imputation with predictive mean matching. Every
/// imputation fits its own forests (trees_per_fit trees per deleted column);
/// the target is initialised at the reference medians and each sweep replaces
/// a deleted value by the observed value of one of the 5 reference rows whose
/// out-of-bag predictions are nearest the target's prediction. Sweeps stop
/// when the target's predictions no longer change, or after 10. Each tree
/// is grown on at most max_tree_rows reference rows.
ImputationResult impute_forest(const ImputationRequest& req, std::size_t trees_per_fit = 20,
                               std::size_t threads = 0, std::size_t max_tree_rows = 10000);

/// Stationary Gaussian AR(1).
struct Ar1Model {
    double mean = 0.0;
    double phi = 0.0;
    double innovation_var = 1.0;

    double marginal_var() const { return innovation_var / (1.0 - phi * phi); }
};

/// Sample mean, lag-1 autocorrelation clamped to [-0.99, 0.99], and
/// innovation variance = sample variance * (1 - phi^2).
Ar1Model fit_ar1(std::span<const double> x);

/// Autocorrelation clamp applied by fit_ar1.
double clamp_ar1_phi(double phi);

struct Ar1Conditional {
    std::vector<std::size_t> conditioning;  // patch indices outside the window
    Eigen::MatrixXd mean_map;                // window x conditioning: Sigma_WO Sigma_OO^{-1}
    Eigen::MatrixXd covariance;              // Sigma_WW - Sigma_WO Sigma_OO^{-1} Sigma_OW
    bool jittered = false;
};

/// Conditional law of the window values given the rest of the patch under
/// the stationary covariance sigma_marg^2 * phi^|i - j|. Indices are time
/// positions; the window must be a subset of the patch.
Ar1Conditional ar1_conditional(const Ar1Model& model, std::span<const std::size_t> patch,
                               std::span<const std::size_t> window);

/// Natural cubic spline through (x, y), x strictly increasing, evaluated at
/// `at`. Outside the knot range the spline continues linearly.
std::vector<double> natural_cubic_spline(std::span<const double> x, std::span<const double> y,
                                         std::span<const double> at);

struct WindowImputation {
    std::size_t start = 0;
    std::size_t width = 0;
    std::vector<double> mean;  // conditional mean over the window
    Eigen::MatrixXd draws;     // m x width
    bool jittered = false;
};

/// Impute series[start, start + width). The conditional mean is a natural
/// cubic spline through every other point; a window touching either end of
/// the series takes the single available neighbouring value instead. Noise
/// is drawn from the AR(1) conditional covariance of the window given the
/// rest of the patch (window padded by patch_pad each side, clipped).
WindowImputation impute_window(std::span<const double> series, const Ar1Model& model, std::size_t start,
                               std::size_t width, std::size_t patch_pad, std::size_t m, std::uint64_t seed);

WindowImputation impute_window(std::span<const double> series, std::size_t start, std::size_t width,
                               std::size_t patch_pad, std::size_t m, std::uint64_t seed);

/// An engine producing m completed copies of an observed vector with the
/// indices_b block replaced.
class Imputer {
public:
    virtual ~Imputer() = default;
    virtual std::string name() const = 0;
    virtual Eigen::MatrixXd impute(std::span<const double> observed, const PartitionSpec& part, std::size_t m,
                                   std::uint64_t seed) const = 0;
};

class LinearBayesImputer final : public Imputer {
public:
    explicit LinearBayesImputer(const Eigen::MatrixXd& reference) : reference_(reference) {}
    std::string name() const override { return "linear-bayes"; }
    Eigen::MatrixXd impute(std::span<const double> observed, const PartitionSpec& part, std::size_t m,
                           std::uint64_t seed) const override;

private:
    const Eigen::MatrixXd& reference_;
};

class ForestImputer final : public Imputer {
public:
    ForestImputer(const Eigen::MatrixXd& reference, std::size_t trees_per_fit = 20, std::size_t max_tree_rows = 10000)
        : reference_(reference), trees_(trees_per_fit), max_rows_(max_tree_rows) {}
    std::string name() const override { return "forest"; }
    Eigen::MatrixXd impute(std::span<const double> observed, const PartitionSpec& part, std::size_t m,
                           std::uint64_t seed) const override;

private:
    const Eigen::MatrixXd& reference_;
    std::size_t trees_;
    std::size_t max_rows_;
};

/// Window engine for raw series; indices_b must be one contiguous window.
class WindowImputer final : public Imputer {
public:
    WindowImputer(Ar1Model model, std::size_t patch_pad = 8) : model_(model), patch_pad_(patch_pad) {}
    std::string name() const override { return "window"; }
    Eigen::MatrixXd impute(std::span<const double> observed, const PartitionSpec& part, std::size_t m,
                           std::uint64_t seed) const override;

private:
    Ar1Model model_;
    std::size_t patch_pad_;
};

/// Returns the observed values unchanged; the degenerate engine.
class IdentityImputer final : public Imputer {
public:
    std::string name() const override { return "identity"; }
    Eigen::MatrixXd impute(std::span<const double> observed, const PartitionSpec& part, std::size_t m,
                           std::uint64_t seed) const override;
};

}  // namespace lfc
