#pragma once

// Quantile regression forest.
//
// Trees are CART regression trees grown on without-replacement subsamples.
// A query point x receives training weights
//
//   w_i(x) = (1 / n_trees) * sum_trees [i in leaf(x)] / |leaf(x)|
//
// over in-bag leaf members, which define a weighted empirical conditional
// distribution of the response. Posterior densities are weighted Gaussian
// kernel estimates under those weights.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lfc/density.hpp"
#include "lfc/model.hpp"

namespace lfc {

struct ForestHyper {
    std::size_t n_trees = 500;
    std::size_t mtry = 0;  // 0 selects max(1, q / 3)
    std::size_t min_node_size = 5;
    double sample_fraction = 0.632;
    std::size_t max_depth = 0;  // 0 = unlimited

    std::size_t resolved_mtry(std::size_t q) const;
    void validate(std::size_t q) const;
    bool operator==(const ForestHyper&) const = default;
};

struct TreeNode {
    std::int32_t feature = -1;  // -1 marks a leaf
    double threshold = 0.0;     // x[feature] <= threshold goes left
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    std::uint32_t begin = 0;  // leaf members are leaf_rows[begin, end)
    std::uint32_t end = 0;

    bool is_leaf() const { return feature < 0; }
};

struct Tree {
    std::vector<TreeNode> nodes;
    std::vector<std::uint32_t> leaf_rows;
    std::vector<std::uint32_t> in_bag;  // sorted

    std::size_t leaf_of(std::span<const double> x) const;
};

struct SparseWeights {
    std::vector<std::uint32_t> rows;  // increasing
    std::vector<double> weights;
};

class Forest {
public:
    Forest() = default;
    Forest(std::vector<Tree> trees, std::vector<double> response, std::size_t n_features, ForestHyper hyper,
           std::uint64_t seed);

    const std::vector<Tree>& trees() const { return trees_; }
    const std::vector<double>& response() const { return response_; }
    std::size_t n_features() const { return n_features_; }
    std::size_t rows() const { return response_.size(); }
    const ForestHyper& hyper() const { return hyper_; }
    std::uint64_t seed() const { return seed_; }
    double response_min() const { return response_min_; }
    double response_max() const { return response_max_; }

    SparseWeights sparse_weights(std::span<const double> x) const;
    /// Mean of the per-tree leaf means.
    double predict_mean(std::span<const double> x) const;

private:
    std::vector<Tree> trees_;
    std::vector<double> response_;
    std::size_t n_features_ = 0;
    ForestHyper hyper_;
    std::uint64_t seed_ = 0;
    double response_min_ = 0.0;
    double response_max_ = 0.0;
};

/// Train on an n x q feature matrix and a response of length n.
Forest train_forest(const Eigen::MatrixXd& features, std::span<const double> response, const ForestHyper& hyper,
                    std::uint64_t seed, std::size_t threads = 0);

Forest train_forest(const TrainingSet& train, std::size_t target, const ForestHyper& hyper, std::uint64_t seed,
                    std::size_t threads = 0);

/// Dense weights over all training rows; nonnegative and summing to one.
std::vector<double> query_weights(const Forest& f, std::span<const double> x);

double conditional_cdf(const Forest& f, std::span<const double> x, double y);

/// Smallest training response y with CDF(y) >= level.
double conditional_quantile(const Forest& f, std::span<const double> x, double level);

/// Several quantile levels from one weight computation.
std::vector<double> conditional_quantiles(const Forest& f, std::span<const double> x, std::span<const double> levels);

/// Kernel bandwidth for a query: weighted Silverman rule with the degenerate
/// floor 1e-6 * range(training responses).
BandwidthInfo query_bandwidth(const Forest& f, const SparseWeights& w);

/// Posterior density on a grid derived from the query's own weights.
DensityEstimate posterior_density(const Forest& f, std::span<const double> x, const GridSpec& spec);

/// Posterior density on a caller-supplied grid (common-grid comparisons).
DensityEstimate posterior_density_on(const Forest& f, std::span<const double> x, std::span<const double> grid,
                                     double support_lo, double support_hi);

double pinball_loss(double y, double prediction, double level);

struct TuningResult {
    ForestHyper best;
    std::vector<double> losses;  // aligned with the candidate grid
};

/// k-fold cross-validated mean pinball loss over levels 0.1, ..., 0.9.
/// Exact ties prefer smaller mtry, then larger min_node_size, then grid order.
TuningResult tune_forest(const Eigen::MatrixXd& features, std::span<const double> response,
                         const std::vector<ForestHyper>& grid, std::size_t folds, std::uint64_t seed,
                         std::size_t threads = 0);

ForestHyper tune_hyperparameters(const TrainingSet& train, std::size_t target, const std::vector<ForestHyper>& grid,
                                 std::size_t folds, std::uint64_t seed, std::size_t threads = 0);

/// Versioned binary format ("LFCFORST", version 1).
void save_forest(const Forest& f, const std::filesystem::path& path);
Forest load_forest(const std::filesystem::path& path);

}  // namespace lfc
