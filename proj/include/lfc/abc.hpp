#pragma once

// Nearest-k rejection ABC.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lfc/density.hpp"
#include "lfc/model.hpp"

namespace lfc {

enum class AbcScaling { mad, none };

struct AbcResult {
    std::vector<std::size_t> rows;      // training rows, nearest first
    Eigen::MatrixXd accepted;           // k x p accepted parameters
    std::vector<double> distances;      // nondecreasing
    std::vector<double> scaling;        // divisor per used component (0 = dropped)
    std::vector<std::size_t> components;
    std::vector<std::string> warnings;
};

/// Keep the k training rows whose summaries (restricted to `components`, all
/// when empty) are closest to s_obs in scaled Euclidean distance. Ties go to
/// the lower row index. Under MAD scaling a zero MAD falls back to the SD and
/// a zero SD drops the component with a warning.
AbcResult rejection_abc(const TrainingSet& train, const SummaryVector& s_obs,
                        std::optional<std::vector<std::size_t>> components, std::size_t k, AbcScaling scaling);

/// Unweighted Gaussian KDE with the same bandwidth rule and grid layout as
/// the forest posterior densities.
DensityEstimate kde_from_samples(std::span<const double> samples, const GridSpec& spec);

}  // namespace lfc
