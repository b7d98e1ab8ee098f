#pragma once

// Config-driven pipelines behind the command-line tool.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lfc/abc.hpp"
#include "lfc/diagnostics.hpp"
#include "lfc/forest.hpp"
#include "lfc/io.hpp"
#include "lfc/models.hpp"

namespace lfc {

struct TuningConfig {
    bool enabled = false;
    std::size_t folds = 5;
    std::size_t n_trees = 100;  // trees per candidate during cross-validation
    std::vector<std::size_t> mtry{0};
    std::vector<std::size_t> min_node_size{5};
    std::vector<double> sample_fraction{0.632};

    std::vector<ForestHyper> candidates(const ForestHyper& base) const;
};

struct ImputationConfig {
    std::string engine = "forest";  // linear-bayes | forest | identity
    std::size_t m = 100;
    std::size_t m_star = 100;
    std::size_t trees_per_fit = 20;
    std::size_t max_tree_rows = 10000;
};

struct AbcConfig {
    std::size_t n = 100000;
    std::size_t k = 500;
    std::vector<std::string> components;  // empty = all summaries
    AbcScaling scaling = AbcScaling::mad;
};

struct WindowConfig {
    std::size_t k = 4;
    std::size_t m = 100;
    std::size_t m_star = 100;
    std::size_t patch_pad = 8;
    std::string regressor = "plug-in-normal";  // plug-in-normal | qrf
    FeatureMap features = FeatureMap::levels_and_increments;
    double ridge = 1.0;
    double threshold = 0.05;
};

struct PartitionNames {
    std::vector<std::string> kept;
    std::vector<std::string> imputed;

    std::string label() const;
};

struct ExperimentConfig {
    std::string model = "poisson";
    ModelOptions options;
    PriorSpec prior;
    std::size_t n_train = 10000;
    std::vector<std::string> targets;  // empty = all parameters
    ForestHyper forest;
    TuningConfig tuning;
    std::vector<PartitionNames> partitions;
    ImputationConfig imputation;
    GridSpec grid;
    AbcConfig abc;
    WindowConfig window;
    std::uint64_t seed = 1;
    std::filesystem::path output = "out";
    std::optional<std::filesystem::path> observed;

    /// Relative paths are resolved against base_dir.
    static ExperimentConfig from_json(const Json& j, const std::filesystem::path& base_dir = {});
    static ExperimentConfig load(const std::filesystem::path& path);
    Json to_json() const;
    void validate() const;
    std::vector<std::string> target_names() const;
};

/// Observed raw data for the configured model: counts, diameters or series.
std::vector<double> load_observed(const ExperimentConfig& cfg, const std::optional<std::filesystem::path>& path);

/// Fills options.setar_threshold for the SETAR model from the observed series
/// when it is not configured.
ExperimentConfig resolve_model_options(ExperimentConfig cfg, const std::vector<double>& observed);

/// Summary vector of the observed raw data.
SummaryVector observed_summary(const ExperimentConfig& cfg, const std::vector<double>& observed);

/// Generates (or reuses a matching) train.csv + train.json in the output dir.
TrainingSet cmd_gen_train(const ExperimentConfig& cfg, bool reuse = true);

/// Tunes one forest per target; writes tuning_<target>.json.
std::vector<ForestHyper> cmd_tune(const ExperimentConfig& cfg, const TrainingSet& train);

/// Trains one forest per target (tuned when enabled); writes forest_<target>.bin.
std::vector<Forest> cmd_train(const ExperimentConfig& cfg, const TrainingSet& train);

/// Rejection ABC on its own prior sample of size abc.n; writes accepted
/// samples and one density per parameter.
AbcResult cmd_abc(const ExperimentConfig& cfg, const std::vector<double>& observed);

struct DiagnoseResult {
    std::string target;
    std::string partition;
    ConflictReport report;
    DensityEstimate refit;  // forest retrained on the kept summaries only
};

/// Full, subset and refit posteriors plus the calibrated report for every
/// (target, partition). Imputations are drawn once per partition and shared
/// by all targets.
std::vector<DiagnoseResult> cmd_diagnose(const ExperimentConfig& cfg, const std::vector<double>& observed);

/// Window scan of an observed count series, one report per target. The
/// regressor sees the series on the log(1 + d) scale.
std::vector<WindowScanReport> cmd_window_scan(const ExperimentConfig& cfg, const std::vector<double>& observed);

}  // namespace lfc
