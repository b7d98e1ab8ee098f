#pragma once

// Generative-model interface and the data types shared by every stage:
// priors, parameter draws, datasets, summary vectors, training sets and
// summary partitions.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lfc/rng.hpp"

namespace lfc {

enum class PriorKind { gamma, uniform };

/// One-dimensional prior: gamma(shape, rate) or uniform(lo, hi).
struct ParamPrior {
    std::string name;
    PriorKind kind = PriorKind::uniform;
    double a = 0.0;  // gamma shape or uniform lower bound
    double b = 1.0;  // gamma rate or uniform upper bound

    static ParamPrior gamma(std::string name, double shape, double rate);
    static ParamPrior uniform(std::string name, double lo, double hi);

    void validate() const;
    double lower() const;
    double upper() const;
    bool contains(double v) const;
    double sample(Rng& rng) const;
};

/// Independent product prior over the model parameters.
struct PriorSpec {
    std::vector<ParamPrior> params;

    void validate() const;
    std::size_t dim() const { return params.size(); }
    std::vector<std::string> names() const;
    std::size_t index_of(std::string_view name) const;
    bool contains(std::span<const double> values) const;
};

struct ParameterDraw {
    std::vector<double> values;
};

enum class DataKind { counts, diameters, series };

struct Dataset {
    DataKind kind = DataKind::series;
    std::vector<double> values;
};

struct SummaryVector {
    std::vector<double> values;
    bool valid = true;

    static SummaryVector invalid(std::size_t q);
    std::size_t size() const { return values.size(); }
};

/// Split of summary indices {0..q-1} into a kept block A and a deleted block B.
struct PartitionSpec {
    std::vector<std::size_t> indices_a;
    std::vector<std::size_t> indices_b;

    /// Throws ConfigError unless A and B are nonempty, disjoint and cover 0..q-1.
    void validate(std::size_t q) const;

    static PartitionSpec from_names(const std::vector<std::string>& summary_names,
                                    const std::vector<std::string>& a_names,
                                    const std::vector<std::string>& b_names);
};

std::pair<SummaryVector, SummaryVector> split_summary(const SummaryVector& s, const PartitionSpec& part);
SummaryVector merge_summary(const SummaryVector& a, const SummaryVector& b, const PartitionSpec& part);

/// Paired prior draws and summaries, the regression training corpus.
struct TrainingSet {
    std::string model_id;
    PriorSpec prior;
    std::uint64_t seed = 0;
    std::vector<std::string> param_names;
    std::vector<std::string> summary_names;
    Eigen::MatrixXd params;     // n x p
    Eigen::MatrixXd summaries;  // n x q
    std::size_t discarded = 0;  // rejected simulation attempts

    std::size_t rows() const { return static_cast<std::size_t>(params.rows()); }
    std::size_t param_dim() const { return static_cast<std::size_t>(params.cols()); }
    std::size_t summary_dim() const { return static_cast<std::size_t>(summaries.cols()); }
    std::vector<double> response(std::size_t param_index) const;
    SummaryVector summary_row(std::size_t i) const;
};

/// A simulator together with its summary map.
class GenerativeModel {
public:
    virtual ~GenerativeModel() = default;
    virtual std::string id() const = 0;
    virtual std::vector<std::string> summary_names() const = 0;
    virtual Dataset simulate(std::span<const double> params, Rng& rng) const = 0;
    virtual SummaryVector summarize(const Dataset& data) const = 0;
};

/// Maximum simulation attempts per training row before giving up.
inline constexpr int kMaxRowAttempts = 10;

std::vector<ParameterDraw> sample_prior(const PriorSpec& prior, std::size_t n, std::uint64_t seed);

/// Simulate n valid rows. A row whose summary comes back invalid is re-drawn
/// (new parameter and new dataset) up to kMaxRowAttempts times; rejections are
/// counted in TrainingSet::discarded. Row i only uses streams derived from
/// (seed, i), so the result is independent of the thread count.
TrainingSet build_training_set(const GenerativeModel& model, const PriorSpec& prior, std::size_t n,
                               std::uint64_t seed, std::size_t threads = 0);

}  // namespace lfc
