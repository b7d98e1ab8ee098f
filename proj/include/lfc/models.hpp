#pragma once

// The registered generative models.

#include <cstddef>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "lfc/model.hpp"
#include "lfc/simulators.hpp"

namespace lfc {

/// n i.i.d. Poisson(eta) counts summarised by (mean, sample variance).
class PoissonModel final : public GenerativeModel {
public:
    explicit PoissonModel(std::size_t n = 5);
    std::string id() const override { return "poisson"; }
    std::vector<std::string> summary_names() const override { return {"ybar", "s2"}; }
    Dataset simulate(std::span<const double> params, Rng& rng) const override;
    SummaryVector summarize(const Dataset& data) const override;

private:
    std::size_t n_;
};

/// Surrogate inclusion model: K ~ Poisson(lambda) diameters from
/// u + GPD(sigma, xi), summarised by K and eight quantiles.
class StereoModel final : public GenerativeModel {
public:
    explicit StereoModel(double threshold = 5.0) : threshold_(threshold) {}
    std::string id() const override { return "stereo"; }
    std::vector<std::string> summary_names() const override;
    Dataset simulate(std::span<const double> params, Rng& rng) const override;
    SummaryVector summarize(const Dataset& data) const override;

private:
    double threshold_;
};

/// Ricker counts summarised by SETAR estimates at a fixed threshold c.
class RickerSetarModel final : public GenerativeModel {
public:
    RickerSetarModel(double threshold, RickerConfig cfg = {});
    std::string id() const override { return "ricker"; }
    std::vector<std::string> summary_names() const override;
    Dataset simulate(std::span<const double> params, Rng& rng) const override;
    SummaryVector summarize(const Dataset& data) const override;
    double threshold() const { return threshold_; }

private:
    double threshold_;
    RickerConfig cfg_;
};

/// Ricker counts whose features are the whole series on the log(1 + d) scale.
class RickerRawModel final : public GenerativeModel {
public:
    explicit RickerRawModel(RickerConfig cfg = {});
    std::string id() const override { return "ricker-raw"; }
    std::vector<std::string> summary_names() const override;
    Dataset simulate(std::span<const double> params, Rng& rng) const override;
    SummaryVector summarize(const Dataset& data) const override;

private:
    RickerConfig cfg_;
};

/// log(1 + d) elementwise.
std::vector<double> log1p_series(std::span<const double> d);

struct ModelOptions {
    std::size_t poisson_n = 5;
    double stereo_threshold = 5.0;
    double setar_threshold = std::numeric_limits<double>::quiet_NaN();  // required for "ricker"
    RickerConfig ricker;
};

/// Known ids: poisson, stereo, ricker, ricker-raw.
std::unique_ptr<GenerativeModel> make_model(const std::string& id, const ModelOptions& opts = {});
PriorSpec default_prior(const std::string& id);
std::vector<std::string> model_ids();

}  // namespace lfc
