#pragma once

// Two-regime SETAR(2) auxiliary model with delay 1:
//
//   X_t = a0 + a1 X_{t-1} + a2 X_{t-2} + e_t,  e_t ~ N(0, rho^2)   if X_{t-1} <  c
//   X_t = b0 + b1 X_{t-1} + b2 X_{t-2} + e_t,  e_t ~ N(0, zeta^2)  if X_{t-1} >= c
//
// Given c, the conditional Gaussian MLE is ordinary least squares per regime
// with the residual SD computed using the regime count as divisor.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lfc/model.hpp"

namespace lfc {

/// Fewest (X_t, X_{t-1}, X_{t-2}) triples a regime needs to be estimable.
inline constexpr std::size_t kSetarMinRegime = 5;

struct SetarRegime {
    std::array<double, 3> coef{};     // intercept, lag 1, lag 2
    std::array<double, 3> coef_se{};  // standard errors
    double sd = 0.0;                  // residual SD (MLE)
    std::size_t count = 0;
    double rss = 0.0;
};

struct SetarFit {
    double threshold = 0.0;
    SetarRegime lower;
    SetarRegime upper;

    /// Conditional Gaussian negative log-likelihood summed over both regimes.
    double negative_log_likelihood() const;
    /// (a0, a1, a2, rho, b0, b1, b2, zeta)
    std::vector<double> as_summary() const;
};

/// Returns nullopt when a regime has fewer than kSetarMinRegime triples or a
/// singular design.
std::optional<SetarFit> try_fit_setar(std::span<const double> x, double c);

/// As try_fit_setar but throws NumericalError instead of returning nullopt.
SetarFit fit_setar(std::span<const double> x, double c);

/// Grid search for c over empirical quantiles 0.15, 0.20, ..., 0.85 of x,
/// minimising the pooled negative log-likelihood. Candidates need both regimes
/// to hold at least 10% of the triples. Ties go to the smaller c.
double select_threshold(std::span<const double> x);

/// Summary names for ricker_setar_summaries.
std::vector<std::string> setar_summary_names();

/// 8-vector of SETAR estimates, invalid when the fit fails.
SummaryVector ricker_setar_summaries(std::span<const double> x, double c);

}  // namespace lfc
