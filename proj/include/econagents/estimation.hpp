#ifndef ECONAGENTS_ESTIMATION_HPP
#define ECONAGENTS_ESTIMATION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "econagents/games.hpp"
#include "econagents/preferences.hpp"

namespace econagents {

// One elicited (strategy, belief) record. Strategies are pure; beliefs are
// the respondent's own stated percentages divided by 100.
struct ObservedResponse {
  std::string session_id;
  Protocol protocol{Protocol::SPD};
  PayoffTuple payoffs{};
  Strategy strategy{};
  Belief beliefs{};
};

// Parameter order used throughout estimation: alpha, beta, kappa, lambda.
using ParamVector = std::array<double, 4>;

struct EstimationResult {
  PreferenceParams theta{};
  double lambda{1.0};
  double log_likelihood{0};
  ParamVector standard_errors{};  // zero until a bootstrap fills them in
  int replicates{0};              // successful bootstrap replicates
  int failed_replicates{0};
  bool converged{false};
  bool degenerate{false};  // boundary-ish lambda (separated or flat data)
};

struct FitOptions {
  int restarts{8};
  std::uint64_t seed{1};
  int max_iter{20000};
};

// Pooled log likelihood of the observed pure-strategy choices under the
// logit model with each respondent's own stated beliefs. Summation is
// order-independent (terms are sorted before accumulation), so permuting
// the data leaves the result bit-identical.
// Throws std::invalid_argument if lambda <= 0, the data is empty, or a
// strategy is not in its protocol's pure set.
double log_likelihood(const std::vector<ObservedResponse>& data, const PreferenceParams& theta,
                      double lambda);

// Maximizes log_likelihood over (alpha, beta, kappa, log lambda) by
// multi-start Nelder-Mead. theta is unconstrained; lambda stays positive
// through the log reparameterization. Non-convergence is reported through
// the flag, with the best point still returned.
EstimationResult fit_mle(const std::vector<ObservedResponse>& data,
                         const ParamVector& init = {0, 0, 0, 1.0},
                         const FitOptions& options = {});

struct BootstrapResult {
  ParamVector standard_errors{};
  int requested{0};
  int succeeded{0};
  int failed{0};
  bool degenerate_warning{false};  // replicates < 2: SEs set to 0 by convention
};

// Block bootstrap: each replicate resamples whole sessions with replacement
// to the original session count, refits, and the per-parameter standard
// deviation across replicates is reported. Deterministic under `seed`;
// replicates run concurrently and are merged by index.
BootstrapResult block_bootstrap(const std::vector<ObservedResponse>& data, int replicates = 300,
                                std::uint64_t seed = 1, const FitOptions& fit_options = {},
                                unsigned workers = 0);

// Simulates sessions of logit-model choices on the given scenarios. Beliefs
// are drawn as integer percentages, uniform on [0, 100]; one response per
// (session, scenario). Deterministic under `seed`.
std::vector<ObservedResponse> simulate_responses(
    const std::vector<std::pair<Protocol, PayoffTuple>>& scenarios, int sessions,
    const PreferenceParams& theta, double lambda, std::uint64_t seed);

// Line-delimited JSON, one ObservedResponse per line.
std::vector<ObservedResponse> read_responses_jsonl(const std::string& path);
void write_responses_jsonl(const std::string& path, const std::vector<ObservedResponse>& data);

std::string estimation_result_to_json(const EstimationResult& result);

}  // namespace econagents

#endif
