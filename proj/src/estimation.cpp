#include "econagents/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "econagents/optim.hpp"
#include "econagents/parallel.hpp"
#include "econagents/rng.hpp"

namespace econagents {

namespace {

using nlohmann::json;

int pure_strategy_index(const Strategy& x, Protocol p) {
  const auto& pures = pure_strategies(p);
  for (size_t i = 0; i < pures.size(); ++i) {
    bool same = pures[i].size() == x.size();
    for (int j = 0; same && j < x.size(); ++j) same = pures[i][j] == x[j];
    if (same) return static_cast<int>(i);
  }
  throw std::invalid_argument("strategy is not in the protocol's pure set");
}

// Per-observation utility decomposition for every candidate strategy, so a
// likelihood evaluation is four multiplies per candidate.
struct ObsCache {
  int observed{0};
  std::vector<UtilityTerms> terms;
};

struct LikelihoodCache {
  std::vector<ObsCache> obs;

  explicit LikelihoodCache(const std::vector<ObservedResponse>& data) {
    obs.reserve(data.size());
    for (const auto& r : data) {
      ObsCache c;
      c.observed = pure_strategy_index(r.strategy, r.protocol);
      const auto& pures = pure_strategies(r.protocol);
      c.terms.reserve(pures.size());
      for (const auto& x : pures) c.terms.push_back(utility_terms(x, r.beliefs, r.payoffs, r.protocol));
      obs.push_back(std::move(c));
    }
  }

  template <typename IndexRange>
  double loglik(const IndexRange& indices, const PreferenceParams& theta, double lambda) const {
    double total = 0;
    std::array<double, 8> u{};
    for (auto idx : indices) {
      const ObsCache& c = obs[static_cast<size_t>(idx)];
      const size_t k = c.terms.size();
      double m = -1e300;
      for (size_t i = 0; i < k; ++i) {
        const UtilityTerms& t = c.terms[i];
        u[i] = (1.0 - theta.kappa) * t.own + theta.kappa * t.kant - theta.alpha * t.envy -
               theta.beta * t.guilt;
        m = std::max(m, u[i]);
      }
      double z = 0;
      for (size_t i = 0; i < k; ++i) z += std::exp((u[i] - m) / lambda);
      total += (u[static_cast<size_t>(c.observed)] - m) / lambda - std::log(z);
    }
    return total;
  }
};

struct AllIndices {
  size_t n;
  struct It {
    size_t i;
    size_t operator*() const { return i; }
    It& operator++() { ++i; return *this; }
    bool operator!=(const It& o) const { return i != o.i; }
  };
  It begin() const { return {0}; }
  It end() const { return {n}; }
};

EstimationResult fit_on_cache(const LikelihoodCache& cache, const std::vector<size_t>* subset,
                              const ParamVector& init, const FitOptions& options) {
  auto eval = [&](const std::vector<double>& z) {
    PreferenceParams theta{z[0], z[1], z[2]};
    double lambda = std::exp(z[3]);
    double ll = subset ? cache.loglik(*subset, theta, lambda)
                       : cache.loglik(AllIndices{cache.obs.size()}, theta, lambda);
    return -ll;
  };

  if (!(init[3] > 0)) throw std::invalid_argument("initial lambda must be positive");
  std::vector<double> start{init[0], init[1], init[2], std::log(init[3])};

  SimplexOptions sopt;
  sopt.max_iter = options.max_iter;

  Rng rng(options.seed);
  SimplexResult best;
  bool have = false;
  int restarts = std::max(1, options.restarts);
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> s = start;
    if (r > 0) {
      // Jittered restarts around the supplied initial point.
      s[0] += rng.next_range(-0.5, 0.5);
      s[1] += rng.next_range(-0.5, 0.5);
      s[2] += rng.next_range(-0.5, 0.5);
      s[3] += rng.next_range(-1.5, 1.5);
    }
    SimplexResult run = nelder_mead_minimize(eval, s, sopt);
    if (!have || run.value < best.value ||
        (run.value == best.value && run.converged && !best.converged)) {
      best = run;
      have = true;
    }
  }

  EstimationResult res;
  res.theta = PreferenceParams{best.x[0], best.x[1], best.x[2]};
  res.lambda = std::exp(best.x[3]);
  res.log_likelihood = -best.value;
  res.converged = best.converged;
  // Boundary-ish fits: lambda running off to either end of its scale, or a
  // perfectly separated dataset (every observed choice probability at 1, so
  // the likelihood is flat in ever-smaller lambda).
  size_t n = subset ? subset->size() : cache.obs.size();
  res.degenerate = res.lambda < 1e-3 || res.lambda > 1e3 ||
                   res.log_likelihood > -1e-6 * static_cast<double>(n);
  return res;
}

json response_to_json(const ObservedResponse& r) {
  json payoffs{{"T", r.payoffs.t}, {"R", r.payoffs.r}, {"P", r.payoffs.p}, {"S", r.payoffs.s}};
  json strategy = json::array();
  for (int i = 0; i < r.strategy.size(); ++i) strategy.push_back(r.strategy[i]);
  json beliefs = json::array();
  for (int i = 0; i < r.beliefs.size(); ++i) beliefs.push_back(r.beliefs[i]);
  return json{{"session_id", r.session_id},
              {"protocol", protocol_name(r.protocol)},
              {"payoffs", payoffs},
              {"strategy", strategy},
              {"beliefs", beliefs}};
}

ObservedResponse response_from_json(const json& j) {
  ObservedResponse r;
  r.session_id = j.at("session_id").get<std::string>();
  r.protocol = protocol_from_name(j.at("protocol").get<std::string>());
  const json& pj = j.at("payoffs");
  r.payoffs = PayoffTuple{pj.at("T").get<double>(), pj.at("R").get<double>(),
                          pj.at("P").get<double>(), pj.at("S").get<double>()};
  const json& sj = j.at("strategy");
  r.strategy.n = static_cast<int>(sj.size());
  for (int i = 0; i < r.strategy.n; ++i) r.strategy[i] = sj[static_cast<size_t>(i)].get<double>();
  const json& bj = j.at("beliefs");
  r.beliefs.n = static_cast<int>(bj.size());
  for (int i = 0; i < r.beliefs.n; ++i) r.beliefs[i] = bj[static_cast<size_t>(i)].get<double>();
  return r;
}

}  // namespace

double log_likelihood(const std::vector<ObservedResponse>& data, const PreferenceParams& theta,
                      double lambda) {
  if (data.empty()) throw std::invalid_argument("log_likelihood needs a nonempty dataset");
  if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");

  std::vector<double> terms;
  terms.reserve(data.size());
  for (const auto& r : data) {
    int observed = pure_strategy_index(r.strategy, r.protocol);
    const auto& pures = pure_strategies(r.protocol);
    std::vector<double> u(pures.size());
    for (size_t i = 0; i < pures.size(); ++i) {
      u[i] = utility_general(pures[i], r.beliefs, r.payoffs, r.protocol, theta);
    }
    double m = *std::max_element(u.begin(), u.end());
    double z = 0;
    for (double ui : u) z += std::exp((ui - m) / lambda);
    terms.push_back((u[static_cast<size_t>(observed)] - m) / lambda - std::log(z));
  }
  // Sorted accumulation: permutation of the input cannot change the result.
  std::sort(terms.begin(), terms.end());
  double total = 0;
  for (double t : terms) total += t;
  return total;
}

EstimationResult fit_mle(const std::vector<ObservedResponse>& data, const ParamVector& init,
                         const FitOptions& options) {
  if (data.empty()) throw std::invalid_argument("fit_mle needs a nonempty dataset");
  LikelihoodCache cache(data);
  EstimationResult res = fit_on_cache(cache, nullptr, init, options);
  // Report the likelihood through the public evaluation path.
  res.log_likelihood = log_likelihood(data, res.theta, res.lambda);
  return res;
}

BootstrapResult block_bootstrap(const std::vector<ObservedResponse>& data, int replicates,
                                std::uint64_t seed, const FitOptions& fit_options,
                                unsigned workers) {
  if (data.empty()) throw std::invalid_argument("block_bootstrap needs a nonempty dataset");
  BootstrapResult out;
  out.requested = replicates;
  if (replicates < 1) return out;

  // Sessions keyed in first-appearance order for deterministic resampling.
  std::vector<std::string> session_order;
  std::map<std::string, std::vector<size_t>> by_session;
  for (size_t i = 0; i < data.size(); ++i) {
    auto [it, inserted] = by_session.try_emplace(data[i].session_id);
    if (inserted) session_order.push_back(data[i].session_id);
    it->second.push_back(i);
  }
  const size_t n_sessions = session_order.size();

  LikelihoodCache cache(data);
  EstimationResult center = fit_on_cache(cache, nullptr, {0, 0, 0, 1.0}, fit_options);
  ParamVector center_init{center.theta.alpha, center.theta.beta, center.theta.kappa,
                          center.lambda};

  FitOptions rep_options = fit_options;
  rep_options.restarts = 2;  // warm start at the full-data estimate plus one jitter

  std::vector<ParamVector> draws(static_cast<size_t>(replicates));
  std::vector<char> ok(static_cast<size_t>(replicates), 0);

  parallel_for_indexed(static_cast<size_t>(replicates), workers == 0 ? 8 : workers,
                       [&](size_t rep) {
    Rng rng(Rng::mix(seed, rep));
    std::vector<size_t> indices;
    for (size_t s = 0; s < n_sessions; ++s) {
      const auto& block = by_session[session_order[rng.next_below(n_sessions)]];
      indices.insert(indices.end(), block.begin(), block.end());
    }
    try {
      FitOptions o = rep_options;
      o.seed = Rng::mix(seed, 0x5e ^ rep);
      EstimationResult r = fit_on_cache(cache, &indices, center_init, o);
      if (!r.converged) return;  // recorded below as a failure
      draws[rep] = {r.theta.alpha, r.theta.beta, r.theta.kappa, r.lambda};
      ok[rep] = 1;
    } catch (const std::exception&) {
      // failure recorded below
    }
  });

  std::vector<ParamVector> kept;
  for (size_t rep = 0; rep < draws.size(); ++rep) {
    if (ok[rep]) kept.push_back(draws[rep]);
  }
  out.succeeded = static_cast<int>(kept.size());
  out.failed = out.requested - out.succeeded;

  if (kept.size() < 2) {
    out.degenerate_warning = true;  // SEs are 0 by convention with < 2 replicates
    return out;
  }
  for (int k = 0; k < 4; ++k) {
    double mean = 0;
    for (const auto& d : kept) mean += d[static_cast<size_t>(k)];
    mean /= static_cast<double>(kept.size());
    double ss = 0;
    for (const auto& d : kept) {
      double dev = d[static_cast<size_t>(k)] - mean;
      ss += dev * dev;
    }
    out.standard_errors[static_cast<size_t>(k)] =
        std::sqrt(ss / static_cast<double>(kept.size() - 1));
  }
  return out;
}

std::vector<ObservedResponse> simulate_responses(
    const std::vector<std::pair<Protocol, PayoffTuple>>& scenarios, int sessions,
    const PreferenceParams& theta, double lambda, std::uint64_t seed) {
  std::vector<ObservedResponse> out;
  out.reserve(static_cast<size_t>(sessions) * scenarios.size());
  Rng rng(seed);
  for (int s = 0; s < sessions; ++s) {
    std::ostringstream sid;
    sid << "sim" << s;
    for (const auto& [protocol, payoffs] : scenarios) {
      ObservedResponse r;
      r.session_id = sid.str();
      r.protocol = protocol;
      r.payoffs = payoffs;
      r.beliefs.n = decision_points(protocol);
      for (int i = 0; i < r.beliefs.n; ++i) {
        r.beliefs[i] = static_cast<double>(rng.next_int(0, 100)) / 100.0;
      }
      auto probs = choice_probabilities(r.beliefs, payoffs, protocol, theta, ChoiceScale{lambda});
      double u = rng.next_unit(), acc = 0;
      size_t pick = probs.size() - 1;
      for (size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        if (u < acc) {
          pick = i;
          break;
        }
      }
      r.strategy = pure_strategies(protocol)[pick];
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<ObservedResponse> read_responses_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open response file: " + path);
  std::vector<ObservedResponse> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(response_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_responses_jsonl(const std::string& path, const std::vector<ObservedResponse>& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write response file: " + path);
  for (const auto& r : data) out << response_to_json(r).dump() << '\n';
}

std::string estimation_result_to_json(const EstimationResult& result) {
  json j{{"alpha", result.theta.alpha},
         {"beta", result.theta.beta},
         {"kappa", result.theta.kappa},
         {"lambda", result.lambda},
         {"log_likelihood", result.log_likelihood},
         {"standard_errors",
          {{"alpha", result.standard_errors[0]},
           {"beta", result.standard_errors[1]},
           {"kappa", result.standard_errors[2]},
           {"lambda", result.standard_errors[3]}}},
         {"bootstrap_replicates", result.replicates},
         {"bootstrap_failures", result.failed_replicates},
         {"converged", result.converged},
         {"degenerate", result.degenerate}};
  return j.dump(2);
}

}  // namespace econagents
