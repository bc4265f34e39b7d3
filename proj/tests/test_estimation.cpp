#include <cmath>
#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "econagents/estimation.hpp"
#include "econagents/rng.hpp"

using namespace econagents;

namespace {

std::vector<std::pair<Protocol, PayoffTuple>> small_scenarios() {
  return {
      {Protocol::SPD, PayoffTuple{90, 45, 15, 10}},
      {Protocol::SPD, PayoffTuple{80, 65, 25, 20}},
      {Protocol::TrustGame, PayoffTuple{80, 50, 30, 20}},
      {Protocol::TrustGame, PayoffTuple{90, 70, 30, 10}},
      {Protocol::UltimatumGame, PayoffTuple{60, 50, 40, 10}},
      {Protocol::UltimatumGame, PayoffTuple{85, 50, 15, 10}},
  };
}

}  // namespace

TEST_CASE("log likelihood of a uniform logit choice is log(1/4)") {
  // Flat payoffs give every trust-game strategy the same utility.
  ObservedResponse r;
  r.session_id = "s0";
  r.protocol = Protocol::TrustGame;
  r.payoffs = PayoffTuple{10, 10, 10, 10};
  r.strategy = Strategy::pure({0, 1});
  r.beliefs = Belief{0.4, 0.6};
  double ll = log_likelihood({r}, PreferenceParams{}, 1.0);
  CHECK(ll == doctest::Approx(std::log(0.25)).epsilon(1e-12));
}

TEST_CASE("log likelihood is additive over duplicated data") {
  auto data = simulate_responses(small_scenarios(), 5, PreferenceParams{0.1, 0.2, 0.05}, 2.0, 11);
  PreferenceParams theta{0.16, 0.24, 0.10};
  double single = log_likelihood(data, theta, 7.19);

  std::vector<ObservedResponse> doubled = data;
  doubled.insert(doubled.end(), data.begin(), data.end());
  CHECK(log_likelihood(doubled, theta, 7.19) == 2.0 * single);

  std::vector<ObservedResponse> x5;
  for (int k = 0; k < 5; ++k) x5.insert(x5.end(), data.begin(), data.end());
  CHECK(log_likelihood(x5, theta, 7.19) == doctest::Approx(5.0 * single).epsilon(1e-12));
}

TEST_CASE("log likelihood is invariant to response order, bit for bit") {
  auto data = simulate_responses(small_scenarios(), 20, PreferenceParams{0.1, 0.2, 0.05}, 3.0, 5);
  PreferenceParams theta{0.16, 0.24, 0.10};
  double base = log_likelihood(data, theta, 7.19);

  Rng rng(77);
  for (int shuffle = 0; shuffle < 5; ++shuffle) {
    for (size_t i = data.size(); i > 1; --i) std::swap(data[i - 1], data[rng.next_below(i)]);
    CHECK(log_likelihood(data, theta, 7.19) == base);
  }
}

TEST_CASE("log likelihood rejects bad inputs") {
  CHECK_THROWS_AS(log_likelihood({}, PreferenceParams{}, 1.0), std::invalid_argument);

  ObservedResponse r;
  r.protocol = Protocol::SPD;
  r.payoffs = PayoffTuple{90, 45, 15, 10};
  r.strategy = Strategy{0.5, 0, 0};  // not pure
  r.beliefs = Belief{0.3, 0.3, 0.3};
  CHECK_THROWS_AS(log_likelihood({r}, PreferenceParams{}, 1.0), std::invalid_argument);
  r.strategy = Strategy::pure({1, 0, 0});
  CHECK_THROWS_AS(log_likelihood({r}, PreferenceParams{}, 0.0), std::invalid_argument);
  CHECK_NOTHROW(log_likelihood({r}, PreferenceParams{}, 1.0));
}

TEST_CASE("likelihood at the generating parameters beats perturbations") {
  PreferenceParams truth{0.16, 0.24, 0.10};
  double lambda = 7.19;
  auto data = simulate_responses(small_scenarios(), 150, truth, lambda, 99);  // 900 responses
  double at_truth = log_likelihood(data, truth, lambda);

  Rng rng(1234);
  for (int k = 0; k < 20; ++k) {
    auto bump = [&] {
      double mag = rng.next_range(0.15, 0.4);
      return rng.next_unit() < 0.5 ? -mag : mag;
    };
    PreferenceParams perturbed{truth.alpha + bump(), truth.beta + bump(), truth.kappa + bump()};
    double lam = lambda * std::exp(bump());
    CHECK(at_truth >= log_likelihood(data, perturbed, lam));
  }
}

TEST_CASE("fit recovers a selfish generator") {
  // theta = 0, lambda = 1, 5000 draws.
  auto data = simulate_responses(small_scenarios(), 834, PreferenceParams{}, 1.0, 31);
  FitOptions opt;
  opt.restarts = 4;
  EstimationResult res = fit_mle(data, {0, 0, 0, 1.0}, opt);
  CHECK(res.converged);
  CHECK(std::fabs(res.theta.alpha) < 0.05);
  CHECK(std::fabs(res.theta.beta) < 0.05);
  CHECK(std::fabs(res.theta.kappa) < 0.05);
  CHECK(res.lambda == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("fit is invariant to the restart seed on well-conditioned data") {
  auto data = simulate_responses(small_scenarios(), 100, PreferenceParams{0.1, 0.2, 0.05}, 2.0, 17);
  FitOptions a, b;
  a.restarts = b.restarts = 6;
  a.seed = 1;
  b.seed = 424242;
  EstimationResult ra = fit_mle(data, {0, 0, 0, 1.0}, a);
  EstimationResult rb = fit_mle(data, {0, 0, 0, 1.0}, b);
  CHECK(std::fabs(ra.theta.alpha - rb.theta.alpha) < 1e-4);
  CHECK(std::fabs(ra.theta.beta - rb.theta.beta) < 1e-4);
  CHECK(std::fabs(ra.theta.kappa - rb.theta.kappa) < 1e-4);
  CHECK(std::fabs(ra.lambda - rb.lambda) < 1e-4);
}

TEST_CASE("separated data drives lambda to the boundary and is flagged") {
  // Every response is the same strategy in one scenario.
  std::vector<ObservedResponse> data;
  for (int i = 0; i < 40; ++i) {
    ObservedResponse r;
    r.session_id = "s" + std::to_string(i);
    r.protocol = Protocol::SPD;
    r.payoffs = PayoffTuple{90, 45, 15, 10};
    r.strategy = Strategy::pure({1, 0, 0});
    r.beliefs = Belief{0.33, 0.28, 0.11};
    data.push_back(r);
  }
  FitOptions opt;
  opt.restarts = 2;
  EstimationResult res = fit_mle(data, {0, 0, 0, 1.0}, opt);
  CHECK(res.lambda < 0.1);  // runs toward zero until the softmax saturates
  CHECK(res.degenerate);
  CHECK(res.log_likelihood > -1e-6 * double(data.size()));
}

TEST_CASE("bootstrap conventions: degenerate counts and reproducibility") {
  auto data = simulate_responses(small_scenarios(), 20, PreferenceParams{0.1, 0.2, 0.05}, 2.0, 3);
  FitOptions opt;
  opt.restarts = 2;

  auto one = block_bootstrap(data, 1, 9, opt);
  CHECK(one.degenerate_warning);
  for (double se : one.standard_errors) CHECK(se == 0.0);

  auto a = block_bootstrap(data, 12, 1337, opt, 4);
  auto b = block_bootstrap(data, 12, 1337, opt, 1);
  CHECK(a.succeeded == b.succeeded);
  for (int k = 0; k < 4; ++k) {
    CHECK(a.standard_errors[static_cast<size_t>(k)] ==
          b.standard_errors[static_cast<size_t>(k)]);
  }
  CHECK(a.succeeded + a.failed == 12);
}

TEST_CASE("bootstrap over identical sessions has (near) zero spread") {
  // One session's responses replicated under distinct ids: every block
  // resample yields the same dataset.
  auto base = simulate_responses(small_scenarios(), 1, PreferenceParams{0.1, 0.2, 0.05}, 2.0, 21);
  std::vector<ObservedResponse> data;
  for (int s = 0; s < 10; ++s) {
    for (auto r : base) {
      r.session_id = "dup" + std::to_string(s);
      data.push_back(r);
    }
  }
  FitOptions opt;
  opt.restarts = 2;
  auto res = block_bootstrap(data, 8, 5, opt, 2);
  CHECK(res.succeeded >= 2);
  for (double se : res.standard_errors) CHECK(se < 1e-3);
}

TEST_CASE("response files round-trip through JSONL") {
  auto data = simulate_responses(small_scenarios(), 3, PreferenceParams{0.1, 0.2, 0.05}, 2.0, 8);
  auto path = std::filesystem::temp_directory_path() / "econagents_responses_test.jsonl";
  write_responses_jsonl(path.string(), data);
  auto back = read_responses_jsonl(path.string());
  REQUIRE(back.size() == data.size());
  for (size_t i = 0; i < data.size(); ++i) {
    CHECK(back[i].session_id == data[i].session_id);
    CHECK(back[i].protocol == data[i].protocol);
    CHECK(back[i].payoffs == data[i].payoffs);
    CHECK(back[i].strategy == data[i].strategy);
    CHECK(back[i].beliefs == data[i].beliefs);
  }
  std::filesystem::remove(path);

  CHECK_THROWS(read_responses_jsonl("/nonexistent/nowhere.jsonl"));
}
