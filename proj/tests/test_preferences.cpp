#include <cmath>
#include <vector>

#include "doctest.h"
#include "econagents/preferences.hpp"
#include "econagents/rng.hpp"
#include "support/oracle.hpp"

using namespace econagents;

namespace {

constexpr Protocol kProtocols[] = {Protocol::SPD, Protocol::TrustGame, Protocol::UltimatumGame};

struct RandomInstance {
  Protocol p;
  Strategy x;
  Belief y;
  PayoffTuple pp;
};

RandomInstance draw_instance(Rng& rng) {
  RandomInstance ri;
  ri.p = kProtocols[rng.next_below(3)];
  int n = decision_points(ri.p);
  ri.x.n = n;
  ri.y.n = n;
  for (int i = 0; i < n; ++i) {
    ri.x[i] = rng.next_unit();
    ri.y[i] = rng.next_unit();
  }
  // Ordered draw so tuples look like real scenarios.
  double a = rng.next_range(0, 100), b = rng.next_range(0, 100), c = rng.next_range(0, 100),
         d = rng.next_range(0, 100);
  std::vector<double> v{a, b, c, d};
  std::sort(v.begin(), v.end(), std::greater<>());
  ri.pp = PayoffTuple{v[0], v[1], v[2], v[3]};
  return ri;
}

std::vector<double> vec(const detail::ProbVec& v) {
  return std::vector<double>(v.v.begin(), v.v.begin() + v.n);
}

}  // namespace

TEST_CASE("utility_general: frozen hand-enumerated SPD value") {
  // Six reachable paths, enumerated by hand: own = 22.35, kant = 45,
  // envy = 28.8, guilt = 0, so u = 0.9*22.35 + 0.1*45 - 0.16*28.8 = 20.007.
  Strategy x{1, 1, 0};
  Belief y{0.33, 0.28, 0.11};
  PayoffTuple pp{90, 45, 15, 10};
  PreferenceParams theta{0.16, 0.24, 0.10};
  CHECK(utility_general(x, y, pp, Protocol::SPD, theta) == doctest::Approx(20.007).epsilon(1e-12));
}

TEST_CASE("utility reductions are exact") {
  Rng rng(4242);
  for (int iter = 0; iter < 3000; ++iter) {
    auto ri = draw_instance(rng);
    double econ = utility_econ(ri.x, ri.y, ri.pp, ri.p);
    CHECK(utility_general(ri.x, ri.y, ri.pp, ri.p, PreferenceParams{}) == econ);
    CHECK(utility_kant(ri.x, ri.y, 0.0, ri.pp, ri.p) == econ);
    double kappa = rng.next_unit() * 0.99;
    CHECK(utility_kant(ri.x, ri.y, kappa, ri.pp, ri.p) ==
          utility_general(ri.x, ri.y, ri.pp, ri.p, PreferenceParams{0, 0, kappa}));
  }
}

TEST_CASE("utility_general agrees with the independent oracle") {
  Rng rng(515151);
  for (int iter = 0; iter < 3000; ++iter) {
    auto ri = draw_instance(rng);
    PreferenceParams theta{rng.next_range(-0.5, 1), rng.next_range(-0.5, 1),
                           rng.next_range(0, 0.99)};
    double got = utility_general(ri.x, ri.y, ri.pp, ri.p, theta);
    double want = oracle::utility(ri.p, vec(ri.x), vec(ri.y), ri.pp, theta.alpha, theta.beta,
                                  theta.kappa);
    CHECK(got == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("utility_econ: worked SPD value and degenerate case") {
  Belief y{0.33, 0.28, 0.11};
  PayoffTuple pp{90, 81, 38, 34};
  CHECK(utility_econ(Strategy{1, 0, 0}, y, pp, Protocol::SPD) ==
        doctest::Approx(51.16).epsilon(1e-12));

  CHECK(utility_econ(Strategy{0, 0, 0}, Belief{0, 0, 0}, pp, Protocol::SPD) ==
        doctest::Approx(38.0));
}

TEST_CASE("utility_kant: degenerate weights and frozen value") {
  Belief y{0.33, 0.28, 0.11};
  PayoffTuple pp{90, 81, 38, 34};

  // kappa -> 1: universal cooperation concentrates on (C,C).
  Strategy coop{1, 1, 1};
  CHECK(utility_kant(coop, y, 1.0 - 1e-9, pp, Protocol::SPD) == doctest::Approx(81.0).epsilon(1e-6));

  // Frozen hand enumeration: own = 49.675, kant = 81 -> 0.5*49.675 + 0.5*81.
  CHECK(utility_kant(Strategy{1, 1, 0}, y, 0.5, pp, Protocol::SPD) ==
        doctest::Approx(65.3375).epsilon(1e-12));

  CHECK_THROWS_AS(utility_kant(coop, y, 1.0, pp, Protocol::SPD), std::invalid_argument);
  CHECK_THROWS_AS(utility_kant(coop, y, -0.1, pp, Protocol::SPD), std::invalid_argument);
}

TEST_CASE("alternative utilities") {
  // Symmetric payoffs where pi_own == pi_other on every path: T=S and R=P.
  Strategy x{0.4, 0.7, 0.2};
  Belief y{0.5, 0.3, 0.8};
  PayoffTuple sym{60, 25, 25, 60};
  CHECK(utility_alternative(AgentType::altruist(), x, y, sym, Protocol::SPD) ==
        doctest::Approx(utility_econ(x, y, sym, Protocol::SPD)).epsilon(1e-12));

  Rng rng(606);
  for (int iter = 0; iter < 500; ++iter) {
    auto ri = draw_instance(rng);
    CHECK(utility_alternative(AgentType::inequity_averse(0, 0), ri.x, ri.y, ri.pp, ri.p) ==
          utility_econ(ri.x, ri.y, ri.pp, ri.p));
  }

  // Frozen oracle value: own 22.35 minus 0.16 * envy 28.8.
  CHECK(utility_alternative(AgentType::inequity_averse(0.16, 0.24), Strategy{1, 1, 0},
                            Belief{0.33, 0.28, 0.11}, PayoffTuple{90, 45, 15, 10},
                            Protocol::SPD) == doctest::Approx(17.742).epsilon(1e-12));

  CHECK_THROWS_AS(
      utility_alternative(AgentType::economicus(), x, y, sym, Protocol::SPD),
      std::invalid_argument);
}

TEST_CASE("best response: rational agent on the worked scenario") {
  Belief y{0.33, 0.28, 0.11};
  PayoffTuple pp{90, 81, 38, 34};
  Strategy br = best_response(AgentType::economicus(), pp, Protocol::SPD, y);
  CHECK(br == Strategy{1, 0, 0});
  // Second-mover components: 81 < 90 and 34 < 38 force defection.
}

TEST_CASE("best response: moralis with narrow temptation and punishment gaps") {
  // With kappa = 0.5 the universalized term rewards mutual cooperation, but
  // after an observed defection the moral weight on x3 is gated by (1 - x1):
  // once x1 = 1 the own-payoff comparison S < P decides x3 = 0. Enumeration
  // gives (1,1,0), confirmed against the oracle argmax.
  Belief y{0.33, 0.28, 0.11};
  PayoffTuple pp{50, 49, 11, 10};
  AgentType moralis = AgentType::moralis(0.5);
  Strategy br = best_response(moralis, pp, Protocol::SPD, y);
  auto want = oracle::best_response(moralis, Protocol::SPD, vec(y), pp);
  CHECK(vec(br) == want);
  CHECK(br == Strategy{1, 1, 0});
}

TEST_CASE("best response equals naive enumeration on random tuples") {
  Rng rng(808080);
  std::vector<AgentType> agents = {
      AgentType::economicus(),       AgentType::moralis(0.5),
      AgentType::altruist(),         AgentType::inequity_averse(0.16, 0.24),
      AgentType::inequity_averse(0.5, 0.5)};
  for (int iter = 0; iter < 1000; ++iter) {
    Protocol p = kProtocols[rng.next_below(3)];
    std::vector<long long> draw;
    while (draw.size() < 4) {
      long long v = rng.next_int(0, 100);
      if (std::find(draw.begin(), draw.end(), v) == draw.end()) draw.push_back(v);
    }
    std::sort(draw.begin(), draw.end(), std::greater<>());
    PayoffTuple pp{double(draw[0]), double(draw[1]), double(draw[2]), double(draw[3])};
    Belief y;
    y.n = decision_points(p);
    for (int i = 0; i < y.n; ++i) y[i] = rng.next_int(0, 100) / 100.0;
    const AgentType& agent = agents[rng.next_below(agents.size())];
    CHECK(vec(best_response(agent, pp, p, y)) == oracle::best_response(agent, p, vec(y), pp));
  }
}

TEST_CASE("best response is invariant to positive affine payoff maps") {
  Rng rng(121212);
  for (int iter = 0; iter < 500; ++iter) {
    Protocol p = kProtocols[rng.next_below(3)];
    PayoffTuple pp{rng.next_range(60, 100), rng.next_range(40, 59), rng.next_range(20, 39),
                   rng.next_range(0, 19)};
    Belief y;
    y.n = decision_points(p);
    for (int i = 0; i < y.n; ++i) y[i] = rng.next_unit();
    double a = rng.next_range(0.1, 5.0), b = rng.next_range(-50, 50);
    PayoffTuple scaled{a * pp.t + b, a * pp.r + b, a * pp.p + b, a * pp.s + b};
    for (const AgentType& agent : {AgentType::economicus(), AgentType::moralis(0.5),
                                   AgentType::general(PreferenceParams{0.16, 0.24, 0.10})}) {
      CHECK(best_response(agent, pp, p, y) == best_response(agent, scaled, p, y));
    }
  }
}

TEST_CASE("choice probabilities: symmetry, limits, and shift invariance") {
  Belief y{0.33, 0.28, 0.11};
  PayoffTuple pp{90, 81, 38, 34};
  PreferenceParams theta{};

  // Equal-utility members receive equal mass. Strategies differing only in
  // x3 when it is unreachable would not tie here, so build an explicit tie:
  // symmetric payoffs make every strategy equivalent.
  PayoffTuple flat{10, 10, 10, 10};
  auto probs = choice_probabilities(y, flat, Protocol::SPD, theta, ChoiceScale{1.0});
  for (double q : probs) CHECK(q == doctest::Approx(1.0 / 8).epsilon(1e-12));

  // Large lambda: near-uniform.
  auto diffuse = choice_probabilities(y, pp, Protocol::SPD, theta, ChoiceScale{1e6});
  for (double q : diffuse) CHECK(std::fabs(q - 1.0 / 8) <= 1e-4);

  // Small lambda: unique maximizer takes almost all mass.
  auto sharp = choice_probabilities(y, pp, Protocol::SPD, theta, ChoiceScale{1e-6});
  const auto& pures = pure_strategies(Protocol::SPD);
  double best_mass = 0;
  for (size_t i = 0; i < pures.size(); ++i) {
    if (pures[i] == Strategy{1, 0, 0}) best_mass = sharp[i];
  }
  CHECK(best_mass >= 1.0 - 1e-6);

  // Shifting all payoffs shifts utilities by a constant; probabilities stay.
  PayoffTuple shifted{pp.t + 500, pp.r + 500, pp.p + 500, pp.s + 500};
  auto base = choice_probabilities(y, pp, Protocol::SPD, theta, ChoiceScale{1.7});
  auto moved = choice_probabilities(y, shifted, Protocol::SPD, theta, ChoiceScale{1.7});
  for (size_t i = 0; i < base.size(); ++i) {
    CHECK(base[i] == doctest::Approx(moved[i]).epsilon(1e-12));
  }

  CHECK_THROWS_AS(choice_probabilities(y, pp, Protocol::SPD, theta, ChoiceScale{0.0}),
                  std::invalid_argument);
  double sum = 0;
  for (double q : base) sum += q;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}
