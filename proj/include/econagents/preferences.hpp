#ifndef ECONAGENTS_PREFERENCES_HPP
#define ECONAGENTS_PREFERENCES_HPP

#include <string>
#include <vector>

#include "econagents/games.hpp"

namespace econagents {

// (alpha, beta, kappa): envy and guilt weights on payoff inequality plus the
// Kantian weight on the universalized outcome. No sign constraints for
// estimation; generators restrict kappa to [0, 1).
struct PreferenceParams {
  double alpha{0}, beta{0}, kappa{0};
  bool operator==(const PreferenceParams&) const = default;
};

// Logit choice scale. Smaller lambda means choices concentrate on the
// utility maximizer.
struct ChoiceScale {
  double lambda{1.0};
};

struct AgentType {
  enum class Kind { HomoEconomicus, HomoMoralis, General, Altruist, InequityAverse };

  Kind kind{Kind::HomoEconomicus};
  PreferenceParams params{};  // moralis uses kappa; inequity-averse uses alpha/beta

  static AgentType economicus() { return {Kind::HomoEconomicus, {}}; }
  static AgentType moralis(double kappa = 0.5) { return {Kind::HomoMoralis, {0, 0, kappa}}; }
  static AgentType general(PreferenceParams theta) { return {Kind::General, theta}; }
  static AgentType altruist() { return {Kind::Altruist, {}}; }
  static AgentType inequity_averse(double alpha, double beta) {
    return {Kind::InequityAverse, {alpha, beta, 0}};
  }

  std::string describe() const;
};

// Decomposition of the utility into the four path sums that enter it.
// u = (1-kappa)*own + kappa*kant - alpha*envy - beta*guilt, where envy/guilt
// are weighted by eta(x, y, .) only, never eta(x, x, .).
struct UtilityTerms {
  double own{0};    // sum eta(x,y) * pi_own
  double other{0};  // sum eta(x,y) * pi_other
  double kant{0};   // sum eta(x,x) * pi_own
  double envy{0};   // sum eta(x,y) * max(0, pi_other - pi_own)
  double guilt{0};  // sum eta(x,y) * max(0, pi_own - pi_other)
};

UtilityTerms utility_terms(const Strategy& x, const Belief& y,
                           const PayoffTuple& payoffs, Protocol p);

double utility_general(const Strategy& x, const Belief& y, const PayoffTuple& payoffs,
                       Protocol p, const PreferenceParams& theta);

// Pure self-interest: sum eta(x,y) * pi_own. Equals utility_general with
// theta = (0,0,0) exactly.
double utility_econ(const Strategy& x, const Belief& y, const PayoffTuple& payoffs, Protocol p);

// Self-interest blended with the universalized outcome. Requires 0 <= kappa < 1.
double utility_kant(const Strategy& x, const Belief& y, double kappa,
                    const PayoffTuple& payoffs, Protocol p);

// Filter alternatives: Altruist scores the opponent's expected payoff;
// InequityAverse applies the envy/guilt penalties without a Kantian term.
double utility_alternative(const AgentType& agent, const Strategy& x, const Belief& y,
                           const PayoffTuple& payoffs, Protocol p);

// Utility of any agent type; dispatches to the functions above.
double agent_utility(const AgentType& agent, const Strategy& x, const Belief& y,
                     const PayoffTuple& payoffs, Protocol p);

// Exact argmax over the protocol's pure strategies. Ties follow the >=
// convention: the action coded 1 wins a binary comparison; across full
// vectors, prefer more 1-entries, then descending lexicographic.
Strategy best_response(const AgentType& agent, const PayoffTuple& payoffs, Protocol p,
                       const Belief& beliefs);

// Softmax of utility_general over pure_strategies(p), in that order.
// Max-shifted before exponentiation; requires scale.lambda > 0.
std::vector<double> choice_probabilities(const Belief& y, const PayoffTuple& payoffs,
                                         Protocol p, const PreferenceParams& theta,
                                         const ChoiceScale& scale);

}  // namespace econagents

#endif
