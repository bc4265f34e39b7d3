#include "econagents/preferences.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace econagents {

std::string AgentType::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::HomoEconomicus: os << "economicus"; break;
    case Kind::HomoMoralis: os << "moralis(kappa=" << params.kappa << ")"; break;
    case Kind::General:
      os << "general(alpha=" << params.alpha << ",beta=" << params.beta
         << ",kappa=" << params.kappa << ")";
      break;
    case Kind::Altruist: os << "altruist"; break;
    case Kind::InequityAverse:
      os << "inequity_averse(alpha=" << params.alpha << ",beta=" << params.beta << ")";
      break;
  }
  return os.str();
}

UtilityTerms utility_terms(const Strategy& x, const Belief& y,
                           const PayoffTuple& payoffs, Protocol p) {
  UtilityTerms t;
  for (const auto& path : enumerate_paths(p)) {
    double w = path_weight(path, x, y);
    double own = payoffs.value(path.own_payoff);
    double other = payoffs.value(path.other_payoff);
    t.own += w * own;
    t.other += w * other;
    t.envy += w * std::max(0.0, other - own);
    t.guilt += w * std::max(0.0, own - other);

    // Universalized weight: the agent's strategy stands in for the belief.
    Belief self;
    self.n = x.n;
    self.v = x.v;
    t.kant += path_weight(path, x, self) * own;
  }
  return t;
}

double utility_general(const Strategy& x, const Belief& y, const PayoffTuple& payoffs,
                       Protocol p, const PreferenceParams& theta) {
  UtilityTerms t = utility_terms(x, y, payoffs, p);
  return (1.0 - theta.kappa) * t.own + theta.kappa * t.kant - theta.alpha * t.envy -
         theta.beta * t.guilt;
}

double utility_econ(const Strategy& x, const Belief& y, const PayoffTuple& payoffs, Protocol p) {
  return utility_general(x, y, payoffs, p, PreferenceParams{});
}

double utility_kant(const Strategy& x, const Belief& y, double kappa,
                    const PayoffTuple& payoffs, Protocol p) {
  if (!(kappa >= 0.0 && kappa < 1.0)) throw std::invalid_argument("kappa must be in [0, 1)");
  return utility_general(x, y, payoffs, p, PreferenceParams{0, 0, kappa});
}

double utility_alternative(const AgentType& agent, const Strategy& x, const Belief& y,
                           const PayoffTuple& payoffs, Protocol p) {
  UtilityTerms t = utility_terms(x, y, payoffs, p);
  switch (agent.kind) {
    case AgentType::Kind::Altruist:
      return t.other;
    case AgentType::Kind::InequityAverse:
      return t.own - agent.params.alpha * t.envy - agent.params.beta * t.guilt;
    default:
      throw std::invalid_argument("utility_alternative expects Altruist or InequityAverse");
  }
}

double agent_utility(const AgentType& agent, const Strategy& x, const Belief& y,
                     const PayoffTuple& payoffs, Protocol p) {
  switch (agent.kind) {
    case AgentType::Kind::HomoEconomicus:
      return utility_econ(x, y, payoffs, p);
    case AgentType::Kind::HomoMoralis:
      return utility_kant(x, y, agent.params.kappa, payoffs, p);
    case AgentType::Kind::General:
      return utility_general(x, y, payoffs, p, agent.params);
    case AgentType::Kind::Altruist:
    case AgentType::Kind::InequityAverse:
      return utility_alternative(agent, x, y, payoffs, p);
  }
  throw std::logic_error("unreachable agent kind");
}

namespace {

int count_ones(const Strategy& x) {
  int c = 0;
  for (int i = 0; i < x.size(); ++i) c += x[i] == 1.0 ? 1 : 0;
  return c;
}

bool lex_greater(const Strategy& a, const Strategy& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

// Utilities that agree algebraically can differ by rounding; treat values
// within this relative band as tied so the >= convention decides.
bool utilities_tie(double a, double b) {
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-9 * scale;
}

}  // namespace

Strategy best_response(const AgentType& agent, const PayoffTuple& payoffs, Protocol p,
                       const Belief& beliefs) {
  const auto& candidates = pure_strategies(p);
  const Strategy* best = nullptr;
  double best_u = 0;
  for (const auto& x : candidates) {
    double u = agent_utility(agent, x, beliefs, payoffs, p);
    if (best == nullptr) {
      best = &x;
      best_u = u;
      continue;
    }
    if (utilities_tie(u, best_u)) {
      int ones = count_ones(x), best_ones = count_ones(*best);
      if (ones > best_ones || (ones == best_ones && lex_greater(x, *best))) {
        best = &x;
        best_u = std::max(best_u, u);
      }
    } else if (u > best_u) {
      best = &x;
      best_u = u;
    }
  }
  return *best;
}

std::vector<double> choice_probabilities(const Belief& y, const PayoffTuple& payoffs,
                                         Protocol p, const PreferenceParams& theta,
                                         const ChoiceScale& scale) {
  if (!(scale.lambda > 0)) throw std::invalid_argument("lambda must be positive");
  const auto& candidates = pure_strategies(p);
  std::vector<double> u(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i) {
    u[i] = utility_general(candidates[i], y, payoffs, p, theta);
  }
  double m = *std::max_element(u.begin(), u.end());
  double z = 0;
  std::vector<double> probs(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    probs[i] = std::exp((u[i] - m) / scale.lambda);
    z += probs[i];
  }
  for (double& q : probs) q /= z;
  return probs;
}

}  // namespace econagents
