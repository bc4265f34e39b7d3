#ifndef ECONAGENTS_TESTS_ORACLE_HPP
#define ECONAGENTS_TESTS_ORACLE_HPP

// Independent oracle for the utility path sums. Everything here is written
// as explicit per-protocol closed-form expressions, deliberately sharing no
// code with the library's tree traversal.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "econagents/games.hpp"
#include "econagents/preferences.hpp"

namespace oracle {

struct Terms {
  double own{0}, other{0}, kant{0}, envy{0}, guilt{0};
};

// x, y as plain vectors; payoffs as (T, R, P, S).
inline Terms spd_terms(const std::vector<double>& x, const std::vector<double>& y,
                       double T, double R, double P, double S) {
  Terms t;
  double x1 = x[0], x2 = x[1], x3 = x[2];
  double y1 = y[0], y2 = y[1], y3 = y[2];
  t.own = 0.5 * (x1 * (y2 * R + (1 - y2) * S) + (1 - x1) * (y3 * T + (1 - y3) * P)) +
          0.5 * (y1 * (x2 * R + (1 - x2) * T) + (1 - y1) * (x3 * S + (1 - x3) * P));
  t.other = 0.5 * (x1 * (y2 * R + (1 - y2) * T) + (1 - x1) * (y3 * S + (1 - y3) * P)) +
            0.5 * (y1 * (x2 * R + (1 - x2) * S) + (1 - y1) * (x3 * T + (1 - x3) * P));
  t.kant = 0.5 * (x1 * (x2 * R + (1 - x2) * S) + (1 - x1) * (x3 * T + (1 - x3) * P)) +
           0.5 * (x1 * (x2 * R + (1 - x2) * T) + (1 - x1) * (x3 * S + (1 - x3) * P));
  t.envy = 0.5 * x1 * (1 - y2) * (T - S) + 0.5 * (1 - y1) * x3 * (T - S);
  t.guilt = 0.5 * (1 - x1) * y3 * (T - S) + 0.5 * y1 * (1 - x2) * (T - S);
  return t;
}

inline Terms tg_terms(const std::vector<double>& x, const std::vector<double>& y,
                      double T, double R, double P, double S) {
  Terms t;
  double x1 = x[0], x2 = x[1], y1 = y[0], y2 = y[1];
  t.own = 0.5 * (x1 * (y2 * R + (1 - y2) * S) + (1 - x1) * P) +
          0.5 * (y1 * (x2 * R + (1 - x2) * T) + (1 - y1) * P);
  t.other = 0.5 * (x1 * (y2 * R + (1 - y2) * T) + (1 - x1) * P) +
            0.5 * (y1 * (x2 * R + (1 - x2) * S) + (1 - y1) * P);
  t.kant = 0.5 * (x1 * (x2 * R + (1 - x2) * S) + (1 - x1) * P) +
           0.5 * (x1 * (x2 * R + (1 - x2) * T) + (1 - x1) * P);
  t.envy = 0.5 * x1 * (1 - y2) * (T - S);
  t.guilt = 0.5 * y1 * (1 - x2) * (T - S);
  return t;
}

inline Terms ug_terms(const std::vector<double>& x, const std::vector<double>& y,
                      double T, double R, double P, double S) {
  Terms t;
  double x1 = x[0], x2 = x[1], y1 = y[0], y2 = y[1];
  t.own = 0.5 * (x1 * R + (1 - x1) * (y2 * T + (1 - y2) * S)) +
          0.5 * (y1 * R + (1 - y1) * (x2 * P + (1 - x2) * S));
  t.other = 0.5 * (x1 * R + (1 - x1) * (y2 * P + (1 - y2) * S)) +
            0.5 * (y1 * R + (1 - y1) * (x2 * T + (1 - x2) * S));
  t.kant = 0.5 * (x1 * R + (1 - x1) * (x2 * T + (1 - x2) * S)) +
           0.5 * (x1 * R + (1 - x1) * (x2 * P + (1 - x2) * S));
  t.envy = 0.5 * (1 - y1) * x2 * (T - P);
  t.guilt = 0.5 * (1 - x1) * y2 * (T - P);
  return t;
}

inline Terms terms(econagents::Protocol p, const std::vector<double>& x,
                   const std::vector<double>& y, const econagents::PayoffTuple& pp) {
  switch (p) {
    case econagents::Protocol::SPD: return spd_terms(x, y, pp.t, pp.r, pp.p, pp.s);
    case econagents::Protocol::TrustGame: return tg_terms(x, y, pp.t, pp.r, pp.p, pp.s);
    case econagents::Protocol::UltimatumGame: return ug_terms(x, y, pp.t, pp.r, pp.p, pp.s);
  }
  throw std::logic_error("bad protocol");
}

inline double utility(econagents::Protocol p, const std::vector<double>& x,
                      const std::vector<double>& y, const econagents::PayoffTuple& pp,
                      double alpha, double beta, double kappa) {
  Terms t = terms(p, x, y, pp);
  return (1 - kappa) * t.own + kappa * t.kant - alpha * t.envy - beta * t.guilt;
}

inline double agent_utility(const econagents::AgentType& agent, econagents::Protocol p,
                            const std::vector<double>& x, const std::vector<double>& y,
                            const econagents::PayoffTuple& pp) {
  using Kind = econagents::AgentType::Kind;
  Terms t = terms(p, x, y, pp);
  switch (agent.kind) {
    case Kind::HomoEconomicus: return t.own;
    case Kind::HomoMoralis: return (1 - agent.params.kappa) * t.own + agent.params.kappa * t.kant;
    case Kind::General:
      return utility(p, x, y, pp, agent.params.alpha, agent.params.beta, agent.params.kappa);
    case Kind::Altruist: return t.other;
    case Kind::InequityAverse:
      return t.own - agent.params.alpha * t.envy - agent.params.beta * t.guilt;
  }
  throw std::logic_error("bad agent kind");
}

// Naive argmax over all pure strategies with the same tie convention as the
// library: more 1-entries first, then descending lexicographic.
inline std::vector<double> best_response(const econagents::AgentType& agent,
                                         econagents::Protocol p,
                                         const std::vector<double>& y,
                                         const econagents::PayoffTuple& pp) {
  int n = econagents::decision_points(p);
  std::vector<std::vector<double>> all;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<double> x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = (mask >> (n - 1 - i)) & 1;
    all.push_back(x);
  }
  auto ones = [](const std::vector<double>& v) {
    return static_cast<int>(std::count(v.begin(), v.end(), 1.0));
  };
  std::vector<double> best;
  double best_u = 0;
  for (const auto& x : all) {
    double u = agent_utility(agent, p, x, y, pp);
    if (best.empty()) {
      best = x;
      best_u = u;
      continue;
    }
    double scale = std::max({1.0, std::fabs(u), std::fabs(best_u)});
    bool tie = std::fabs(u - best_u) <= 1e-9 * scale;
    if (tie) {
      if (ones(x) > ones(best) || (ones(x) == ones(best) && x > best)) best = x;
      best_u = std::max(best_u, u);
    } else if (u > best_u) {
      best = x;
      best_u = u;
    }
  }
  return best;
}

}  // namespace oracle

#endif
