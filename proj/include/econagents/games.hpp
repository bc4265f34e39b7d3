#ifndef ECONAGENTS_GAMES_HPP
#define ECONAGENTS_GAMES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace econagents {

// The three two-stage elicitation protocols. Payoffs are parameterized by a
// single (T, R, P, S) tuple with T > R > P > S in every protocol.
enum class Protocol { SPD, TrustGame, UltimatumGame };

const char* protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& name);

// Number of own decision indicators: 3 for SPD, 2 for TG/UG.
int decision_points(Protocol p);

enum class Role { FirstMover, SecondMover };
enum class PayoffLabel : std::uint8_t { T, R, P, S };

char payoff_label_char(PayoffLabel l);

struct PayoffTuple {
  double t{0}, r{0}, p{0}, s{0};

  double value(PayoffLabel l) const;
  // T > R > P > S. Not enforced on construction: estimation consumes
  // whatever a dataset file contains. Generators and scenario tables
  // must only produce ordered tuples.
  bool strictly_ordered() const { return t > r && r > p && p > s; }

  bool operator==(const PayoffTuple&) const = default;
};

namespace detail {
// Fixed-capacity probability vector backing both Strategy and Belief.
struct ProbVec {
  std::array<double, 3> v{};
  int n{0};

  int size() const { return n; }
  double operator[](int i) const { return v[static_cast<size_t>(i)]; }
  double& operator[](int i) { return v[static_cast<size_t>(i)]; }
  bool in_unit_range() const;
  bool operator==(const ProbVec&) const = default;
};
}  // namespace detail

// Own action probabilities, one entry per decision point. Pure strategies
// have entries in {0,1}. Entry semantics:
//   SPD: (cooperate first, cooperate after C, cooperate after D)
//   TG:  (invest, return)
//   UG:  (equal split, accept)
struct Strategy : detail::ProbVec {
  Strategy() = default;
  Strategy(std::initializer_list<double> xs);
  static Strategy pure(std::initializer_list<int> bits);
  bool is_pure() const;
};

// Believed fraction of opponents taking action 1 at each decision point.
// Elicited beliefs are integer percentages divided by 100.
struct Belief : detail::ProbVec {
  Belief() = default;
  Belief(std::initializer_list<double> ys);
  static Belief from_percent(std::initializer_list<int> pct);
};

// One move along a terminal path. `decision_index` addresses the mover's
// strategy/belief slot; `action` is the 0/1 coding of the move.
struct Move {
  char label{};         // C/D, I/N/G/K, E/U/A/N
  bool own{};           // true if the agent moves, false if the opponent
  int decision_index{}; // slot in x (own) or y (opponent)
  int action{};         // 1 = the action coded 1 at that decision point
};

// A complete move sequence with the (own, other) payoff labels it yields.
struct TerminalPath {
  Role role{};
  std::array<Move, 2> moves{};
  int n_moves{0};
  PayoffLabel own_payoff{}, other_payoff{};

  std::string move_string() const;  // e.g. "CD", "IG", "N"
};

// Complete terminal-path set in canonical order: first-mover paths first,
// lexicographic by move labels within each role.
// SPD has 8 paths (4 per role); TG and UG have 6 (3 per role).
const std::vector<TerminalPath>& enumerate_paths(Protocol p);

struct PathDistribution {
  std::vector<std::pair<TerminalPath, double>> weights;
  double total() const;
};

// Path probabilities eta(x, y, path): the 0.5 role factor times the product
// of move probabilities, own moves drawn from x and opponent moves from y.
// The role factor could be dropped under the symmetric role draw; it is kept
// so that expected values are true expectations over the randomized role.
// Throws std::invalid_argument on a shape mismatch.
PathDistribution eta(const Strategy& x, const Belief& y, Protocol p);

// Weight of a single path under (x, y); same convention as eta().
double path_weight(const TerminalPath& path, const Strategy& x, const Belief& y);

struct ExpectedPayoffs {
  double own{0}, other{0};
};

// Sum over paths of eta(x,y,path) * payoff(path), for both sides.
ExpectedPayoffs expected_payoffs(const Strategy& x, const Belief& y,
                                 const PayoffTuple& payoffs, Protocol p);

// Expected own payoff conditional on being the first mover and taking
// `action` (1 or 0) there, under beliefs about the second stage.
// For the SPD: cooperate -> y2*R + (1-y2)*S, defect -> y3*T + (1-y3)*P.
double first_mover_expectation(int action, const Belief& y,
                               const PayoffTuple& payoffs, Protocol p);

// All pure strategies of the protocol, descending lexicographic:
// (1,1,1) first, (0,0,0) last. 8 strategies for SPD, 4 for TG/UG.
const std::vector<Strategy>& pure_strategies(Protocol p);

}  // namespace econagents

#endif
