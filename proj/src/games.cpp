#include "econagents/games.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace econagents {

const char* protocol_name(Protocol p) {
  switch (p) {
    case Protocol::SPD: return "SPD";
    case Protocol::TrustGame: return "TG";
    case Protocol::UltimatumGame: return "UG";
  }
  return "?";
}

Protocol protocol_from_name(const std::string& name) {
  if (name == "SPD" || name == "spd") return Protocol::SPD;
  if (name == "TG" || name == "tg") return Protocol::TrustGame;
  if (name == "UG" || name == "ug") return Protocol::UltimatumGame;
  throw std::invalid_argument("unknown protocol name: " + name);
}

int decision_points(Protocol p) { return p == Protocol::SPD ? 3 : 2; }

char payoff_label_char(PayoffLabel l) {
  switch (l) {
    case PayoffLabel::T: return 'T';
    case PayoffLabel::R: return 'R';
    case PayoffLabel::P: return 'P';
    case PayoffLabel::S: return 'S';
  }
  return '?';
}

double PayoffTuple::value(PayoffLabel l) const {
  switch (l) {
    case PayoffLabel::T: return t;
    case PayoffLabel::R: return r;
    case PayoffLabel::P: return p;
    case PayoffLabel::S: return s;
  }
  return 0;
}

namespace detail {
bool ProbVec::in_unit_range() const {
  for (int i = 0; i < n; ++i) {
    if (!(v[static_cast<size_t>(i)] >= 0.0 && v[static_cast<size_t>(i)] <= 1.0)) return false;
  }
  return true;
}
}  // namespace detail

Strategy::Strategy(std::initializer_list<double> xs) {
  if (xs.size() > 3) throw std::invalid_argument("strategy has at most 3 entries");
  n = static_cast<int>(xs.size());
  std::copy(xs.begin(), xs.end(), v.begin());
}

Strategy Strategy::pure(std::initializer_list<int> bits) {
  Strategy x;
  if (bits.size() > 3) throw std::invalid_argument("strategy has at most 3 entries");
  x.n = static_cast<int>(bits.size());
  int i = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("pure strategy entries must be 0 or 1");
    x.v[static_cast<size_t>(i++)] = b;
  }
  return x;
}

bool Strategy::is_pure() const {
  for (int i = 0; i < n; ++i) {
    if (v[static_cast<size_t>(i)] != 0.0 && v[static_cast<size_t>(i)] != 1.0) return false;
  }
  return true;
}

Belief::Belief(std::initializer_list<double> ys) {
  if (ys.size() > 3) throw std::invalid_argument("belief has at most 3 entries");
  n = static_cast<int>(ys.size());
  std::copy(ys.begin(), ys.end(), v.begin());
}

Belief Belief::from_percent(std::initializer_list<int> pct) {
  Belief y;
  if (pct.size() > 3) throw std::invalid_argument("belief has at most 3 entries");
  y.n = static_cast<int>(pct.size());
  int i = 0;
  for (int q : pct) {
    if (q < 0 || q > 100) throw std::invalid_argument("belief percentage out of [0,100]");
    y.v[static_cast<size_t>(i++)] = q / 100.0;
  }
  return y;
}

std::string TerminalPath::move_string() const {
  std::string s;
  for (int i = 0; i < n_moves; ++i) s.push_back(moves[static_cast<size_t>(i)].label);
  return s;
}

namespace {

TerminalPath make_path(Role role, std::initializer_list<Move> ms,
                       PayoffLabel own, PayoffLabel other) {
  TerminalPath t;
  t.role = role;
  t.n_moves = static_cast<int>(ms.size());
  int i = 0;
  for (const Move& m : ms) t.moves[static_cast<size_t>(i++)] = m;
  t.own_payoff = own;
  t.other_payoff = other;
  return t;
}

// Move constructors keyed by label. decision_index follows the strategy
// layout: slot 0 = stage-one action, slot 1 = second stage (after action 1
// for SPD), slot 2 = SPD second stage after action 0.
Move mv(char label, bool own, int idx, int action) { return Move{label, own, idx, action}; }

std::vector<TerminalPath> build_spd() {
  using L = PayoffLabel;
  std::vector<TerminalPath> out;
  // First mover: own stage-one action, opponent responds (slot 1 after C, 2 after D).
  out.push_back(make_path(Role::FirstMover, {mv('C', true, 0, 1), mv('C', false, 1, 1)}, L::R, L::R));
  out.push_back(make_path(Role::FirstMover, {mv('C', true, 0, 1), mv('D', false, 1, 0)}, L::S, L::T));
  out.push_back(make_path(Role::FirstMover, {mv('D', true, 0, 0), mv('C', false, 2, 1)}, L::T, L::S));
  out.push_back(make_path(Role::FirstMover, {mv('D', true, 0, 0), mv('D', false, 2, 0)}, L::P, L::P));
  // Second mover: opponent opens, the agent responds.
  out.push_back(make_path(Role::SecondMover, {mv('C', false, 0, 1), mv('C', true, 1, 1)}, L::R, L::R));
  out.push_back(make_path(Role::SecondMover, {mv('C', false, 0, 1), mv('D', true, 1, 0)}, L::T, L::S));
  out.push_back(make_path(Role::SecondMover, {mv('D', false, 0, 0), mv('C', true, 2, 1)}, L::S, L::T));
  out.push_back(make_path(Role::SecondMover, {mv('D', false, 0, 0), mv('D', true, 2, 0)}, L::P, L::P));
  return out;
}

std::vector<TerminalPath> build_tg() {
  using L = PayoffLabel;
  std::vector<TerminalPath> out;
  // Trustor side: invest (I) reaches the trustee's return/keep choice,
  // not invest (N) terminates at (P,P).
  out.push_back(make_path(Role::FirstMover, {mv('I', true, 0, 1), mv('G', false, 1, 1)}, L::R, L::R));
  out.push_back(make_path(Role::FirstMover, {mv('I', true, 0, 1), mv('K', false, 1, 0)}, L::S, L::T));
  out.push_back(make_path(Role::FirstMover, {mv('N', true, 0, 0)}, L::P, L::P));
  // Trustee side.
  out.push_back(make_path(Role::SecondMover, {mv('I', false, 0, 1), mv('G', true, 1, 1)}, L::R, L::R));
  out.push_back(make_path(Role::SecondMover, {mv('I', false, 0, 1), mv('K', true, 1, 0)}, L::T, L::S));
  out.push_back(make_path(Role::SecondMover, {mv('N', false, 0, 0)}, L::P, L::P));
  return out;
}

std::vector<TerminalPath> build_ug() {
  using L = PayoffLabel;
  std::vector<TerminalPath> out;
  // Proposer side: equal split (E) terminates at (R,R), unequal (U) reaches
  // the responder's accept/reject choice.
  out.push_back(make_path(Role::FirstMover, {mv('E', true, 0, 1)}, L::R, L::R));
  out.push_back(make_path(Role::FirstMover, {mv('U', true, 0, 0), mv('A', false, 1, 1)}, L::T, L::P));
  out.push_back(make_path(Role::FirstMover, {mv('U', true, 0, 0), mv('N', false, 1, 0)}, L::S, L::S));
  // Responder side.
  out.push_back(make_path(Role::SecondMover, {mv('E', false, 0, 1)}, L::R, L::R));
  out.push_back(make_path(Role::SecondMover, {mv('U', false, 0, 0), mv('A', true, 1, 1)}, L::P, L::T));
  out.push_back(make_path(Role::SecondMover, {mv('U', false, 0, 0), mv('N', true, 1, 0)}, L::S, L::S));
  return out;
}

void sort_canonical(std::vector<TerminalPath>& paths) {
  std::stable_sort(paths.begin(), paths.end(), [](const TerminalPath& a, const TerminalPath& b) {
    if (a.role != b.role) return a.role == Role::FirstMover;
    return a.move_string() < b.move_string();
  });
}

std::vector<TerminalPath> build(Protocol p) {
  std::vector<TerminalPath> paths;
  switch (p) {
    case Protocol::SPD: paths = build_spd(); break;
    case Protocol::TrustGame: paths = build_tg(); break;
    case Protocol::UltimatumGame: paths = build_ug(); break;
  }
  sort_canonical(paths);
  return paths;
}

void check_shape(const detail::ProbVec& v, Protocol p, const char* what) {
  if (v.size() != decision_points(p)) {
    throw std::invalid_argument(std::string(what) + " length does not match protocol " +
                                protocol_name(p));
  }
}

}  // namespace

const std::vector<TerminalPath>& enumerate_paths(Protocol p) {
  static const std::vector<TerminalPath> spd = build(Protocol::SPD);
  static const std::vector<TerminalPath> tg = build(Protocol::TrustGame);
  static const std::vector<TerminalPath> ug = build(Protocol::UltimatumGame);
  switch (p) {
    case Protocol::SPD: return spd;
    case Protocol::TrustGame: return tg;
    case Protocol::UltimatumGame: return ug;
  }
  return spd;
}

double PathDistribution::total() const {
  double s = 0;
  for (const auto& [path, w] : weights) s += w;
  return s;
}

double path_weight(const TerminalPath& path, const Strategy& x, const Belief& y) {
  double w = 0.5;  // symmetric role draw
  for (int i = 0; i < path.n_moves; ++i) {
    const Move& m = path.moves[static_cast<size_t>(i)];
    double p1 = m.own ? x[m.decision_index] : y[m.decision_index];
    w *= (m.action == 1) ? p1 : (1.0 - p1);
  }
  return w;
}

PathDistribution eta(const Strategy& x, const Belief& y, Protocol p) {
  check_shape(x, p, "strategy");
  check_shape(y, p, "belief");
  PathDistribution dist;
  const auto& paths = enumerate_paths(p);
  dist.weights.reserve(paths.size());
  for (const auto& path : paths) dist.weights.emplace_back(path, path_weight(path, x, y));
  return dist;
}

ExpectedPayoffs expected_payoffs(const Strategy& x, const Belief& y,
                                 const PayoffTuple& payoffs, Protocol p) {
  check_shape(x, p, "strategy");
  check_shape(y, p, "belief");
  ExpectedPayoffs e;
  for (const auto& path : enumerate_paths(p)) {
    double w = path_weight(path, x, y);
    e.own += w * payoffs.value(path.own_payoff);
    e.other += w * payoffs.value(path.other_payoff);
  }
  return e;
}

double first_mover_expectation(int action, const Belief& y,
                               const PayoffTuple& payoffs, Protocol p) {
  check_shape(y, p, "belief");
  if (action != 0 && action != 1) throw std::invalid_argument("action must be 0 or 1");
  double e = 0;
  for (const auto& path : enumerate_paths(p)) {
    if (path.role != Role::FirstMover) continue;
    if (path.moves[0].action != action) continue;
    // Conditional on role and own opening action: opponent moves only.
    double w = 1.0;
    for (int i = 1; i < path.n_moves; ++i) {
      const Move& m = path.moves[static_cast<size_t>(i)];
      double p1 = y[m.decision_index];
      w *= (m.action == 1) ? p1 : (1.0 - p1);
    }
    e += w * payoffs.value(path.own_payoff);
  }
  return e;
}

const std::vector<Strategy>& pure_strategies(Protocol p) {
  static const auto make = [](int n) {
    std::vector<Strategy> out;
    for (int mask = (1 << n) - 1; mask >= 0; --mask) {
      Strategy x;
      x.n = n;
      for (int i = 0; i < n; ++i) x[i] = (mask >> (n - 1 - i)) & 1;
      out.push_back(x);
    }
    return out;
  };
  static const std::vector<Strategy> three = make(3);
  static const std::vector<Strategy> two = make(2);
  return p == Protocol::SPD ? three : two;
}

}  // namespace econagents
