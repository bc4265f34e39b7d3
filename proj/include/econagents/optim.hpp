#ifndef ECONAGENTS_OPTIM_HPP
#define ECONAGENTS_OPTIM_HPP

#include <functional>
#include <vector>

namespace econagents {

// Golden-section minimization of a unimodal function on [lo, hi].
// Runs until the bracket shrinks below tol or max_iter splits.
double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tol = 1e-10, int max_iter = 200);

inline double golden_section_maximize(const std::function<double(double)>& f, double lo,
                                      double hi, double tol = 1e-10, int max_iter = 200) {
  return golden_section_minimize([&](double v) { return -f(v); }, lo, hi, tol, max_iter);
}

struct SimplexResult {
  std::vector<double> x;
  double value{0};
  bool converged{false};
  int evaluations{0};
};

struct SimplexOptions {
  double f_tol{1e-8};    // stop when the simplex function spread falls below this
  double x_tol{1e-6};    // ... and the vertex spread below this
  int max_iter{20000};
  double initial_step{0.25};
};

// Nelder-Mead downhill simplex (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5). Derivative-free: the objectives here have max{0,.} kinks.
SimplexResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                   std::vector<double> start, const SimplexOptions& opt = {});

}  // namespace econagents

#endif
