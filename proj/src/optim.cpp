#include "econagents/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace econagents {

double golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                               double tol, int max_iter) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

double spread(const std::vector<Vertex>& s) {
  double m = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    for (size_t j = 0; j < s[i].x.size(); ++j) {
      m = std::max(m, std::fabs(s[i].x[j] - s[0].x[j]));
    }
  }
  return m;
}

}  // namespace

SimplexResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                   std::vector<double> start, const SimplexOptions& opt) {
  const size_t n = start.size();
  SimplexResult res;
  std::vector<Vertex> s;
  s.reserve(n + 1);
  s.push_back({start, f(start)});
  res.evaluations = 1;
  for (size_t i = 0; i < n; ++i) {
    auto x = start;
    x[i] += (x[i] != 0.0 ? opt.initial_step * std::fabs(x[i]) : opt.initial_step);
    s.push_back({x, f(x)});
    ++res.evaluations;
  }

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  std::sort(s.begin(), s.end(), by_value);

  for (int iter = 0; iter < opt.max_iter; ++iter) {
    if (std::fabs(s.back().f - s.front().f) < opt.f_tol && spread(s) < opt.x_tol) {
      res.converged = true;
      break;
    }

    // Centroid of all but the worst vertex.
    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) centroid[j] += s[i].x[j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double coef) {
      std::vector<double> x(n);
      for (size_t j = 0; j < n; ++j) x[j] = centroid[j] + coef * (s.back().x[j] - centroid[j]);
      return x;
    };

    auto reflected = blend(-1.0);
    double fr = f(reflected);
    ++res.evaluations;

    if (fr < s.front().f) {
      auto expanded = blend(-2.0);
      double fe = f(expanded);
      ++res.evaluations;
      s.back() = fe < fr ? Vertex{expanded, fe} : Vertex{reflected, fr};
    } else if (fr < s[n - 1].f) {
      s.back() = {reflected, fr};
    } else {
      auto contracted = blend(fr < s.back().f ? -0.5 : 0.5);
      double fc = f(contracted);
      ++res.evaluations;
      if (fc < std::min(fr, s.back().f)) {
        s.back() = {contracted, fc};
      } else {
        // Shrink toward the best vertex.
        for (size_t i = 1; i <= n; ++i) {
          for (size_t j = 0; j < n; ++j) s[i].x[j] = s[0].x[j] + 0.5 * (s[i].x[j] - s[0].x[j]);
          s[i].f = f(s[i].x);
          ++res.evaluations;
        }
      }
    }
    std::sort(s.begin(), s.end(), by_value);
  }

  res.x = s.front().x;
  res.value = s.front().f;
  return res;
}

}  // namespace econagents
