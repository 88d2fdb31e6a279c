#pragma once

// Nelder-Mead downhill simplex with the textbook coefficients
// (reflect 1, expand 2, contract 0.5, shrink 0.5). Termination is on the
// spread of the vertex values, not on simplex size.

#include <algorithm>
#include <array>
#include <cstddef>

namespace ncqd {

template <std::size_t N>
struct SimplexResult {
  std::array<double, N> x{};
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
  long evaluations = 0;
};

template <std::size_t N, typename F>
SimplexResult<N> nelder_mead(F&& objective, const std::array<double, N>& start, double edge,
                             double value_tol, int max_iters) {
  using Point = std::array<double, N>;
  long evals = 0;
  auto eval = [&](const Point& p) {
    ++evals;
    return objective(p);
  };

  std::array<Point, N + 1> xs;
  std::array<double, N + 1> fs;
  xs[0] = start;
  fs[0] = eval(xs[0]);
  for (std::size_t i = 0; i < N; ++i) {
    xs[i + 1] = start;
    xs[i + 1][i] += edge;
    fs[i + 1] = eval(xs[i + 1]);
  }

  std::array<std::size_t, N + 1> order;
  auto sort_order = [&] {
    for (std::size_t i = 0; i <= N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
  };
  sort_order();

  bool converged = false;
  int iter = 0;
  for (; iter < max_iters; ++iter) {
    const std::size_t best = order[0], second_worst = order[N - 1], worst = order[N];
    if (fs[worst] - fs[best] < value_tol) {
      converged = true;
      break;
    }

    Point centroid{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) centroid[k] += xs[order[i]][k] / static_cast<double>(N);

    auto blend = [&](const Point& from, double coeff) {
      Point p;
      for (std::size_t k = 0; k < N; ++k) p[k] = centroid[k] + coeff * (from[k] - centroid[k]);
      return p;
    };

    const Point reflected = blend(xs[worst], -1.0);
    const double fr = eval(reflected);
    bool shrink = false;
    if (fr < fs[best]) {
      const Point expanded = blend(xs[worst], -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        xs[worst] = expanded;
        fs[worst] = fe;
      } else {
        xs[worst] = reflected;
        fs[worst] = fr;
      }
    } else if (fr < fs[second_worst]) {
      xs[worst] = reflected;
      fs[worst] = fr;
    } else if (fr < fs[worst]) {
      const Point outside = blend(xs[worst], -0.5);
      const double fc = eval(outside);
      if (fc <= fr) {
        xs[worst] = outside;
        fs[worst] = fc;
      } else {
        shrink = true;
      }
    } else {
      const Point inside = blend(xs[worst], 0.5);
      const double fc = eval(inside);
      if (fc < fs[worst]) {
        xs[worst] = inside;
        fs[worst] = fc;
      } else {
        shrink = true;
      }
    }

    if (shrink) {
      for (std::size_t i = 1; i <= N; ++i) {
        const std::size_t v = order[i];
        for (std::size_t k = 0; k < N; ++k) xs[v][k] = xs[best][k] + 0.5 * (xs[v][k] - xs[best][k]);
        fs[v] = eval(xs[v]);
      }
    }
    sort_order();
  }

  return {xs[order[0]], fs[order[0]], converged, iter, evals};
}

}  // namespace ncqd
