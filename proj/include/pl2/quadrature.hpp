#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "pl2/errors.hpp"

namespace pl2 {

using Cplx = std::complex<double>;

struct QuadratureResult {
  Cplx value{0.0, 0.0};
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

// One trapezoidal pass of the exp-sinh rule at step h.  The integrand is
// supplied in log-space: f(lnx) must equal g(e^lnx) * e^lnx for the target
// integral of g over (0, inf), so that power singularities at zero and the
// exponential decay at infinity are both handled without overflow.
template <typename F>
Cplx exp_sinh_pass(F&& f, double h, double term_cutoff, std::size_t max_evals,
                   std::size_t& evals) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double t_max = 7.0;  // ln x spans roughly +-860 at the ends

  auto node = [&](double t) -> Cplx {
    const double lnx = half_pi * std::sinh(t);
    const double w = half_pi * std::cosh(t);
    ++evals;
    return f(lnx) * w;
  };

  Cplx sum = node(0.0);
  for (int dir : {+1, -1}) {
    int below = 0;
    for (int k = 1;; ++k) {
      const double t = dir * k * h;
      if (std::abs(t) > t_max) break;
      if (evals >= max_evals)
        throw ConvergenceError("exp-sinh quadrature: evaluation budget exhausted");
      const Cplx term = node(t);
      sum += term;
      below = (std::abs(term) < term_cutoff) ? below + 1 : 0;
      if (below >= 3) break;
    }
  }
  return sum * h;
}

}  // namespace detail

// Integrates g over (0, inf) via the exp-sinh double-exponential rule,
// refining the step until two successive levels agree to within tol.
// Suited to integrands with an integrable power singularity at zero and
// exponential decay at infinity; both appear here as x^{s-1} e^{-x} shapes.
template <typename F>
QuadratureResult integrate_exp_sinh(F&& f, double tol, std::size_t max_evals) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  const double cutoff = tol * 1e-3;

  QuadratureResult result;
  double h = 0.5;
  Cplx previous = detail::exp_sinh_pass(f, h, cutoff, max_evals, result.evaluations);
  for (int level = 0; level < 10; ++level) {
    h *= 0.5;
    const Cplx refined =
        detail::exp_sinh_pass(f, h, cutoff, max_evals, result.evaluations);
    const double diff = std::abs(refined - previous);
    if (diff <= 0.5 * tol) {
      result.value = refined;
      result.error_estimate = diff;
      return result;
    }
    previous = refined;
  }
  throw ConvergenceError("exp-sinh quadrature: refinement stalled before tolerance");
}

}  // namespace pl2
