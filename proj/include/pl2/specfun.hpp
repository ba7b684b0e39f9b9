#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>

#include "pl2/errors.hpp"
#include "pl2/quadrature.hpp"

namespace pl2 {

struct EvalParams {
  double tol = 1e-10;                 // absolute error target
  std::size_t max_terms = 1'000'000;  // series truncation budget
  std::size_t quad_nodes = 200'000;   // quadrature evaluation budget

  void validate() const {
    if (!(tol > 0.0)) throw DomainError("EvalParams: tol must be positive");
    if (max_terms < 1) throw DomainError("EvalParams: max_terms must be >= 1");
    if (quad_nodes < 2) throw DomainError("EvalParams: quad_nodes must be >= 2");
  }
};

inline bool is_finite(Cplx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

namespace detail {

// Compensated (Neumaier) accumulation, applied per component.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct CompensatedCplxSum {
  CompensatedSum re, im;
  void add(Cplx z) {
    re.add(z.real());
    im.add(z.imag());
  }
  Cplx value() const { return {re.value(), im.value()}; }
};

// Lanczos approximation with g = 607/128 and 15 coefficients (Godfrey's
// set); relative error around 1e-14 on the right half plane, well inside
// the 12-digit contract for Re(s) in [0.1, 50], |Im(s)| <= 50.
inline Cplx gamma_lanczos_right(Cplx z) {
  constexpr double g = 607.0 / 128.0;
  constexpr std::array<double, 15> c = {
      0.99999999999999709182,     57.156235665862923517,
      -59.597960355475491248,     14.136097974741747174,
      -0.49191381609762019978,    0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4,
      0.15808870322491248884e-3,  -0.21026444172410488319e-3,
      0.21743961811521264320e-3,  -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4,
      0.36899182659531622704e-5,
  };
  const Cplx zz = z - 1.0;
  const Cplx t = zz + (g + 0.5);
  Cplx series = c[0];
  for (std::size_t k = 1; k < c.size(); ++k) {
    series += c[k] / (zz + static_cast<double>(k));
  }
  const double sqrt_two_pi = std::sqrt(2.0 * std::numbers::pi);
  return sqrt_two_pi * std::pow(t, zz + 0.5) * std::exp(-t) * series;
}

}  // namespace detail

// Gamma(s) for complex s, via Lanczos with reflection onto Re(s) >= 1/2.
inline Cplx gamma(Cplx s) {
  if (!is_finite(s)) throw DomainError("gamma: nonfinite argument");
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) {
    throw PoleError("gamma: pole at nonpositive integer");
  }
  Cplx value;
  if (s.real() >= 0.5) {
    value = detail::gamma_lanczos_right(s);
  } else {
    const Cplx pi = Cplx(std::numbers::pi, 0.0);
    value = pi / (std::sin(pi * s) * detail::gamma_lanczos_right(1.0 - s));
  }
  if (!is_finite(value)) throw DomainError("gamma: result overflows double range");
  return value;
}

// Riemann zeta for real sigma > 1: partial sum plus the integral tail
// N^{1-sigma}/(sigma-1) with Euler-Maclaurin corrections, N grown until the
// certified remainder falls under params.tol.
inline double zeta_real(double sigma, const EvalParams& params = {}) {
  params.validate();
  if (!std::isfinite(sigma) || sigma <= 1.0) {
    throw DomainError("zeta_real: requires sigma > 1");
  }

  auto remainder_bound = [&](double n) {
    double poch = 1.0;
    for (int j = 0; j < 7; ++j) poch *= sigma + j;
    return poch * std::pow(n, -sigma - 7.0) / 1209600.0;
  };

  std::size_t cutoff = 16;
  while (remainder_bound(static_cast<double>(cutoff)) > 0.5 * params.tol) {
    cutoff *= 2;
    if (cutoff > (std::size_t{1} << 22)) {
      throw ConvergenceError("zeta_real: tail refinement stalled");
    }
  }

  detail::CompensatedSum partial;
  for (std::size_t n = 1; n < cutoff; ++n) {
    partial.add(std::pow(static_cast<double>(n), -sigma));
  }
  const double nn = static_cast<double>(cutoff);
  double tail = std::pow(nn, 1.0 - sigma) / (sigma - 1.0);
  tail += 0.5 * std::pow(nn, -sigma);
  tail += sigma * std::pow(nn, -sigma - 1.0) / 12.0;
  tail -= sigma * (sigma + 1.0) * (sigma + 2.0) * std::pow(nn, -sigma - 3.0) / 720.0;
  tail += sigma * (sigma + 1.0) * (sigma + 2.0) * (sigma + 3.0) * (sigma + 4.0) *
          std::pow(nn, -sigma - 5.0) / 30240.0;
  return partial.value() + tail;
}

// Certified bound on the tail sum_{n > terms} |z|^n n^{-sigma}.  For
// sigma >= 0 this is the plain geometric estimate; for sigma < 0 the growing
// n^{|sigma|} factor is absorbed into the ratio, so the bound stays valid.
// Returns +inf while no bound is available at this truncation.
inline double polylog_tail_bound(double abs_z, double sigma, std::size_t terms) {
  if (!(abs_z >= 0.0) || abs_z >= 1.0) {
    throw DomainError("polylog_tail_bound: requires 0 <= |z| < 1");
  }
  if (abs_z == 0.0) return 0.0;
  const double k1 = static_cast<double>(terms) + 1.0;
  double ratio = abs_z;
  if (sigma < 0.0) {
    ratio *= std::exp(-sigma / k1);
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  }
  const double log_lead = k1 * std::log(abs_z) - sigma * std::log(k1);
  return std::exp(log_lead) / (1.0 - ratio);
}

struct SeriesResult {
  Cplx value{0.0, 0.0};
  double error_bound = 0.0;
  std::size_t terms = 0;
};

// Li_s(z) = sum_{n>=1} z^n n^{-s} truncated where the certified tail bound
// drops under params.tol.
inline SeriesResult polylog_series(Cplx s, Cplx z, const EvalParams& params = {}) {
  params.validate();
  if (!is_finite(s) || !is_finite(z)) throw DomainError("polylog: nonfinite argument");
  const double abs_z = std::abs(z);
  if (abs_z >= 1.0) throw DomainError("polylog: requires |z| < 1");
  if (abs_z == 0.0) return {};

  const double sigma = s.real();
  std::size_t cutoff = 0;
  double bound = 0.0;
  for (std::size_t k = 1; k <= params.max_terms; ++k) {
    bound = polylog_tail_bound(abs_z, sigma, k);
    if (bound <= params.tol) {
      cutoff = k;
      break;
    }
  }
  if (cutoff == 0) {
    throw ConvergenceError("polylog: tail bound not reached within max_terms");
  }

  const Cplx log_z = std::log(z);
  detail::CompensatedCplxSum sum;
  for (std::size_t n = 1; n <= cutoff; ++n) {
    const double dn = static_cast<double>(n);
    sum.add(std::exp(dn * log_z - s * std::log(dn)));
  }
  return {sum.value(), bound, cutoff};
}

inline Cplx polylog(Cplx s, Cplx z, const EvalParams& params = {}) {
  return polylog_series(s, z, params).value;
}

// int_0^inf x^{s-1} lambda e^{-x} / (1 - lambda e^{-x}) dx, which equals
// Gamma(s) Li_s(lambda) for 0 < lambda < 1, Re(s) > 0.
inline Cplx bose_einstein_integral(Cplx s, double lambda,
                                   const EvalParams& params = {}) {
  params.validate();
  if (!is_finite(s) || s.real() <= 0.0) {
    throw DomainError("bose_einstein_integral: requires Re(s) > 0");
  }
  if (!(lambda > 0.0) || !(lambda < 1.0)) {
    throw DomainError("bose_einstein_integral: requires 0 < lambda < 1");
  }
  auto integrand = [&](double lnx) -> Cplx {
    const double x = std::exp(lnx);
    return lambda * std::exp(s * lnx - x) / (1.0 - lambda * std::exp(-x));
  };
  return integrate_exp_sinh(integrand, params.tol, params.quad_nodes).value;
}

}  // namespace pl2
