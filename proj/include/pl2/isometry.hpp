#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "pl2/errors.hpp"
#include "pl2/hilbert.hpp"
#include "pl2/quadrature.hpp"
#include "pl2/specfun.hpp"

namespace pl2 {

// W maps g(z) = sum b_n z^n to f(z,s) = sum b_{n-1} z^n n^{-s}; on
// coefficients it is the identity up to the index shift, which is what makes
// it an isometry.
inline PL2Element apply_w(const H2Element& g) {
  return PL2Element(g.coeffs);
}

// Inverse map f(z,s) -> S* f(z,0): drop the n^{-s} weights (s = 0) and shift
// the coefficients back down.
inline H2Element apply_w_inverse(const PL2Element& f) {
  return H2Element(f.series.coeffs);
}

// Evaluates W(g) at (z, s) through the integral
//   (1/Gamma(s)) int_0^inf x^{s-1} z e^{-x} g(z e^{-x}) dx,
// the quadrature route independent of the coefficient path.
inline Cplx apply_w_integral(const H2Element& g, Cplx z, Cplx s,
                             const EvalParams& params = {}) {
  params.validate();
  if (!is_finite(z) || std::abs(z) >= 1.0) {
    throw DomainError("apply_w_integral: requires |z| < 1");
  }
  if (!is_finite(s) || s.real() <= 0.0) {
    throw DomainError("apply_w_integral: requires Re(s) > 0");
  }
  if (z == Cplx{}) return {};

  auto horner = [&](Cplx zz) {
    Cplx acc{};
    for (std::size_t k = g.coeffs.size(); k-- > 0;) {
      acc = acc * zz + g.coeffs[k];
    }
    return acc;
  };
  auto integrand = [&](double lnx) -> Cplx {
    const double x = std::exp(lnx);
    const Cplx zd = z * std::exp(-x);  // stays inside the disc
    return std::exp(s * lnx - x) * z * horner(zd);
  };
  // Dividing by Gamma(s) amplifies quadrature error when |Gamma(s)| < 1, so
  // the integral is resolved tightly enough to absorb that.
  const Cplx gamma_s = gamma(s);
  const double quad_tol = params.tol * std::min(1.0, std::abs(gamma_s));
  const QuadratureResult q = integrate_exp_sinh(integrand, quad_tol, params.quad_nodes);
  return q.value / gamma_s;
}

}  // namespace pl2
