#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "pl2/errors.hpp"
#include "pl2/specfun.hpp"

namespace pl2 {

// Finite truncation of a coefficient sequence a_1..a_N (stored 0-based).
struct CoefficientSeries {
  std::vector<Cplx> coeffs;

  CoefficientSeries() = default;
  explicit CoefficientSeries(std::vector<Cplx> values) : coeffs(std::move(values)) {
    if (coeffs.empty()) throw PreconditionError("CoefficientSeries: N >= 1 required");
    for (const Cplx& c : coeffs) {
      if (!is_finite(c)) throw DomainError("CoefficientSeries: nonfinite entry");
    }
  }

  std::size_t order() const { return coeffs.size(); }

  // 1-based access; zero beyond the truncation.
  Cplx at(std::size_t n) const {
    return (n >= 1 && n <= coeffs.size()) ? coeffs[n - 1] : Cplx{};
  }
};

// Element sum a_n z^n n^{-s}, n = 1..N.
struct PL2Element {
  CoefficientSeries series;

  PL2Element() = default;
  explicit PL2Element(CoefficientSeries s) : series(std::move(s)) {}
  explicit PL2Element(std::vector<Cplx> values)
      : series(CoefficientSeries(std::move(values))) {}

  std::size_t order() const { return series.order(); }
  Cplx at(std::size_t n) const { return series.at(n); }
};

// Element sum b_n z^n, n = 0..N-1.
struct H2Element {
  std::vector<Cplx> coeffs;

  H2Element() = default;
  explicit H2Element(std::vector<Cplx> values) : coeffs(std::move(values)) {
    if (coeffs.empty()) throw PreconditionError("H2Element: N >= 1 required");
    for (const Cplx& c : coeffs) {
      if (!is_finite(c)) throw DomainError("H2Element: nonfinite entry");
    }
  }

  std::size_t order() const { return coeffs.size(); }
};

inline double norm_squared(const PL2Element& f) {
  double s = 0.0;
  for (const Cplx& a : f.series.coeffs) s += std::norm(a);
  return s;
}

inline double norm(const PL2Element& f) { return std::sqrt(norm_squared(f)); }

inline double norm(const H2Element& g) {
  double s = 0.0;
  for (const Cplx& b : g.coeffs) s += std::norm(b);
  return std::sqrt(s);
}

namespace detail {

// Finite-sum evaluation without the open-disc check; the continuity bound is
// stated on the closed disc, where the truncated sum is still defined.
inline Cplx evaluate_finite(const PL2Element& f, Cplx z, Cplx s) {
  if (z == Cplx{}) return {};
  const Cplx log_z = std::log(z);
  CompensatedCplxSum sum;
  for (std::size_t n = 1; n <= f.order(); ++n) {
    const double dn = static_cast<double>(n);
    sum.add(f.at(n) * std::exp(dn * log_z - s * std::log(dn)));
  }
  return sum.value();
}

}  // namespace detail

inline Cplx evaluate(const PL2Element& f, Cplx z, Cplx s) {
  if (!is_finite(z) || !is_finite(s)) throw DomainError("evaluate: nonfinite argument");
  if (std::abs(z) >= 1.0) throw DomainError("evaluate: requires |z| < 1");
  return detail::evaluate_finite(f, z, s);
}

// Bound on sum_{n > N} |z|^n n^{-sigma}, the unit-coefficient tail envelope
// used by kernel truncation checks.  The zero-extended tail of f itself is
// exactly zero; this returns the envelope at f's truncation order.
inline double tail_bound(const PL2Element& f, double abs_z, double sigma) {
  if (!(abs_z >= 0.0) || abs_z >= 1.0) {
    throw DomainError("tail_bound: requires 0 <= |z| < 1");
  }
  return polylog_tail_bound(abs_z, sigma, f.order());
}

// l2 coefficient pairing; the shorter series is zero-padded.
inline Cplx inner_product(const PL2Element& f, const PL2Element& g) {
  const std::size_t n = std::min(f.order(), g.order());
  detail::CompensatedCplxSum sum;
  for (std::size_t k = 1; k <= n; ++k) {
    sum.add(f.at(k) * std::conj(g.at(k)));
  }
  return sum.value();
}

// K(z,w,s,t) = Li_{s + conj(t)}(z conj(w)).
inline Cplx kernel(Cplx z, Cplx w, Cplx s, Cplx t, const EvalParams& params = {}) {
  const Cplx arg = z * std::conj(w);
  if (std::abs(arg) >= 1.0) throw DomainError("kernel: requires |z conj(w)| < 1");
  if (arg == Cplx{}) return {};
  return polylog(s + std::conj(t), arg, params);
}

// The kernel section at (w, t) as an element: a_n = conj(w)^n n^{-conj(t)},
// so that <f, kernel_element(w,t,N)> = f(w,t) for every f of order <= N.
inline PL2Element kernel_element(Cplx w, Cplx t, std::size_t order) {
  if (order < 1) throw PreconditionError("kernel_element: N >= 1 required");
  if (!is_finite(w) || std::abs(w) >= 1.0) {
    throw DomainError("kernel_element: requires |w| < 1");
  }
  std::vector<Cplx> coeffs(order, Cplx{});
  if (w != Cplx{}) {
    const Cplx log_cw = std::log(std::conj(w));
    const Cplx ct = std::conj(t);
    for (std::size_t n = 1; n <= order; ++n) {
      const double dn = static_cast<double>(n);
      coeffs[n - 1] = std::exp(dn * log_cw - ct * std::log(dn));
    }
  }
  return PL2Element(std::move(coeffs));
}

// |z f'(z, s+1) - f(z, s)|; zero up to roundoff since n * n^{-(s+1)} = n^{-s}
// termwise.
inline double derivative_relation_check(const PL2Element& f, Cplx z, Cplx s) {
  if (std::abs(z) >= 1.0) {
    throw DomainError("derivative_relation_check: requires |z| < 1");
  }
  if (z == Cplx{}) return 0.0;
  const Cplx log_z = std::log(z);
  detail::CompensatedCplxSum derivative;
  for (std::size_t n = 1; n <= f.order(); ++n) {
    const double dn = static_cast<double>(n);
    derivative.add(f.at(n) * dn * std::exp((dn - 1.0) * log_z - (s + 1.0) * std::log(dn)));
  }
  const Cplx lhs = z * derivative.value();
  const Cplx rhs = detail::evaluate_finite(f, z, s);
  return std::abs(lhs - rhs);
}

// Checks |f(z,s) - f(z0,s)| <= |z - z0| ||f|| zeta(2 sigma - 2)^{1/2}, the
// continuity estimate valid on the closed disc for sigma > 3/2.
inline bool continuity_bound_check(const PL2Element& f, Cplx z, Cplx z0, Cplx s,
                                   const EvalParams& params = {}) {
  const double sigma = s.real();
  if (sigma <= 1.5) throw DomainError("continuity_bound_check: requires Re(s) > 3/2");
  if (std::abs(z) > 1.0 || std::abs(z0) > 1.0) {
    throw DomainError("continuity_bound_check: requires |z|, |z0| <= 1");
  }
  const double lhs = std::abs(detail::evaluate_finite(f, z, s) -
                              detail::evaluate_finite(f, z0, s));
  const double rhs = std::abs(z - z0) * norm(f) *
                         std::sqrt(zeta_real(2.0 * sigma - 2.0, params)) +
                     1e-10;
  return lhs <= rhs;
}

}  // namespace pl2
