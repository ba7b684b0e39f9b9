#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "pl2/errors.hpp"
#include "pl2/hilbert.hpp"

namespace pl2 {

// Polynomial in z with complex coefficients and an integer lowest degree.
// Arithmetic is exact over machine complex numbers; only exact zeros are
// trimmed.  min_degree may be negative: inverting against a_1 z produces a
// single z^{-1} at index 1.
struct Polynomial {
  int min_degree = 0;
  std::vector<Cplx> coeffs;  // coeffs[i] multiplies z^{min_degree + i}

  Polynomial() = default;
  Polynomial(int min_deg, std::vector<Cplx> cs)
      : min_degree(min_deg), coeffs(std::move(cs)) {
    trim();
  }

  static Polynomial zero() { return {}; }
  static Polynomial constant(Cplx c) { return monomial(c, 0); }
  static Polynomial monomial(Cplx c, int degree) {
    Polynomial p;
    if (c != Cplx{}) {
      p.min_degree = degree;
      p.coeffs = {c};
    }
    return p;
  }

  bool is_zero() const { return coeffs.empty(); }
  int lowest_degree() const { return min_degree; }
  int highest_degree() const {
    return min_degree + static_cast<int>(coeffs.size()) - 1;
  }

  Cplx coefficient(int degree) const {
    const int i = degree - min_degree;
    if (is_zero() || i < 0 || i >= static_cast<int>(coeffs.size())) return {};
    return coeffs[static_cast<std::size_t>(i)];
  }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == Cplx{}) coeffs.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == Cplx{}) ++lead;
    if (lead > 0) {
      coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
      min_degree += static_cast<int>(lead);
    }
    if (coeffs.empty()) min_degree = 0;
  }

  Cplx operator()(Cplx z) const {
    Cplx acc{};
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc * std::pow(z, static_cast<double>(min_degree));
  }
};

inline Polynomial shifted(const Polynomial& p, int k) {
  if (p.is_zero()) return p;
  Polynomial q = p;
  q.min_degree += k;
  return q;
}

inline Polynomial operator*(const Polynomial& p, Cplx c) {
  if (c == Cplx{} || p.is_zero()) return Polynomial::zero();
  Polynomial q = p;
  for (Cplx& v : q.coeffs) v *= c;
  q.trim();
  return q;
}

inline Polynomial operator*(Cplx c, const Polynomial& p) { return p * c; }

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int lo = std::min(a.min_degree, b.min_degree);
  const int hi = std::max(a.highest_degree(), b.highest_degree());
  Polynomial out;
  out.min_degree = lo;
  out.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), Cplx{});
  for (int d = lo; d <= hi; ++d) {
    out.coeffs[static_cast<std::size_t>(d - lo)] = a.coefficient(d) + b.coefficient(d);
  }
  out.trim();
  return out;
}

inline Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + b * Cplx{-1.0, 0.0};
}

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero();
  Polynomial out;
  out.min_degree = a.min_degree + b.min_degree;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Cplx{});
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  out.trim();
  return out;
}

inline bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.min_degree == b.min_degree && a.coeffs == b.coeffs;
}

// Dirichlet-style series whose n-th entry is a polynomial in z.
struct PolySeries {
  std::vector<Polynomial> entries;

  std::size_t order() const { return entries.size(); }

  // 1-based access; zero beyond the truncation.
  const Polynomial& at(std::size_t n) const {
    static const Polynomial kZero;
    return (n >= 1 && n <= entries.size()) ? entries[n - 1] : kZero;
  }
};

// (a * b)_n = sum_{d | n} a_d b_{n/d}, truncated to the shorter order.
inline CoefficientSeries dirichlet_convolve(const CoefficientSeries& a,
                                            const CoefficientSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Cplx> out(n, Cplx{});
  for (std::size_t d = 1; d <= n; ++d) {
    if (a.at(d) == Cplx{}) continue;
    for (std::size_t q = 1; d * q <= n; ++q) {
      out[d * q - 1] += a.at(d) * b.at(q);
    }
  }
  return CoefficientSeries(std::move(out));
}

// Convolution inverse by the standard recursion; requires a_1 away from zero.
inline CoefficientSeries dirichlet_inverse(const CoefficientSeries& a,
                                           double singular_threshold = 1e-12) {
  if (std::abs(a.at(1)) <= singular_threshold) {
    throw SingularError("dirichlet_inverse: |a_1| below singularity threshold");
  }
  const Cplx lead = 1.0 / a.at(1);
  std::vector<Cplx> b(a.order(), Cplx{});
  b[0] = lead;
  for (std::size_t n = 2; n <= a.order(); ++n) {
    Cplx acc{};
    for (std::size_t d = 2; d <= n; ++d) {
      if (n % d == 0) acc += a.at(d) * b[n / d - 1];
    }
    b[n - 1] = -lead * acc;
  }
  return CoefficientSeries(std::move(b));
}

// Inverse of f = sum a_n z^n n^{-s} in the z-carrying convolution algebra:
// the output alpha satisfies sum_{d|n} a_d z^d alpha_{n/d}(z) = [n = 1].
// Entry 1 is the Laurent monomial (1/a_1) z^{-1}; every later entry is a
// genuine polynomial because each summand carries at least one power of z
// before the division.
inline PolySeries poly_dirichlet_inverse(const PL2Element& f,
                                         double singular_threshold = 1e-12) {
  const Cplx a1 = f.at(1);
  if (std::abs(a1) <= singular_threshold) {
    throw SingularError("poly_dirichlet_inverse: |a_1| below singularity threshold");
  }
  const Cplx lead = 1.0 / a1;
  PolySeries alpha;
  alpha.entries.resize(f.order());
  alpha.entries[0] = Polynomial::monomial(lead, -1);
  for (std::size_t n = 2; n <= f.order(); ++n) {
    Polynomial acc;
    for (std::size_t d = 2; d <= n; ++d) {
      if (n % d != 0 || f.at(d) == Cplx{}) continue;
      acc = acc + shifted(alpha.entries[n / d - 1] * f.at(d), static_cast<int>(d));
    }
    alpha.entries[n - 1] = shifted(acc * (-lead), -1);
  }
  return alpha;
}

// Solves h = phi f for the symbol entries phi_n(z):
//   phi_n = (b_n z^n - sum_{d|n, d<n} phi_d a_{n/d} z^{n/d}) / (a_1 z).
// Every numerator term has degree >= 1, so the division is exact and the
// entries are polynomials.
inline PolySeries solve_symbol(const PL2Element& f, const PL2Element& h,
                               double singular_threshold = 1e-12) {
  const Cplx a1 = f.at(1);
  if (std::abs(a1) <= singular_threshold) {
    throw SingularError("solve_symbol: |a_1| below singularity threshold");
  }
  const Cplx lead = 1.0 / a1;
  PolySeries phi;
  phi.entries.resize(h.order());
  for (std::size_t n = 1; n <= h.order(); ++n) {
    Polynomial acc = Polynomial::monomial(h.at(n), static_cast<int>(n));
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0 || f.at(n / d) == Cplx{}) continue;
      acc = acc - shifted(phi.entries[d - 1] * f.at(n / d), static_cast<int>(n / d));
    }
    phi.entries[n - 1] = shifted(acc * lead, -1);
  }
  return phi;
}

// Dirichlet convolution of a symbol with an element:
//   entry n = sum_{d|n} phi_d(z) a_{n/d} z^{n/d}.
// The product lies back in the coefficient space iff every entry is a scalar
// multiple of z^n.
inline PolySeries apply_symbol(const PolySeries& phi, const PL2Element& f) {
  const std::size_t n_out = std::max(phi.order(), f.order());
  PolySeries out;
  out.entries.resize(n_out);
  for (std::size_t n = 1; n <= n_out; ++n) {
    Polynomial acc;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const Cplx a = f.at(n / d);
      if (a == Cplx{}) continue;
      acc = acc + shifted(phi.at(d) * a, static_cast<int>(n / d));
    }
    out.entries[n - 1] = acc;
  }
  return out;
}

// Squared mass off the diagonal monomials: sum_n sum_{j != n} |[z^j] entry n|^2.
// Zero exactly when every entry n is a scalar multiple of z^n.
inline double pl2_defect(const PolySeries& p) {
  double defect = 0.0;
  for (std::size_t n = 1; n <= p.order(); ++n) {
    const Polynomial& e = p.at(n);
    for (int d = e.min_degree; !e.is_zero() && d <= e.highest_degree(); ++d) {
      if (d == static_cast<int>(n)) continue;
      defect += std::norm(e.coefficient(d));
    }
  }
  return defect;
}

}  // namespace pl2
