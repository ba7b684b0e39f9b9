#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "pl2/dirichlet.hpp"
#include "pl2/hilbert.hpp"
#include "pl2/isometry.hpp"
#include "pl2/rng.hpp"
#include "pl2/specfun.hpp"
#include "pl2/toeplitz.hpp"

namespace pl2 {

struct VerifyConfig {
  int truncation = 256;        // N for coefficient-space checks
  double tol = 1e-8;           // numeric acceptance threshold
  std::uint64_t seed = 42;     // RNG seed; identical seed -> identical report
  int max_k = 200;             // rank identities swept up to this symbol power
  int max_nm = 60;             // decomposition swept over coprime nm up to this
  int samples = 50;            // base sample count for randomized blocks
};

struct VerifyLine {
  std::string key;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  VerifyConfig config;
  std::vector<VerifyLine> lines;

  bool all_pass() const {
    return std::all_of(lines.begin(), lines.end(),
                       [](const VerifyLine& l) { return l.pass; });
  }
};

inline void print_report(const VerifyReport& report, std::ostream& out) {
  char header[256];
  std::snprintf(header, sizeof(header),
                "config: truncation=%d tol=%.3e seed=%llu max_k=%d max_nm=%d samples=%d",
                report.config.truncation, report.config.tol,
                static_cast<unsigned long long>(report.config.seed),
                report.config.max_k, report.config.max_nm, report.config.samples);
  out << "suite: " << report.suite << '\n' << header << '\n';
  std::vector<VerifyLine> sorted = report.lines;
  std::sort(sorted.begin(), sorted.end(),
            [](const VerifyLine& a, const VerifyLine& b) { return a.key < b.key; });
  for (const VerifyLine& line : sorted) {
    out << (line.pass ? "PASS " : "FAIL ") << line.key << " | " << line.detail << '\n';
  }
  out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << '\n';
}

namespace detail {

inline std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), pattern, args...);
  return buf;
}

inline int divisor_count(int k) {
  int d = 0;
  for (int i = 1; i <= k; ++i) {
    if (k % i == 0) ++d;
  }
  return d;
}

inline std::vector<int> moebius_table(int n) {
  // Trial factorization per index; mu = 0 once a squared prime divides.
  std::vector<int> mu(static_cast<std::size_t>(n) + 1, 0);
  mu[1] = 1;
  for (int i = 2; i <= n; ++i) {
    int v = i, distinct = 0;
    bool squarefree = true;
    for (int p = 2; p * p <= v && squarefree; ++p) {
      if (v % p != 0) continue;
      v /= p;
      ++distinct;
      if (v % p == 0) squarefree = false;
    }
    if (v > 1) ++distinct;
    mu[static_cast<std::size_t>(i)] = squarefree ? (distinct % 2 == 0 ? 1 : -1) : 0;
  }
  return mu;
}

inline Eigen::MatrixXcd to_eigen(const SparseOperator& op) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(op.rows, op.cols);
  for (const auto& [rc, w] : op.entries) m(rc.first - 1, rc.second - 1) = w;
  return m;
}

inline double operator_norm(const SparseOperator& op) {
  if (op.is_zero()) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(op));
  return svd.singularValues()(0);
}

}  // namespace detail

// Two-path agreement for W: quadrature of the integral against the exact
// coefficient image, over seeded samples.
inline VerifyReport verify_isometry(const VerifyConfig& cfg) {
  VerifyReport report{"isometry", cfg, {}};
  Rng rng(cfg.seed);
  EvalParams params;
  params.tol = cfg.tol / 4.0;

  const std::vector<Cplx> s_values = {{0.5, 0.0}, {1.0, 0.0}, {2.0, 0.0},
                                      {2.5, 0.0}, {2.0, 1.0}};
  int failures = 0;
  double worst = 0.0;
  std::string first_failure;
  for (int i = 0; i < cfg.samples; ++i) {
    std::vector<Cplx> coeffs(8);
    for (Cplx& c : coeffs) c = rng.complex_in_box(1.0);
    const H2Element g(coeffs);
    const Cplx z = rng.complex_in_disc(0.9);
    const Cplx s = s_values[static_cast<std::size_t>(i) % s_values.size()];
    const Cplx via_integral = apply_w_integral(g, z, s, params);
    const Cplx via_coeffs = evaluate(apply_w(g), z, s);
    const double diff = std::abs(via_integral - via_coeffs);
    worst = std::max(worst, diff);
    if (diff > cfg.tol) {
      ++failures;
      if (first_failure.empty()) first_failure = detail::fmt(" first at sample %d", i);
    }
  }
  report.lines.push_back({"two-path",
                          failures == 0,
                          detail::fmt("%d samples, max |quad - coeff| = %.3e, failures=%d%s",
                                      cfg.samples, worst, failures, first_failure.c_str())});
  return report;
}

// The golden zeta-symbol matrices, the shift decomposition identity over
// coprime pairs, and the off-by-one outer shift for contrast.
inline VerifyReport verify_decomposition(const VerifyConfig& cfg) {
  VerifyReport report{"decomposition", cfg, {}};

  struct Golden {
    int k, order;
    std::vector<std::pair<int, int>> ones;
  };
  const std::vector<Golden> golden = {
      {2, 2, {{3, 1}, {4, 2}}},
      {3, 3, {{4, 1}, {6, 3}}},
      {4, 4, {{5, 1}, {6, 2}, {8, 4}}},
      {6, 6, {{7, 1}, {8, 2}, {9, 3}, {12, 6}}},
  };
  bool golden_ok = true;
  for (const Golden& g : golden) {
    const SparseOperator op = toeplitz_zeta(g.k, g.order);
    if (op.nnz() != g.ones.size()) golden_ok = false;
    for (const auto& [r, c] : g.ones) {
      if (op.at(r, c) != Cplx{1.0, 0.0}) golden_ok = false;
    }
  }
  report.lines.push_back({"golden-matrices", golden_ok,
                          "z^2, z^3, z^4, z^6 zeta-symbol matrices, entrywise"});

  int checked = 0, mismatches = 0;
  std::string first_mismatch;
  for (int n = 1; n <= cfg.max_nm; ++n) {
    for (int m = 1; n * m <= cfg.max_nm; ++m) {
      if (std::gcd(n, m) != 1) continue;
      ++checked;
      const int order = 2 * n * m;
      if (!equal_on_shared_window(decomposition_rhs(n, m, order),
                                  toeplitz_zeta(n * m, order))) {
        ++mismatches;
        if (first_mismatch.empty()) {
          first_mismatch = detail::fmt(" first at (n,m)=(%d,%d)", n, m);
        }
      }
    }
  }
  report.lines.push_back(
      {"product-outer-shift", mismatches == 0,
       detail::fmt("S_{+(nm)}: %d coprime pairs with nm <= %d, mismatches=%d%s",
                   checked, cfg.max_nm, mismatches, first_mismatch.c_str())});

  // The off-by-one outer shift S_{+(m+n)} must disagree on (n, m) = (2, 3);
  // this line passes when the divergence is confirmed.  Both verdicts are
  // always reported side by side.
  const bool sum_matches =
      equal_on_shared_window(decomposition_rhs(2, 3, 12, OuterShift::sum),
                             toeplitz_zeta(6, 12));
  report.lines.push_back(
      {"sum-outer-shift", !sum_matches,
       sum_matches ? "S_{+(m+n)} unexpectedly reproduced T_{z^6 zeta} on (2,3)"
                   : "S_{+(m+n)} verdict: FAIL on (2,3), divergence confirmed"});
  return report;
}

// Rank identities: rank T_{z^k zeta} = d(k), and multiplicativity of d
// recovered from ranks of coprime factor symbols.
inline VerifyReport verify_ranks(const VerifyConfig& cfg) {
  VerifyReport report{"ranks", cfg, {}};

  int failures = 0;
  std::string first_failure;
  for (int k = 1; k <= cfg.max_k; ++k) {
    if (rank(toeplitz_zeta(k, k)) != detail::divisor_count(k)) {
      ++failures;
      if (first_failure.empty()) first_failure = detail::fmt(" first at k=%d", k);
    }
  }
  report.lines.push_back({"rank-divisor", failures == 0,
                          detail::fmt("%d identities rank(T_{z^k zeta}) = d(k), failures=%d%s",
                                      cfg.max_k, failures, first_failure.c_str())});

  int checked = 0, bad = 0;
  std::string first_bad;
  for (int n = 1; n <= 100; ++n) {
    for (int m = n; n * m <= 100; ++m) {
      if (std::gcd(n, m) != 1) continue;
      ++checked;
      const RankTriple t = divisor_rank_identity(n, m);
      if (t.rank_product != t.rank_left * t.rank_right) {
        ++bad;
        if (first_bad.empty()) first_bad = detail::fmt(" first at (n,m)=(%d,%d)", n, m);
      }
    }
  }
  report.lines.push_back(
      {"rank-multiplicativity", bad == 0,
       detail::fmt("d(nm)=d(n)d(m) from ranks, %d coprime pairs nm <= 100, failures=%d%s",
                   checked, bad, first_bad.c_str())});
  return report;
}

// Convolution inverses, the Moebius vector, and the coefficient-forcing
// induction that kills nonconstant symbols.
inline VerifyReport verify_dirichlet(const VerifyConfig& cfg) {
  VerifyReport report{"dirichlet", cfg, {}};
  Rng rng(cfg.seed);
  const std::size_t order = static_cast<std::size_t>(cfg.truncation);

  // Tail coefficients are drawn proportionally to |a_1|: the inverse
  // recursion amplifies like (max|a_n| / |a_1|)^{Omega(n)} along divisor
  // chains, so a bounded ratio is what keeps the 1e-12 residual contract
  // meaningful in double precision at N = 256.
  int failures = 0;
  double worst = 0.0;
  for (int i = 0; i < cfg.samples; ++i) {
    std::vector<Cplx> a(order);
    const double lead_radius = rng.uniform(0.1, 1.0);
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    a[0] = {lead_radius * std::cos(angle), lead_radius * std::sin(angle)};
    for (std::size_t n = 1; n < order; ++n) {
      a[n] = rng.complex_in_disc(0.35 * lead_radius);
    }
    const CoefficientSeries series(a);
    const CoefficientSeries conv = dirichlet_convolve(series, dirichlet_inverse(series));
    for (std::size_t n = 1; n <= order; ++n) {
      const double err = std::abs(conv.at(n) - (n == 1 ? Cplx{1.0, 0.0} : Cplx{}));
      worst = std::max(worst, err);
      if (err > 1e-12) ++failures;
    }
  }
  report.lines.push_back({"inverse-roundtrip", failures == 0,
                          detail::fmt("%d random series at N=%d, max |a*a^{-1} - e| = %.3e",
                                      cfg.samples, cfg.truncation, worst)});

  const std::vector<int> mu = detail::moebius_table(cfg.truncation);
  const CoefficientSeries ones(std::vector<Cplx>(order, Cplx{1.0, 0.0}));
  const CoefficientSeries inv_ones = dirichlet_inverse(ones);
  bool moebius_ok = true;
  for (std::size_t n = 1; n <= order; ++n) {
    if (std::abs(inv_ones.at(n) - Cplx(static_cast<double>(mu[n]), 0.0)) > 1e-12) {
      moebius_ok = false;
    }
  }
  report.lines.push_back({"moebius", moebius_ok,
                          detail::fmt("inverse of all-ones equals mu(n) for n <= %d",
                                      cfg.truncation)});

  // Forcing: with phi_2 = c z imposed, the induced phi_4 depends on the
  // element through the coefficient at degree 2 unless c = 0.  (The top
  // degree-3 coefficient is shared; the divergence sits one degree below.)
  auto induced_phi4 = [](const PL2Element& f, Cplx c) {
    std::vector<Cplx> b(8, Cplx{});
    b[0] = f.at(1);                    // phi_1 = 1
    b[1] = c * f.at(1) + f.at(2);      // forces phi_2 = c z
    const PolySeries phi = solve_symbol(f, PL2Element(b));
    return phi.at(4);
  };
  const PL2Element f_elem(std::vector<Cplx>{{1, 0}, {2, 0}, {0.5, 0}, {-1, 0},
                                            {1, 0}, {1, 0}, {1, 0}, {1, 0}});
  const PL2Element g_elem(std::vector<Cplx>{{1, 0}, {3, 0}, {1, 0}, {2, 0},
                                            {1, 0}, {1, 0}, {1, 0}, {1, 0}});
  const Polynomial p4f = induced_phi4(f_elem, {1.0, 0.0});
  const Polynomial p4g = induced_phi4(g_elem, {1.0, 0.0});
  const double split = std::abs(p4f.coefficient(2) - p4g.coefficient(2));
  const Polynomial q4f = induced_phi4(f_elem, {0.0, 0.0});
  const Polynomial q4g = induced_phi4(g_elem, {0.0, 0.0});
  const bool forcing_ok = split > 1e-12 &&
                          std::abs(q4f.coefficient(2) - q4g.coefficient(2)) <= 1e-12;
  report.lines.push_back(
      {"forcing-induction", forcing_ok,
       detail::fmt("phi_4 degree-2 coefficients split by %.3e for c=1, agree for c=0",
                   split)});

  const PL2Element generic(std::vector<Cplx>{{1, 0.1}, {1, 0.2}, {1, 0.3}, {1, 0.4},
                                             {1, 0.5}, {1, 0.6}, {1, 0.7}, {1, 0.8}});
  PolySeries constant_symbol;
  constant_symbol.entries = {Polynomial::constant({2.0, 1.0})};
  bool defect_ok = pl2_defect(apply_symbol(constant_symbol, generic)) == 0.0;
  const std::vector<std::pair<int, int>> monomials = {
      {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {4, 3}};
  for (const auto& [index, degree] : monomials) {
    PolySeries symbol;
    symbol.entries.assign(static_cast<std::size_t>(index), Polynomial::zero());
    symbol.entries[static_cast<std::size_t>(index) - 1] =
        Polynomial::monomial({1.0, 0.0}, degree);
    if (pl2_defect(apply_symbol(symbol, generic)) <= 1e-12) defect_ok = false;
  }
  report.lines.push_back(
      {"membership-defect", defect_ok,
       "constant symbols give defect 0; nonconstant monomial symbols give defect > 1e-12"});
  return report;
}

// Analytic bounds: the Bose-Einstein cross-path identity, the continuity
// estimate, the reproducing identity, and the compactness norm bounds.
inline VerifyReport verify_bounds(const VerifyConfig& cfg) {
  VerifyReport report{"bounds", cfg, {}};
  Rng rng(cfg.seed);
  EvalParams params;
  params.tol = std::min(cfg.tol / 4.0, 1e-10);

  double be_worst = 0.0;
  int be_failures = 0;
  const std::vector<Cplx> s_grid = {{0.5, 0}, {1, 0}, {2, 0}, {3, 0}, {2, 1}};
  for (double lambda : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (const Cplx& s : s_grid) {
      const Cplx integral = bose_einstein_integral(s, lambda, params);
      const Cplx series = gamma(s) * polylog(s, {lambda, 0.0}, params);
      const double diff = std::abs(integral - series);
      be_worst = std::max(be_worst, diff);
      if (diff > cfg.tol) ++be_failures;
    }
  }
  report.lines.push_back({"bose-einstein", be_failures == 0,
                          detail::fmt("5x5 grid, max |integral - Gamma Li| = %.3e",
                                      be_worst)});

  const int continuity_samples = 20 * cfg.samples;
  int continuity_failures = 0;
  for (int i = 0; i < continuity_samples; ++i) {
    std::vector<Cplx> coeffs(16);
    for (Cplx& c : coeffs) c = rng.complex_in_box(1.0);
    const PL2Element f(coeffs);
    const Cplx z = rng.complex_in_disc(1.0);
    const Cplx z0 = rng.complex_in_disc(1.0);
    const Cplx s = {rng.uniform(1.6, 5.0), rng.uniform(-2.0, 2.0)};
    if (!continuity_bound_check(f, z, z0, s, params)) ++continuity_failures;
  }
  report.lines.push_back({"continuity-bound", continuity_failures == 0,
                          detail::fmt("%d samples, sigma in [1.6, 5], failures=%d",
                                      continuity_samples, continuity_failures)});

  const int repro_samples = 2 * cfg.samples;
  const std::size_t repro_order = 128;
  double repro_worst = 0.0;
  int repro_failures = 0;
  for (int i = 0; i < repro_samples; ++i) {
    std::vector<Cplx> coeffs(repro_order);
    for (Cplx& c : coeffs) c = rng.complex_in_box(1.0);
    const PL2Element f(coeffs);
    const Cplx w = rng.complex_in_disc(0.9);
    const Cplx t = {rng.uniform(-1.0, 3.0), rng.uniform(-2.0, 2.0)};
    const Cplx paired = inner_product(f, kernel_element(w, t, repro_order));
    const Cplx direct = evaluate(f, w, t);
    const double err = std::abs(paired - direct);
    repro_worst = std::max(repro_worst, err / std::max(norm(f), 1e-300));
    if (err > 1e-12 * norm(f)) ++repro_failures;
  }
  report.lines.push_back({"reproducing", repro_failures == 0,
                          detail::fmt("%d samples at N=%zu, max relative error %.3e",
                                      repro_samples, repro_order, repro_worst)});

  int norm_failures = 0;
  double norm_worst_excess = 0.0;
  for (int i = 0; i < 20; ++i) {
    ToeplitzSymbol symbol;
    const int support = 6 + static_cast<int>(rng.next_u64() % 5);
    for (int t = 0; t < support; ++t) {
      const int n = static_cast<int>(rng.next_u64() % 13);
      const int m = 1 + static_cast<int>(rng.next_u64() % 8);
      symbol.set(n, m, rng.complex_in_box(2.0));
    }
    const int order = 64;
    int n_max = symbol.max_shift();
    for (int n0 = 0; n0 <= n_max; ++n0) {
      const ToeplitzSymbol blk = symbol.block(n0);
      if (blk.coeffs.empty()) continue;
      const double svd_norm = detail::operator_norm(toeplitz_general(blk, order));
      const double bound = block_norm_bound(symbol, n0);
      norm_worst_excess = std::max(norm_worst_excess, svd_norm - bound);
      if (svd_norm > bound + 1e-10) ++norm_failures;
    }
    // Tail truncation: dropping the blocks above n0 = n_max/2 costs at most
    // the sum of the dropped C_n.
    const int cut = n_max / 2;
    ToeplitzSymbol tail;
    for (const auto& [nm, c] : symbol.coeffs) {
      if (nm.first > cut) tail.coeffs.emplace(nm, c);
    }
    if (!tail.coeffs.empty()) {
      double tail_budget = 0.0;
      for (int n0 = cut + 1; n0 <= n_max; ++n0) tail_budget += block_norm_bound(symbol, n0);
      const double tail_norm = detail::operator_norm(toeplitz_general(tail, order));
      if (tail_norm > tail_budget + 1e-10) ++norm_failures;
    }
  }
  report.lines.push_back({"compactness-norms", norm_failures == 0,
                          detail::fmt("20 random symbols at N=64, max norm excess %.3e, failures=%d",
                                      norm_worst_excess, norm_failures)});
  return report;
}

inline VerifyReport run_suite(const std::string& suite, const VerifyConfig& cfg) {
  if (suite == "isometry") return verify_isometry(cfg);
  if (suite == "decomposition") return verify_decomposition(cfg);
  if (suite == "ranks") return verify_ranks(cfg);
  if (suite == "dirichlet") return verify_dirichlet(cfg);
  if (suite == "bounds") return verify_bounds(cfg);
  throw PreconditionError("unknown verify suite: " + suite);
}

}  // namespace pl2
