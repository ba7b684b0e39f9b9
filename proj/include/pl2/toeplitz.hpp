#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "pl2/errors.hpp"
#include "pl2/specfun.hpp"

namespace pl2 {

// Finite window of an operator on the basis e_n = z^n / n^s, stored as a
// sparse (row, col) -> weight map with 1-based indices.  Codomain dimension
// is always sized to cover every image index, so nothing is clipped
// silently.
struct SparseOperator {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, Cplx> entries;

  SparseOperator() = default;
  SparseOperator(int rows_, int cols_) : rows(rows_), cols(cols_) {
    if (rows_ < 0 || cols_ < 0) {
      throw PreconditionError("SparseOperator: negative dimension");
    }
  }

  void add_at(int r, int c, Cplx w) {
    if (r < 1 || r > rows || c < 1 || c > cols) {
      throw PreconditionError("SparseOperator: index outside window");
    }
    if (!is_finite(w)) throw DomainError("SparseOperator: nonfinite weight");
    if (w == Cplx{}) return;
    auto [it, inserted] = entries.try_emplace({r, c}, w);
    if (!inserted) {
      it->second += w;
      if (it->second == Cplx{}) entries.erase(it);
    }
  }

  Cplx at(int r, int c) const {
    const auto it = entries.find({r, c});
    return it == entries.end() ? Cplx{} : it->second;
  }

  std::size_t nnz() const { return entries.size(); }
  bool is_zero() const { return entries.empty(); }
};

inline SparseOperator identity_operator(int n) {
  SparseOperator op(n, n);
  for (int i = 1; i <= n; ++i) op.add_at(i, i, 1.0);
  return op;
}

// Grows the window; existing entries are preserved.
inline SparseOperator resized(const SparseOperator& op, int rows, int cols) {
  if (rows < op.rows || cols < op.cols) {
    throw PreconditionError("resized: window may only grow");
  }
  SparseOperator out(rows, cols);
  out.entries = op.entries;
  return out;
}

inline SparseOperator scale(const SparseOperator& op, Cplx c) {
  SparseOperator out(op.rows, op.cols);
  for (const auto& [rc, w] : op.entries) out.add_at(rc.first, rc.second, c * w);
  return out;
}

inline SparseOperator add(const SparseOperator& a, const SparseOperator& b) {
  SparseOperator out(std::max(a.rows, b.rows), std::max(a.cols, b.cols));
  for (const auto& [rc, w] : a.entries) out.add_at(rc.first, rc.second, w);
  for (const auto& [rc, w] : b.entries) out.add_at(rc.first, rc.second, w);
  return out;
}

// a after b; inner dimensions must match exactly.
inline SparseOperator compose(const SparseOperator& a, const SparseOperator& b) {
  if (a.cols != b.rows) {
    throw PreconditionError("compose: inner dimensions do not match");
  }
  std::map<int, std::vector<std::pair<int, Cplx>>> a_by_col;
  for (const auto& [rc, w] : a.entries) a_by_col[rc.second].emplace_back(rc.first, w);
  SparseOperator out(a.rows, b.cols);
  for (const auto& [rc, wb] : b.entries) {
    const auto it = a_by_col.find(rc.first);
    if (it == a_by_col.end()) continue;
    for (const auto& [row, wa] : it->second) out.add_at(row, rc.second, wa * wb);
  }
  return out;
}

inline SparseOperator adjoint(const SparseOperator& op) {
  SparseOperator out(op.cols, op.rows);
  for (const auto& [rc, w] : op.entries) {
    out.add_at(rc.second, rc.first, std::conj(w));
  }
  return out;
}

// Entrywise comparison restricted to the window both operators define.
inline bool equal_on_shared_window(const SparseOperator& a, const SparseOperator& b,
                                   double tol = 0.0) {
  const int rows = std::min(a.rows, b.rows);
  const int cols = std::min(a.cols, b.cols);
  auto within = [&](const SparseOperator& p, const SparseOperator& q) {
    for (const auto& [rc, w] : p.entries) {
      if (rc.first > rows || rc.second > cols) continue;
      if (std::abs(w - q.at(rc.first, rc.second)) > tol) return false;
    }
    return true;
  };
  return within(a, b) && within(b, a);
}

inline std::vector<std::vector<Cplx>> to_dense(const SparseOperator& op) {
  std::vector<std::vector<Cplx>> dense(
      static_cast<std::size_t>(op.rows),
      std::vector<Cplx>(static_cast<std::size_t>(op.cols), Cplx{}));
  for (const auto& [rc, w] : op.entries) {
    dense[static_cast<std::size_t>(rc.first - 1)][static_cast<std::size_t>(rc.second - 1)] = w;
  }
  return dense;
}

// Rank of the finite window.  Operators whose columns carry at most one
// entry of weight one are resolved combinatorially (count distinct target
// rows); everything else goes through complex Gaussian elimination with the
// given tolerance.
inline int rank(const SparseOperator& op, double tol = 1e-10) {
  if (op.is_zero()) return 0;

  bool permutation_like = true;
  std::map<int, int> column_load;
  std::vector<int> target_rows;
  double max_abs = 0.0;
  for (const auto& [rc, w] : op.entries) {
    max_abs = std::max(max_abs, std::abs(w));
    if (w != Cplx{1.0, 0.0}) permutation_like = false;
    if (++column_load[rc.second] > 1) permutation_like = false;
    target_rows.push_back(rc.first);
  }
  if (permutation_like) {
    std::sort(target_rows.begin(), target_rows.end());
    target_rows.erase(std::unique(target_rows.begin(), target_rows.end()),
                      target_rows.end());
    return static_cast<int>(target_rows.size());
  }

  auto dense = to_dense(op);
  const std::size_t m = dense.size();
  const std::size_t n = dense.empty() ? 0 : dense[0].size();
  const double threshold = tol * std::max(1.0, max_abs);
  int r = 0;
  for (std::size_t col = 0; col < n && static_cast<std::size_t>(r) < m; ++col) {
    std::size_t pivot = static_cast<std::size_t>(r);
    for (std::size_t i = pivot + 1; i < m; ++i) {
      if (std::abs(dense[i][col]) > std::abs(dense[pivot][col])) pivot = i;
    }
    if (std::abs(dense[pivot][col]) <= threshold) continue;
    std::swap(dense[pivot], dense[static_cast<std::size_t>(r)]);
    const Cplx inv = 1.0 / dense[static_cast<std::size_t>(r)][col];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < m; ++i) {
      const Cplx factor = dense[i][col] * inv;
      if (factor == Cplx{}) continue;
      for (std::size_t j = col; j < n; ++j) {
        dense[i][j] -= factor * dense[static_cast<std::size_t>(r)][j];
      }
    }
    ++r;
  }
  return r;
}

// Compression of z^k / m^s.  The product z^k m^{-s} e_n lands back in the
// space only when n + k = m n, so the operator is e_{n0} -> e_{n0 + k} for
// n0 = k / (m - 1) when m - 1 divides k (and n0 >= 1), the identity for the
// trivial symbol m = 1, k = 0, and zero otherwise.
inline SparseOperator toeplitz_elementary(int k, int m, int order) {
  if (k < 0 || m < 1 || order < 1) {
    throw PreconditionError("toeplitz_elementary: requires k >= 0, m >= 1, N >= 1");
  }
  SparseOperator op(order + k, order);
  if (m == 1) {
    if (k == 0) {
      for (int i = 1; i <= order; ++i) op.add_at(i, i, 1.0);
    }
    return op;
  }
  if (k % (m - 1) != 0) return op;
  const int n0 = k / (m - 1);
  if (n0 >= 1 && n0 <= order) op.add_at(n0 + k, n0, 1.0);
  return op;
}

// Compression of z^k zeta(s): e_n -> e_{n+k} for every column n dividing k.
// Formally the m-sum of the elementary operators above; the symbol itself is
// unbounded, the compression has rank d(k).
inline SparseOperator toeplitz_zeta(int k, int order) {
  if (k < 1 || order < 1) {
    throw PreconditionError("toeplitz_zeta: requires k >= 1, N >= 1");
  }
  SparseOperator op(order + k, order);
  for (int n = 1; n <= order; ++n) {
    if (k % n == 0) op.add_at(n + k, n, 1.0);
  }
  return op;
}

// General symbol phi(z,s) = sum c_{n,m} z^n m^{-s} with finite support.
struct ToeplitzSymbol {
  std::map<std::pair<int, int>, Cplx> coeffs;  // (n, m) -> c_{n,m}

  void set(int n, int m, Cplx c) {
    if (n < 0 || m < 1) {
      throw PreconditionError("ToeplitzSymbol: requires n >= 0, m >= 1");
    }
    if (!is_finite(c)) throw DomainError("ToeplitzSymbol: nonfinite coefficient");
    if (c == Cplx{}) {
      coeffs.erase({n, m});
    } else {
      coeffs[{n, m}] = c;
    }
  }

  Cplx at(int n, int m) const {
    const auto it = coeffs.find({n, m});
    return it == coeffs.end() ? Cplx{} : it->second;
  }

  int max_shift() const {
    int n_max = 0;
    for (const auto& [nm, c] : coeffs) n_max = std::max(n_max, nm.first);
    return n_max;
  }

  // The single-row piece phi_{n0} = sum_m c_{n0,m} z^{n0} m^{-s}.
  ToeplitzSymbol block(int n0) const {
    ToeplitzSymbol out;
    for (const auto& [nm, c] : coeffs) {
      if (nm.first == n0) out.coeffs.emplace(nm, c);
    }
    return out;
  }
};

inline SparseOperator toeplitz_general(const ToeplitzSymbol& symbol, int order) {
  if (order < 1) throw PreconditionError("toeplitz_general: requires N >= 1");
  SparseOperator out(order + symbol.max_shift(), order);
  for (const auto& [nm, c] : symbol.coeffs) {
    out = add(out, scale(toeplitz_elementary(nm.first, nm.second, order), c));
  }
  return out;
}

// C_{n0} = sum_{m-1 | n0} |c_{n0,m}|, an upper bound for the operator norm
// of the block T_{phi_{n0}} (for n0 = 0 only the m = 1 diagonal term acts).
inline double block_norm_bound(const ToeplitzSymbol& symbol, int n0) {
  if (n0 < 0) throw PreconditionError("block_norm_bound: requires n0 >= 0");
  double bound = 0.0;
  for (const auto& [nm, c] : symbol.coeffs) {
    if (nm.first != n0) continue;
    const int m = nm.second;
    if (n0 == 0 ? (m == 1) : (m >= 2 && n0 % (m - 1) == 0)) {
      bound += std::abs(c);
    }
  }
  return bound;
}

// Additive shift S_{+m}: e_n -> e_{n+m}.
inline SparseOperator shift_add(int m, int order) {
  if (m < 1 || order < 1) throw PreconditionError("shift_add: requires m, N >= 1");
  SparseOperator op(order + m, order);
  for (int n = 1; n <= order; ++n) op.add_at(n + m, n, 1.0);
  return op;
}

// S*_{+m}: e_n -> e_{n-m} for n > m, zero otherwise.
inline SparseOperator shift_add_adjoint(int m, int order) {
  if (m < 1 || order < 1) {
    throw PreconditionError("shift_add_adjoint: requires m, N >= 1");
  }
  SparseOperator op(std::max(order - m, 0), order);
  for (int n = m + 1; n <= order; ++n) op.add_at(n - m, n, 1.0);
  return op;
}

// Multiplicative shift S_{xm}: e_n -> e_{mn}.
inline SparseOperator shift_mult(int m, int order) {
  if (m < 1 || order < 1) throw PreconditionError("shift_mult: requires m, N >= 1");
  SparseOperator op(m * order, order);
  for (int n = 1; n <= order; ++n) op.add_at(m * n, n, 1.0);
  return op;
}

// S*_{xm}: e_n -> e_{n/m} when m | n, zero otherwise.
inline SparseOperator shift_mult_adjoint(int m, int order) {
  if (m < 1 || order < 1) {
    throw PreconditionError("shift_mult_adjoint: requires m, N >= 1");
  }
  SparseOperator op(order / m, order);
  for (int n = m; n <= order; n += m) op.add_at(n / m, n, 1.0);
  return op;
}

// Projection onto span{ e_{k r} : r | n }.
inline SparseOperator projection_pk(int k, int n, int order) {
  if (k < 1 || n < 1) throw PreconditionError("projection_pk: requires k, n >= 1");
  if (order < k * n) throw PreconditionError("projection_pk: requires N >= k*n");
  SparseOperator op(order, order);
  for (int r = 1; r <= n; ++r) {
    if (n % r == 0) op.add_at(k * r, k * r, 1.0);
  }
  return op;
}

enum class OuterShift {
  product,  // S_{+(nm)}: reproduces T_{z^{nm} zeta(s)} on basis tracing
  sum,      // S_{+(m+n)}: off-by-one variant, kept for side-by-side reports
};

// Right-hand side of the decomposition
//   T_{z^{nm} zeta(s)} = sum_{k|m} S_{+(nm)} S*_{+kn} S_{xk} T_{z^n zeta(s)} S*_{xk} P_k
// for coprime n, m.  The k-summands act on pairwise orthogonal column and
// row supports, so the sum is a direct sum.
inline SparseOperator decomposition_rhs(int n, int m, int order,
                                        OuterShift outer = OuterShift::product) {
  if (n < 1 || m < 1 || std::gcd(n, m) != 1) {
    throw PreconditionError("decomposition_rhs: requires coprime n, m >= 1");
  }
  if (order < 2 * n * m) {
    throw PreconditionError("decomposition_rhs: requires N >= 2nm of headroom");
  }
  const int outer_shift = outer == OuterShift::product ? n * m : m + n;
  SparseOperator out(order + outer_shift, order);
  for (int k = 1; k <= m; ++k) {
    if (m % k != 0) continue;
    SparseOperator chain = projection_pk(k, n, order);
    chain = compose(shift_mult_adjoint(k, order), chain);
    chain = compose(toeplitz_zeta(n, chain.rows), chain);
    chain = compose(shift_mult(k, chain.rows), chain);
    chain = compose(shift_add_adjoint(k * n, chain.rows), chain);
    chain = compose(shift_add(outer_shift, chain.rows), chain);
    out = add(out, chain);
  }
  return resized(out, order + outer_shift, order);
}

struct RankTriple {
  int rank_product = 0;  // rank T_{z^{nm} zeta}
  int rank_left = 0;     // rank T_{z^n zeta}
  int rank_right = 0;    // rank T_{z^m zeta}
};

// Ranks feeding d(nm) = d(n) d(m); truncation at the symbol power already
// captures every divisor column.
inline RankTriple divisor_rank_identity(int n, int m) {
  if (n < 1 || m < 1 || std::gcd(n, m) != 1) {
    throw PreconditionError("divisor_rank_identity: requires coprime n, m >= 1");
  }
  return {rank(toeplitz_zeta(n * m, n * m)), rank(toeplitz_zeta(n, n)),
          rank(toeplitz_zeta(m, m))};
}

}  // namespace pl2
