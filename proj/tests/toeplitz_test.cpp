#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <numeric>
#include <set>
#include <vector>

#include "pl2/rng.hpp"
#include "pl2/toeplitz.hpp"

#include "oracles.hpp"

using pl2::Cplx;
using pl2::SparseOperator;
using pl2::ToeplitzSymbol;

namespace {

bool has_exactly(const SparseOperator& op,
                 const std::vector<std::pair<int, int>>& ones) {
  if (op.nnz() != ones.size()) return false;
  for (const auto& [r, c] : ones) {
    if (op.at(r, c) != Cplx{1.0, 0.0}) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("elementary compressions pick out the divisibility solution") {
  CHECK(has_exactly(pl2::toeplitz_elementary(3, 2, 8), {{6, 3}}));
  CHECK(pl2::toeplitz_elementary(3, 3, 8).is_zero());  // 2 does not divide 3
  CHECK(has_exactly(pl2::toeplitz_elementary(3, 4, 8), {{4, 1}}));
  CHECK(pl2::toeplitz_elementary(5, 3, 8).is_zero());
  CHECK(has_exactly(pl2::toeplitz_elementary(0, 1, 3), {{1, 1}, {2, 2}, {3, 3}}));
  CHECK(pl2::toeplitz_elementary(4, 1, 8).is_zero());
  CHECK(pl2::toeplitz_elementary(0, 5, 8).is_zero());
}

TEST_CASE("elementary classification over the full small grid") {
  const int order = 64;
  for (int k = 1; k <= 64; ++k) {
    for (int m = 1; m <= 64; ++m) {
      const SparseOperator op = pl2::toeplitz_elementary(k, m, order);
      const bool divides = m >= 2 && k % (m - 1) == 0;
      if (!divides) {
        REQUIRE(op.is_zero());
      } else {
        REQUIRE(pl2::rank(op) == 1);
        const int n0 = k / (m - 1);
        REQUIRE(op.at(n0 + k, n0) == Cplx{1.0, 0.0});
      }
    }
  }
}

TEST_CASE("zeta compressions reproduce the reference matrices") {
  CHECK(has_exactly(pl2::toeplitz_zeta(2, 2), {{3, 1}, {4, 2}}));
  CHECK(has_exactly(pl2::toeplitz_zeta(3, 3), {{4, 1}, {6, 3}}));
  CHECK(has_exactly(pl2::toeplitz_zeta(4, 4), {{5, 1}, {6, 2}, {8, 4}}));
  CHECK(has_exactly(pl2::toeplitz_zeta(6, 6), {{7, 1}, {8, 2}, {9, 3}, {12, 6}}));
}

TEST_CASE("zeta compression columns and ranks follow the divisors") {
  for (int k = 1; k <= 60; ++k) {
    const SparseOperator op = pl2::toeplitz_zeta(k, k);
    std::vector<std::pair<int, int>> expected;
    for (int n : oracles::divisors(k)) expected.emplace_back(n + k, n);
    REQUIRE(has_exactly(op, expected));
    REQUIRE(pl2::rank(op) == oracles::divisor_count(k));
  }
}

TEST_CASE("rank handles weighted and degenerate operators") {
  CHECK(pl2::rank(SparseOperator(5, 5)) == 0);

  // Sums of r generic rank-one outer products have rank r.
  pl2::Rng rng(53);
  for (int r = 1; r <= 4; ++r) {
    SparseOperator op(12, 10);
    for (int t = 0; t < r; ++t) {
      std::vector<Cplx> u(12), v(10);
      for (Cplx& x : u) x = rng.complex_in_box(1.0);
      for (Cplx& x : v) x = rng.complex_in_box(1.0);
      for (int i = 1; i <= 12; ++i) {
        for (int j = 1; j <= 10; ++j) {
          op.add_at(i, j, u[static_cast<std::size_t>(i - 1)] * v[static_cast<std::size_t>(j - 1)]);
        }
      }
    }
    REQUIRE(pl2::rank(op) == r);
    REQUIRE(pl2::rank(op) == oracles::dense_rank(op, 1e-10));
  }

  // Two columns landing on the same row collapse to rank one.
  SparseOperator collide(4, 3);
  collide.add_at(2, 1, {1, 0});
  collide.add_at(2, 3, {1, 0});
  CHECK(pl2::rank(collide) == 1);
}

TEST_CASE("general symbols match the tensor-basis projection oracle") {
  ToeplitzSymbol id;
  id.set(0, 1, {1, 0});
  CHECK(pl2::equal_on_shared_window(pl2::toeplitz_general(id, 6), pl2::identity_operator(6)));

  // The zeta pattern as a general symbol.
  const int k = 12;
  ToeplitzSymbol zeta_like;
  for (int d : oracles::divisors(k)) zeta_like.set(k, d + 1, {1, 0});
  CHECK(pl2::equal_on_shared_window(pl2::toeplitz_general(zeta_like, k),
                                    pl2::toeplitz_zeta(k, k)));

  pl2::Rng rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    ToeplitzSymbol symbol;
    for (int t = 0; t < 20; ++t) {
      symbol.set(static_cast<int>(rng.next_u64() % 15),
                 1 + static_cast<int>(rng.next_u64() % 9), rng.complex_in_box(2.0));
    }
    const SparseOperator built = pl2::toeplitz_general(symbol, 32);
    const SparseOperator projected = oracles::tensor_projection(symbol, 32);
    REQUIRE(pl2::equal_on_shared_window(built, projected));
    REQUIRE(built.rows == projected.rows);
    REQUIRE(built.cols == projected.cols);
  }
}

TEST_CASE("block norm bounds dominate the SVD operator norm") {
  ToeplitzSymbol single;
  single.set(2, 3, {5, 0});
  CHECK(pl2::block_norm_bound(single, 2) == 5.0);
  CHECK(pl2::block_norm_bound(single, 4) == 0.0);

  ToeplitzSymbol diag;
  diag.set(0, 1, {0, -2});
  CHECK(pl2::block_norm_bound(diag, 0) == 2.0);

  pl2::Rng rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    ToeplitzSymbol symbol;
    for (int t = 0; t < 12; ++t) {
      symbol.set(static_cast<int>(rng.next_u64() % 13),
                 1 + static_cast<int>(rng.next_u64() % 8), rng.complex_in_box(2.0));
    }
    for (int n0 = 0; n0 <= symbol.max_shift(); ++n0) {
      const ToeplitzSymbol blk = symbol.block(n0);
      if (blk.coeffs.empty()) continue;
      REQUIRE(oracles::svd_norm(pl2::toeplitz_general(blk, 48)) <=
              pl2::block_norm_bound(symbol, n0) + 1e-10);
    }
  }
}

TEST_CASE("truncating high blocks costs at most the dropped bounds") {
  pl2::Rng rng(67);
  for (int trial = 0; trial < 5; ++trial) {
    ToeplitzSymbol symbol;
    for (int t = 0; t < 14; ++t) {
      symbol.set(static_cast<int>(rng.next_u64() % 13),
                 1 + static_cast<int>(rng.next_u64() % 8), rng.complex_in_box(2.0));
    }
    const int cut = symbol.max_shift() / 2;
    ToeplitzSymbol head, tail;
    for (const auto& [nm, c] : symbol.coeffs) {
      (nm.first <= cut ? head : tail).coeffs.emplace(nm, c);
    }
    if (tail.coeffs.empty()) continue;
    double budget = 0.0;
    for (int n0 = cut + 1; n0 <= symbol.max_shift(); ++n0) {
      budget += pl2::block_norm_bound(symbol, n0);
    }
    REQUIRE(oracles::svd_norm(pl2::toeplitz_general(tail, 64)) <= budget + 1e-10);
  }
}

TEST_CASE("shift families satisfy the isometry relations") {
  const int order = 24;
  for (int m : {1, 2, 3, 5}) {
    const SparseOperator fwd = pl2::shift_add(m, order);
    const SparseOperator bwd = pl2::shift_add_adjoint(m, order + m);
    CHECK(pl2::equal_on_shared_window(pl2::compose(bwd, fwd), pl2::identity_operator(order)));
    CHECK(pl2::equal_on_shared_window(pl2::adjoint(fwd), bwd));

    const SparseOperator mfwd = pl2::shift_mult(m, order);
    const SparseOperator mbwd = pl2::shift_mult_adjoint(m, m * order);
    CHECK(pl2::equal_on_shared_window(pl2::compose(mbwd, mfwd), pl2::identity_operator(order)));
    CHECK(pl2::equal_on_shared_window(pl2::adjoint(mfwd), mbwd));
  }

  // S_{xa} S_{xb} = S_{xab}.
  const SparseOperator ab =
      pl2::compose(pl2::shift_mult(3, 2 * order), pl2::shift_mult(2, order));
  CHECK(pl2::equal_on_shared_window(ab, pl2::shift_mult(6, order)));

  // 3 does not divide 7: that column dies.
  const SparseOperator adj3 = pl2::shift_mult_adjoint(3, 9);
  CHECK(adj3.at(2, 7) == Cplx{0.0, 0.0});
  bool column7_empty = true;
  for (const auto& [rc, w] : adj3.entries) {
    if (rc.second == 7) column7_empty = false;
  }
  CHECK(column7_empty);
}

TEST_CASE("divisor projections keep the right vectors and are orthogonal") {
  CHECK(has_exactly(pl2::projection_pk(1, 2, 8), {{1, 1}, {2, 2}}));
  CHECK(has_exactly(pl2::projection_pk(3, 2, 12), {{3, 3}, {6, 6}}));

  // For coprime (n, m) = (4, 15), the k | m projections are orthogonal.
  const int n = 4, m = 15, order = 60;
  std::vector<int> ks = oracles::divisors(m);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::size_t j = 0; j < ks.size(); ++j) {
      if (i == j) continue;
      const SparseOperator prod = pl2::compose(pl2::projection_pk(ks[i], n, order),
                                               pl2::projection_pk(ks[j], n, order));
      REQUIRE(prod.is_zero());
    }
  }
}

TEST_CASE("decomposition traces the worked example") {
  const SparseOperator rhs = pl2::decomposition_rhs(2, 3, 12);
  CHECK(has_exactly(rhs, {{7, 1}, {8, 2}, {9, 3}, {12, 6}}));
  CHECK(pl2::equal_on_shared_window(rhs, pl2::toeplitz_zeta(6, 12)));

  // The sum outer shift lands everything one slot short.
  const SparseOperator off_by_one = pl2::decomposition_rhs(2, 3, 12, pl2::OuterShift::sum);
  CHECK(has_exactly(off_by_one, {{6, 1}, {7, 2}, {8, 3}, {11, 6}}));
  CHECK_FALSE(pl2::equal_on_shared_window(off_by_one, pl2::toeplitz_zeta(6, 12)));
}

TEST_CASE("decomposition equals the zeta compression on coprime pairs") {
  for (int n = 1; n <= 24; ++n) {
    for (int m = 1; n * m <= 24; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const int order = 2 * n * m;
      const SparseOperator rhs = pl2::decomposition_rhs(n, m, order);
      REQUIRE(pl2::equal_on_shared_window(rhs, pl2::toeplitz_zeta(n * m, order)));

      // Direct-sum structure: every divisor column is hit exactly once with
      // weight one, so no summand overlaps another.
      REQUIRE(rhs.nnz() == static_cast<std::size_t>(oracles::divisor_count(n * m)));
      for (const auto& [rc, w] : rhs.entries) REQUIRE(w == Cplx{1.0, 0.0});
    }
  }
}

TEST_CASE("decomposition preconditions") {
  CHECK_THROWS_AS(pl2::decomposition_rhs(2, 4, 32), pl2::PreconditionError);
  CHECK_THROWS_AS(pl2::decomposition_rhs(2, 3, 8), pl2::PreconditionError);
}

TEST_CASE("rank triples certify multiplicativity of the divisor count") {
  const pl2::RankTriple t23 = pl2::divisor_rank_identity(2, 3);
  CHECK(t23.rank_product == 4);
  CHECK(t23.rank_left == 2);
  CHECK(t23.rank_right == 2);

  const pl2::RankTriple t17 = pl2::divisor_rank_identity(1, 7);
  CHECK(t17.rank_product == 2);
  CHECK(t17.rank_left == 1);
  CHECK(t17.rank_right == 2);

  for (int n = 1; n <= 10; ++n) {
    for (int m = 1; n * m <= 40; ++m) {
      if (std::gcd(n, m) != 1) continue;
      const pl2::RankTriple t = pl2::divisor_rank_identity(n, m);
      REQUIRE(t.rank_product == t.rank_left * t.rank_right);
      REQUIRE(t.rank_product == oracles::divisor_count(n * m));
    }
  }

  CHECK_THROWS_AS(pl2::divisor_rank_identity(2, 4), pl2::PreconditionError);
}

TEST_CASE("sparse window plumbing") {
  SparseOperator op(3, 3);
  op.add_at(1, 1, {1, 0});
  op.add_at(1, 1, {-1, 0});
  CHECK(op.is_zero());  // exact cancellation removes the entry

  CHECK_THROWS_AS(op.add_at(4, 1, {1, 0}), pl2::PreconditionError);
  CHECK_THROWS_AS(pl2::resized(op, 2, 3), pl2::PreconditionError);

  op.add_at(2, 3, {0, 1});
  const SparseOperator grown = pl2::resized(op, 5, 5);
  CHECK(grown.at(2, 3) == Cplx{0, 1});
  CHECK(pl2::equal_on_shared_window(op, grown));

  CHECK_THROWS_AS(pl2::compose(pl2::shift_add(1, 4), pl2::shift_add(1, 4)),
                  pl2::PreconditionError);
}
