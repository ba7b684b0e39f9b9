// Walks the divisor-rank story end to end: builds T_{z^k zeta(s)} windows,
// reads off their ranks, and checks the shift decomposition that factors
// T_{z^6 zeta(s)} through T_{z^2 zeta(s)}.

#include <iostream>

#include "pl2/serialize.hpp"
#include "pl2/toeplitz.hpp"

int main() {
  using namespace pl2;

  std::cout << "T_{z^6 zeta(s)} at N = 6:\n";
  write_csv(toeplitz_zeta(6, 6), std::cout);

  for (int k : {2, 3, 4, 6, 12, 60}) {
    std::cout << "rank T_{z^" << k << " zeta} = " << rank(toeplitz_zeta(k, k)) << '\n';
  }

  const int n = 2, m = 3, order = 12;
  const SparseOperator lhs = toeplitz_zeta(n * m, order);
  const SparseOperator rhs = decomposition_rhs(n, m, order);
  const SparseOperator rhs_sum = decomposition_rhs(n, m, order, OuterShift::sum);
  std::cout << "decomposition with outer shift S_{+(nm)}:  "
            << (equal_on_shared_window(lhs, rhs) ? "matches" : "differs") << '\n'
            << "decomposition with outer shift S_{+(m+n)}: "
            << (equal_on_shared_window(lhs, rhs_sum) ? "matches" : "differs") << '\n';

  const RankTriple t = divisor_rank_identity(4, 9);
  std::cout << "d(36) = " << t.rank_product << " = " << t.rank_left << " * "
            << t.rank_right << '\n';
  return 0;
}
