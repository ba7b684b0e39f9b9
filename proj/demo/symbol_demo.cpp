// Shows why nonconstant multiplication symbols cannot exist on the space:
// a symbol solved against one element stops working against another, and
// the membership defect pins down exactly where the product escapes.

#include <iostream>

#include "pl2/dirichlet.hpp"
#include "pl2/serialize.hpp"

int main() {
  using namespace pl2;

  // Dirichlet basics: the all-ones sequence inverts to the Moebius values.
  const CoefficientSeries ones(std::vector<Cplx>(12, Cplx{1, 0}));
  const CoefficientSeries mu = dirichlet_inverse(ones);
  std::cout << "mu(1..12):";
  for (std::size_t n = 1; n <= 12; ++n) std::cout << ' ' << mu.at(n).real();
  std::cout << '\n';

  // Force phi_2 = z on two elements whose a_2/a_1 ratios differ.
  auto induced_phi4 = [](const PL2Element& f) {
    std::vector<Cplx> b(8, Cplx{});
    b[0] = f.at(1);
    b[1] = f.at(1) + f.at(2);  // pins phi_1 = 1, phi_2 = z
    return solve_symbol(f, PL2Element(b)).at(4);
  };
  const PL2Element f(std::vector<Cplx>{{1, 0}, {2, 0}, {1, 0}, {1, 0},
                                       {1, 0}, {1, 0}, {1, 0}, {1, 0}});
  const PL2Element g(std::vector<Cplx>{{1, 0}, {3, 0}, {1, 0}, {1, 0},
                                       {1, 0}, {1, 0}, {1, 0}, {1, 0}});
  std::cout << "phi_4 degree-2 coefficient from f: "
            << format_complex(induced_phi4(f).coefficient(2)) << '\n'
            << "phi_4 degree-2 coefficient from g: "
            << format_complex(induced_phi4(g).coefficient(2)) << '\n'
            << "a fixed symbol cannot satisfy both, so phi_2 must vanish\n";

  // The defect counts coefficient mass off the diagonal monomials z^n.
  PolySeries diagonal_symbol;
  diagonal_symbol.entries = {Polynomial::zero(), Polynomial::monomial({1, 0}, 1)};
  const PL2Element element(std::vector<Cplx>{{1, 0}, {1, 0}, {0, 0}, {0, 0}});
  std::cout << "defect of (phi_2 = z) applied to (1,1,0,0): "
            << pl2_defect(apply_symbol(diagonal_symbol, element)) << '\n';

  PolySeries constant_symbol;
  constant_symbol.entries = {Polynomial::constant({2, 0})};
  std::cout << "defect of the constant symbol 2:            "
            << pl2_defect(apply_symbol(constant_symbol, element)) << '\n';
  return 0;
}
