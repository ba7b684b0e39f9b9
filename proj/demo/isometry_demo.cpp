// Evaluates W(g) both ways: exact coefficient transport and the Mellin-type
// integral, then prints the kernel reproducing identity on a sample element.

#include <iostream>

#include "pl2/hilbert.hpp"
#include "pl2/isometry.hpp"
#include "pl2/serialize.hpp"

int main() {
  using namespace pl2;

  const H2Element g(std::vector<Cplx>{{1, 0}, {0.5, 0.25}, {-0.75, 0}, {0, 1}});
  const PL2Element f = apply_w(g);
  const Cplx z{0.4, 0.2};
  const Cplx s{1.5, 0.0};

  EvalParams params;
  params.tol = 1e-10;
  const Cplx coeff_path = evaluate(f, z, s);
  const Cplx quad_path = apply_w_integral(g, z, s, params);
  std::cout << "W(g)(z,s) by coefficients: " << format_complex(coeff_path) << '\n'
            << "W(g)(z,s) by quadrature:   " << format_complex(quad_path) << '\n'
            << "norm preserved: ||g|| = " << norm(g) << ", ||W g|| = " << norm(f) << '\n';

  const Cplx w{0.3, -0.1};
  const Cplx t{2.0, 0.5};
  const Cplx paired = inner_product(f, kernel_element(w, t, f.order()));
  std::cout << "<f, K_{w,t}> = " << format_complex(paired) << '\n'
            << "f(w,t)       = " << format_complex(evaluate(f, w, t)) << '\n';
  return 0;
}
