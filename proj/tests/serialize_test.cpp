#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <sstream>
#include <vector>

#include "pl2/dirichlet.hpp"
#include "pl2/rng.hpp"
#include "pl2/serialize.hpp"

using pl2::Cplx;

TEST_CASE("complex parsing accepts the documented forms") {
  CHECK(pl2::parse_complex("2") == Cplx{2, 0});
  CHECK(pl2::parse_complex("-0.5") == Cplx{-0.5, 0});
  CHECK(pl2::parse_complex("2+i") == Cplx{2, 1});
  CHECK(pl2::parse_complex("2+3i") == Cplx{2, 3});
  CHECK(pl2::parse_complex("1.5-0.2i") == Cplx{1.5, -0.2});
  CHECK(pl2::parse_complex("i") == Cplx{0, 1});
  CHECK(pl2::parse_complex("-i") == Cplx{0, -1});
  CHECK(pl2::parse_complex("3i") == Cplx{0, 3});
  CHECK(pl2::parse_complex("2.5e-3+1e2i") == Cplx{2.5e-3, 1e2});
  CHECK(pl2::parse_complex(" 1 + 2i ") == Cplx{1, 2});

  CHECK_THROWS_AS(pl2::parse_complex(""), pl2::PreconditionError);
  CHECK_THROWS_AS(pl2::parse_complex("abc"), pl2::PreconditionError);
  CHECK_THROWS_AS(pl2::parse_complex("1+2j"), pl2::PreconditionError);
  CHECK_THROWS_AS(pl2::parse_complex("1++2i"), pl2::PreconditionError);
}

TEST_CASE("format/parse round trip is exact") {
  pl2::Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    const Cplx z{rng.uniform(-1e3, 1e3) * std::pow(10.0, rng.uniform(-12, 12)),
                 rng.uniform(-1e3, 1e3)};
    CHECK(pl2::parse_complex(pl2::format_complex(z)) == z);
  }
  CHECK(pl2::format_complex({1, 0}) == "1");
  CHECK(pl2::format_complex({0, 0}) == "0");
  CHECK(pl2::format_complex({0, -1}) == "0-1i");
}

TEST_CASE("element JSON round trip is bit exact") {
  pl2::Rng rng(73);
  std::vector<Cplx> coeffs(17);
  for (Cplx& c : coeffs) c = rng.complex_in_box(3.0);

  const pl2::PL2Element f(coeffs);
  const auto jf = pl2::to_json(f);
  CHECK(pl2::pl2_element_from_json(nlohmann::json::parse(jf.dump())).series.coeffs ==
        f.series.coeffs);

  const pl2::H2Element g(coeffs);
  const auto jg = pl2::to_json(g);
  CHECK(pl2::h2_element_from_json(nlohmann::json::parse(jg.dump())).coeffs == g.coeffs);
}

TEST_CASE("poly series JSON: plain entries use the degree-list schema") {
  pl2::PolySeries p;
  p.entries = {pl2::Polynomial::constant({1, -2}),
               pl2::Polynomial({0, {{0, 0}, {3, 1}}}),
               pl2::Polynomial::monomial({2, 0}, 2)};
  const nlohmann::json j = pl2::to_json(p);
  CHECK_FALSE(j.contains("min_degrees"));
  // Monomial z^2 pads from degree zero.
  CHECK(j["entries"][2].size() == 3);

  const pl2::PolySeries back = pl2::poly_series_from_json(nlohmann::json::parse(j.dump()));
  REQUIRE(back.order() == p.order());
  for (std::size_t n = 1; n <= p.order(); ++n) CHECK(back.at(n) == p.at(n));
}

TEST_CASE("poly series JSON: the Laurent entry records its degree offset") {
  const pl2::PolySeries alpha = pl2::poly_dirichlet_inverse(
      pl2::PL2Element(std::vector<Cplx>{{1, 0}, {1, 0}, {1, 0}, {1, 0}}));
  const nlohmann::json j = pl2::to_json(alpha);
  REQUIRE(j.contains("min_degrees"));
  CHECK(j["min_degrees"][0].get<int>() == -1);

  const pl2::PolySeries back = pl2::poly_series_from_json(nlohmann::json::parse(j.dump()));
  REQUIRE(back.order() == alpha.order());
  for (std::size_t n = 1; n <= alpha.order(); ++n) CHECK(back.at(n) == alpha.at(n));
}

TEST_CASE("sparse operator JSON round trip and CSV rendering") {
  pl2::SparseOperator op(4, 2);
  op.add_at(3, 1, {1, 0});
  op.add_at(4, 2, {1, 0});
  op.add_at(1, 2, {0.5, -2.25});

  const nlohmann::json j = pl2::to_json(op);
  const pl2::SparseOperator back =
      pl2::sparse_operator_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.rows == op.rows);
  CHECK(back.cols == op.cols);
  CHECK(back.entries == op.entries);

  std::ostringstream csv;
  pl2::write_csv(pl2::toeplitz_zeta(2, 2), csv);
  CHECK(csv.str() == "0,0\n0,0\n1,0\n0,1\n");

  std::ostringstream complex_csv;
  pl2::write_csv(op, complex_csv);
  CHECK(complex_csv.str() == "0,0.5-2.25i\n0,0\n1,0\n0,1\n");
}
