#include "bernpoly/algebra.hpp"
#include "bernpoly/errors.hpp"
#include "bernpoly/polytope.hpp"
#include "bernpoly/reports.hpp"

#include <doctest.h>

#include "support.hpp"

#include <random>

using namespace bernpoly;
using testsupport::pmf3;
using testsupport::rat;

TEST_SUITE_BEGIN("algebra");

TEST_CASE("fundamental polynomials") {
  const auto [plus, minus] = fundamental_polynomials();
  CHECK(plus.coefficient(0) == 1);   // constant
  CHECK(plus.coefficient(1) == -1);  // x1
  CHECK(plus.coefficient(2) == -1);  // x2
  CHECK(plus.coefficient(3) == 1);   // x1 x2
  CHECK((plus + minus).is_zero());
  CHECK(plus.evaluate({rat("1"), rat("1")}) == 0);
  CHECK(plus.evaluate({rat("0"), rat("0")}) == 1);
  CHECK(plus.to_string() == "1 - x1 - x2 + x1 x2");
  CHECK_THROWS_AS(fundamental_polynomials(4), UnsupportedDimension);
}

TEST_CASE("map columns match the monomial vector") {
  const MarginParam p{rat("2/5")};
  const Rational c = p.c();
  CHECK(map_column(p, 0).to_string() == "1");
  CHECK(map_column(p, 3).to_string() == "x1 x2");
  const MultilinearPoly col4 = map_column(p, 4);  // -x1 x2 + c
  CHECK(col4.coefficient(0) == c);
  CHECK(col4.coefficient(3) == -1);
  const MultilinearPoly col7 = map_column(p, 7);  // -1 + c
  CHECK(col7.coefficient(0) == c - 1);
}

TEST_CASE("kernel columns map to the zero polynomial") {
  for (const char* p_text : {"1/5", "1/3", "2/5", "1/2"}) {
    const MarginParam p = MarginParam::parse(p_text);
    const ExtremalSet es = closed_form_extremals(p);
    for (size_t i = 0; i < es.vertices.size(); ++i) {
      if (es.tags[i] == VertexTag::kKernel) {
        CHECK(apply_map(p, es.vertices[i]).is_zero());
      }
    }
  }
}

TEST_CASE("type-0 columns map to nonzero multiples of F+ with opposite signs") {
  const MarginParam quarter{rat("1/4")};
  const MultilinearPoly image = apply_map(quarter, table1_column(quarter, 4));
  const auto gamma = express_in_fundamentals(image);
  REQUIRE(gamma.has_value());
  CHECK(*gamma == rat("1/8"));  // p/2 at p = 1/4
  // the scalar is confirmed by re-expansion, not asserted a priori
  const auto [plus, minus] = fundamental_polynomials();
  CHECK(*gamma * plus == image);

  const auto gamma_minus =
      express_in_fundamentals(apply_map(quarter, table1_column(quarter, 6)));
  REQUIRE(gamma_minus.has_value());
  CHECK(*gamma_minus < 0);
  CHECK(*gamma > 0);

  const MarginParam two_fifths{rat("2/5")};
  const auto gamma_r9 =
      express_in_fundamentals(apply_map(two_fifths, table2_column(two_fifths, 9)));
  REQUIRE(gamma_r9.has_value());
  CHECK(*gamma_r9 < 0);
}

TEST_CASE("apply_map rejects non-members and other dimensions") {
  const MarginParam p{rat("1/4")};
  CHECK_THROWS_AS(apply_map(p, pmf3({"1", "0", "0", "0", "0", "0", "0", "0"})),
                  NotAMember);
  // member of the wrong class
  const MarginParam two_fifths{rat("2/5")};
  CHECK_THROWS_AS(apply_map(p, table2_column(two_fifths, 5)), NotAMember);
  const BernoulliPmf d2 = make_pmf(2, {rat("3/4"), rat("0"), rat("0"), rat("1/4")});
  CHECK_THROWS_AS(apply_map(p, d2), UnsupportedDimension);
}

TEST_CASE("kernel basis matches the table columns for d = 3") {
  const MarginParam p{rat("2/5")};
  const auto basis = kernel_basis(3, p);
  REQUIRE(basis.size() == 4);
  CHECK(basis[0] == table2_column(p, 5));  // two-point pmf
  CHECK(basis[1] == table2_column(p, 3));
  CHECK(basis[2] == table2_column(p, 2));
  CHECK(basis[3] == table2_column(p, 1));

  const MarginParam half{rat("1/2")};
  const auto basis_half = kernel_basis(3, half);
  CHECK(basis_half[0].values() ==
        pmf3({"1/2", "0", "0", "0", "0", "0", "0", "1/2"}).values());
}

TEST_CASE("kernel basis at d = 2") {
  const MarginParam p{rat("1/4")};
  const auto basis = kernel_basis(2, p);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].values() ==
        std::vector<Rational>{rat("3/4"), rat("0"), rat("0"), rat("1/4")});
  CHECK(basis[1].values() ==
        std::vector<Rational>{rat("1/2"), rat("1/4"), rat("1/4"), rat("0")});
  for (const auto& b : basis) {
    CHECK(margin(b, 1) == rat("1/4"));
    CHECK(margin(b, 2) == rat("1/4"));
  }
}

TEST_CASE("kernel basis pmfs are linearly independent") {
  // row-reduce the 4 x 8 matrix of basis vectors by hand
  const MarginParam p{rat("2/5")};
  auto basis = kernel_basis(3, p);
  std::vector<std::vector<Rational>> m;
  for (const auto& b : basis) m.push_back(b.values());
  size_t rank = 0;
  for (size_t col = 0; col < 8 && rank < m.size(); ++col) {
    size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[rank][col];
      for (size_t c = col; c < 8; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  CHECK(rank == 4);
}

TEST_CASE("kernel membership") {
  std::mt19937 rng{5};
  const MarginParam p{rat("2/5")};
  const auto basis = kernel_basis(3, p);
  ExtremalSet basis_set{3, p, basis, {}, {}};
  basis_set.tags.assign(basis.size(), VertexTag::kKernel);
  for (size_t i = 0; i < basis.size(); ++i) basis_set.names.push_back("b");

  for (int k = 0; k < 20; ++k) {
    const BernoulliPmf f = testsupport::random_member(basis_set, rng);
    CHECK(is_in_kernel(p, f));
  }
  CHECK(!is_in_kernel(p, table2_column(p, 4)));
  CHECK(!is_in_kernel(p, table2_column(p, 9)));
}

TEST_CASE("express_in_fundamentals") {
  CHECK(express_in_fundamentals(MultilinearPoly::zero(3)) == Rational{0});
  const MultilinearPoly lone_x1{3, {rat("0"), rat("1"), rat("0"), rat("0")}};
  CHECK(!express_in_fundamentals(lone_x1).has_value());
}

TEST_CASE("the map is linear on members") {
  std::mt19937 rng{77};
  const MarginParam p{rat("2/5")};
  const ExtremalSet es = closed_form_extremals(p);
  std::uniform_int_distribution<int> numerator(0, 8);
  for (int k = 0; k < 20; ++k) {
    const BernoulliPmf f = testsupport::random_member(es, rng);
    const BernoulliPmf g = testsupport::random_member(es, rng);
    const Rational lambda{numerator(rng), 8};

    std::vector<Rational> mixed(8);
    for (int a = 0; a < 8; ++a) {
      mixed[static_cast<size_t>(a)] = lambda * f.value(a) + (1 - lambda) * g.value(a);
    }
    const BernoulliPmf h = make_pmf(3, std::move(mixed));
    CHECK(apply_map(p, h) ==
          lambda * apply_map(p, f) + (1 - lambda) * apply_map(p, g));
  }
}

TEST_CASE("every vertex image is a scalar multiple of F+, zero exactly on the kernel") {
  const auto [plus, minus] = fundamental_polynomials();
  for (const MarginParam& p : default_verify_grid(12)) {
    const ExtremalSet es = closed_form_extremals(p);
    for (size_t i = 0; i < es.vertices.size(); ++i) {
      const MultilinearPoly image = apply_map(p, es.vertices[i]);
      const auto gamma = express_in_fundamentals(image);
      REQUIRE(gamma.has_value());
      CHECK(*gamma * plus == image);
      CHECK((es.tags[i] == VertexTag::kKernel) == (*gamma == 0));
    }
  }
}

TEST_SUITE_END();
