#include "bernpoly/dependence.hpp"
#include "bernpoly/errors.hpp"

#include <doctest.h>

#include "support.hpp"

#include <random>

using namespace bernpoly;
using testsupport::direct_correlation;
using testsupport::direct_stop_loss;
using testsupport::pmf3;
using testsupport::rat;

namespace {

ExtremalSet generator_set(const MarginParam& p) {
  const SigmaCmPolytope polytope = sigma_cm_polytope(p);
  ExtremalSet es{3, p, polytope.generators, {}, {}};
  es.tags.assign(polytope.generators.size(), VertexTag::kSupportX1X2);
  for (size_t i = 0; i < polytope.generators.size(); ++i) {
    es.names.push_back("g" + std::to_string(i + 1));
  }
  return es;
}

}  // namespace

TEST_SUITE_BEGIN("dependence");

TEST_CASE("countermonotone pair check on split sums") {
  const MarginParam p{rat("2/5")};
  CHECK(is_countermonotone_pair(split_sum_pair(table2_column(p, 6), 0b001)));
  CHECK(!is_countermonotone_pair(split_sum_pair(table2_column(p, 5), 0b001)));

  const BivariatePmf point{{{rat("2/3"), rat("5"), rat("1")}}};
  CHECK(is_countermonotone_pair(point));
}

TEST_CASE("bivariate laws validate and merge atoms") {
  CHECK_THROWS_AS(BivariatePmf({{rat("0"), rat("0"), rat("1/2")}}), NotNormalized);
  CHECK_THROWS_AS(BivariatePmf({{rat("0"), rat("0"), rat("-1/2")},
                                {rat("1"), rat("1"), rat("3/2")}}),
                  NegativeMass);
  const BivariatePmf merged{{{rat("0"), rat("1"), rat("1/2")},
                             {rat("0"), rat("1"), rat("1/4")},
                             {rat("1"), rat("0"), rat("1/4")}}};
  CHECK(merged.atoms().size() == 2);
}

TEST_CASE("sigma-countermonotonicity of the named pmfs") {
  const MarginParam two_fifths{rat("2/5")};
  CHECK(is_sigma_countermonotone(table2_column(two_fifths, 7)));
  CHECK(!is_sigma_countermonotone(table2_column(two_fifths, 4)));
  CHECK(!is_sigma_countermonotone(table2_column(two_fifths, 5)));
  CHECK(!is_sigma_countermonotone(table2_column(two_fifths, 9)));

  const MarginParam quarter{rat("1/4")};
  CHECK(is_sigma_countermonotone(table1_column(quarter, 6)));
  CHECK(!is_sigma_countermonotone(table1_column(quarter, 1)));

  CHECK_THROWS_AS(is_sigma_countermonotone(pmf3({"1", "0", "0", "0", "0", "0", "0", "0"})),
                  OutOfRange);
  CHECK_THROWS_AS(
      is_sigma_countermonotone(pmf3({"1/2", "1/4", "0", "0", "0", "0", "0", "1/4"})),
      NotAMember);
}

TEST_CASE("convex order by stop-loss transforms") {
  const MarginParam p{rat("2/5")};
  const SumPmf minimal = minimal_sum_law(p);
  const SumPmf upper = sum_distribution(table2_column(p, 5));

  CHECK(minimal.masses() ==
        std::vector<Rational>{rat("0"), rat("4/5"), rat("1/5"), rat("0")});
  CHECK(direct_stop_loss(minimal, 1) == rat("1/5"));
  CHECK(direct_stop_loss(upper, 1) == rat("4/5"));

  CHECK(convex_order_leq(minimal, upper));
  CHECK(!convex_order_leq(upper, minimal));
  CHECK(convex_order_leq(upper, upper));

  // unequal means: immediately false
  const SumPmf shifted{3, {rat("1/5"), rat("4/5"), rat("0"), rat("0")}};
  CHECK(!convex_order_leq(minimal, shifted));
}

TEST_CASE("stop-loss at negative thresholds reduces to the shifted mean") {
  const MarginParam p{rat("2/5")};
  const SumPmf law = sum_distribution(table2_column(p, 6));
  CHECK(law.stop_loss(-2) == law.mean() + 2);
  CHECK(law.stop_loss(3) == 0);
  CHECK(law.stop_loss(7) == 0);
}

TEST_CASE("the split tests are three-dimensional") {
  const BernoulliPmf d2 = make_pmf(2, {rat("1/2"), rat("0"), rat("0"), rat("1/2")});
  CHECK_THROWS_AS(is_sigma_countermonotone(d2), UnsupportedDimension);
  CHECK_THROWS_AS(is_sigma_cx_smallest(d2), UnsupportedDimension);
}

TEST_CASE("minimal sum law by class") {
  CHECK(minimal_sum_law(MarginParam{rat("1/4")}).masses() ==
        std::vector<Rational>{rat("1/4"), rat("3/4"), rat("0"), rat("0")});
  CHECK(minimal_sum_law(MarginParam{rat("1/3")}).masses() ==
        std::vector<Rational>{rat("0"), rat("1"), rat("0"), rat("0")});
  CHECK(minimal_sum_law(MarginParam{rat("1/2")}).masses() ==
        std::vector<Rational>{rat("0"), rat("1/2"), rat("1/2"), rat("0")});
}

TEST_CASE("sigma-cx smallest members") {
  const MarginParam two_fifths{rat("2/5")};
  CHECK(is_sigma_cx_smallest(exchangeable_member(two_fifths)));
  CHECK(!is_sigma_cx_smallest(table2_column(two_fifths, 9)));

  const MarginParam third{rat("1/3")};
  CHECK(is_sigma_cx_smallest(table1_column(third, 6)));  // the joint mix
}

TEST_CASE("sigma-cm polytope generators") {
  const SigmaCmPolytope low = sigma_cm_polytope(MarginParam{rat("1/4")});
  REQUIRE(low.generators.size() == 1);
  CHECK(low.generators[0].values() ==
        pmf3({"1/4", "1/4", "1/4", "0", "1/4", "0", "0", "0"}).values());

  const SigmaCmPolytope mid = sigma_cm_polytope(MarginParam{rat("2/5")});
  REQUIRE(mid.generators.size() == 3);
  const MarginParam two_fifths{rat("2/5")};
  CHECK(mid.generators[0] == table2_column(two_fifths, 6));
  CHECK(mid.generators[1] == table2_column(two_fifths, 7));
  CHECK(mid.generators[2] == table2_column(two_fifths, 8));

  const SigmaCmPolytope half = sigma_cm_polytope(MarginParam{rat("1/2")});
  REQUIRE(half.generators.size() == 3);
  CHECK(half.generators[0].values() ==
        pmf3({"0", "0", "0", "1/2", "1/2", "0", "0", "0"}).values());
  // at p = 1/2 the generators coincide with the first three kernel columns
  const ExtremalSet es = closed_form_extremals(MarginParam{rat("1/2")});
  for (const auto& g : half.generators) CHECK(es.find(g).has_value());
}

TEST_CASE("generators have the minimal sum law") {
  for (const char* p_text : {"1/5", "1/4", "2/5", "9/20", "1/2"}) {
    const MarginParam p = MarginParam::parse(p_text);
    for (const auto& g : sigma_cm_polytope(p).generators) {
      CHECK(sum_distribution(g) == minimal_sum_law(p));
    }
  }
}

TEST_CASE("mu2_plus") {
  const MarginParam two_fifths{rat("2/5")};
  for (const auto& g : sigma_cm_polytope(two_fifths).generators) {
    CHECK(mu2_plus(g) == rat("1/5"));  // 3p - 1
  }
  const MarginParam quarter{rat("1/4")};
  CHECK(mu2_plus(table1_column(quarter, 6)) == 0);
  CHECK(mu2_plus(table1_column(quarter, 5)) == rat("3/4"));  // 3p for the comonotone law
}

TEST_CASE("exchangeable member") {
  const MarginParam two_fifths{rat("2/5")};
  const BernoulliPmf fe = exchangeable_member(two_fifths);
  CHECK(fe.values() == pmf3({"0", "4/15", "4/15", "1/15", "4/15", "1/15", "1/15", "0"})
                           .values());

  // permutation invariance
  for (const std::vector<int>& perm :
       {std::vector<int>{2, 1, 3}, {3, 2, 1}, {2, 3, 1}}) {
    CHECK(testsupport::permute_pmf(fe, perm) == fe);
  }

  // equi-correlation: closed form (3p-1-3p^2)/(3p(1-p)) checked against the
  // independent covariance oracle
  const Rational expected = rat("-7/18");
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      CHECK(correlation(fe, i, j) == expected);
      CHECK(direct_correlation(fe, i, j) == expected);
    }
  }

  const BernoulliPmf fe_half = exchangeable_member(MarginParam{rat("1/2")});
  CHECK(correlation(fe_half, 1, 2) == rat("-1/3"));
  CHECK(direct_correlation(fe_half, 1, 2) == rat("-1/3"));

  CHECK_THROWS_AS(exchangeable_member(MarginParam{rat("1/4")}), OutOfRange);
  CHECK_THROWS_AS(exchangeable_member(MarginParam{rat("1/3")}), OutOfRange);
}

TEST_CASE("equi-correlation equals the class mean correlation") {
  for (const char* p_text : {"2/5", "9/20", "1/2"}) {
    const MarginParam p = MarginParam::parse(p_text);
    const BernoulliPmf fe = exchangeable_member(p);
    const Rational mean_mu = mu2_plus(fe) / 3;
    const Rational expected = (mean_mu - p.p() * p.p()) / (p.p() * (1 - p.p()));
    CHECK(correlation(fe, 1, 2) == expected);
  }
}

TEST_CASE("correlation profiles of the vertex classes") {
  const MarginParam quarter{rat("1/4")};
  const auto profiles4 = classify_extremal_correlations(quarter);
  const ExtremalSet es4 = closed_form_extremals(quarter);
  REQUIRE(profiles4.size() == 6);
  // r1 pairs coordinates {1,2}: rho12 = 1, cross pairs -p/(1-p) = -1/3
  CHECK(profiles4[0].rho[0][1] == 1);
  CHECK(profiles4[0].rho[0][2] == rat("-1/3"));
  CHECK(profiles4[0].rho[1][2] == rat("-1/3"));
  CHECK(profiles4[0].classification == PairwiseClass::kMixed);
  // r4 is constant (1-2p)/(2(1-p)) = 1/3 and P-PC
  CHECK(profiles4[3].rho[0][1] == rat("1/3"));
  CHECK(profiles4[3].classification == PairwiseClass::kPositive);
  // the lower bound column is constant -p/(1-p) and P-NC
  CHECK(profiles4[5].rho[0][1] == rat("-1/3"));
  CHECK(profiles4[5].classification == PairwiseClass::kNegative);

  const MarginParam two_fifths{rat("2/5")};
  const auto profiles5 = classify_extremal_correlations(two_fifths);
  // r6 couples {1,2}: (3p-1-p^2)/(p(1-p)) = 1/6, cross pairs -2/3
  CHECK(profiles5[5].rho[0][1] == rat("1/6"));
  CHECK(profiles5[5].rho[0][2] == rat("-2/3"));
  CHECK(profiles5[5].rho[1][2] == rat("-2/3"));

  const MarginParam half{rat("1/2")};
  const auto profiles2 = classify_extremal_correlations(half);
  // r4 at p = 1/2 has all correlations zero
  CHECK(profiles2[3].rho[0][1] == 0);
  CHECK(profiles2[3].rho[0][2] == 0);
  CHECK(profiles2[3].rho[1][2] == 0);
  CHECK(profiles2[3].classification == PairwiseClass::kPositive);
}

TEST_CASE("profiles agree with the direct covariance oracle") {
  for (const char* p_text : {"1/5", "2/5", "1/2"}) {
    const MarginParam p = MarginParam::parse(p_text);
    const ExtremalSet es = closed_form_extremals(p);
    const auto profiles = classify_extremal_correlations(p);
    REQUIRE(profiles.size() == es.vertices.size());
    for (size_t v = 0; v < es.vertices.size(); ++v) {
      for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
          CHECK(profiles[v].rho[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] ==
                direct_correlation(es.vertices[v], i, j));
        }
      }
    }
  }
}

TEST_CASE("generator mixtures are sigma-cm and sigma-cx smallest; others are not") {
  std::mt19937 rng{31337};
  for (const char* p_text : {"2/5", "9/20", "1/2"}) {
    const MarginParam p = MarginParam::parse(p_text);
    const ExtremalSet gens = generator_set(p);
    const ExtremalSet all = closed_form_extremals(p);

    for (int k = 0; k < 30; ++k) {
      const BernoulliPmf member = testsupport::random_member(gens, rng);
      CHECK(is_sigma_countermonotone(member));
      CHECK(is_sigma_cx_smallest(member));
      CHECK(mu2_plus(member) == 3 * p.p() - 1);
      CHECK(variance_of_sum(member) == 9 * p.p() - 9 * p.p() * p.p() - 2);
    }

    // positive weight on a vertex with mass at level 0 or 3 leaves the
    // sub-polytope
    std::uniform_int_distribution<int> pick_outside(0, 2);
    for (int k = 0; k < 30; ++k) {
      const int outside_index = std::vector<int>{3, 4, static_cast<int>(all.count()) - 1}
          [static_cast<size_t>(pick_outside(rng))];
      ConvexWeights w = testsupport::random_weights(rng, all.vertices.size());
      // force at least 1/10 of the mass onto the outside vertex
      for (auto& weight : w.weights) weight *= rat("9/10");
      w.weights[static_cast<size_t>(outside_index)] += rat("1/10");
      const BernoulliPmf member = mix(all, w);
      const bool cm = is_sigma_countermonotone(member);
      const bool cx = is_sigma_cx_smallest(member);
      CHECK(!cm);
      CHECK(!cx);
      CHECK(cm == cx);
    }
  }
}

TEST_CASE("minimal law is dominated by every vertex sum law") {
  for (const char* p_text : {"2/5", "9/20", "1/2"}) {
    const MarginParam p = MarginParam::parse(p_text);
    const SumPmf minimal = minimal_sum_law(p);
    for (const auto& v : closed_form_extremals(p).vertices) {
      CHECK(convex_order_leq(minimal, sum_distribution(v)));
    }
  }
}

TEST_CASE("pairwise correlation bounds are attained at vertices") {
  std::mt19937 rng{2718};
  for (const char* p_text : {"1/4", "2/5", "1/2"}) {
    const MarginParam p = MarginParam::parse(p_text);
    const ExtremalSet es = closed_form_extremals(p);
    for (int i = 1; i <= 3; ++i) {
      for (int j = i + 1; j <= 3; ++j) {
        Rational lo = correlation(es.vertices[0], i, j);
        Rational hi = lo;
        for (const auto& v : es.vertices) {
          const Rational rho = correlation(v, i, j);
          if (rho < lo) lo = rho;
          if (rho > hi) hi = rho;
        }
        for (int k = 0; k < 15; ++k) {
          const Rational rho = correlation(testsupport::random_member(es, rng), i, j);
          CHECK(rho >= lo);
          CHECK(rho <= hi);
        }
      }
    }
  }
}

TEST_SUITE_END();
