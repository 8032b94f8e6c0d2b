#include <doctest.h>

#include <random>

#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "wiretap/coopgame.hpp"
#include "wiretap/errors.hpp"
#include "wiretap/order.hpp"
#include "wiretap/strategy.hpp"

using namespace wiretap;

TEST_SUITE("coopgame") {

TEST_CASE("coalition_value is winning iff connected spanning") {
  Graph k3 = fixtures::k3();
  CHECK(coalition_value(k3, EdgeSubset::from_ids(3, {0, 1})) == 1);
  CHECK(coalition_value(k3, EdgeSubset::from_ids(3, {0})) == 0);

  Graph fig1 = fixtures::fig1();
  CHECK(coalition_value(fig1, build_ocsg(fig1, prime_partition(fig1))) == 1);
}

TEST_CASE("coalition_value needs three vertices") {
  Graph two = fixtures::two_parallel();
  CHECK_THROWS_AS(coalition_value(two, EdgeSubset::full(2)),
                  AssumptionViolationError);
}

TEST_CASE("excess pinned examples") {
  Graph k3 = fixtures::k3();
  EdgeDistribution uniform = EdgeDistribution::uniform(3);
  CHECK(excess(k3, uniform, EdgeSubset::from_ids(3, {0, 1})) == Rational(-1, 3));
  CHECK(excess(k3, EdgeDistribution({Rational(1), Rational(0), Rational(0)}),
               EdgeSubset::from_ids(3, {1})) == 0);

  Graph fig1 = fixtures::fig1();
  PrimePartition pp = prime_partition(fig1);
  OrderDag dag = parent_child(fig1, pp);
  EdgeDistribution nu = make_pdist(pp, dag);
  CHECK(excess(fig1, nu, build_ocsg(fig1, pp)) == Rational(-1, 2));
}

TEST_CASE("excess_vector pinned examples") {
  Graph k3 = fixtures::k3();
  ExcessVector uniform = excess_vector(k3, EdgeDistribution::uniform(3));
  CHECK(uniform.values.size() == 6);  // 2^3 - 2 proper nonempty coalitions
  CHECK(uniform.values.front() == Rational(-1, 3));

  ExcessVector lopsided =
      excess_vector(k3, EdgeDistribution({Rational(1), Rational(0), Rational(0)}));
  CHECK(lopsided.values.front() == Rational(-1));

  Graph bowtie = fixtures::bowtie();
  PrimePartition pp = prime_partition(bowtie);
  EdgeDistribution nu = make_pdist(pp, parent_child(bowtie, pp));
  CHECK(nu == EdgeDistribution::uniform(6));
  CHECK(excess_vector(bowtie, nu).values.front() == Rational(-1, 3));
}

TEST_CASE("excess vectors are ascending and respect the cap") {
  Graph k4 = fixtures::k4();
  std::mt19937 rng(97u);
  Imputation x = corpus::random_distribution(6, rng);
  ExcessVector v = excess_vector(k4, x);
  for (std::size_t i = 1; i < v.values.size(); ++i)
    CHECK(v.values[i - 1] <= v.values[i]);
  CHECK_THROWS_AS(excess_vector(k4, x, 5), OracleCapError);
}

TEST_CASE("lex_compare orders ascending excess vectors") {
  ExcessVector a{{Rational(-1, 2), Rational(0)}};
  ExcessVector b{{Rational(-1, 3), Rational(-1, 4)}};
  CHECK(lex_compare(a, b) < 0);
  CHECK(lex_compare(b, a) > 0);
  CHECK(lex_compare(a, a) == 0);
  ExcessVector c{{Rational(0)}};
  CHECK_THROWS_AS(lex_compare(a, c), std::invalid_argument);
}

TEST_CASE("least_core_check pinned examples") {
  Graph k3 = fixtures::k3();
  CHECK(least_core_check(k3, EdgeDistribution::uniform(3)));
  CHECK(!least_core_check(
      k3, EdgeDistribution({Rational(1, 2), Rational(1, 2), Rational(0)})));

  Graph bowtie = fixtures::bowtie();
  CHECK(least_core_check(bowtie, EdgeDistribution::uniform(6)));
}

TEST_CASE("least core membership = maxmin, for bridgeless games") {
  std::mt19937 rng(101u);
  for (const auto& [name, g] : corpus::standard(4, 25)) {
    if (g.edge_count() > 12 || g.vertex_count() < 3) continue;
    PrimePartition pp = prime_partition(g);
    if (pp.opt >= 1) continue;  // the least-core value shifts on bridge graphs
    CAPTURE(name);
    OrderDag dag = parent_child(g, pp);

    std::vector<EdgeDistribution> members = extreme_points(pp, dag);
    members.push_back(canonical_beta(pp));
    members.push_back(make_pdist(pp, dag));
    for (const EdgeDistribution& x : members) {
      CHECK(is_maxmin(g, pp, dag, x));
      CHECK(least_core_check(g, x));
    }

    for (int round = 0; round < 10; ++round) {
      Imputation x = corpus::random_distribution(g.edge_count(), rng);
      CHECK(least_core_check(g, x) == is_maxmin(g, pp, dag, x));
    }
  }
}

TEST_CASE("the nucleolus lexicographically dominates sampled imputations") {
  std::mt19937 rng(103u);
  for (const auto& [name, g] :
       {corpus::NamedGraph{"k3", fixtures::k3()},
        corpus::NamedGraph{"k4", fixtures::k4()},
        corpus::NamedGraph{"bowtie", fixtures::bowtie()},
        corpus::NamedGraph{"k5", fixtures::k5()}}) {
    CAPTURE(name);
    PrimePartition pp = prime_partition(g);
    OrderDag dag = parent_child(g, pp);
    EdgeDistribution nu = make_pdist(pp, dag);
    ExcessVector nu_vector = excess_vector(g, nu);

    for (const EdgeDistribution& x : extreme_points(pp, dag))
      CHECK(lex_compare(nu_vector, excess_vector(g, x)) >= 0);
    for (int round = 0; round < 40; ++round) {
      Imputation x = corpus::random_distribution(g.edge_count(), rng);
      CHECK(lex_compare(nu_vector, excess_vector(g, x)) >= 0);
    }
  }
}

}  // TEST_SUITE
