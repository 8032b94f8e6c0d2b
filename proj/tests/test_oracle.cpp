#include <doctest.h>

#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "wiretap/errors.hpp"
#include "wiretap/oracle.hpp"
#include "wiretap/order.hpp"

using namespace wiretap;

TEST_SUITE("oracle") {

TEST_CASE("brute_opt pinned examples") {
  StrengthResult k3 = brute_opt(fixtures::k3());
  CHECK(k3.opt == Rational(2, 3));
  CHECK(k3.argmax == EdgeSubset::full(3));

  StrengthResult parallel = brute_opt(fixtures::two_parallel());
  CHECK(parallel.opt == Rational(1, 2));

  // Ties prefer the smaller subset: a single bridge of P3.
  StrengthResult p3 = brute_opt(fixtures::p3());
  CHECK(p3.opt == 1);
  CHECK(p3.argmax == EdgeSubset::from_ids(2, {0}));
}

TEST_CASE("brute_opt cap") {
  CHECK_THROWS_AS(brute_opt(fixtures::fig1(), 20), OracleCapError);
}

TEST_CASE("enumerate_csgs pinned counts") {
  CHECK(enumerate_csgs(fixtures::k3()).size() == 4);
  CHECK(enumerate_csgs(fixtures::p3()).size() == 1);
  CHECK(enumerate_csgs(fixtures::two_parallel()).size() == 3);
}

TEST_CASE("response_stats pinned examples") {
  ResponseStats k3 = response_stats(fixtures::k3(), EdgeDistribution::uniform(3));
  CHECK(k3.best_weight == Rational(2, 3));
  CHECK(k3.best_count == 3);
  REQUIRE(k3.second_best_weight.has_value());
  CHECK(*k3.second_best_weight == 1);

  ResponseStats bowtie =
      response_stats(fixtures::bowtie(), EdgeDistribution::uniform(6));
  CHECK(bowtie.best_weight == Rational(2, 3));
  REQUIRE(bowtie.second_best_weight.has_value());
  CHECK(*bowtie.second_best_weight == Rational(5, 6));

  ResponseStats p3 = response_stats(
      fixtures::p3(), EdgeDistribution({Rational(1, 4), Rational(3, 4)}));
  CHECK(p3.best_weight == 1);
  CHECK(p3.best_count == 1);
  CHECK(!p3.second_best_weight.has_value());
}

TEST_CASE("response_stats best equals min_csg weight on random inputs") {
  std::mt19937 rng(107u);
  for (const auto& [name, g] : corpus::random_multigraphs(25, 12, 29u)) {
    CAPTURE(name);
    for (int round = 0; round < 5; ++round) {
      EdgeDistribution d = corpus::random_distribution(g.edge_count(), rng);
      CHECK(response_stats(g, d).best_weight == min_csg(g, d).weight);
    }
  }
}

TEST_CASE("enumerate_ocsgs pinned examples") {
  Graph k3 = fixtures::k3();
  CHECK(enumerate_ocsgs(k3, prime_partition(k3)).size() == 3);

  Graph bowtie = fixtures::bowtie();
  CHECK(enumerate_ocsgs(bowtie, prime_partition(bowtie)).size() == 9);

  Graph p3 = fixtures::p3();
  std::vector<EdgeSubset> single = enumerate_ocsgs(p3, prime_partition(p3));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == EdgeSubset::full(2));
}

TEST_CASE("every OCSG is a CSG meeting quotas") {
  for (const auto& [name, g] : corpus::standard(4, 15)) {
    if (g.edge_count() > 12) continue;
    CAPTURE(name);
    PrimePartition pp = prime_partition(g);
    for (const EdgeSubset& h : enumerate_ocsgs(g, pp)) CHECK(is_ocsg(g, pp, h));
  }
}

TEST_CASE("vertex_check pinned examples") {
  Graph k3 = fixtures::k3();
  PrimePartition kp = prime_partition(k3);
  PolytopeDescription kd = polytope_description(kp, parent_child(k3, kp));
  CHECK(vertex_check(kd, EdgeDistribution::uniform(3)));

  Graph bowtie = fixtures::bowtie();
  PrimePartition bp = prime_partition(bowtie);
  PolytopeDescription bd = polytope_description(bp, parent_child(bowtie, bp));
  CHECK(vertex_check(bd, EdgeDistribution::uniform_on(6, bp.elements[0])));
  CHECK(!vertex_check(bd, EdgeDistribution::uniform(6)));
}

TEST_CASE("vertex_check rejects infeasible points") {
  Graph bowtie = fixtures::bowtie();
  PrimePartition pp = prime_partition(bowtie);
  PolytopeDescription desc = polytope_description(pp, parent_child(bowtie, pp));
  // Not constant on the first element.
  EdgeDistribution skewed({Rational(1, 2), Rational(1, 4), Rational(1, 4),
                           Rational(0), Rational(0), Rational(0)});
  CHECK_THROWS_AS(vertex_check(desc, skewed), std::invalid_argument);

  Graph fig1 = fixtures::fig1();
  PrimePartition fp = prime_partition(fig1);
  PolytopeDescription fd = polytope_description(fp, parent_child(fig1, fp));
  CHECK_THROWS_AS(vertex_check(fd, EdgeDistribution::uniform(26)),
                  std::invalid_argument);
}

}  // TEST_SUITE
