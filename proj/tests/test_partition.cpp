#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "wiretap/errors.hpp"
#include "wiretap/oracle.hpp"
#include "wiretap/order.hpp"
#include "wiretap/partition.hpp"
#include "wiretap/strategy.hpp"

using namespace wiretap;

namespace {

std::set<std::vector<int>> element_sets(const PrimePartition& pp) {
  std::set<std::vector<int>> sets;
  for (const EdgeSubset& p : pp.elements) sets.insert(p.to_vector());
  return sets;
}

void check_is_partition(const Graph& g, const PrimePartition& pp) {
  EdgeSubset seen(static_cast<std::size_t>(g.edge_count()));
  for (const EdgeSubset& p : pp.elements) {
    CHECK(!p.empty());
    CHECK(!seen.intersects(p));
    seen |= p;
  }
  CHECK(seen == EdgeSubset::full(static_cast<std::size_t>(g.edge_count())));
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("prime_partition of K3 is a single element") {
  PrimePartition pp = prime_partition(fixtures::k3());
  CHECK(pp.opt == Rational(2, 3));
  REQUIRE(pp.element_count() == 1);
  CHECK(pp.elements[0] == EdgeSubset::full(3));
  CHECK(!pp.degenerate);
}

TEST_CASE("prime_partition of the running example") {
  Graph fig1 = fixtures::fig1();
  PrimePartition pp = prime_partition(fig1);
  CHECK(pp.opt == Rational(1, 2));
  REQUIRE(pp.element_count() == 5);
  std::vector<std::size_t> sizes;
  for (const EdgeSubset& p : pp.elements) sizes.push_back(p.count());
  CHECK(sizes == std::vector<std::size_t>{2, 2, 6, 6, 10});
  REQUIRE(pp.degenerate.has_value());
  CHECK(*pp.degenerate == 4);
  // The K5 edge set (ids 16..25) is the degenerate element.
  EdgeSubset k5(26);
  for (int e = 16; e < 26; ++e) k5.add(e);
  CHECK(pp.elements[4] == k5);
  check_is_partition(fig1, pp);
}

TEST_CASE("prime_partition of the bowtie is the two triangles") {
  PrimePartition pp = prime_partition(fixtures::bowtie());
  CHECK(pp.opt == Rational(2, 3));
  REQUIRE(pp.element_count() == 2);
  CHECK(!pp.degenerate);
  std::set<std::vector<int>> expected{{0, 1, 2}, {3, 4, 5}};
  CHECK(element_sets(pp) == expected);
}

TEST_CASE("prime_partition rejects bad input") {
  CHECK_THROWS_AS(prime_partition(make_graph(4, {{0, 1}, {2, 3}})),
                  DisconnectedGraphError);
}

TEST_CASE("prime_partition is a partition with opt-rate residuals") {
  for (const auto& [name, g] : corpus::standard(5, 30)) {
    CAPTURE(name);
    PrimePartition pp = prime_partition(g);
    check_is_partition(g, pp);
    CHECK(pp.opt == strength_opt(g).opt);
    if (pp.degenerate) CHECK(*pp.degenerate == pp.element_count() - 1);
  }
}

TEST_CASE("degenerate_set applies the whole-graph rate rule") {
  Graph k3 = fixtures::k3();
  CHECK(!degenerate_set(k3, prime_partition(k3)));

  Graph fig1 = fixtures::fig1();
  PrimePartition pp = prime_partition(fig1);
  auto d = degenerate_set(fig1, pp);
  REQUIRE(d.has_value());
  CHECK(*d == pp.elements[4]);

  Graph pendant = fixtures::triangle_pendant();
  PrimePartition ppp = prime_partition(pendant);
  auto dp = degenerate_set(pendant, ppp);
  REQUIRE(dp.has_value());
  CHECK(*dp == EdgeSubset::from_ids(4, {0, 1, 2}));
}

TEST_CASE("degenerate flag agrees with the detection rule corpus-wide") {
  for (const auto& [name, g] : corpus::standard(5, 30)) {
    CAPTURE(name);
    PrimePartition pp = prime_partition(g);
    Rational whole(g.vertex_count() - 1, g.edge_count());
    CHECK(degenerate_set(g, pp).has_value() == (whole != pp.opt));
    CHECK(degenerate_set(g, pp).has_value() == pp.degenerate.has_value());
  }
}

TEST_CASE("canonical_beta pinned values") {
  CHECK(canonical_beta(prime_partition(fixtures::k3())) ==
        EdgeDistribution::uniform(3));

  // Bowtie: first-inserted triangle 2/9, second 1/9.
  PrimePartition pp = prime_partition(fixtures::bowtie());
  EdgeDistribution beta = canonical_beta(pp);
  pp.elements[0].for_each([&](int e) { CHECK(beta[e] == Rational(2, 9)); });
  pp.elements[1].for_each([&](int e) { CHECK(beta[e] == Rational(1, 9)); });
  CHECK(min_csg(fixtures::bowtie(), beta).weight == Rational(2, 3));

  // Running example: levels 4c, 3c, 2c, c, 0 with c = 1/32.
  Graph fig1 = fixtures::fig1();
  PrimePartition fp = prime_partition(fig1);
  EdgeDistribution fbeta = canonical_beta(fp);
  Rational c(1, 32);
  for (int i = 0; i < 4; ++i)
    fp.elements[static_cast<std::size_t>(i)].for_each(
        [&](int e) { CHECK(fbeta[e] == Rational(4 - i) * c); });
  fp.elements[4].for_each([&](int e) { CHECK(fbeta[e] == 0); });
  CHECK(min_csg(fig1, fbeta).weight == Rational(1, 2));
}

TEST_CASE("canonical_beta realizes the partition and attains opt") {
  for (const auto& [name, g] : corpus::standard(5, 30)) {
    CAPTURE(name);
    PrimePartition pp = prime_partition(g);
    EdgeDistribution beta = canonical_beta(pp);
    CHECK(min_csg(g, beta).weight == pp.opt);

    // The weight classes of beta are exactly the partition elements.
    WeightClasses wc = weight_classes(g, beta);
    CHECK(wc.class_count() == pp.element_count());
    std::set<std::vector<int>> classes;
    for (const WeightClass& cl : wc.classes) classes.insert(cl.edges.to_vector());
    CHECK(classes == element_sets(pp));

    // All positive classes have incremental rate opt.
    for (int ell = 1; ell <= wc.class_count(); ++ell) {
      if (wc.classes[static_cast<std::size_t>(ell - 1)].weight == 0) continue;
      CHECK(class_cut_rate(g, wc, ell) == pp.opt);
    }
  }
}

TEST_CASE("element quotas hold for every positive class of random distributions") {
  std::mt19937 rng(61u);
  for (const auto& [name, g] : corpus::random_multigraphs(30, 12, 19u)) {
    CAPTURE(name);
    for (int round = 0; round < 5; ++round) {
      EdgeDistribution d = corpus::random_distribution(g.edge_count(), rng);
      EdgeSubset tree = min_csg(g, d).witness;
      WeightClasses wc = weight_classes(g, d);
      for (int ell = 1; ell <= wc.class_count(); ++ell) {
        const WeightClass& cl = wc.classes[static_cast<std::size_t>(ell - 1)];
        if (cl.weight == 0) continue;
        Rational expected = Rational(static_cast<long long>(cl.edges.count())) *
                            class_cut_rate(g, wc, ell);
        CHECK(Rational(static_cast<long long>((tree & cl.edges).count())) ==
              expected);
      }
    }
  }
}

TEST_CASE("build_ocsg meets quotas") {
  Graph k3 = fixtures::k3();
  EdgeSubset h = build_ocsg(k3, prime_partition(k3));
  CHECK(h.count() == 2);

  Graph fig1 = fixtures::fig1();
  PrimePartition pp = prime_partition(fig1);
  EdgeSubset tree = build_ocsg(fig1, pp);
  CHECK(tree.count() == 12);
  CHECK((tree & pp.elements[0]).count() == 1);
  CHECK((tree & pp.elements[1]).count() == 1);
  CHECK((tree & pp.elements[2]).count() == 3);
  CHECK((tree & pp.elements[3]).count() == 3);
  CHECK((tree & pp.elements[4]).count() == 4);
  CHECK(is_ocsg(fig1, pp, tree));

  Graph bowtie = fixtures::bowtie();
  PrimePartition bp = prime_partition(bowtie);
  EdgeSubset btree = build_ocsg(bowtie, bp);
  CHECK(btree.count() == 4);
  CHECK((btree & bp.elements[0]).count() == 2);
  CHECK((btree & bp.elements[1]).count() == 2);
}

TEST_CASE("is_ocsg leaves the degenerate element unconstrained") {
  Graph fig1 = fixtures::fig1();
  PrimePartition pp = prime_partition(fig1);
  EdgeSubset tree = build_ocsg(fig1, pp);

  EdgeSubset extra = tree;
  pp.elements[4].for_each([&](int e) {
    if (!extra.contains(e) && extra == tree) extra.add(e);
  });
  CHECK(extra.count() == tree.count() + 1);
  CHECK(is_ocsg(fig1, pp, extra));

  // A spanning tree using both K4-K5 links violates the quota of {0,1}.
  EdgeSubset bad(26);
  bad.add(0);
  bad.add(1);
  bad.add(4);   // l1-l2
  bad.add(5);   // l1-l3
  bad.add(6);   // l1-l4
  bad.add(10);  // r1-r2
  bad.add(11);  // r1-r3
  bad.add(12);  // r1-r4
  bad.add(16);  // q1-q2
  bad.add(17);  // q1-q3
  bad.add(18);  // q1-q4
  bad.add(19);  // q1-q5
  CHECK(is_connected_spanning(fig1, bad));
  CHECK(bad.count() == 12);
  CHECK(!is_ocsg(fig1, pp, bad));
}

TEST_CASE("constant-on-elements distributions give every OCSG weight opt") {
  std::mt19937 rng(67u);
  std::uniform_int_distribution<int> level(0, 5);
  for (const auto& [name, g] : corpus::standard(4, 15)) {
    if (g.edge_count() > 12) continue;
    CAPTURE(name);
    PrimePartition pp = prime_partition(g);
    std::vector<EdgeSubset> ocsgs = enumerate_ocsgs(g, pp);
    CHECK(!ocsgs.empty());
    for (int round = 0; round < 5; ++round) {
      // Random positive levels per non-degenerate element, zero on D.
      std::vector<long long> draws(
          static_cast<std::size_t>(pp.nondegenerate_count()));
      long long total = 0;
      for (int i = 0; i < pp.nondegenerate_count(); ++i) {
        draws[static_cast<std::size_t>(i)] = level(rng) + 1;
        total += draws[static_cast<std::size_t>(i)] *
                 static_cast<long long>(
                     pp.elements[static_cast<std::size_t>(i)].count());
      }
      std::vector<Rational> weights(static_cast<std::size_t>(g.edge_count()),
                                    Rational(0));
      for (int i = 0; i < pp.nondegenerate_count(); ++i)
        pp.elements[static_cast<std::size_t>(i)].for_each([&](int e) {
          weights[static_cast<std::size_t>(e)] =
              Rational(draws[static_cast<std::size_t>(i)], total);
        });
      EdgeDistribution alpha(weights);
      for (const EdgeSubset& h : ocsgs) CHECK(alpha.sum_over(h) == pp.opt);
    }
  }
}

TEST_CASE("the partition refines the weight classes of value-attaining distributions") {
  std::mt19937 rng(73u);
  for (const auto& [name, g] : corpus::standard(4, 20)) {
    CAPTURE(name);
    PrimePartition pp = prime_partition(g);
    OrderDag dag = parent_child(g, pp);
    std::vector<EdgeDistribution> samples = extreme_points(pp, dag);
    samples.push_back(canonical_beta(pp));
    // Random distributions that happen to attain the value are maxmin too.
    for (int round = 0; round < 30; ++round) {
      EdgeDistribution d = corpus::random_distribution(g.edge_count(), rng);
      if (min_csg(g, d).weight == pp.opt) samples.push_back(std::move(d));
    }
    for (const EdgeDistribution& gamma : samples) {
      if (min_csg(g, gamma).weight != pp.opt) continue;
      for (const EdgeSubset& element : pp.elements) {
        std::optional<Rational> level;
        bool constant = true;
        element.for_each([&](int e) {
          if (!level)
            level = gamma[e];
          else if (*level != gamma[e])
            constant = false;
        });
        CHECK(constant);
      }
    }
  }
}

TEST_CASE("element set is invariant under edge permutation") {
  std::mt19937 rng(71u);
  for (const auto& [name, g] :
       {corpus::NamedGraph{"fig1", fixtures::fig1()},
        corpus::NamedGraph{"bowtie", fixtures::bowtie()},
        corpus::NamedGraph{"pendant", fixtures::triangle_pendant()}}) {
    CAPTURE(name);
    PrimePartition pp = prime_partition(g);
    for (int round = 0; round < 3; ++round) {
      std::vector<int> perm;
      Graph permuted = corpus::permute_edges(g, rng, perm);
      PrimePartition qq = prime_partition(permuted);
      CHECK(qq.opt == pp.opt);
      // Map permuted ids back to the originals and compare element sets.
      std::set<std::vector<int>> mapped;
      for (const EdgeSubset& p : qq.elements) {
        std::vector<int> ids;
        p.for_each([&](int e) { ids.push_back(perm[static_cast<std::size_t>(e)]); });
        std::sort(ids.begin(), ids.end());
        mapped.insert(ids);
      }
      CHECK(mapped == element_sets(pp));
      CHECK(qq.degenerate.has_value() == pp.degenerate.has_value());
    }
  }
}

}  // TEST_SUITE
