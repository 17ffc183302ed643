#include <doctest.h>

#include "shatter/constructions.hpp"
#include "shatter/nets.hpp"
#include "shatter/random_families.hpp"

using namespace shatter;

namespace {

Pt pt(long long x, long long y) { return Pt{make_rat(x), make_rat(y)}; }

Family two_separable() {
  return make_family({make_body(0, {pt(0, 0), pt(0, 1)}), make_body(1, {pt(3, 0), pt(3, 1)})});
}

}  // namespace

TEST_CASE("verify_epsilon_net trivial cases") {
  Family f = two_separable();
  WeightVector w = uniform_weights(2);
  Rat eps = parse_rat("1/2");
  // the full set is always a valid net
  CHECK(!verify_epsilon_net(f, eps, w, Bitmask::full(2)).has_value());
  // the empty set misses the full (always heavy) edge
  auto violation = verify_epsilon_net(f, eps, w, Bitmask(2));
  REQUIRE(violation.has_value());
  CHECK(violation->all());
}

TEST_CASE("verify catches a light net on the five segment family") {
  ConstructionResult r = gen_five_segments();
  WeightVector w = uniform_weights(5);
  // eps small enough that singletons are heavy: every singleton edge exists
  Rat eps = parse_rat("1/5");
  Bitmask partial(5);
  partial.set(0);
  auto violation = verify_epsilon_net(r.family, eps, w, partial);
  REQUIRE(violation.has_value());
  // the violating edge is realized, heavy, and unhit
  CHECK(violation->count() >= 1);
  CHECK(!violation->test(0));
}

TEST_CASE("epsilon_net returns verified nets and is deterministic") {
  ConstructionResult r = gen_five_segments();
  WeightVector w = uniform_weights(5);
  NetResult a = epsilon_net(r.family, parse_rat("1/2"), w, 5, 11);
  CHECK(!verify_epsilon_net(r.family, parse_rat("1/2"), w, a.net).has_value());
  CHECK(a.net.count() <= a.sample_size);
  NetResult b = epsilon_net(r.family, parse_rat("1/2"), w, 5, 11);
  CHECK(a.net == b.net);
  CHECK(a.attempts == b.attempts);
}

TEST_CASE("net validity is monotone in the net and antitone in eps") {
  Family f = random_disjoint_family(6, 3);
  WeightVector w = uniform_weights(6);
  NetResult r = epsilon_net(f, parse_rat("1/3"), w, 3, 5);
  // supersets of a valid net stay valid
  Bitmask bigger = r.net;
  for (int i = 0; i < 6; ++i)
    if (!bigger.test(i)) {
      bigger.set(i);
      break;
    }
  CHECK(!verify_epsilon_net(f, parse_rat("1/3"), w, bigger).has_value());
  // a larger eps keeps the same net valid
  CHECK(!verify_epsilon_net(f, parse_rat("1/2"), w, r.net).has_value());
}

TEST_CASE("weighted heavy edges respect exact rational thresholds") {
  Family f = two_separable();
  // all weight on body 1: {body 1} is the only heavy nontrivial edge
  WeightVector w = make_weights({parse_rat("0"), parse_rat("7/3")});
  Rat eps = parse_rat("1/2");
  Bitmask net0(2);
  net0.set(0);
  auto violation = verify_epsilon_net(f, eps, w, net0);
  REQUIRE(violation.has_value());
  CHECK(violation->test(1));
  Bitmask net1(2);
  net1.set(1);
  CHECK(!verify_epsilon_net(f, eps, w, net1).has_value());
}

TEST_CASE("weights beyond the integer fast path still verify exactly") {
  Family f = two_separable();
  // denominators past 2^50 force the rational verification path
  Rat huge = Rat(Int(1) << 60) / Rat(Int(3));
  WeightVector w = make_weights({Rat(0), huge});
  Rat eps = parse_rat("1/2");
  Bitmask net0(2);
  net0.set(0);
  auto violation = verify_epsilon_net(f, eps, w, net0);
  REQUIRE(violation.has_value());
  CHECK(violation->test(1));
  Bitmask net1(2);
  net1.set(1);
  CHECK(!verify_epsilon_net(f, eps, w, net1).has_value());
}

TEST_CASE("input validation errors") {
  Family f = two_separable();
  WeightVector w = uniform_weights(2);
  CHECK_THROWS_AS(epsilon_net(f, parse_rat("0"), w, 3, 1), InvalidEps);
  CHECK_THROWS_AS(epsilon_net(f, parse_rat("1"), w, 3, 1), InvalidEps);
  CHECK_THROWS_AS(epsilon_net(f, parse_rat("1/2"), make_weights({Rat(0), Rat(0)}), 3, 1),
                  ZeroTotalWeight);
  CHECK_THROWS_AS(make_weights({parse_rat("-1")}), ValidationError);
  CHECK_THROWS_AS(epsilon_approximation(f, parse_rat("2"), 1), InvalidEps);
  CHECK_THROWS_AS(max_discrepancy(f, Bitmask(2)), EmptySample);
}

TEST_CASE("max_discrepancy exact values") {
  Family f = two_separable();
  CHECK(max_discrepancy(f, Bitmask::full(2)) == 0);
  Bitmask half(2);
  half.set(0);
  // edges {}, {0}, {1}, {0,1}: worst is edge {1}: |1/2 - 0/1| = 1/2
  CHECK(max_discrepancy(f, half) == parse_rat("1/2"));
}

TEST_CASE("max_discrepancy is bounded by one and equals brute force on five segments") {
  ConstructionResult r = gen_five_segments();
  EdgeSet es = enumerate_realized(r.family);
  for (uint64_t pick = 0; pick < 4; ++pick) {
    Bitmask sample(5);
    sample.set(static_cast<int>(pick));
    sample.set(static_cast<int>((pick + 2) % 5));
    sample.set(static_cast<int>((pick + 4) % 5));
    Rat got = max_discrepancy(r.family, sample);
    // brute force over the 32 edges
    Rat best(0);
    for (const auto& e : es.edges()) {
      Rat v = rat_abs(Rat(make_rat(e.count(), 5)) - make_rat(e.count_and(sample), 3));
      if (v > best) best = v;
    }
    CHECK(got == best);
    CHECK(got <= 1);
  }
}

TEST_CASE("epsilon_approximation returns a verified sample") {
  Family f = random_disjoint_family(12, 9);
  ApproxResult r = epsilon_approximation(f, parse_rat("3/4"), 21);
  CHECK(r.discrepancy < parse_rat("3/4"));
  CHECK(r.m == epsilon_approx_sample_size(parse_rat("3/4"), 12));
  CHECK(max_discrepancy(f, r.sample) == r.discrepancy);
  // sample of everything has discrepancy zero
  Family single = make_family({make_body(0, {pt(0, 0), pt(1, 2)})});
  ApproxResult rs = epsilon_approximation(single, parse_rat("1/2"), 3);
  CHECK(rs.m == 1);
  CHECK(rs.discrepancy == 0);
}

TEST_CASE("sample size formulas") {
  CHECK(epsilon_approx_sample_size(parse_rat("1/10"), 500) == 400);
  CHECK(epsilon_approx_sample_size(parse_rat("1/10"), 300) == 300);
  CHECK(epsilon_approx_sample_size(parse_rat("1/2"), 100) == 16);
  // m = ceil((8*3/0.1) * ln(160)) = 1219
  CHECK(epsilon_net_sample_size(parse_rat("1/10"), 3) == 1219);
  CHECK(epsilon_net_sample_size(parse_rat("1/2"), 1) > 0);
}
