#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flowcert/error.hpp"
#include "flowcert/fiber.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace flowcert;
using fixtures::z2;
using fixtures::z3;

namespace {

oracle::Bag bag_of(const FlowMultiset& m) {
  oracle::Bag b;
  for (const auto& f : m.flows()) {
    oracle::Tuple t;
    for (auto v : f.values()) t.push_back(v.code);
    b.push_back(t);
  }
  return b;
}

oracle::Bag bag_of(const FlowSpace& space, std::span<const std::uint32_t> idx) {
  return bag_of(to_multiset(space, idx));
}

}  // namespace

TEST_CASE("signature") {
  const FlowMultiset single({make_flow(z2, {0, 0, 0})});
  const auto s = signature(single);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(s.at(i, 0) == 1);
    CHECK(s.at(i, 1) == 0);
  }
  const auto m1 = signature(fixtures::m1());
  CHECK(m1.at(0, 1) == 2);
  CHECK(m1.at(0, 0) == 1);
  CHECK(m1.degree() == 3);
  CHECK(m1.consistent());

  // order of listing is irrelevant
  const FlowMultiset reordered({make_flow(z2, {1, 1, 1, 1, 0, 0}), make_flow(z2, {0, 0, 0, 0, 0, 0}),
                                make_flow(z2, {1, 1, 1, 1, 1, 1})});
  CHECK(reordered == fixtures::m1());
  CHECK(signature(reordered) == m1);
}

TEST_CASE("compatible") {
  CHECK(compatible(fixtures::m1(), fixtures::m2()));
  CHECK(compatible(fixtures::m1(), fixtures::m1()));
  CHECK(compatible(fixtures::m1(), fixtures::m1_tilde()));
  CHECK(compatible(fixtures::cubic_left(), fixtures::cubic_right()));
  const FlowMultiset a({make_flow(z2, {0, 0, 0})}), b({make_flow(z2, {0, 1, 1})});
  CHECK_FALSE(compatible(a, b));
  CHECK(differing_indices(a, b) == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(compatible(a, FlowMultiset({make_flow(z3, {0, 0, 0})})), Error);

  // No two flows of m1 are compatible with any two flows of m2.
  const auto m1 = fixtures::m1(), m2 = fixtures::m2();
  const auto& f1 = m1.flows();
  const auto& f2 = m2.flows();
  for (std::size_t a1 = 0; a1 < 3; ++a1)
    for (std::size_t a2 = a1 + 1; a2 < 3; ++a2)
      for (std::size_t b1 = 0; b1 < 3; ++b1)
        for (std::size_t b2 = b1 + 1; b2 < 3; ++b2)
          CHECK_FALSE(compatible(FlowMultiset({f1[a1], f1[a2]}), FlowMultiset({f2[b1], f2[b2]})));
}

TEST_CASE("three routes to compatibility agree on random bags") {
  std::mt19937_64 rng(7);
  for (const auto& g : {z2, z3, Group::make({2, 2})}) {
    const std::size_t n = 4;
    const auto all = enumerate_flows(g, n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    int agreements = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      const std::size_t d = 1 + rng() % 4;
      std::vector<Flow> a, b;
      for (std::size_t k = 0; k < d; ++k) {
        a.push_back(all[pick(rng)]);
        b.push_back(all[pick(rng)]);
      }
      // bias toward compatible pairs: sometimes reuse a permuted copy
      if (trial % 3 == 0) {
        b = a;
        std::shuffle(b.begin(), b.end(), rng);
      }
      const FlowMultiset ma(a), mb(b);
      const bool by_sig = compatible(ma, mb);
      const bool by_lattice = lattice_degree(ma) == lattice_degree(mb);
      const bool by_columns = oracle::columns(bag_of(ma), n) == oracle::columns(bag_of(mb), n);
      CHECK(by_sig == by_lattice);
      CHECK(by_sig == by_columns);
      CHECK(signature(ma).as_lattice_point() == lattice_degree(ma));
      agreements += by_sig;

      // adding a common flow preserves compatibility
      if (by_sig) {
        const auto extra = all[pick(rng)];
        a.push_back(extra);
        b.push_back(extra);
        CHECK(compatible(FlowMultiset(a), FlowMultiset(b)));
      }
    }
    CHECK(agreements > 0);
  }
}

TEST_CASE("multiset_count") {
  CHECK(multiset_count(4, 2) == 10);
  CHECK(multiset_count(8, 2) == 36);
  CHECK(multiset_count(32, 3) == 5984);
  CHECK(multiset_count(81, 4) == 1929501);
  CHECK(multiset_count(1u << 20, 50) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("enumerate_fiber examples") {
  const FlowSpace z2n3(z2, 3);
  const auto single = enumerate_fiber(z2n3, signature(FlowMultiset({make_flow(z2, {0, 0, 0})})));
  CHECK(single.size() == 1);

  // Z2, n = 4, counts (1,1) at every index: the complement pairs.
  const FlowSpace z2n4(z2, 4);
  ColumnSignature half(4, 2, {1, 1, 1, 1, 1, 1, 1, 1});
  const auto pairs = enumerate_fiber(z2n4, half);
  REQUIRE(pairs.size() == 4);
  const std::vector<oracle::Bag> want{
      {{0, 0, 0, 0}, {1, 1, 1, 1}},
      {{0, 0, 1, 1}, {1, 1, 0, 0}},
      {{0, 1, 0, 1}, {1, 0, 1, 0}},
      {{0, 1, 1, 0}, {1, 0, 0, 1}},
  };
  for (std::size_t k = 0; k < 4; ++k) CHECK(bag_of(z2n4, pairs.member(k)) == want[k]);

  // Fiber of m1 holds m1, m1~ and m2; size frozen from brute force.
  const auto fib = enumerate_fiber(signature(fixtures::m1()), z2, 6);
  CHECK(fib.size() == fixtures::kM1FiberSize);
  for (const auto& m : {fixtures::m1(), fixtures::m1_tilde(), fixtures::m2()}) {
    CHECK(std::find(fib.begin(), fib.end(), m) != fib.end());
  }
  CHECK(std::is_sorted(fib.begin(), fib.end()));
}

TEST_CASE("enumerate_fiber rejects inconsistent signatures") {
  const FlowSpace space(z2, 3);
  ColumnSignature bad(3, 2, {1, 0, 1, 1, 1, 0});
  try {
    enumerate_fiber(space, bad);
    FAIL("accepted inconsistent signature");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_fiber);
  }
}

TEST_CASE("fiber capacity") {
  const FlowSpace space(z2, 4);
  ColumnSignature half(4, 2, {1, 1, 1, 1, 1, 1, 1, 1});
  CHECK_THROWS_AS(enumerate_fiber(space, half, 3), CapacityError);

  FiberLimits tight;
  tight.max_multisets = 100;
  try {
    partition_fibers(FlowSpace(z3, 4), 3, tight);
    FAIL("no capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.required() == 3654);
    CHECK(e.where() == "d=3");
  }
}

TEST_CASE("partition examples") {
  const auto z2n3 = enumerate_all_fibers(z2, 3, 2);
  CHECK(z2n3.size() == 10);
  for (const auto& f : z2n3) CHECK(f.members.size() == 1);

  const auto z2n4 = enumerate_all_fibers(z2, 4, 2);
  std::size_t total = 0, big = 0;
  for (const auto& f : z2n4) {
    total += f.members.size();
    if (f.members.size() == 4) ++big;
    CHECK(f.members.size() <= 4);
  }
  CHECK(total == 36);
  CHECK(big == 1);

  for (const auto& g : {z2, z3}) {
    const auto d1 = enumerate_all_fibers(g, 4, 1);
    CHECK(d1.size() == flow_count(g, 4));
    for (const auto& f : d1) CHECK(f.members.size() == 1);
  }
}

TEST_CASE("partition equals brute force and targeted search") {
  struct Case {
    Group g;
    std::size_t n, dmax;
  };
  for (const auto& c : {Case{z2, 3, 4}, Case{z2, 4, 4}, Case{z2, 5, 4}, Case{z3, 3, 4}, Case{z3, 4, 3}}) {
    const FlowSpace space(c.g, c.n);
    for (std::size_t d = 1; d <= c.dmax; ++d) {
      CAPTURE(c.g.order());
      CAPTURE(c.n);
      CAPTURE(d);
      const auto fibers = partition_fibers(space, d);
      const auto brute = oracle::fibers(c.g, c.n, d);
      REQUIRE(fibers.size() == brute.size());
      std::uint64_t total = 0;
      std::set<oracle::Bag> seen;
      for (std::size_t k = 0; k < fibers.size(); ++k) {
        const auto& fiber = fibers[k];
        if (k) CHECK(fibers[k - 1].signature() < fiber.signature());
        std::vector<oracle::Bag> bags;
        for (std::size_t j = 0; j < fiber.size(); ++j) bags.push_back(bag_of(space, fiber.member(j)));
        CHECK(std::is_sorted(bags.begin(), bags.end()));
        for (const auto& b : bags) CHECK(seen.insert(b).second);  // disjoint
        CHECK(brute.at(oracle::columns(bags.front(), c.n)) == bags);
        total += fiber.size();

        const auto targeted = enumerate_fiber(space, fiber.signature());
        REQUIRE(targeted.size() == fiber.size());
        for (std::size_t j = 0; j < fiber.size(); ++j) {
          CHECK(std::ranges::equal(targeted.member(j), fiber.member(j)));
        }
      }
      CHECK(total == multiset_count(space.flow_count(), d));
    }
  }
}

TEST_CASE("streaming visits fibers in signature order") {
  const FlowSpace space(z3, 3);
  std::vector<ColumnSignature> order;
  for_each_fiber(space, 3, {}, [&](const IndexFiber& f) { order.push_back(f.signature()); });
  CHECK(order.size() == 163);
  CHECK(std::is_sorted(order.begin(), order.end()));
}
