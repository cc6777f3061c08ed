#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flowcert/error.hpp"
#include "flowcert/moves.hpp"
#include "support/oracles.hpp"

namespace properties {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(std::string why) {
    if (failures++ == 0) first_failure = std::move(why);
  }
};

inline flowcert::Flow random_flow(const flowcert::Group& g, std::size_t n,
                                  std::mt19937_64& rng) {
  std::vector<flowcert::Elem> v(n);
  flowcert::Elem s{0};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    v[i] = flowcert::Elem{static_cast<std::uint32_t>(rng() % g.order())};
    s = g.add(s, v[i]);
  }
  v[n - 1] = g.neg(s);
  return flowcert::Flow(g, std::move(v));
}

// Random instances satisfying the subset-exchange preconditions over Z_p,
// n <= 10. Each must yield a valid exchange set inside the first p-1
// differing indices, of the minimal size found by the exhaustive oracle.
inline Tally subset_exchange_totality(std::uint32_t p, std::size_t cases,
                                      std::uint64_t seed) {
  using namespace flowcert;
  const auto g = Group::cyclic(p);
  std::mt19937_64 rng(seed);
  Tally tally;
  while (tally.cases < cases) {
    const std::size_t n = std::max<std::size_t>(2, p) + rng() % (11 - std::max<std::size_t>(2, p));
    const auto f = random_flow(g, n, rng);
    const auto h = random_flow(g, n, rng);
    std::vector<std::size_t> differ, rest;
    for (std::size_t i = 0; i < n; ++i) (f[i] != h[i] ? differ : rest).push_back(i);
    if (differ.size() + 1 < p || differ.empty()) continue;

    std::shuffle(differ.begin(), differ.end(), rng);
    const std::size_t take = (p - 1) + rng() % (differ.size() - (p - 1) + 1);
    std::vector<std::size_t> pool(differ.begin(), differ.begin() + static_cast<std::ptrdiff_t>(take));
    if (pool.empty()) continue;
    for (auto it = differ.begin() + static_cast<std::ptrdiff_t>(take); it != differ.end(); ++it) {
      rest.push_back(*it);
    }
    std::vector<std::size_t> fixed;
    for (auto i : rest) {
      if (rng() % 2) fixed.push_back(i);
    }
    ++tally.cases;

    std::vector<std::size_t> found;
    try {
      found = find_exchange_subset(f, h, pool, fixed);
    } catch (const Error& e) {
      tally.fail(std::string("threw: ") + e.what());
      continue;
    }
    std::vector<std::size_t> sorted_pool = pool;
    std::sort(sorted_pool.begin(), sorted_pool.end());
    const std::vector<std::size_t> window(sorted_pool.begin(), sorted_pool.begin() + (p - 1));
    if (!std::includes(window.begin(), window.end(), found.begin(), found.end())) {
      tally.fail("subset left the canonical window");
      continue;
    }
    // Oracle: exhaustive over subsets of the window.
    std::uint32_t fixed_sum = 0;
    for (auto i : fixed) fixed_sum = (fixed_sum + f[i].code + p - h[i].code) % p;
    std::vector<std::uint32_t> diffs;
    for (auto i : window) diffs.push_back((f[i].code + p - h[i].code) % p);
    const int best = oracle::min_subset_size(diffs, (p - fixed_sum) % p, p);
    if (best < 0 || static_cast<std::size_t>(best) != found.size()) {
      tally.fail("size differs from oracle minimum");
      continue;
    }
    std::vector<std::size_t> exchange = fixed;
    exchange.insert(exchange.end(), found.begin(), found.end());
    try {
      const auto [f2, h2] = exchange_pair(f, h, exchange);
      if (!compatible(FlowMultiset({f, h}), FlowMultiset({f2, h2}))) {
        tally.fail("exchange result not compatible");
      }
    } catch (const Error& e) {
      tally.fail(std::string("exchange rejected: ") + e.what());
    }
  }
  return tally;
}

}  // namespace properties
