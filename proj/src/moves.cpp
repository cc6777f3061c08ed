#include "flowcert/moves.hpp"

#include <algorithm>
#include <string>

#include "flowcert/error.hpp"

namespace flowcert {

namespace {

bool is_prime(std::uint32_t k) {
  if (k < 2) return false;
  for (std::uint32_t q = 2; q * q <= k; ++q) {
    if (k % q == 0) return false;
  }
  return true;
}

std::vector<std::size_t> checked_index_set(std::span<const std::size_t> indices,
                                           std::size_t n, ErrorKind kind) {
  std::vector<std::size_t> out(indices.begin(), indices.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw Error(kind, "index set has duplicates");
  }
  if (!out.empty() && out.back() >= n) {
    throw Error(kind, "index " + std::to_string(out.back()) +
                          " out of range for n=" + std::to_string(n));
  }
  return out;
}

// Calls visit(subset) for subsets of `pool` by size ascending, lexicographic
// within a size, until visit returns true.
template <class Visit>
bool for_each_subset(const std::vector<std::size_t>& pool, Visit visit) {
  const std::size_t total = pool.size();
  std::vector<std::size_t> pick;
  std::vector<std::size_t> subset;
  for (std::size_t size = 0; size <= total; ++size) {
    pick.resize(size);
    for (std::size_t k = 0; k < size; ++k) pick[k] = k;
    for (;;) {
      subset.clear();
      for (auto k : pick) subset.push_back(pool[k]);
      if (visit(subset)) return true;
      std::size_t pos = size;
      while (pos > 0 && pick[pos - 1] == total - size + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t k = pos; k < size; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
  return false;
}

}  // namespace

std::pair<Flow, Flow> exchange_pair(const Flow& f, const Flow& g,
                                    std::span<const std::size_t> indices) {
  if (f.group() != g.group() || f.size() != g.size()) {
    throw Error(ErrorKind::shape, "flows differ in group or length");
  }
  const auto& group = f.group();
  const auto set = checked_index_set(indices, f.size(), ErrorKind::invalid_exchange);
  Elem sum_f = group.identity(), sum_g = group.identity();
  for (auto i : set) {
    sum_f = group.add(sum_f, f[i]);
    sum_g = group.add(sum_g, g[i]);
  }
  if (sum_f != sum_g) {
    throw InvalidExchangeError(
        sum_f.code, sum_g.code,
        "partial sums differ on the exchange set: " + std::to_string(sum_f.code) +
            " vs " + std::to_string(sum_g.code));
  }
  auto fv = f.values();
  auto gv = g.values();
  for (auto i : set) std::swap(fv[i], gv[i]);
  return {Flow(group, std::move(fv)), Flow(group, std::move(gv))};
}

void validate(const Move& mv) {
  if (mv.removed.degree() != mv.inserted.degree()) {
    throw Error(ErrorKind::invalid_move, "move sides differ in size");
  }
  if (mv.removed.group() != mv.inserted.group() ||
      mv.removed.n() != mv.inserted.n()) {
    throw Error(ErrorKind::invalid_move, "move sides differ in group or n");
  }
  if (!compatible(mv.removed, mv.inserted)) {
    throw Error(ErrorKind::invalid_move, "move sides are not compatible");
  }
}

Move pair_move(const Flow& f, const Flow& g,
               std::span<const std::size_t> indices) {
  auto [f2, g2] = exchange_pair(f, g, indices);
  return Move{FlowMultiset({f, g}), FlowMultiset({std::move(f2), std::move(g2)})};
}

Move pair_move(const FlowMultiset& m, const PairExchange& ex) {
  if (ex.first >= m.degree() || ex.second >= m.degree() ||
      ex.first == ex.second) {
    throw Error(ErrorKind::precondition, "pair exchange positions invalid");
  }
  return pair_move(m.flows()[ex.first], m.flows()[ex.second], ex.indices);
}

FlowMultiset apply_move(const FlowMultiset& m, const Move& mv) {
  if (mv.removed.group() != m.group() || mv.removed.n() != m.n()) {
    throw Error(ErrorKind::shape, "move does not match multiset shape");
  }
  if (!m.contains(mv.removed)) {
    throw Error(ErrorKind::containment,
                "removed side is not a sub-multiset of the target");
  }
  validate(mv);
  std::vector<Flow> rest;
  rest.reserve(m.degree());
  std::set_difference(m.flows().begin(), m.flows().end(),
                      mv.removed.flows().begin(), mv.removed.flows().end(),
                      std::back_inserter(rest));
  rest.insert(rest.end(), mv.inserted.flows().begin(), mv.inserted.flows().end());
  return FlowMultiset(m.group(), m.n(), std::move(rest));
}

std::vector<std::size_t> find_exchange_subset(
    const Flow& f, const Flow& g, std::span<const std::size_t> differing,
    std::span<const std::size_t> fixed) {
  if (f.group() != g.group() || f.size() != g.size()) {
    throw Error(ErrorKind::shape, "flows differ in group or length");
  }
  const auto& group = f.group();
  if (!group.is_cyclic()) {
    throw Error(ErrorKind::precondition, "subset exchange needs a cyclic group");
  }
  const std::uint32_t p = group.order();
  const auto pool = checked_index_set(differing, f.size(), ErrorKind::precondition);
  const auto fixed_set = checked_index_set(fixed, f.size(), ErrorKind::precondition);
  if (pool.size() + 1 < p) {
    throw Error(ErrorKind::precondition,
                "need at least p-1 = " + std::to_string(p - 1) +
                    " differing indices, got " + std::to_string(pool.size()));
  }
  for (auto i : pool) {
    if (f[i] == g[i]) {
      throw Error(ErrorKind::precondition,
                  "flows agree at index " + std::to_string(i));
    }
    if (std::binary_search(fixed_set.begin(), fixed_set.end(), i)) {
      throw Error(ErrorKind::precondition,
                  "index " + std::to_string(i) + " is in both sets");
    }
  }

  auto diff = [&](std::size_t i) { return group.sub(f[i], g[i]); };
  Elem fixed_sum = group.identity();
  for (auto i : fixed_set) fixed_sum = group.add(fixed_sum, diff(i));
  const Elem target = group.neg(fixed_sum);

  std::vector<std::size_t> found;
  auto hits = [&](const std::vector<std::size_t>& subset) {
    Elem s = group.identity();
    for (auto i : subset) s = group.add(s, diff(i));
    if (s != target) return false;
    found = subset;
    return true;
  };

  const std::vector<std::size_t> window(pool.begin(),
                                        pool.begin() + (p - 1));
  if (for_each_subset(window, hits)) return found;

  if (pool.size() > window.size()) {
    if (pool.size() > 24) {
      throw Error(ErrorKind::precondition,
                  "widened subset search limited to 24 indices");
    }
    if (for_each_subset(pool, hits)) return found;
  }
  if (is_prime(p)) {
    throw Error(ErrorKind::internal_invariant,
                "no exchange subset found for prime order " + std::to_string(p));
  }
  throw Error(ErrorKind::precondition,
              "no exchange subset exists; order " + std::to_string(p) +
                  " is not prime");
}

Coloring::Coloring(std::uint32_t colors, std::vector<std::uint32_t> values)
    : colors_(colors), values_(std::move(values)) {
  for (auto v : values_) {
    if (v > colors_) {
      throw Error(ErrorKind::precondition,
                  "color " + std::to_string(v) + " exceeds color count " +
                      std::to_string(colors_));
    }
  }
}

std::vector<std::size_t> Coloring::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != 0) out.push_back(i);
  }
  return out;
}

std::pair<Coloring, Coloring> transform_colorings(const Coloring& f1,
                                                  const Coloring& f2,
                                                  std::size_t k1,
                                                  std::size_t k2) {
  if (f1.size() != f2.size() || f1.colors() != f2.colors()) {
    throw Error(ErrorKind::invalid_transformation,
                "colorings differ in length or color count");
  }
  if (k1 >= f1.size() || k2 >= f1.size()) {
    throw Error(ErrorKind::invalid_transformation, "position out of range");
  }
  if (f1[k1] != 0 || f2[k2] != 0) {
    throw Error(ErrorKind::invalid_transformation,
                "k1 must lie outside the support of f1 and k2 outside that of f2");
  }
  if (f1[k2] != f2[k1]) {
    throw Error(ErrorKind::invalid_transformation, "f1(k2) differs from f2(k1)");
  }
  auto v1 = f1.values();
  auto v2 = f2.values();
  std::swap(v1[k1], v2[k1]);
  if (k2 != k1) std::swap(v1[k2], v2[k2]);
  return {Coloring(f1.colors(), std::move(v1)),
          Coloring(f2.colors(), std::move(v2))};
}

}  // namespace flowcert
